// Copyright 2026 The qmix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmix {

enum class ErrorCode {
  NotHermitian,
  TraceNotOne,
  NotPositiveSemidefinite,
  NotFinite,
  DimMismatch,
  NotNormalized,
  NoConvergence,
  NegativeEigenvalue,
  EmptySpectrum,
  InternalDisagreement,
  UnphysicalBloch,
  OutOfRange,
  InvalidArgument,
  ParseError,
  IoError,
};

std::string_view error_name(ErrorCode code) noexcept;

// Every failure in the library is reported through this type. `magnitude`
// carries the offending deviation (or eigenvalue) when one exists, else 0.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, double magnitude = 0.0)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code),
        magnitude_(magnitude) {}

  ErrorCode code() const noexcept { return code_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  ErrorCode code_;
  double magnitude_;
};

}  // namespace qmix
