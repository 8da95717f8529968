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

// Matrix files: {"dim": n, "re": [[...], ...], "im": [[...], ...]}.
// "im" may be omitted for real matrices. Each part is either a list of n rows
// of n numbers or a flat row-major list of n*n numbers.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qmix/matrix.hpp"

namespace qmix {

SquareMatrix parse_matrix_json(std::string_view text);
SquareMatrix load_matrix_json(const std::filesystem::path& path);
std::string matrix_to_json(const SquareMatrix& m);

// printf("%.17g").
std::string format_real(double value);

// printf("%.6g"), for messages.
std::string short_real(double value);

}  // namespace qmix
