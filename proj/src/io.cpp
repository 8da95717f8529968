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

#include "qmix/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qmix/error.hpp"

namespace qmix {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::vector<double> read_part(const json& part, std::size_t dim, const char* name) {
  if (!part.is_array()) parse_fail(std::string("\"") + name + "\" must be an array");

  std::vector<double> values;
  values.reserve(dim * dim);
  auto take = [&](const json& x) {
    if (!x.is_number()) parse_fail(std::string("\"") + name + "\" holds a non-number");
    values.push_back(x.get<double>());
  };

  const bool nested = !part.empty() && part.front().is_array();
  if (nested) {
    if (part.size() != dim) {
      parse_fail(std::string("\"") + name + "\" has " + std::to_string(part.size()) +
                 " rows, expected " + std::to_string(dim));
    }
    for (std::size_t i = 0; i < dim; ++i) {
      const json& row = part[i];
      if (!row.is_array() || row.size() != dim) {
        parse_fail(std::string("\"") + name + "\" row " + std::to_string(i) +
                   " does not have " + std::to_string(dim) + " entries");
      }
      for (const auto& x : row) take(x);
    }
  } else {
    if (part.size() != dim * dim) {
      parse_fail(std::string("\"") + name + "\" has " + std::to_string(part.size()) +
                 " entries, expected " + std::to_string(dim * dim));
    }
    for (const auto& x : part) take(x);
  }
  return values;
}

}  // namespace

SquareMatrix parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_fail("top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    parse_fail("\"dim\" must be an integer");
  }
  const auto dim_signed = doc["dim"].get<long long>();
  if (dim_signed < 1) parse_fail("\"dim\" must be >= 1");
  const auto dim = static_cast<std::size_t>(dim_signed);
  if (!doc.contains("re")) parse_fail("missing \"re\"");

  const std::vector<double> re = read_part(doc["re"], dim, "re");
  std::vector<double> im(dim * dim, 0.0);
  if (doc.contains("im")) im = read_part(doc["im"], dim, "im");

  std::vector<Complex> entries(dim * dim);
  for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = {re[k], im[k]};
  return SquareMatrix(dim, std::move(entries));
}

SquareMatrix load_matrix_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string short_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string matrix_to_json(const SquareMatrix& m) {
  const std::size_t n = m.dim();
  auto part = [&](auto get) {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < n; ++j) {
        if (j) s += ", ";
        s += format_real(get(m(i, j)));
      }
      s += "]";
    }
    return s + "]";
  };
  return "{\"dim\": " + std::to_string(n) +
         ", \"re\": " + part([](Complex z) { return z.real(); }) +
         ", \"im\": " + part([](Complex z) { return z.imag(); }) + "}";
}

}  // namespace qmix
