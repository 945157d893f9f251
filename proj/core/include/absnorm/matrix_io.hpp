// Copyright 2026 The absnorm Authors
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

#ifndef ABSNORM_MATRIX_IO_HPP
#define ABSNORM_MATRIX_IO_HPP

#include <istream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "absnorm/matrix.hpp"

namespace absnorm {

// Matrix file format:
//   {"field": "real" | "complex", "n": int, "rows": [[s, ...], ...]}
// A real scalar is a JSON number, a complex scalar is [re, im]. Real
// matrices may also be written as a whitespace grid, one row per line.
//
// All parsers throw InputError (DimensionError for non-square data).
Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& a);

Matrix parse_matrix_grid(std::string_view text);

// Detects JSON by a leading '{', otherwise reads a grid.
Matrix parse_matrix(std::string_view text);

// nlohmann::json::parse with parse errors mapped to InputError.
nlohmann::json parse_json_text(std::string_view text);

// `path` of "-" reads standard input.
std::string read_text(const std::string& path);
Matrix read_matrix(const std::string& path);

}  // namespace absnorm

#endif  // ABSNORM_MATRIX_IO_HPP
