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

#include "absnorm/matrix_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "absnorm/error.hpp"

namespace absnorm {
namespace {

Scalar scalar_from_json(const nlohmann::json& s, Field field) {
  if (s.is_number()) return Scalar(s.get<double>(), 0.0);
  if (s.is_array() && s.size() == 2 && s[0].is_number() && s[1].is_number()) {
    if (field == Field::real) {
      throw InputError("complex scalar in a real matrix");
    }
    return Scalar(s[0].get<double>(), s[1].get<double>());
  }
  throw InputError("matrix entry must be a number or a [re, im] pair");
}

}  // namespace

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("matrix JSON must be an object");
  Field field = Field::real;
  if (j.contains("field")) {
    const auto& f = j.at("field");
    if (!f.is_string()) throw InputError("\"field\" must be a string");
    const auto name = f.get<std::string>();
    if (name == "real") {
      field = Field::real;
    } else if (name == "complex") {
      field = Field::complex;
    } else {
      throw InputError("unknown field \"" + name + "\"");
    }
  }
  if (!j.contains("rows") || !j.at("rows").is_array()) {
    throw InputError("matrix JSON needs a \"rows\" array");
  }
  const auto& rows = j.at("rows");
  std::vector<std::vector<Scalar>> values;
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError("each row must be an array");
    auto& out = values.emplace_back();
    for (const auto& s : row) out.push_back(scalar_from_json(s, field));
  }
  if (j.contains("n")) {
    const auto& n = j.at("n");
    if (!n.is_number_integer() || n.get<long long>() <= 0) {
      throw InputError("\"n\" must be a positive integer");
    }
    if (static_cast<std::size_t>(n.get<long long>()) != values.size()) {
      throw DimensionError("\"n\" disagrees with the number of rows");
    }
  }
  return Matrix::from_rows(values, field);
}

nlohmann::json matrix_to_json(const Matrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.size(); ++j) {
      const Scalar v = a(i, j);
      if (a.is_real()) {
        row.push_back(v.real());
      } else {
        row.push_back(nlohmann::json::array({v.real(), v.imag()}));
      }
    }
    rows.push_back(std::move(row));
  }
  return {{"field", to_string(a.field())}, {"n", a.size()}, {"rows", rows}};
}

Matrix parse_matrix_grid(std::string_view text) {
  std::vector<std::vector<Scalar>> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<Scalar> row;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        throw InputError("cannot parse grid entry \"" + token + "\"");
      }
      if (used != token.size()) {
        throw InputError("cannot parse grid entry \"" + token + "\"");
      }
      row.emplace_back(v, 0.0);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows, Field::real);
}

Matrix parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw InputError("empty matrix input");
  if (text[first] == '{') return matrix_from_json(parse_json_text(text));
  return parse_matrix_grid(text);
}

nlohmann::json parse_json_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_text(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open \"" + path + "\"");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

Matrix read_matrix(const std::string& path) { return parse_matrix(read_text(path)); }

}  // namespace absnorm
