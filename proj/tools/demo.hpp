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

#ifndef ABSNORM_TOOLS_DEMO_HPP
#define ABSNORM_TOOLS_DEMO_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace absnorm::demo {

struct Claim {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Options {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  unsigned threads = 0;
};

// Recomputes every reference example.
std::vector<Claim> collect_claims(const Options& options);

// Prints one line per claim (or a JSON document); returns 0 when every
// claim passes and 1 otherwise.
int report_claims(const std::vector<Claim>& claims, const Options& options, bool as_json,
                  std::ostream& out);

}  // namespace absnorm::demo

#endif  // ABSNORM_TOOLS_DEMO_HPP
