// Copyright 2026 The wreathrep Authors
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

#ifndef WREATHREP_REPORT_H_
#define WREATHREP_REPORT_H_

#include <algorithm>
#include <string>
#include <vector>

namespace wreathrep {

// Pass/fail record produced by the verification suites.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  void Add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void Append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.passed; });
  }
};

}  // namespace wreathrep

#endif  // WREATHREP_REPORT_H_
