// Copyright 2026 The anyonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANYONKIT_REPORT_HPP_
#define ANYONKIT_REPORT_HPP_

#include <string>
#include <vector>

namespace anyon {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // optional context, e.g. the value that was found
};

/// Pass/fail roll-up for a verification suite; failures stay in the report
/// rather than throwing, so a run always lists everything it looked at.
struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::size_t fail_count() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }
  std::string to_json() const;
  /// One line per check, "PASS name" / "FAIL name (detail)".
  std::string to_text() const;
};

}  // namespace anyon

#endif  // ANYONKIT_REPORT_HPP_
