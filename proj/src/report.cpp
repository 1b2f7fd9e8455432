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

#include "anyon/report.hpp"

namespace anyon {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string Report::to_json() const {
  std::string out = "{\"suite\":\"" + json_escape(suite) + "\",\"pass\":" +
                    (all_pass() ? "true" : "false") + ",\"checks\":[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (i) out += ",";
    out += "{\"name\":\"" + json_escape(checks[i].name) + "\",\"pass\":" +
           (checks[i].pass ? "true" : "false");
    if (!checks[i].detail.empty())
      out += ",\"detail\":\"" + json_escape(checks[i].detail) + "\"";
    out += "}";
  }
  out += "]}";
  return out;
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.pass ? "PASS  " : "FAIL  ";
    out += c.name;
    if (!c.detail.empty()) out += "  (" + c.detail + ")";
    out += "\n";
  }
  return out;
}

}  // namespace anyon
