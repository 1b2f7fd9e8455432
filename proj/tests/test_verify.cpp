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

#include "anyon/verify.hpp"

#include "doctest.h"

using anyon::Catalog;
using anyon::Report;

TEST_CASE("identity suite passes on the pristine catalog") {
  Catalog cat;
  Report rep = anyon::identity_suite(cat);
  INFO(rep.to_text());
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() >= 30);
  std::string js = rep.to_json();
  CHECK(js.find("\"pass\":true") != std::string::npos);
}

TEST_CASE("corrupting any referenced generator breaks the suite") {
  for (const char* name : {"G2t", "N", "F18"}) {
    Catalog cat;
    cat.corrupt(name);
    Report rep = anyon::identity_suite(cat);
    INFO("corrupted ", name);
    CHECK(!rep.all_pass());
  }
  Catalog cat;
  CHECK_THROWS_AS(cat.corrupt("nope"), std::invalid_argument);
}

TEST_CASE("presentation suite stands alone") {
  Catalog cat;
  Report rep = anyon::verify_presentation(cat);
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() == 12);  // ten relators + enumeration + robustness
}
