// Copyright 2026 The homog Authors
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

#ifndef HOMOG_VERIFY_H_
#define HOMOG_VERIFY_H_

#include <string>
#include <vector>

#include "json.hpp"

namespace homog {

struct CheckResult {
  std::string id;     // roman numeral, "i" .. "xiii"
  std::string title;
  bool passed = false;
  // Summary on success; the first counterexample on failure.
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Reproduces every checkable claim about M, Ens(n), S_k in S_n and the
// cyclic groups, as thirteen named checks in a fixed order. Deterministic.
VerificationReport VerifyConstructions();

nlohmann::json VerificationToJson(const VerificationReport& report);
std::string VerificationToText(const VerificationReport& report);

}  // namespace homog

#endif  // HOMOG_VERIFY_H_
