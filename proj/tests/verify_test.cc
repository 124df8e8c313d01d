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

#include "homog/verify.h"

#include <string>

#include "gtest/gtest.h"

namespace homog {
namespace {

TEST(VerifyTest, ReportsAllThirteenChecks) {
  const VerificationReport r = VerifyConstructions();
  ASSERT_EQ(r.checks.size(), 13u);
  const char* ids[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii"};
  for (std::size_t i = 0; i < 13; ++i) EXPECT_EQ(r.checks[i].id, ids[i]);
  // Every construction on M, Ens(n) and the Katetov functor holds.
  for (std::size_t i = 0; i < 12; ++i) EXPECT_TRUE(r.checks[i].passed) << r.checks[i].detail;
}

TEST(VerifyTest, CyclicUniformityFailsAtSixteenAndTwentySeven) {
  const VerificationReport r = VerifyConstructions();
  const CheckResult& last = r.checks.back();
  EXPECT_FALSE(last.passed);
  EXPECT_NE(last.detail.find("n = 16, 27"), std::string::npos) << last.detail;
  EXPECT_FALSE(r.passed());
}

TEST(VerifyTest, Serialization) {
  const VerificationReport r = VerifyConstructions();
  const auto doc = VerificationToJson(r);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["kind"], "verify-paper");
  EXPECT_EQ(doc["checks"].size(), 13u);
  const std::string text = VerificationToText(r);
  EXPECT_NE(text.find("12/13 checks passed"), std::string::npos);
  EXPECT_NE(text.find("[FAIL] (xiii)"), std::string::npos);
}

}  // namespace
}  // namespace homog
