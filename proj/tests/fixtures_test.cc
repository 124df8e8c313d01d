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

#include "homog/fixtures.h"

#include "gtest/gtest.h"
#include "homog/homogeneity.h"

namespace homog::fixtures {
namespace {

TEST(FixturesTest, DigraphMShape) {
  const FinStructure m = DigraphM();
  EXPECT_EQ(m.size(), 6);
  EXPECT_EQ(m.table(0).size(), 12u);
  // a and b form a looped double edge and each sends arrows into C.
  EXPECT_TRUE(m.HasArrow(kA, kA));
  EXPECT_TRUE(m.HasArrow(kA, kB) && m.HasArrow(kB, kA));
  EXPECT_TRUE(m.HasArrow(kA, kA0) && m.HasArrow(kA, kA1));
  EXPECT_TRUE(m.HasArrow(kB, kB0) && m.HasArrow(kB, kB1));
  EXPECT_FALSE(m.HasArrow(kA0, kA));
  EXPECT_EQ(Induce(m, CycleC()).structure, DirectedCycle(4));
}

TEST(FixturesTest, EtaIsAnAutomorphism) {
  const Perm eta = Eta();
  EXPECT_EQ(DigraphM().Relabel(eta), DigraphM());
  EXPECT_EQ(eta.Order(), 4);
}

TEST(FixturesTest, Names) {
  EXPECT_EQ(MVertexNames({kA, kB}), "{a,b}");
  EXPECT_EQ(MVertexNames(CycleC()), "{a0,b0,a1,b1}");
  EXPECT_EQ(MPermNames(Eta()), "(a b)(a0 b0 a1 b1)");
  EXPECT_EQ(MPermNames(Perm::Identity(6)), "id");
}

TEST(FixturesTest, SmallFamilies) {
  EXPECT_EQ(DirectedCycle(3).table(0).size(), 3u);
  EXPECT_EQ(DirectedPath(3).table(0).size(), 2u);
  EXPECT_TRUE(SinglePoint(true).HasArrow(0, 0));
  EXPECT_FALSE(SinglePoint(false).HasArrow(0, 0));
}

}  // namespace
}  // namespace homog::fixtures
