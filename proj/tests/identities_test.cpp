// Copyright 2026 The fibbraid Authors
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

#include <gtest/gtest.h>

#include <algorithm>

#include "fibbraid/identities.hpp"

namespace fibbraid {
namespace {

TEST(IdentitySuite, AllChecksPass) {
    const VerifyReport r = run_identity_suite();
    EXPECT_TRUE(r.all_passed()) << r.to_text();
    EXPECT_TRUE(r.failures().empty());
    EXPECT_GE(r.checks.size(), 15u);
    const std::string text = r.to_text();
    EXPECT_EQ(text.find("FAIL"), std::string::npos);
    EXPECT_NE(text.find("PASS  F^2 = I"), std::string::npos) << text;
    EXPECT_NE(text.find("INFO"), std::string::npos);
}

TEST(IdentitySuite, CorruptedFIsNamed) {
    FibData bad = FibData::standard();
    bad.F(0, 1) = bad.F(0, 1) * 2;
    const VerifyReport r = run_identity_suite(bad);
    EXPECT_FALSE(r.all_passed());
    const auto f = r.failures();
    EXPECT_NE(std::find(f.begin(), f.end(), "F^2 = I"), f.end());
    EXPECT_NE(r.to_text().find("FAIL  F^2 = I"), std::string::npos);
}

TEST(IdentitySuite, CorruptedRIsNamed) {
    FibData bad = FibData::standard();
    bad.Rtau = FieldElement::zeta_power(1);
    bad.R(1, 1) = bad.Rtau;
    const auto f = run_identity_suite(bad).failures();
    EXPECT_NE(std::find(f.begin(), f.end(), "Rtau^2 = R1"), f.end());
}

}  // namespace
}  // namespace fibbraid
