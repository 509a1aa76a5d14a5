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

#ifndef FIBBRAID_IDENTITIES_HPP
#define FIBBRAID_IDENTITIES_HPP

#include <string>
#include <vector>

#include "fibbraid/representation.hpp"

namespace fibbraid {

struct IdentityCheck {
    std::string name;
    bool passed = false;
    /// Informational findings are reported but never fail the suite.
    bool informational = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<IdentityCheck> checks;

    bool all_passed() const;
    std::vector<std::string> failures() const;
    /// One line per check: "PASS  name", "FAIL  name: detail" or "INFO  name: detail".
    std::string to_text() const;
};

/// Exact identity suite over the given category data: F and R relations,
/// unitarity, braid relations, the Delta and Sigma lemmas, the half-twist
/// factor, the V blocks of the V-preserving generators and the fixed states
/// of (s2 s3)^3.
VerifyReport run_identity_suite(const FibData &data = FibData::standard());

}  // namespace fibbraid

#endif
