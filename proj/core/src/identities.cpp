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

#include "fibbraid/identities.hpp"

#include <exception>
#include <functional>
#include <memory>

#include "fibbraid/gate_analysis.hpp"

namespace fibbraid {

bool VerifyReport::all_passed() const {
    for (const auto &c : checks) {
        if (!c.informational && !c.passed) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> VerifyReport::failures() const {
    std::vector<std::string> out;
    for (const auto &c : checks) {
        if (!c.informational && !c.passed) {
            out.push_back(c.name);
        }
    }
    return out;
}

std::string VerifyReport::to_text() const {
    std::string out;
    for (const auto &c : checks) {
        out += c.informational ? "INFO  " : (c.passed ? "PASS  " : "FAIL  ");
        out += c.name;
        if (!c.detail.empty()) {
            out += ": " + c.detail;
        }
        out += "\n";
    }
    return out;
}

VerifyReport run_identity_suite(const FibData &data) {
    VerifyReport report;
    auto check = [&](std::string name, const std::function<bool()> &test) {
        IdentityCheck c{std::move(name), false, false, {}};
        try {
            c.passed = test();
            if (!c.passed) {
                c.detail = "identity does not hold";
            }
        } catch (const std::exception &e) {
            c.detail = e.what();
        }
        report.checks.push_back(std::move(c));
    };

    const ExactMatrix &F = data.F;
    const ExactMatrix &R = data.R;
    const ExactMatrix I2 = ExactMatrix::identity(2);

    check("F^2 = I", [&] { return (F * F).is_identity(); });
    check("(RF)^3 = R1 I", [&] {
        const ExactMatrix rf = R * F;
        return rf * rf * rf == I2.scaled(data.R1);
    });
    check("Rtau^2 = R1", [&] { return data.Rtau * data.Rtau == data.R1; });
    check("F and R unitary", [&] { return F.is_unitary() && R.is_unitary(); });

    // Built after the scalar checks so a bad F still reports those by name.
    std::unique_ptr<Representation> rep;
    try {
        rep = std::make_unique<Representation>(data);
    } catch (const std::exception &e) {
        report.checks.push_back({"representation tables", false, false, e.what()});
        return report;
    }
    auto eval6 = [&](const char *text) { return rep->evaluate_exact(BraidWord::parse(text, 6)); };

    check("rho3 generators unitary", [&] {
        for (Basis b : {Basis::L, Basis::R}) {
            for (int g = 1; g <= 2; g++) {
                if (!rep->rho3(g, b).is_unitary()) {
                    return false;
                }
            }
        }
        return true;
    });
    check("rho6 generators unitary", [&] {
        for (int g = 1; g <= 5; g++) {
            if (!rep->rho6(g).is_unitary()) {
                return false;
            }
        }
        return true;
    });
    check("B3 braid relation", [&] {
        for (Basis b : {Basis::L, Basis::R}) {
            const ExactMatrix &s1 = rep->rho3(1, b);
            const ExactMatrix &s2 = rep->rho3(2, b);
            if (!(s1 * s2 * s1 == s2 * s1 * s2)) {
                return false;
            }
        }
        return true;
    });
    check("B6 braid relations", [&] {
        for (int i = 1; i < 5; i++) {
            const ExactMatrix &a = rep->rho6(i);
            const ExactMatrix &b = rep->rho6(i + 1);
            if (!(a * b * a == b * a * b)) {
                return false;
            }
        }
        return true;
    });
    check("B6 far commutation", [&] {
        for (int i = 1; i <= 5; i++) {
            for (int j = i + 2; j <= 5; j++) {
                if (!(rep->rho6(i) * rep->rho6(j) == rep->rho6(j) * rep->rho6(i))) {
                    return false;
                }
            }
        }
        return true;
    });

    const ExactMatrix I1 = ExactMatrix::identity(1);
    check("Lemma Delta", [&] {
        const ExactMatrix want = direct_sum(I1, swap_gate()).scaled(data.R1 * data.R1 * data.R1);
        return rep->evaluate_exact(named_braid(NamedBraid::Delta)) == want;
    });
    check("Lemma Sigma", [&] {
        return rep->evaluate_exact(named_braid(NamedBraid::Sigma)) == direct_sum(I1, tensor(I2, R * R));
    });
    check("half-twist factor", [&] {
        const ExactMatrix want = direct_sum(I1, (tensor(F, F) * swap_gate()).scaled(data.R1));
        return rep->evaluate_exact(named_braid(NamedBraid::HalfTwistTriple)) == want;
    });

    const FieldElement one(1);
    const FieldElement rt2 = data.Rtau * data.Rtau;
    auto blocks_match = [&](const char *word, const ExactMatrix &v, std::initializer_list<FieldElement> vperp) {
        auto b = v_blocks(eval6(word));
        return b && b->v == v && b->v_perp == ExactMatrix::diagonal(vperp);
    };
    const ExactMatrix rho3_s1 = rep->rho3(1);
    check("V blocks of s2 s1 s1 s2",
          [&] { return blocks_match("2 1 1 2", rho3_s1 * rho3_s1, {one, one, rt2}); });
    check("V blocks of s4 s5 s5 s4",
          [&] { return blocks_match("4 5 5 4", rho3_s1 * rho3_s1, {one, rt2, one}); });
    check("V blocks of s3",
          [&] { return blocks_match("3", rep->rho3(2), {data.R1, data.Rtau, data.Rtau}); });

    const ExactMatrix twist = eval6("2 3 2 3 2 3");
    check("(s2 s3)^3 fixes |11>", [&] { return fixes_state_up_to_phase(twist, basis6::OneOne); });
    check("(s2 s3)^3 does not fix |NC>", [&] { return !fixes_state_up_to_phase(twist, basis6::NC); });

    std::string fixed;
    for (size_t i = 0; i < 5; i++) {
        if (fixes_state_up_to_phase(twist, i)) {
            static const char *names[] = {"NC", "11", "1tau", "tau1", "tautau"};
            fixed += (fixed.empty() ? "" : ", ") + std::string("|") + names[i] + ">";
        }
    }
    const bool tau1 = fixes_state_up_to_phase(twist, basis6::TauOne);
    report.checks.push_back({"(s2 s3)^3 fixed states", true, true,
                             fixed + (tau1 ? " (|tau1> is fixed as well)" : " (|tau1> is not fixed)")});
    auto complement_entangling = [&](std::initializer_list<size_t> idx) {
        return is_entangling(twist.block(idx)) ? "entangling" : "not entangling";
    };
    report.checks.push_back({"(s2 s3)^3 on NC, 1tau, tau1, tautau", true, true,
                             complement_entangling({0, 2, 3, 4})});
    if (tau1) {
        report.checks.push_back({"(s2 s3)^3 on NC, 11, 1tau, tautau", true, true,
                                 complement_entangling({0, 1, 2, 4})});
    }
    return report;
}

}  // namespace fibbraid
