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

#include <random>

#include "fibbraid/gate_analysis.hpp"
#include "fibbraid/representation.hpp"

namespace fibbraid {
namespace {

using cd = std::complex<double>;

const Representation &rep() {
    return standard_representation();
}

ExactMatrix eval6(const char *text) {
    return rep().evaluate_exact(BraidWord::parse(text, 6));
}

const FibData &data() {
    return rep().data();
}

TEST(LeakageFree, Examples) {
    EXPECT_TRUE(is_leakage_free(rep().rho6(1)));
    EXPECT_FALSE(is_leakage_free(rep().rho6(3)));
    EXPECT_EQ(rep().rho6(3)(0, 0).abs_sq(), FieldElement::phi_inv() * FieldElement::phi_inv());
    EXPECT_TRUE(is_leakage_free(rep().evaluate_exact(named_braid(NamedBraid::Delta))));
    EXPECT_TRUE(is_leakage_free(rep().rho6(1).to_float()));
    EXPECT_FALSE(is_leakage_free(rep().rho6(3).to_float()));
}

TEST(RestrictToVc, Examples) {
    const ExactMatrix I2 = ExactMatrix::identity(2);
    const FieldElement r1 = data().R1;
    EXPECT_EQ(restrict_to_vc(rep().rho6(1)), tensor(data().R, I2));
    EXPECT_EQ(restrict_to_vc(rep().evaluate_exact(named_braid(NamedBraid::Delta))), swap_gate().scaled(r1 * r1 * r1));
    EXPECT_EQ(restrict_to_vc(rep().evaluate_exact(named_braid(NamedBraid::Sigma))), tensor(I2, data().R * data().R));
    EXPECT_THROW(restrict_to_vc(rep().rho6(3)), NotLeakageFree);
    EXPECT_THROW(restrict_to_vc(rep().rho6(3).to_float()), NotLeakageFree);
}

FloatMatrix fdiag(std::initializer_list<cd> d) {
    FloatMatrix m = FloatMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (cd x : d) {
        m(i, i) = x;
        i++;
    }
    return m;
}

TEST(Entangling, Examples) {
    const ExactMatrix I2 = ExactMatrix::identity(2);
    EXPECT_FALSE(is_entangling(tensor(data().R, I2)));
    EXPECT_FALSE(is_entangling(swap_gate()));
    EXPECT_TRUE(is_entangling(ExactMatrix::diagonal({1, 1, 1, -1})));
    EXPECT_FALSE(is_entangling(tensor(data().F, data().R) * swap_gate()));

    EXPECT_FALSE(is_entangling(tensor(data().R, I2).to_float()));
    EXPECT_FALSE(is_entangling(swap_gate().to_float()));
    EXPECT_TRUE(is_entangling(fdiag({1, 1, 1, -1})));
    FloatMatrix cnot = FloatMatrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
    EXPECT_TRUE(is_entangling(cnot));
    EXPECT_THROW(is_entangling(fdiag({1, 1, 1, 2})), std::invalid_argument);
    EXPECT_THROW(is_entangling(ExactMatrix::identity(5)), std::invalid_argument);
}

TEST(Entangling, DiagonalCriterion) {
    EXPECT_FALSE(is_entangling_diagonal(std::array<FieldElement, 4>{1, 1, 1, 1}));
    EXPECT_TRUE(is_entangling_diagonal(std::array<FieldElement, 4>{1, 1, 1, -1}));
    EXPECT_FALSE(is_entangling_diagonal(std::array<cd, 4>{1, 1, 1, 1}));
    EXPECT_TRUE(is_entangling_diagonal(std::array<cd, 4>{1, 1, 1, -1}));
    EXPECT_NEAR(diagonal_entangling_gap({1, 1, 1, -1}), 2.0, 1e-15);
    const ExactMatrix sigma_vc = restrict_to_vc(rep().evaluate_exact(named_braid(NamedBraid::Sigma)));
    std::array<FieldElement, 4> lambda;
    for (size_t i = 0; i < 4; i++) {
        lambda[i] = sigma_vc(i, i);
    }
    EXPECT_FALSE(is_entangling_diagonal(lambda));
}

// A diagonal gate entangles iff the SVD test says so.
TEST(EntanglingProperty, DiagonalCriterionAgreesWithSchmidtTest) {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> k(0, 9);
    for (int i = 0; i < 500; i++) {
        std::array<FieldElement, 4> l;
        for (auto &x : l) {
            x = FieldElement::zeta_power(k(rng));
        }
        ASSERT_EQ(is_entangling_diagonal(l), is_entangling(ExactMatrix::diagonal(l)));
    }
}

// Random one-qubit products (and their swaps) never entangle; product times
// a controlled phase always does.
TEST(EntanglingProperty, ProductsAndControlledPhase) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> len(0, 6), gen(1, 2), sign(0, 1);
    auto one_qubit = [&] {
        std::vector<int> letters(static_cast<size_t>(len(rng)));
        for (int &l : letters) {
            l = sign(rng) ? gen(rng) : -gen(rng);
        }
        return rep().evaluate_exact(BraidWord(3, letters));
    };
    const ExactMatrix cz = ExactMatrix::diagonal({1, 1, 1, -1});
    for (int i = 0; i < 200; i++) {
        const ExactMatrix p = tensor(one_qubit(), one_qubit());
        ASSERT_FALSE(is_entangling(p));
        ASSERT_FALSE(is_entangling(swap_gate() * p));
        ASSERT_TRUE(is_entangling(p * cz));
        ASSERT_FALSE(is_entangling(p.to_float()));
        ASSERT_TRUE(is_entangling((p * cz).to_float()));
    }
}

TEST(FixedStates, Examples) {
    const ExactMatrix delta = rep().evaluate_exact(named_braid(NamedBraid::Delta));
    EXPECT_TRUE(fixes_state_up_to_phase(delta, basis6::NC));
    EXPECT_FALSE(fixes_state_up_to_phase(delta, basis6::OneTau));
    const ExactMatrix twist = eval6("2 3 2 3 2 3");
    EXPECT_TRUE(fixes_state_up_to_phase(twist, basis6::OneOne));
    EXPECT_FALSE(fixes_state_up_to_phase(twist, basis6::NC));
    EXPECT_TRUE(fixes_state_up_to_phase(twist.to_float(), basis6::OneOne));
    EXPECT_FALSE(fixes_state_up_to_phase(twist.to_float(), basis6::NC));
    EXPECT_THROW(fixes_state_up_to_phase(twist, 5), std::invalid_argument);
}

TEST(VBlocks, DisplayedDecompositions) {
    const FieldElement one(1);
    const FieldElement rt2 = data().Rtau * data().Rtau;
    const ExactMatrix s1sq = rep().rho3(1) * rep().rho3(1);

    auto b = v_blocks(eval6("2 1 1 2"));
    ASSERT_TRUE(b);
    EXPECT_EQ(b->v, s1sq);
    EXPECT_EQ(b->v_perp, ExactMatrix::diagonal({one, one, rt2}));

    b = v_blocks(eval6("4 5 5 4"));
    ASSERT_TRUE(b);
    EXPECT_EQ(b->v, s1sq);
    EXPECT_EQ(b->v_perp, ExactMatrix::diagonal({one, rt2, one}));

    b = v_blocks(rep().rho6(3));
    ASSERT_TRUE(b);
    EXPECT_EQ(b->v, rep().rho3(2));
    EXPECT_EQ(b->v_perp, ExactMatrix::diagonal({data().R1, data().Rtau, data().Rtau}));

    EXPECT_FALSE(v_blocks(rep().rho6(2)));
    EXPECT_FALSE(v_blocks(rep().rho6(2).to_float()));
    EXPECT_TRUE(v_blocks(rep().rho6(3).to_float()));
}

// The iteration's starting pair, written with explicit phases.
TEST(VBlocks, IterationStartingPair) {
    auto z = [](long k) { return FieldElement::zeta_power(k); };
    const FieldElement p = FieldElement::phi_inv();
    const FieldElement s = FieldElement::sqrt_phi_inv();

    auto d = v_blocks(eval6("2 1 1 2 2 1 1 2 2 1 1 2"));
    ASSERT_TRUE(d);
    EXPECT_EQ(d->v, ExactMatrix::diagonal({z(-3) * z(-1), z(-3) * z(1)}));
    EXPECT_EQ(d->v_perp, ExactMatrix::diagonal({1, 1, z(-2)}));

    auto u = v_blocks(rep().rho6(3));
    ASSERT_TRUE(u);
    EXPECT_EQ(u->v, ExactMatrix(2, {z(4) * p, z(-3) * s, z(-3) * s, -p}));
    EXPECT_EQ(u->v_perp, ExactMatrix::diagonal({z(-4), z(3), z(3)}));
}

TEST(Classify, ReportsAndJson) {
    const GateReport r = classify(rep().rho6(1));
    EXPECT_TRUE(r.leakage_free);
    ASSERT_TRUE(r.entangling.has_value());
    EXPECT_FALSE(*r.entangling);
    EXPECT_EQ(r.fixed_states, (std::vector<size_t>{0, 1, 2, 3, 4}));
    EXPECT_TRUE(r.preserves_V);

    const GateReport leaky = classify(rep().rho6(3));
    EXPECT_FALSE(leaky.leakage_free);
    EXPECT_FALSE(leaky.entangling.has_value());
    const std::string json = leaky.to_json();
    EXPECT_NE(json.find("\"leakage_free\":false"), std::string::npos);
    EXPECT_NE(json.find("\"entangling\":null"), std::string::npos);

    const GateReport f = classify(rep().rho6(2).to_float());
    EXPECT_TRUE(f.leakage_free);
    EXPECT_FALSE(f.preserves_V);
    EXPECT_EQ(f.to_json().find("\"blocks\":null") != std::string::npos, true);
}

// Every word in s1, s2, s4, s5, Delta, Sigma is leakage-free and non-entangling.
TEST(ClassifyProperty, ProductsOfKnownLeakageFreeBraids) {
    std::mt19937_64 rng(31);
    const std::vector<ExactMatrix> gens = {
        rep().rho6(1),
        rep().rho6(2),
        rep().rho6(4),
        rep().rho6(5),
        rep().evaluate_exact(named_braid(NamedBraid::Delta)),
        rep().evaluate_exact(named_braid(NamedBraid::Sigma)),
    };
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> len(1, 12), sign(0, 1);
    for (int i = 0; i < 300; i++) {
        ExactMatrix m = ExactMatrix::identity(5);
        for (int k = len(rng); k > 0; k--) {
            const ExactMatrix &g = gens[pick(rng)];
            m = m * (sign(rng) ? g : g.adjoint());
        }
        ASSERT_TRUE(is_leakage_free(m));
        ASSERT_FALSE(is_entangling(restrict_to_vc(m)));
    }
}

}  // namespace
}  // namespace fibbraid
