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

#include <cmath>
#include <numbers>
#include <random>

#include "fibbraid/approximator.hpp"
#include "fibbraid/representation.hpp"

namespace fibbraid {
namespace {

using cd = std::complex<double>;
const double kPi = std::numbers::pi;

FloatMatrix su2(double b, double phase = 0) {
    const double a = std::sqrt(1 - b * b);
    FloatMatrix u(2, 2);
    u << cd(a, 0) * std::polar(1.0, phase), b, -b, cd(a, 0) * std::polar(1.0, -phase);
    return u;
}

const CompileResult &compiled() {
    static const CompileResult r = compile_entangler();
    return r;
}

TEST(IterateStep, ZeroAngleIsIdentityMap) {
    const FloatMatrix u = su2(0.6, 0.3);
    EXPECT_LT(max_abs_diff(iterate_step(u, DiagonalGate{0, {1, 0}}), u), 1e-15);
    EXPECT_LT(max_abs_diff(iterate_step(u, DiagonalGate{0, std::polar(1.0, 0.7)}), u), 1e-15);
}

TEST(IterateStep, DiagonalStartIsAFixedPoint) {
    FloatMatrix u = FloatMatrix::Zero(2, 2);
    u(0, 0) = std::polar(1.0, 0.4);
    u(1, 1) = std::polar(1.0, -1.1);
    const DiagonalGate d{1.0, std::polar(1.0, 0.2)};
    EXPECT_LT(max_abs_diff(iterate_step(u, d), u), 1e-15);
}

// At theta = pi/3 the rotation branch vanishes and b is cubed each step.
TEST(IterateStep, CubingAtPiOverThree) {
    FloatMatrix u = su2(0.5);
    const DiagonalGate d{kPi / 3, {1, 0}};
    double b = 0.5;
    for (int k = 0; k < 3; k++) {
        u = iterate_step(u, d);
        const double next = std::abs(u(0, 1));
        EXPECT_NEAR(next, b * b * b, 1e-12 * b * b * b + 1e-15) << "step " << k;
        b = next;
    }
    EXPECT_NEAR(std::abs(su2(0.5)(0, 1)), 0.5, 1e-15);
    EXPECT_NEAR(std::abs(iterate_step(su2(0.5), d)(0, 1)), 0.125, 1e-15);
    u = iterate_step(u, d);
    EXPECT_LT(std::abs(u(0, 1)), 1e-15);
}

TEST(IterateStep, StaysUnitaryAndShrinksOffDiagonal) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> th(0.2, 1.4), bb(0.05, 0.7), ph(-kPi, kPi);
    for (int i = 0; i < 200; i++) {
        const double theta = th(rng), b = bb(rng);
        const ContractionBound cb = contraction_bound(theta, b);
        if (cb.epsilon >= 1) {
            continue;
        }
        const FloatMatrix u = su2(b, ph(rng));
        const FloatMatrix next = iterate_step(u, DiagonalGate{theta, std::polar(1.0, ph(rng))});
        ASSERT_LT(unitarity_residual(next), 1e-13);
        ASSERT_LE(std::abs(next(0, 1)), (cb.epsilon + 1e-9) * b) << theta << " " << b;
    }
}

TEST(ContractionBound, Values) {
    const ContractionBound b = contraction_bound(2 * kPi / 5, 0.7861513777574233);
    EXPECT_NEAR(b.rotation_branch, 0.3819660112501051, 1e-15);
    EXPECT_NEAR(b.contraction_branch, 0.4721359549995794, 1e-15);
    EXPECT_NEAR(b.epsilon, 0.4721359549995794, 1e-15);
    EXPECT_NEAR(contraction_bound(kPi / 3, 0.5).epsilon, 0.25, 1e-15);
    EXPECT_NEAR(contraction_bound(-kPi / 3, 0.5).epsilon, 0.25, 1e-15);
    EXPECT_NEAR(contraction_bound(kPi / 3, 0).epsilon, 0.0, 1e-15);
}

TEST(ContractionBound, Preconditions) {
    EXPECT_THROW(contraction_bound(kPi / 2, 0.5), PreconditionError);
    EXPECT_THROW(contraction_bound(0, 0.5), PreconditionError);
    EXPECT_THROW(contraction_bound(1.0, 1.0), PreconditionError);
    EXPECT_THROW(contraction_bound(1.0, -0.1), PreconditionError);
    EXPECT_THROW(contraction_bound(std::nan(""), 0.1), PreconditionError);
}

TEST(DiagonalGate, RoundTrip) {
    const DiagonalGate g{0.9, std::polar(1.0, -2.0)};
    const DiagonalGate h = DiagonalGate::from_matrix(g.matrix());
    EXPECT_NEAR(h.theta, g.theta, 1e-14);
    EXPECT_LT(std::abs(h.gamma - g.gamma), 1e-14);
    EXPECT_THROW(DiagonalGate::from_matrix(su2(0.3)), std::invalid_argument);
}

TEST(WordStep, FlatCompressedAndMatrixAgree) {
    const Representation &rep = standard_representation();
    const BraidWord d = default_d_word();
    BraidWord w = default_u0_word();
    CompressedWord c(w);
    const CompressedWord dc(d);
    FloatMatrix m = rep.evaluate_float(w);
    const FloatMatrix dm = rep.evaluate_float(d);
    for (int k = 0; k < 3; k++) {
        w = word_step(w, d);
        c = word_step(c, dc);
        m = iterate_step(m, dm);
        ASSERT_EQ(c.expand(), w);
        ASSERT_LT(max_abs_diff(rep.evaluate_float(w), m), 1e-12);
        ASSERT_LT(max_abs_diff(rep.evaluate_float(c), m), 1e-12);
    }
    EXPECT_EQ(word_step(BraidWord::parse("3", 6), d).length(), 51u);
}

TEST(Compile, ConvergesToALeakageFreeEntanglingGate) {
    const CompileResult &r = compiled();
    EXPECT_NEAR(r.theta, 2 * kPi / 5, 1e-12);
    EXPECT_NEAR(r.bound.epsilon, 0.47213595499957917, 1e-12);
    EXPECT_LT(r.trace.back().b, 1e-10);
    EXPECT_LE(r.trace.size(), 41u);
    EXPECT_TRUE(r.report.leakage_free);
    EXPECT_TRUE(r.diagonal_entangling);
    EXPECT_EQ(r.report.entangling, std::optional<bool>(true));
    EXPECT_NEAR(r.entangling_gap, 1.8616351807717288, 1e-8);
    EXPECT_EQ(r.word.length(), r.trace.back().word_length);
    EXPECT_LT(unitarity_residual(r.gate), 1e-12);
    EXPECT_LT(std::abs(r.lambda[0] - std::polar(1.0, -4 * kPi / 5)), 1e-9);
    EXPECT_LT(std::abs(r.lambda[1] - std::polar(1.0, 3 * kPi / 5)), 1e-9);
    EXPECT_LT(std::abs(r.lambda[2] - r.lambda[1]), 1e-9);
}

TEST(Compile, TraceInvariants) {
    const CompileResult &r = compiled();
    const auto &t = r.trace;
    const uint64_t d_len = default_d_word().length();
    const FloatMatrix frozen = float_block(t.front().u, basis6::kVPerp);
    ASSERT_NEAR(t.front().b, 0.7861513777574233, 1e-15);
    for (size_t k = 0; k < t.size(); k++) {
        EXPECT_EQ(t[k].k, k);
        EXPECT_NEAR(t[k].epsilon, r.bound.epsilon, 0);
        EXPECT_LT(max_abs_diff(float_block(t[k].u, basis6::kVPerp), frozen), 1e-10) << k;
        ASSERT_TRUE(t[k].word_residual.has_value());
        EXPECT_LE(*t[k].word_residual, static_cast<double>(std::max<size_t>(k, 1)) * 1e-12) << k;
        EXPECT_NEAR(std::norm(t[k].a) + t[k].b * t[k].b, 1.0, 1e-12);
        if (k > 0) {
            EXPECT_LE(t[k].b, (r.bound.epsilon + 1e-9) * t[k - 1].b + 1e-13) << k;
            EXPECT_LE(t[k].word_length, 3 * t[k - 1].word_length + 4 * d_len);
            EXPECT_GT(t[k].word_length, t[k - 1].word_length);
        }
        // The diagonal settles at a rate governed by b.
        EXPECT_LE(std::abs(t[k].a - t.back().a), 2 * t[k].b + 1e-13) << k;
    }
}

TEST(Compile, UncorrectedIterationKeepsRotating) {
    const Representation &rep = standard_representation();
    const FloatMatrix d = v_blocks(rep.evaluate_float(default_d_word()))->v;
    FloatMatrix corrected = v_blocks(rep.evaluate_float(default_u0_word()))->v;
    FloatMatrix raw = corrected;
    double last_raw_step = 0, last_step = 0;
    for (int k = 0; k < 30; k++) {
        const FloatMatrix nc = iterate_step(corrected, d);
        const FloatMatrix nr = iterate_step_uncorrected(raw, d);
        last_step = std::abs(nc(0, 0) - corrected(0, 0));
        last_raw_step = std::abs(nr(0, 0) - raw(0, 0));
        corrected = nc;
        raw = nr;
    }
    EXPECT_LT(std::abs(raw(0, 1)), 1e-10);
    EXPECT_LT(last_step, 1e-12);
    EXPECT_NEAR(last_raw_step, 2 * std::sin(kPi / 5), 1e-9);
}

TEST(Compile, NonConvergenceCarriesTheTrace) {
    try {
        compile_entangler(CompileOptions{1e-10, 3, true});
        FAIL() << "expected NonConvergenceError";
    } catch (const NonConvergenceError &e) {
        ASSERT_EQ(e.trace.size(), 4u);
        EXPECT_EQ(e.trace.back().k, 3u);
        EXPECT_GT(e.trace.back().b, 1e-10);
    }
}

TEST(Compile, Preconditions) {
    EXPECT_THROW(compile_entangler(BraidWord::parse("3", 6), default_u0_word()), PreconditionError);
    EXPECT_THROW(compile_entangler(default_d_word(), BraidWord::parse("2", 6)), PreconditionError);
    EXPECT_THROW(compile_entangler(BraidWord::parse("1", 3), default_u0_word()), PreconditionError);
}

TEST(Compile, WordCheckIsOptional) {
    const CompileResult r = compile_entangler(CompileOptions{1e-6, 40, false});
    for (const auto &st : r.trace) {
        EXPECT_FALSE(st.word_residual.has_value());
    }
    EXPECT_EQ(r.trace.back().to_json().find("word_residual"), std::string::npos);
    EXPECT_NE(compiled().trace.back().to_json().find("\"word_residual\":"), std::string::npos);
}

TEST(DensityWitness, TracesAndCommutator) {
    const DensityWitnessReport r = check_density_witnesses();
    EXPECT_NEAR(r.re_u1, (-2 + std::sqrt(5.0)) / 2, 1e-12);
    EXPECT_NEAR(r.re_u2, (-3 + std::sqrt(5.0)) / 2, 1e-12);
    EXPECT_LT(r.det_residual, 1e-12);
    EXPECT_GT(r.commutator_norm, 1e-3);
    EXPECT_GT(r.commutator_scalar_distance, 1e-6);
    EXPECT_TRUE(r.pass);
}

// The same traces in exact arithmetic: the normalizing phases for six and
// eight letters are z^3 and z^4, and t + conj(t) = 4 Re(u).
TEST(DensityWitness, ExactTraces) {
    const Representation &rep = standard_representation();
    const FieldElement phi = FieldElement::phi();
    struct Case {
        const char *word;
        long phase;
        FieldElement four_re;
    } cases[] = {{"1 1 2 2 2 2", 3, phi * 4 - 6}, {"1 1 2 2 2 2 2 2", 4, phi * 4 - 8}};
    for (const auto &c : cases) {
        const ExactMatrix m = rep.evaluate_exact(BraidWord::parse(c.word, 3));
        const FieldElement z = FieldElement::zeta_power(c.phase);
        const FieldElement t = (m(0, 0) + m(1, 1)) * z;
        EXPECT_EQ(t + t.conj(), c.four_re) << c.word;
        EXPECT_EQ((m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) * z * z, FieldElement(1)) << c.word;
    }
}

}  // namespace
}  // namespace fibbraid
