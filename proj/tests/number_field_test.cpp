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
#include <complex>
#include <numbers>
#include <random>

#include "fibbraid/number_field.hpp"

namespace fibbraid {
namespace {

using cd = std::complex<double>;

const double kPi = std::numbers::pi;
const double kSqrt5 = std::sqrt(5.0);

CycloElement cyclo(long a0, long a1, long a2, long a3) {
    return CycloElement::from_coeffs({mpq_class(a0), mpq_class(a1), mpq_class(a2), mpq_class(a3)});
}

// Power-basis coefficients of z^k, reduced by hand from z^4 = -1 + z - z^2 + z^3
// and z^5 = -1.
TEST(CycloElement, ZetaPowerTable) {
    const long table[10][4] = {
        {1, 0, 0, 0},   {0, 1, 0, 0},   {0, 0, 1, 0},  {0, 0, 0, 1},  {-1, 1, -1, 1},
        {-1, 0, 0, 0},  {0, -1, 0, 0},  {0, 0, -1, 0}, {0, 0, 0, -1}, {1, -1, 1, -1},
    };
    for (long k = 0; k < 10; k++) {
        const auto &t = table[k];
        EXPECT_EQ(CycloElement::zeta_power(k), cyclo(t[0], t[1], t[2], t[3])) << "k = " << k;
        EXPECT_EQ(CycloElement::zeta_power(k - 10), CycloElement::zeta_power(k));
        EXPECT_EQ(CycloElement::zeta_power(k + 20), CycloElement::zeta_power(k));
    }
}

TEST(CycloElement, NormalFormIsLowestTermsWithPositiveDenominator) {
    CycloElement x = CycloElement::from_coeffs({mpq_class(2, 4), mpq_class(-3, 6), mpq_class(0), mpq_class(1, -2)});
    EXPECT_EQ(x.denominator(), 2);
    EXPECT_EQ(x.coeff(0), mpq_class(1, 2));
    EXPECT_EQ(x.coeff(3), mpq_class(-1, 2));
    EXPECT_EQ(CycloElement(0).denominator(), 1);
    EXPECT_EQ((x - x).denominator(), 1);
}

TEST(FieldElement, DefiningRelations) {
    const FieldElement s = FieldElement::sqrt_phi_inv();
    EXPECT_EQ(s * s, FieldElement::phi_inv());
    EXPECT_EQ(FieldElement::phi_inv(), FieldElement(cyclo(0, 0, 1, -1)));
    EXPECT_EQ(FieldElement::phi(), FieldElement(cyclo(1, 0, 1, -1)));
    EXPECT_EQ(FieldElement::phi() * FieldElement::phi_inv(), FieldElement(1));
    EXPECT_EQ(FieldElement::phi() * FieldElement::phi(), FieldElement::phi() + 1);
    // z * (-z^4) = 1, with -z^4 = 1 - z + z^2 - z^3.
    EXPECT_EQ(FieldElement(cyclo(0, 1, 0, 0)) * FieldElement(cyclo(1, -1, 1, -1)), FieldElement(1));
}

TEST(FieldElement, Inverse) {
    EXPECT_EQ(FieldElement(1).inv(), FieldElement(1));
    EXPECT_EQ(FieldElement::phi().inv(), FieldElement::phi() - 1);
    EXPECT_EQ(FieldElement::zeta_power(1).inv(), FieldElement(cyclo(1, -1, 1, -1)));
    EXPECT_EQ(FieldElement::sqrt_phi_inv().inv() * FieldElement::sqrt_phi_inv(), FieldElement(1));
    EXPECT_THROW(FieldElement(0).inv(), DivisionByZero);
    EXPECT_THROW(CycloElement(0).inv(), DivisionByZero);
}

TEST(FieldElement, Conjugation) {
    EXPECT_EQ(FieldElement::zeta_power(1).conj(), FieldElement(cyclo(1, -1, 1, -1)));
    EXPECT_EQ(FieldElement::sqrt_phi_inv().conj(), FieldElement::sqrt_phi_inv());
    EXPECT_EQ(FieldElement::phi().conj(), FieldElement::phi());
    EXPECT_TRUE(FieldElement::phi().is_real());
    EXPECT_FALSE(FieldElement::zeta_power(1).is_real());
}

TEST(FieldElement, AbsSquared) {
    EXPECT_EQ(FieldElement::zeta_power(3).abs_sq(), FieldElement(1));
    EXPECT_EQ(FieldElement::sqrt_phi_inv().abs_sq(), FieldElement::phi_inv());
    const FieldElement x = FieldElement::zeta_power(-3) * FieldElement::sqrt_phi_inv();
    EXPECT_EQ(x.abs_sq(), FieldElement::phi_inv());
}

TEST(FieldElement, ToComplex) {
    EXPECT_NEAR(FieldElement::phi_inv().to_complex().real(), (kSqrt5 - 1) / 2, 1e-15);
    EXPECT_NEAR(FieldElement::sqrt_phi_inv().to_complex().real(), 0.7861513777574233, 1e-15);
    EXPECT_EQ(FieldElement(1).to_complex(), cd(1, 0));
    for (long k = -10; k <= 10; k++) {
        const cd z = FieldElement::zeta_power(k).to_complex();
        EXPECT_LT(std::abs(z - std::polar(1.0, kPi * static_cast<double>(k) / 5)), 1e-15);
    }
}

TEST(FieldElement, ParseRoundTrip) {
    const FieldElement x(cyclo(1, -2, 0, 3), cyclo(0, 1, 0, -1));
    EXPECT_EQ(FieldElement::parse(x.to_string()), x);
    EXPECT_EQ(FieldElement::parse("0,0,1,-1|0,0,0,0"), FieldElement::phi_inv());
    EXPECT_THROW(FieldElement::parse("1,2,3"), std::invalid_argument);
}

class RandomField {
  public:
    explicit RandomField(uint64_t seed) : rng_(seed) {}

    CycloElement cyclo_value() {
        std::uniform_int_distribution<long> num(-9, 9);
        std::uniform_int_distribution<long> den(1, 5);
        std::array<mpq_class, 4> c;
        for (auto &x : c) {
            x = mpq_class(num(rng_), den(rng_));
            x.canonicalize();
        }
        return CycloElement::from_coeffs(c);
    }

    FieldElement value() {
        std::uniform_int_distribution<int> shape(0, 5);
        switch (shape(rng_)) {
            case 0:
                return FieldElement(cyclo_value());
            case 1:
                return FieldElement(CycloElement(0), cyclo_value());
            default:
                return FieldElement(cyclo_value(), cyclo_value());
        }
    }

  private:
    std::mt19937_64 rng_;
};

double rel_err(cd got, cd want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

TEST(FieldElementProperty, RingAxiomsAndInverses) {
    RandomField gen(20261015);
    for (int i = 0; i < 10000; i++) {
        const FieldElement a = gen.value(), b = gen.value(), c = gen.value();
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + b - b, a);
        if (!a.is_zero()) {
            ASSERT_EQ(a * a.inv(), FieldElement(1));
            ASSERT_EQ((b / a) * a, b);
        }
    }
}

TEST(FieldElementProperty, ConjugationIsAnInvolutiveAutomorphism) {
    RandomField gen(7);
    for (int i = 0; i < 10000; i++) {
        const FieldElement a = gen.value(), b = gen.value();
        ASSERT_EQ(a.conj().conj(), a);
        ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
        ASSERT_EQ((a + b).conj(), a.conj() + b.conj());
        ASSERT_TRUE(a.abs_sq().is_real());
    }
}

TEST(FieldElementProperty, ToComplexIsARingHomomorphism) {
    RandomField gen(99);
    for (int i = 0; i < 10000; i++) {
        const FieldElement a = gen.value(), b = gen.value();
        const cd za = a.to_complex(), zb = b.to_complex();
        ASSERT_LT(rel_err((a * b).to_complex(), za * zb), 1e-12);
        ASSERT_LT(rel_err((a + b).to_complex(), za + zb), 1e-12);
        ASSERT_LT(rel_err(a.conj().to_complex(), std::conj(za)), 1e-12);
        ASSERT_LT(rel_err(a.abs_sq().to_complex(), std::norm(za)), 1e-12);
    }
}

TEST(FieldElementProperty, HashFollowsEquality) {
    RandomField gen(3);
    for (int i = 0; i < 1000; i++) {
        const FieldElement a = gen.value(), b = gen.value();
        ASSERT_EQ((a * b).hash(), (b * a).hash());
        ASSERT_EQ((a + b - b).hash(), a.hash());
    }
}

TEST(CycloElementProperty, NormIsMultiplicativeAndRational) {
    RandomField gen(11);
    for (int i = 0; i < 2000; i++) {
        const CycloElement a = gen.cyclo_value(), b = gen.cyclo_value();
        ASSERT_EQ((a * b).norm(), a.norm() * b.norm());
        for (int k : {1, 3, 7, 9}) {
            ASSERT_EQ((a * b).galois(k), a.galois(k) * b.galois(k));
        }
        ASSERT_EQ(a.galois(9), a.conj());
    }
}

}  // namespace
}  // namespace fibbraid
