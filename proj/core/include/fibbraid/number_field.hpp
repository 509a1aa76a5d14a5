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

#ifndef FIBBRAID_NUMBER_FIELD_HPP
#define FIBBRAID_NUMBER_FIELD_HPP

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibbraid {

/// Raised by exact inversion of zero.
struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact element of the cyclotomic field Q(z), z = exp(i*pi/5).
///
/// Stored in the power basis {1, z, z^2, z^3} modulo z^4 - z^3 + z^2 - z + 1.
/// The four rational coordinates share one positive denominator, and the
/// numerators and denominator are jointly coprime, so the representation is a
/// normal form: structural equality is field equality.
class CycloElement {
  public:
    CycloElement() = default;
    CycloElement(long value);  // NOLINT(google-explicit-constructor)
    explicit CycloElement(const mpq_class &value);

    static CycloElement from_coeffs(const std::array<mpq_class, 4> &coeffs);
    /// z^k for any integer k, reduced into the power basis.
    static CycloElement zeta_power(long k);

    mpq_class coeff(int i) const;
    const std::array<mpz_class, 4> &numerators() const {
        return num_;
    }
    const mpz_class &denominator() const {
        return den_;
    }

    bool is_zero() const;
    bool is_rational() const;

    CycloElement operator-() const;
    CycloElement &operator+=(const CycloElement &other);
    CycloElement &operator-=(const CycloElement &other);
    CycloElement &operator*=(const CycloElement &other);
    friend CycloElement operator+(CycloElement a, const CycloElement &b) {
        return a += b;
    }
    friend CycloElement operator-(CycloElement a, const CycloElement &b) {
        return a -= b;
    }
    friend CycloElement operator*(const CycloElement &a, const CycloElement &b);
    bool operator==(const CycloElement &other) const;

    /// Complex conjugation: z -> z^-1.
    CycloElement conj() const;
    /// Galois automorphism z -> z^k, k coprime to 10.
    CycloElement galois(int k) const;
    /// Field norm down to Q (product of the four Galois conjugates).
    mpq_class norm() const;
    CycloElement inv() const;

    std::complex<double> to_complex() const;
    /// Four comma-separated rationals, e.g. "0,0,1,-1".
    std::string to_string() const;
    /// Human-readable polynomial in z, e.g. "z^2 - z^3".
    std::string to_symbolic() const;
    void hash_into(uint64_t &h) const;

  private:
    void normalize();

    std::array<mpz_class, 4> num_{};
    mpz_class den_{1};
};

/// Exact element a + b*s of Q(z)(s), where s = sqrt(phi^-1) > 0 and
/// s^2 = phi^-1 = z^2 - z^3. Every entry of every Fibonacci braiding matrix
/// lives here.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(long value);  // NOLINT(google-explicit-constructor)
    FieldElement(CycloElement a);  // NOLINT(google-explicit-constructor)
    FieldElement(CycloElement a, CycloElement b);

    static FieldElement zeta_power(long k);
    /// s = sqrt(phi^-1).
    static FieldElement sqrt_phi_inv();
    static FieldElement phi();
    static FieldElement phi_inv();
    /// Parses the debug serialization produced by to_string().
    static FieldElement parse(std::string_view text);

    const CycloElement &rational_part() const {
        return a_;
    }
    const CycloElement &s_part() const {
        return b_;
    }

    bool is_zero() const {
        return a_.is_zero() && b_.is_zero();
    }

    FieldElement operator-() const;
    FieldElement &operator+=(const FieldElement &other);
    FieldElement &operator-=(const FieldElement &other);
    FieldElement &operator*=(const FieldElement &other);
    friend FieldElement operator+(FieldElement a, const FieldElement &b) {
        return a += b;
    }
    friend FieldElement operator-(FieldElement a, const FieldElement &b) {
        return a -= b;
    }
    friend FieldElement operator*(const FieldElement &x, const FieldElement &y);
    friend FieldElement operator/(const FieldElement &x, const FieldElement &y) {
        return x * y.inv();
    }
    bool operator==(const FieldElement &other) const {
        return a_ == other.a_ && b_ == other.b_;
    }

    /// Throws DivisionByZero on zero.
    FieldElement inv() const;
    /// z -> z^-1, s fixed.
    FieldElement conj() const;
    /// x * conj(x).
    FieldElement abs_sq() const;
    /// True iff the element is fixed by conj.
    bool is_real() const {
        return conj() == *this;
    }

    std::complex<double> to_complex() const;
    /// Eight rationals a0..a3|b0..b3, e.g. "0,0,1,-1|0,0,0,0" for phi^-1.
    std::string to_string() const;
    std::string to_symbolic() const;
    void hash_into(uint64_t &h) const;
    size_t hash() const;

  private:
    CycloElement a_;
    CycloElement b_;
};

std::ostream &operator<<(std::ostream &out, const CycloElement &x);
std::ostream &operator<<(std::ostream &out, const FieldElement &x);

/// Mixes the limbs of an integer into a 64-bit FNV-style accumulator.
void hash_mpz(const mpz_class &value, uint64_t &h);

}  // namespace fibbraid

template <>
struct std::hash<fibbraid::FieldElement> {
    size_t operator()(const fibbraid::FieldElement &x) const {
        return x.hash();
    }
};

#endif
