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

#include "fibbraid/number_field.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

namespace fibbraid {

namespace {

// z^j in the power basis, j = 0..9. Follows from z^5 = -1 and
// z^4 = z^3 - z^2 + z - 1.
constexpr int kZetaPowers[10][4] = {
    {1, 0, 0, 0},   {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},  {-1, 1, -1, 1},
    {-1, 0, 0, 0},  {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}, {1, -1, 1, -1},
};

int mod10(long k) {
    long r = k % 10;
    return static_cast<int>(r < 0 ? r + 10 : r);
}

std::string rational_text(const mpq_class &q) {
    return q.get_str();
}

mpq_class parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') {
        s.erase(s.begin());
    }
    while (!s.empty() && s.back() == ' ') {
        s.pop_back();
    }
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

void hash_mpz(const mpz_class &value, uint64_t &h) {
    constexpr uint64_t prime = 0x100000001b3ULL;
    const mpz_srcptr z = value.get_mpz_t();
    h = (h ^ static_cast<uint64_t>(mpz_sgn(z) + 2)) * prime;
    size_t n = mpz_size(z);
    h = (h ^ n) * prime;
    for (size_t i = 0; i < n; i++) {
        h = (h ^ static_cast<uint64_t>(mpz_getlimbn(z, i))) * prime;
        h ^= h >> 29;
    }
}

// ---------------------------------------------------------------- CycloElement

CycloElement::CycloElement(long value) {
    num_[0] = value;
}

CycloElement::CycloElement(const mpq_class &value) {
    num_[0] = value.get_num();
    den_ = value.get_den();
    normalize();
}

CycloElement CycloElement::from_coeffs(const std::array<mpq_class, 4> &coeffs) {
    CycloElement r;
    mpz_class den = 1;
    for (const auto &c : coeffs) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    for (int i = 0; i < 4; i++) {
        r.num_[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    }
    r.den_ = den;
    r.normalize();
    return r;
}

CycloElement CycloElement::zeta_power(long k) {
    CycloElement r;
    const int *row = kZetaPowers[mod10(k)];
    for (int i = 0; i < 4; i++) {
        r.num_[i] = row[i];
    }
    return r;
}

mpq_class CycloElement::coeff(int i) const {
    mpq_class q(num_[i], den_);
    q.canonicalize();
    return q;
}

bool CycloElement::is_zero() const {
    for (const auto &n : num_) {
        if (sgn(n) != 0) {
            return false;
        }
    }
    return true;
}

bool CycloElement::is_rational() const {
    return sgn(num_[1]) == 0 && sgn(num_[2]) == 0 && sgn(num_[3]) == 0;
}

void CycloElement::normalize() {
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto &n : num_) {
            n = -n;
        }
    }
    if (is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ == 1) {
        return;
    }
    mpz_class g = den_;
    for (const auto &n : num_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        if (g == 1) {
            return;
        }
    }
    for (auto &n : num_) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), g.get_mpz_t());
    }
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CycloElement CycloElement::operator-() const {
    CycloElement r = *this;
    for (auto &n : r.num_) {
        mpz_neg(n.get_mpz_t(), n.get_mpz_t());
    }
    return r;
}

CycloElement &CycloElement::operator+=(const CycloElement &other) {
    if (den_ == other.den_) {
        for (int i = 0; i < 4; i++) {
            mpz_add(num_[i].get_mpz_t(), num_[i].get_mpz_t(), other.num_[i].get_mpz_t());
        }
    } else {
        for (int i = 0; i < 4; i++) {
            num_[i] *= other.den_;
            mpz_addmul(num_[i].get_mpz_t(), other.num_[i].get_mpz_t(), den_.get_mpz_t());
        }
        den_ *= other.den_;
    }
    normalize();
    return *this;
}

CycloElement &CycloElement::operator-=(const CycloElement &other) {
    return *this += -other;
}

CycloElement operator*(const CycloElement &a, const CycloElement &b) {
    thread_local std::array<mpz_class, 7> c;
    for (auto &x : c) {
        x = 0;
    }
    for (int i = 0; i < 4; i++) {
        if (sgn(a.num_[i]) == 0) {
            continue;
        }
        for (int j = 0; j < 4; j++) {
            if (sgn(b.num_[j]) == 0) {
                continue;
            }
            mpz_addmul(c[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
        }
    }
    // z^4 = -1 + z - z^2 + z^3, z^5 = -1, z^6 = -z.
    CycloElement r;
    mpz_sub(r.num_[0].get_mpz_t(), c[0].get_mpz_t(), c[4].get_mpz_t());
    mpz_sub(r.num_[0].get_mpz_t(), r.num_[0].get_mpz_t(), c[5].get_mpz_t());
    mpz_add(r.num_[1].get_mpz_t(), c[1].get_mpz_t(), c[4].get_mpz_t());
    mpz_sub(r.num_[1].get_mpz_t(), r.num_[1].get_mpz_t(), c[6].get_mpz_t());
    mpz_sub(r.num_[2].get_mpz_t(), c[2].get_mpz_t(), c[4].get_mpz_t());
    mpz_add(r.num_[3].get_mpz_t(), c[3].get_mpz_t(), c[4].get_mpz_t());
    if (a.den_ != 1 || b.den_ != 1) {
        mpz_mul(r.den_.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
    }
    r.normalize();
    return r;
}

CycloElement &CycloElement::operator*=(const CycloElement &other) {
    *this = *this * other;
    return *this;
}

bool CycloElement::operator==(const CycloElement &other) const {
    return den_ == other.den_ && num_ == other.num_;
}

CycloElement CycloElement::galois(int k) const {
    if (mod10(k) % 2 == 0 || mod10(k) == 5) {
        throw std::invalid_argument("galois: exponent must be coprime to 10");
    }
    CycloElement r;
    r.den_ = den_;
    for (int i = 0; i < 4; i++) {
        if (sgn(num_[i]) == 0) {
            continue;
        }
        const int *row = kZetaPowers[mod10(static_cast<long>(i) * k)];
        for (int j = 0; j < 4; j++) {
            if (row[j] != 0) {
                r.num_[j] += row[j] * num_[i];
            }
        }
    }
    r.normalize();
    return r;
}

CycloElement CycloElement::conj() const {
    return galois(9);
}

mpq_class CycloElement::norm() const {
    CycloElement n = *this * galois(3) * galois(7) * galois(9);
    return n.coeff(0);
}

CycloElement CycloElement::inv() const {
    if (is_zero()) {
        throw DivisionByZero("inverse of zero");
    }
    CycloElement others = galois(3) * galois(7) * galois(9);
    mpq_class n = (*this * others).coeff(0);
    return others * CycloElement(mpq_class(1) / n);
}

std::complex<double> CycloElement::to_complex() const {
    long double re = 0;
    long double im = 0;
    for (int i = 0; i < 4; i++) {
        if (sgn(num_[i]) == 0) {
            continue;
        }
        long double c = den_ == 1 ? mpz_get_d(num_[i].get_mpz_t()) : mpq_class(num_[i], den_).get_d();
        long double angle = std::numbers::pi_v<long double> * i / 5;
        re += c * std::cos(angle);
        im += c * std::sin(angle);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::string CycloElement::to_string() const {
    std::string out;
    for (int i = 0; i < 4; i++) {
        if (i) {
            out += ',';
        }
        out += rational_text(coeff(i));
    }
    return out;
}

std::string CycloElement::to_symbolic() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int i = 0; i < 4; i++) {
        mpq_class c = coeff(i);
        if (sgn(c) == 0) {
            continue;
        }
        bool negative = sgn(c) < 0;
        mpq_class mag = abs(c);
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
        if (mono.empty()) {
            out += rational_text(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += rational_text(mag) + "*" + mono;
        }
    }
    return out;
}

void CycloElement::hash_into(uint64_t &h) const {
    for (const auto &n : num_) {
        hash_mpz(n, h);
    }
    hash_mpz(den_, h);
}

std::ostream &operator<<(std::ostream &out, const CycloElement &x) {
    return out << x.to_string();
}

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(long value) : a_(value) {
}

FieldElement::FieldElement(CycloElement a) : a_(std::move(a)) {
}

FieldElement::FieldElement(CycloElement a, CycloElement b) : a_(std::move(a)), b_(std::move(b)) {
}

FieldElement FieldElement::zeta_power(long k) {
    return FieldElement(CycloElement::zeta_power(k));
}

FieldElement FieldElement::sqrt_phi_inv() {
    return FieldElement(CycloElement(), CycloElement(1));
}

FieldElement FieldElement::phi() {
    // z + z^-1 = 2 cos(pi/5).
    return FieldElement(CycloElement::zeta_power(1) + CycloElement::zeta_power(9));
}

FieldElement FieldElement::phi_inv() {
    return FieldElement(CycloElement::zeta_power(2) - CycloElement::zeta_power(3));
}

namespace {
const CycloElement &phi_inv_cyclo() {
    static const CycloElement value = CycloElement::zeta_power(2) - CycloElement::zeta_power(3);
    return value;
}
}  // namespace

FieldElement FieldElement::parse(std::string_view text) {
    auto halves = split(text, '|');
    if (halves.size() != 2) {
        throw std::invalid_argument("field element needs two '|'-separated halves");
    }
    std::array<CycloElement, 2> parts;
    for (int h = 0; h < 2; h++) {
        auto fields = split(halves[h], ',');
        if (fields.size() != 4) {
            throw std::invalid_argument("field element half needs four coefficients");
        }
        std::array<mpq_class, 4> coeffs;
        for (int i = 0; i < 4; i++) {
            coeffs[i] = parse_rational(fields[i]);
        }
        parts[h] = CycloElement::from_coeffs(coeffs);
    }
    return FieldElement(parts[0], parts[1]);
}

FieldElement FieldElement::operator-() const {
    return FieldElement(-a_, -b_);
}

FieldElement &FieldElement::operator+=(const FieldElement &other) {
    if (!other.a_.is_zero()) {
        a_ += other.a_;
    }
    if (!other.b_.is_zero()) {
        b_ += other.b_;
    }
    return *this;
}

FieldElement &FieldElement::operator-=(const FieldElement &other) {
    if (!other.a_.is_zero()) {
        a_ -= other.a_;
    }
    if (!other.b_.is_zero()) {
        b_ -= other.b_;
    }
    return *this;
}

FieldElement operator*(const FieldElement &x, const FieldElement &y) {
    // (a + bs)(c + ds) = (ac + bd phi^-1) + (ad + bc) s.
    const bool xa = !x.a_.is_zero();
    const bool xb = !x.b_.is_zero();
    const bool ya = !y.a_.is_zero();
    const bool yb = !y.b_.is_zero();
    FieldElement r;
    if (xa && ya) {
        r.a_ = x.a_ * y.a_;
    }
    if (xb && yb) {
        r.a_ += x.b_ * y.b_ * phi_inv_cyclo();
    }
    if (xa && yb) {
        r.b_ = x.a_ * y.b_;
    }
    if (xb && ya) {
        r.b_ += x.b_ * y.a_;
    }
    return r;
}

FieldElement &FieldElement::operator*=(const FieldElement &other) {
    *this = *this * other;
    return *this;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) {
        throw DivisionByZero("inverse of zero");
    }
    // (a + bs)(a - bs) = a^2 - b^2 phi^-1, which lies in Q(z).
    CycloElement n = a_ * a_ - b_ * b_ * phi_inv_cyclo();
    CycloElement n_inv = n.inv();
    return FieldElement(a_ * n_inv, -(b_ * n_inv));
}

FieldElement FieldElement::conj() const {
    return FieldElement(a_.conj(), b_.conj());
}

FieldElement FieldElement::abs_sq() const {
    return *this * conj();
}

std::complex<double> FieldElement::to_complex() const {
    static const double s = std::sqrt(2.0 / (1.0 + std::sqrt(5.0)));
    return a_.to_complex() + s * b_.to_complex();
}

std::string FieldElement::to_string() const {
    return a_.to_string() + "|" + b_.to_string();
}

std::string FieldElement::to_symbolic() const {
    if (b_.is_zero()) {
        return a_.to_symbolic();
    }
    std::string b = "(" + b_.to_symbolic() + ")*s";
    if (a_.is_zero()) {
        return b;
    }
    return "(" + a_.to_symbolic() + ") + " + b;
}

void FieldElement::hash_into(uint64_t &h) const {
    a_.hash_into(h);
    h = (h ^ 0x7c) * 0x100000001b3ULL;
    b_.hash_into(h);
}

size_t FieldElement::hash() const {
    uint64_t h = 0xcbf29ce484222325ULL;
    hash_into(h);
    return static_cast<size_t>(h);
}

std::ostream &operator<<(std::ostream &out, const FieldElement &x) {
    return out << x.to_string();
}

}  // namespace fibbraid
