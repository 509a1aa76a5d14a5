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

#include "fibbraid/representation.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace fibbraid {

std::vector<Label> fuse(Label a, Label b) {
    if (a == Label::One) {
        return {b};
    }
    if (b == Label::One) {
        return {a};
    }
    return {Label::One, Label::Tau};
}

FibData FibData::standard() {
    FibData d;
    const FieldElement phi_inv = FieldElement::phi_inv();
    const FieldElement s = FieldElement::sqrt_phi_inv();
    d.F = ExactMatrix(2, {phi_inv, s, s, -phi_inv});
    d.R1 = FieldElement::zeta_power(-4);
    d.Rtau = FieldElement::zeta_power(3);
    d.R = ExactMatrix::diagonal({d.R1, d.Rtau});
    return d;
}

void require_supported_strands(int strands) {
    if (strands != 3 && strands != 6) {
        throw std::invalid_argument("unsupported strand count " + std::to_string(strands) + " (need 3 or 6)");
    }
}

Representation::Representation(FibData data) : data_(std::move(data)) {
    const ExactMatrix &F = data_.F;
    const ExactMatrix &R = data_.R;
    const ExactMatrix FRF = F * R * F;
    const ExactMatrix I2 = ExactMatrix::identity(2);
    const ExactMatrix rt = ExactMatrix::diagonal({data_.Rtau});

    rho3_left_ = {R, FRF};
    rho3_right_ = {FRF, R};

    ExactMatrix p14(5);
    p14(0, 3) = 1;
    p14(3, 0) = 1;
    p14(1, 1) = 1;
    p14(2, 2) = 1;
    p14(4, 4) = 1;

    std::array<ExactMatrix, 5> gens = {
        direct_sum(rt, tensor(R, I2)),
        direct_sum(rt, tensor(FRF, I2)),
        p14 * direct_sum(direct_sum(rt, R), FRF) * p14,
        direct_sum(rt, tensor(I2, FRF)),
        direct_sum(rt, tensor(I2, R)),
    };
    for (int g = 0; g < 5; g++) {
        letters6_[2 * g] = gens[g];
        letters6_[2 * g + 1] = gens[g].adjoint();
    }
    for (int g = 0; g < 2; g++) {
        letters3_[2 * g] = rho3_left_[g];
        letters3_[2 * g + 1] = rho3_left_[g].adjoint();
    }
    for (size_t k = 0; k < letters6_.size(); k++) {
        float6_[k] = letters6_[k].to_float();
    }
    for (size_t k = 0; k < letters3_.size(); k++) {
        float3_[k] = letters3_[k].to_float();
    }
}

const ExactMatrix &Representation::rho3(int generator, Basis basis) const {
    if (generator < 1 || generator > 2) {
        throw std::invalid_argument("rho3: generator must be 1 or 2");
    }
    return basis == Basis::L ? rho3_left_[generator - 1] : rho3_right_[generator - 1];
}

const ExactMatrix &Representation::rho6(int generator) const {
    if (generator < 1 || generator > 5) {
        throw std::invalid_argument("rho6: generator must be in 1..5");
    }
    return letters6_[2 * (generator - 1)];
}

namespace {
void check_letter(int strands, int letter) {
    require_supported_strands(strands);
    if (letter == 0 || letter >= strands || -letter >= strands) {
        throw std::invalid_argument("letter " + std::to_string(letter) + " out of range for B_" +
                                    std::to_string(strands));
    }
}
}  // namespace

const ExactMatrix &Representation::exact_letter(int strands, int letter) const {
    check_letter(strands, letter);
    return strands == 6 ? letters6_[letter_rank(letter)] : letters3_[letter_rank(letter)];
}

const FloatMatrix &Representation::float_letter(int strands, int letter) const {
    check_letter(strands, letter);
    return strands == 6 ? float6_[letter_rank(letter)] : float3_[letter_rank(letter)];
}

ExactMatrix Representation::evaluate_exact(const BraidWord &word) const {
    return evaluate_exact(word, Basis::L);
}

ExactMatrix Representation::evaluate_exact(const BraidWord &word, Basis basis) const {
    const int n = word.strands();
    require_supported_strands(n);
    ExactMatrix m = ExactMatrix::identity(n == 6 ? 5 : 2);
    for (int l : word.letters()) {
        if (n == 3 && basis == Basis::R) {
            const ExactMatrix &g = rho3_right_[(l < 0 ? -l : l) - 1];
            m = m * (l < 0 ? g.adjoint() : g);
        } else {
            m = m * exact_letter(n, l);
        }
    }
    return m;
}

FloatMatrix Representation::evaluate_float(const BraidWord &word) const {
    const int n = word.strands();
    require_supported_strands(n);
    const Eigen::Index d = n == 6 ? 5 : 2;
    FloatMatrix m = FloatMatrix::Identity(d, d);
    for (int l : word.letters()) {
        m = m * float_letter(n, l);
    }
    return m;
}

namespace {

using Node = CompressedWord::Node;
using Slice = CompressedWord::Slice;

struct CompressedEvaluator {
    const Representation &rep;
    int strands;
    Eigen::Index dim;
    std::map<std::tuple<const Node *, uint64_t, uint64_t>, FloatMatrix> memo;

    FloatMatrix range(const Node &node, uint64_t start, uint64_t length) {
        if (length == 0) {
            return FloatMatrix::Identity(dim, dim);
        }
        auto key = std::make_tuple(&node, start, length);
        auto it = memo.find(key);
        if (it != memo.end()) {
            return it->second;
        }
        FloatMatrix m = FloatMatrix::Identity(dim, dim);
        if (node.is_leaf()) {
            for (uint64_t i = start; i < start + length; i++) {
                m = m * rep.float_letter(strands, node.leaf[i]);
            }
        } else {
            const uint64_t end = start + length;
            for (size_t k = 0; k < node.pieces.size(); k++) {
                uint64_t lo = node.offsets[k];
                uint64_t hi = lo + node.pieces[k].length;
                if (hi <= start || lo >= end) {
                    continue;
                }
                uint64_t a = std::max(lo, start) - lo;
                uint64_t b = std::min(hi, end) - lo;
                m = m * slice(node.pieces[k], a, b - a);
            }
            m = nearest_unitary(m);
        }
        memo.emplace(key, m);
        return m;
    }

    FloatMatrix slice(const Slice &s, uint64_t start, uint64_t length) {
        if (!s.inverted) {
            return range(*s.node, s.start + start, length);
        }
        return range(*s.node, s.start + s.length - (start + length), length).adjoint();
    }
};

}  // namespace

FloatMatrix Representation::evaluate_float(const CompressedWord &word) const {
    require_supported_strands(word.strands());
    CompressedEvaluator eval{*this, word.strands(), word.strands() == 6 ? 5 : 2, {}};
    return eval.slice(word.root(), 0, word.length());
}

const Representation &standard_representation() {
    static const Representation rep;
    return rep;
}

}  // namespace fibbraid
