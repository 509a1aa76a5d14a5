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

#include "fibbraid/gate_analysis.hpp"

#include <cmath>

#include "fibbraid/json_out.hpp"
#include "fibbraid/representation.hpp"

namespace fibbraid {

namespace {

void require_dim(size_t got, size_t want, const char *what) {
    if (got != want) {
        throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(want) + "x" +
                                    std::to_string(want) + " matrix");
    }
}

bool in_v(size_t i) {
    return i == basis6::NC || i == basis6::TauTau;
}

std::string matrix_json(const FloatMatrix &m) {
    std::string out = "[";
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        out += i ? ",[" : "[";
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            out += j ? "," : "";
            out += "[" + format_double(m(i, j).real()) + "," + format_double(m(i, j).imag()) + "]";
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace

std::string GateReport::to_json() const {
    std::string out = "{\"leakage_free\":";
    out += leakage_free ? "true" : "false";
    out += ",\"entangling\":";
    out += entangling.has_value() ? (*entangling ? "true" : "false") : "null";
    out += ",\"fixed_states\":[";
    for (size_t k = 0; k < fixed_states.size(); k++) {
        out += (k ? "," : "") + std::to_string(fixed_states[k]);
    }
    out += "],\"preserves_V\":";
    out += preserves_V ? "true" : "false";
    out += ",\"blocks\":";
    if (v_block && v_perp_block) {
        out += "{\"V\":" + matrix_json(*v_block) + ",\"V_perp\":" + matrix_json(*v_perp_block) + "}";
    } else {
        out += "null";
    }
    return out + "}";
}

bool is_leakage_free(const ExactMatrix &m) {
    require_dim(m.dim(), 5, "is_leakage_free");
    return m(0, 0).abs_sq() == FieldElement(1);
}

bool is_leakage_free(const FloatMatrix &m, double tol) {
    require_dim(static_cast<size_t>(m.rows()), 5, "is_leakage_free");
    return std::abs(m(0, 0)) >= 1 - tol;
}

ExactMatrix restrict_to_vc(const ExactMatrix &m) {
    if (!is_leakage_free(m)) {
        throw NotLeakageFree("restrict_to_vc: gate leaks out of the computational subspace");
    }
    return m.block(std::span<const size_t>(basis6::kComputational));
}

FloatMatrix restrict_to_vc(const FloatMatrix &m, double tol) {
    if (!is_leakage_free(m, tol)) {
        throw NotLeakageFree("restrict_to_vc: gate leaks out of the computational subspace");
    }
    return float_block(m, basis6::kComputational);
}

ExactMatrix realign(const ExactMatrix &u) {
    require_dim(u.dim(), 4, "realign");
    ExactMatrix r(4);
    for (size_t i1 = 0; i1 < 2; i1++) {
        for (size_t i2 = 0; i2 < 2; i2++) {
            for (size_t j1 = 0; j1 < 2; j1++) {
                for (size_t j2 = 0; j2 < 2; j2++) {
                    r(2 * i1 + j1, 2 * i2 + j2) = u(2 * i1 + i2, 2 * j1 + j2);
                }
            }
        }
    }
    return r;
}

FloatMatrix realign(const FloatMatrix &u) {
    require_dim(static_cast<size_t>(u.rows()), 4, "realign");
    FloatMatrix r(4, 4);
    for (int i1 = 0; i1 < 2; i1++) {
        for (int i2 = 0; i2 < 2; i2++) {
            for (int j1 = 0; j1 < 2; j1++) {
                for (int j2 = 0; j2 < 2; j2++) {
                    r(2 * i1 + j1, 2 * i2 + j2) = u(2 * i1 + i2, 2 * j1 + j2);
                }
            }
        }
    }
    return r;
}

bool has_operator_schmidt_rank_one(const ExactMatrix &u) {
    const ExactMatrix r = realign(u);
    for (size_t a = 0; a < 4; a++) {
        for (size_t b = a + 1; b < 4; b++) {
            for (size_t c = 0; c < 4; c++) {
                for (size_t d = c + 1; d < 4; d++) {
                    if (!(r(a, c) * r(b, d) == r(a, d) * r(b, c))) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

double second_schmidt_value(const FloatMatrix &u) {
    Eigen::JacobiSVD<FloatMatrix> svd(realign(u));
    return svd.singularValues()(1);
}

bool is_entangling(const ExactMatrix &u) {
    require_dim(u.dim(), 4, "is_entangling");
    if (has_operator_schmidt_rank_one(u)) {
        return false;
    }
    return !has_operator_schmidt_rank_one(swap_gate() * u);
}

bool is_entangling(const FloatMatrix &u, double tol) {
    require_dim(static_cast<size_t>(u.rows()), 4, "is_entangling");
    if (unitarity_residual(u) > kUnitarityTolerance) {
        throw std::invalid_argument("is_entangling: input is not unitary");
    }
    if (second_schmidt_value(u) < tol) {
        return false;
    }
    return second_schmidt_value(float_swap_gate() * u) >= tol;
}

bool is_entangling_diagonal(const std::array<FieldElement, 4> &lambda) {
    return !(lambda[3] * lambda[0] == lambda[1] * lambda[2]);
}

double diagonal_entangling_gap(const std::array<std::complex<double>, 4> &lambda) {
    return std::abs(lambda[3] * lambda[0] - lambda[1] * lambda[2]);
}

bool is_entangling_diagonal(const std::array<std::complex<double>, 4> &lambda, double tol) {
    return diagonal_entangling_gap(lambda) > tol;
}

bool fixes_state_up_to_phase(const ExactMatrix &m, size_t index) {
    if (index >= m.dim()) {
        throw std::invalid_argument("fixes_state_up_to_phase: index out of range");
    }
    for (size_t i = 0; i < m.dim(); i++) {
        if ((i == index) == m(i, index).is_zero()) {
            return false;
        }
    }
    return true;
}

bool fixes_state_up_to_phase(const FloatMatrix &m, size_t index, double tol) {
    if (static_cast<Eigen::Index>(index) >= m.rows()) {
        throw std::invalid_argument("fixes_state_up_to_phase: index out of range");
    }
    const auto k = static_cast<Eigen::Index>(index);
    return std::abs(m(k, k)) >= 1 - tol;
}

std::optional<ExactVBlocks> v_blocks(const ExactMatrix &m) {
    require_dim(m.dim(), 5, "v_blocks");
    for (size_t i = 0; i < 5; i++) {
        for (size_t j = 0; j < 5; j++) {
            if (in_v(i) != in_v(j) && !m(i, j).is_zero()) {
                return std::nullopt;
            }
        }
    }
    return ExactVBlocks{m.block(std::span<const size_t>(basis6::kV)),
                        m.block(std::span<const size_t>(basis6::kVPerp))};
}

std::optional<FloatVBlocks> v_blocks(const FloatMatrix &m, double tol) {
    require_dim(static_cast<size_t>(m.rows()), 5, "v_blocks");
    for (Eigen::Index i = 0; i < 5; i++) {
        for (Eigen::Index j = 0; j < 5; j++) {
            if (in_v(static_cast<size_t>(i)) != in_v(static_cast<size_t>(j)) && std::abs(m(i, j)) >= tol) {
                return std::nullopt;
            }
        }
    }
    return FloatVBlocks{float_block(m, basis6::kV), float_block(m, basis6::kVPerp)};
}

GateReport classify(const ExactMatrix &m) {
    GateReport report;
    report.leakage_free = is_leakage_free(m);
    if (report.leakage_free) {
        report.entangling = is_entangling(restrict_to_vc(m));
    }
    for (size_t i = 0; i < 5; i++) {
        if (fixes_state_up_to_phase(m, i)) {
            report.fixed_states.push_back(i);
        }
    }
    if (auto blocks = v_blocks(m)) {
        report.preserves_V = true;
        report.v_block = blocks->v.to_float();
        report.v_perp_block = blocks->v_perp.to_float();
    }
    return report;
}

GateReport classify(const FloatMatrix &m) {
    GateReport report;
    report.leakage_free = is_leakage_free(m);
    if (report.leakage_free) {
        report.entangling = is_entangling(restrict_to_vc(m));
    }
    for (size_t i = 0; i < 5; i++) {
        if (fixes_state_up_to_phase(m, i)) {
            report.fixed_states.push_back(i);
        }
    }
    if (auto blocks = v_blocks(m)) {
        report.preserves_V = true;
        report.v_block = blocks->v;
        report.v_perp_block = blocks->v_perp;
    }
    return report;
}

}  // namespace fibbraid
