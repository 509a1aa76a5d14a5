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

#include "fibbraid/approximator.hpp"

#include <cmath>
#include <numbers>

#include "fibbraid/json_out.hpp"
#include "fibbraid/representation.hpp"

namespace fibbraid {

namespace {

using cd = std::complex<double>;

FloatMatrix assemble(const FloatMatrix &v, const FloatMatrix &vp) {
    FloatMatrix u = FloatMatrix::Zero(5, 5);
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 2; j++) {
            u(basis6::kV[i], basis6::kV[j]) = v(i, j);
        }
    }
    for (size_t i = 0; i < 3; i++) {
        for (size_t j = 0; j < 3; j++) {
            u(basis6::kVPerp[i], basis6::kVPerp[j]) = vp(i, j);
        }
    }
    return u;
}

}  // namespace

FloatMatrix DiagonalGate::matrix() const {
    FloatMatrix m = FloatMatrix::Zero(2, 2);
    m(0, 0) = gamma * std::polar(1.0, -theta / 2);
    m(1, 1) = gamma * std::polar(1.0, theta / 2);
    return m;
}

DiagonalGate DiagonalGate::from_matrix(const FloatMatrix &m, double tol) {
    if (m.rows() != 2 || m.cols() != 2 || std::abs(m(0, 1)) > tol || std::abs(m(1, 0)) > tol ||
        std::abs(std::abs(m(0, 0)) - 1) > tol || std::abs(std::abs(m(1, 1)) - 1) > tol) {
        throw std::invalid_argument("DiagonalGate::from_matrix: not a 2x2 diagonal unitary");
    }
    DiagonalGate g;
    g.theta = std::arg(m(1, 1) / m(0, 0));
    g.gamma = m(0, 0) * std::polar(1.0, g.theta / 2);
    return g;
}

FloatMatrix iterate_step(const FloatMatrix &u, const FloatMatrix &d) {
    const FloatMatrix u_inv = u.inverse();
    const FloatMatrix d_inv = d.inverse();
    return u * d * u_inv * d * u * d_inv * d_inv;
}

FloatMatrix iterate_step(const FloatMatrix &u, const DiagonalGate &d) {
    return iterate_step(u, d.matrix());
}

FloatMatrix iterate_step_uncorrected(const FloatMatrix &u, const FloatMatrix &d) {
    return u * d * u.inverse() * d * u;
}

BraidWord word_step(const BraidWord &w, const BraidWord &d) {
    const BraidWord d_inv = d.inverse();
    return w * d * w.inverse() * d * w * d_inv * d_inv;
}

CompressedWord word_step(const CompressedWord &w, const CompressedWord &d) {
    const CompressedWord d_inv = d.inverse();
    const CompressedWord parts[] = {w, d, w.inverse(), d, w, d_inv, d_inv};
    return CompressedWord::concat(parts);
}

ContractionBound contraction_bound(double theta, double delta) {
    if (!(std::abs(theta) < std::numbers::pi / 2) || theta == 0) {
        throw PreconditionError("contraction_bound: need 0 < |theta| < pi/2");
    }
    if (!(delta >= 0 && delta < 1)) {
        throw PreconditionError("contraction_bound: need 0 <= delta < 1");
    }
    const double c = std::cos(theta);
    ContractionBound b;
    b.rotation_branch = std::abs(1 - 2 * c);
    b.contraction_branch = std::abs((2 - 2 * c) * (1 - delta * delta) - 1);
    b.epsilon = std::max(b.rotation_branch, b.contraction_branch);
    return b;
}

std::string IterationState::to_json() const {
    std::string out = "{\"k\":" + std::to_string(k) + ",\"b\":" + format_double(b) + ",\"a_re\":" +
                      format_double(a.real()) + ",\"a_im\":" + format_double(a.imag()) +
                      ",\"word_len\":" + std::to_string(word_length) + ",\"epsilon\":" + format_double(epsilon);
    if (word_residual) {
        out += ",\"word_residual\":" + format_double(*word_residual);
    }
    return out + "}";
}

BraidWord default_d_word() {
    return BraidWord::parse("2 1 1 2", 6).power(3);
}

BraidWord default_u0_word() {
    return BraidWord::parse("3", 6);
}

CompileResult compile_entangler(const BraidWord &d_word, const BraidWord &u0_word, const CompileOptions &options) {
    if (d_word.strands() != 6 || u0_word.strands() != 6) {
        throw PreconditionError("compile_entangler: words must be in B_6");
    }
    const Representation &rep = standard_representation();
    const auto d_blocks = v_blocks(rep.evaluate_exact(d_word));
    const auto u_blocks = v_blocks(rep.evaluate_exact(u0_word));
    if (!d_blocks || !u_blocks) {
        throw PreconditionError("compile_entangler: both braids must preserve V");
    }
    if (!d_blocks->v.is_diagonal()) {
        throw PreconditionError("compile_entangler: D must be diagonal on V");
    }
    const FloatMatrix dv = d_blocks->v.to_float();
    const FloatMatrix dp = d_blocks->v_perp.to_float();
    FloatMatrix v = u_blocks->v.to_float();
    FloatMatrix vp = u_blocks->v_perp.to_float();

    CompileResult result;
    result.theta = DiagonalGate::from_matrix(dv).theta;
    result.bound = contraction_bound(result.theta, std::abs(v(0, 1)));

    const CompressedWord d(d_word);
    CompressedWord w(u0_word);
    for (size_t k = 0;; k++) {
        IterationState st;
        st.k = k;
        st.u = assemble(v, vp);
        st.v_block = v;
        st.b = std::abs(v(0, 1));
        st.a = v(0, 0);
        st.epsilon = result.bound.epsilon;
        st.word_length = w.length();
        if (options.check_words) {
            st.word_residual = max_abs_diff(rep.evaluate_float(w), st.u);
        }
        result.trace.push_back(st);
        if (st.b < options.tol) {
            break;
        }
        if (k >= options.max_iter) {
            throw NonConvergenceError("compile_entangler: b = " + format_double(st.b) + " >= tol after " +
                                          std::to_string(options.max_iter) + " iterations",
                                      std::move(result.trace));
        }
        v = iterate_step(v, dv);
        vp = iterate_step(vp, dp);
        w = word_step(w, d);
    }

    result.word = w;
    result.gate = result.trace.back().u;
    result.report = classify(result.gate);
    for (size_t i = 0; i < 4; i++) {
        const auto idx = static_cast<Eigen::Index>(basis6::kComputational[i]);
        result.lambda[i] = result.gate(idx, idx);
    }
    result.entangling_gap = diagonal_entangling_gap(result.lambda);
    result.diagonal_entangling = is_entangling_diagonal(result.lambda);
    return result;
}

CompileResult compile_entangler(const CompileOptions &options) {
    return compile_entangler(default_d_word(), default_u0_word(), options);
}

DensityWitnessReport check_density_witnesses() {
    const Representation &rep = standard_representation();
    // Each generator scaled by exp(i pi/10) has determinant one.
    auto normalized = [&](const char *text) {
        const BraidWord w = BraidWord::parse(text, 3);
        const cd phase = std::polar(1.0, std::numbers::pi / 10 * static_cast<double>(w.length()));
        return FloatMatrix(phase * rep.evaluate_exact(w).to_float());
    };
    const FloatMatrix u1 = normalized("1 1 2 2 2 2");
    const FloatMatrix u2 = normalized("1 1 2 2 2 2 2 2");

    DensityWitnessReport r;
    r.re_u1 = u1.trace().real() / 2;
    r.re_u2 = u2.trace().real() / 2;
    r.det_residual = std::max(std::abs(u1.determinant() - 1.0), std::abs(u2.determinant() - 1.0));
    r.commutator_norm = (u1 * u2 - u2 * u1).norm();
    const FloatMatrix c = u1 * u2 * u1.inverse() * u2.inverse();
    const cd mean = c.trace() / 2.0;
    r.commutator_scalar_distance = (c - mean * FloatMatrix::Identity(2, 2)).norm();
    const double want1 = (-2 + std::sqrt(5.0)) / 2;
    const double want2 = (-3 + std::sqrt(5.0)) / 2;
    r.pass = std::abs(r.re_u1 - want1) <= 1e-12 && std::abs(r.re_u2 - want2) <= 1e-12 && r.det_residual <= 1e-12 &&
             r.commutator_scalar_distance > 1e-6;
    return r;
}

}  // namespace fibbraid
