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

#ifndef FIBBRAID_APPROXIMATOR_HPP
#define FIBBRAID_APPROXIMATOR_HPP

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibbraid/braid.hpp"
#include "fibbraid/compressed_word.hpp"
#include "fibbraid/gate_analysis.hpp"
#include "fibbraid/matrix.hpp"

namespace fibbraid {

/// gamma * diag(exp(-i theta/2), exp(i theta/2)).
struct DiagonalGate {
    double theta = 0;
    std::complex<double> gamma{1, 0};

    FloatMatrix matrix() const;
    /// Reads theta = arg(m11 / m00); throws std::invalid_argument unless m is
    /// a 2x2 diagonal unitary.
    static DiagonalGate from_matrix(const FloatMatrix &m, double tol = 1e-12);
};

/// Lemma hypotheses violated (theta out of range, delta >= 1, V not preserved).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// U D U^-1 D U D^-2, with a true inverse.
FloatMatrix iterate_step(const FloatMatrix &u, const FloatMatrix &d);
FloatMatrix iterate_step(const FloatMatrix &u, const DiagonalGate &d);
/// U D U^-1 D U: the update without the trailing correction.
FloatMatrix iterate_step_uncorrected(const FloatMatrix &u, const FloatMatrix &d);

/// w d w^-1 d w d^-2, freely reduced.
BraidWord word_step(const BraidWord &w, const BraidWord &d);
CompressedWord word_step(const CompressedWord &w, const CompressedWord &d);

struct ContractionBound {
    double rotation_branch = 0;     // |1 - 2 cos theta|
    double contraction_branch = 0;  // |(2 - 2 cos theta)(1 - delta^2) - 1|
    double epsilon = 0;             // max of the two
};

/// Requires 0 < |theta| < pi/2 and 0 <= delta < 1; throws PreconditionError.
ContractionBound contraction_bound(double theta, double delta);

struct IterationState {
    size_t k = 0;
    FloatMatrix u;        // 5x5 iterate
    FloatMatrix v_block;  // its 2x2 block on V
    double b = 0;         // |off-diagonal of v_block|
    std::complex<double> a;
    double epsilon = 0;
    uint64_t word_length = 0;
    /// max |evaluate(w_k) - u_k|, when word checking is on.
    std::optional<double> word_residual;

    std::string to_json() const;
};

struct NonConvergenceError : std::runtime_error {
    NonConvergenceError(const std::string &what, std::vector<IterationState> states)
        : std::runtime_error(what), trace(std::move(states)) {}
    std::vector<IterationState> trace;
};

struct CompileOptions {
    double tol = 1e-10;
    size_t max_iter = 40;
    /// Evaluate each w_k from its compressed form and compare with u_k.
    bool check_words = true;
};

struct CompileResult {
    CompressedWord word;
    FloatMatrix gate;
    GateReport report;
    std::vector<IterationState> trace;
    double theta = 0;
    ContractionBound bound;
    /// Diagonal of the gate on |11>, |1tau>, |tau1>, |tautau>.
    std::array<std::complex<double>, 4> lambda;
    double entangling_gap = 0;
    bool diagonal_entangling = false;
};

/// (2 1 1 2)^3 and 3: the V-preserving pair the default compilation starts from.
BraidWord default_d_word();
BraidWord default_u0_word();

/// Iterates u_{k+1} = u_k D u_k^-1 D u_k D^-2 from U0 = rho6(u0_word),
/// D = rho6(d_word) until b_k < tol. Throws PreconditionError or
/// NonConvergenceError (carrying the trace).
CompileResult compile_entangler(const BraidWord &d_word, const BraidWord &u0_word, const CompileOptions &options = {});
CompileResult compile_entangler(const CompileOptions &options = {});

struct DensityWitnessReport {
    /// Real parts of the eigenvalues of the det-1 normalizations of
    /// rho3(s1^2 s2^4) and rho3(s1^2 s2^6).
    double re_u1 = 0;
    double re_u2 = 0;
    double det_residual = 0;
    double commutator_norm = 0;           // ||U1 U2 - U2 U1||
    double commutator_scalar_distance = 0;  // distance of U1 U2 U1^-1 U2^-1 from scalars
    bool pass = false;
};

DensityWitnessReport check_density_witnesses();

}  // namespace fibbraid

#endif
