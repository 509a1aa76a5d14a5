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

#ifndef FIBBRAID_GATE_ANALYSIS_HPP
#define FIBBRAID_GATE_ANALYSIS_HPP

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibbraid/matrix.hpp"

namespace fibbraid {

/// Float leakage filter: |M_00| >= 1 - tol.
inline constexpr double kLeakageTolerance = 1e-9;
/// Float entangling test: second operator-Schmidt singular value below tol
/// means product (or swapped product) gate.
inline constexpr double kEntanglingTolerance = 1e-8;
inline constexpr double kUnitarityTolerance = 1e-8;

struct NotLeakageFree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Classification of a 5x5 gate on the six-anyon space.
struct GateReport {
    bool leakage_free = false;
    /// Present iff leakage_free.
    std::optional<bool> entangling;
    /// Basis indices whose state the gate fixes up to a phase.
    std::vector<size_t> fixed_states;
    bool preserves_V = false;
    /// Present iff preserves_V: blocks on V = {NC, tautau} and V_perp.
    std::optional<FloatMatrix> v_block;
    std::optional<FloatMatrix> v_perp_block;

    std::string to_json() const;
};

// Leakage ---------------------------------------------------------------------

/// Exact: |M_00|^2 == 1.
bool is_leakage_free(const ExactMatrix &m);
bool is_leakage_free(const FloatMatrix &m, double tol = kLeakageTolerance);

/// The 4x4 block on the computational subspace. Throws NotLeakageFree.
ExactMatrix restrict_to_vc(const ExactMatrix &m);
FloatMatrix restrict_to_vc(const FloatMatrix &m, double tol = kLeakageTolerance);

// Entanglement ----------------------------------------------------------------

/// Operator-Schmidt realignment R[(i1 j1),(i2 j2)] = U[(i1 i2),(j1 j2)];
/// U = A (x) B iff R has rank one.
ExactMatrix realign(const ExactMatrix &u);
FloatMatrix realign(const FloatMatrix &u);

/// Exact rank-one test: every 2x2 minor of the realigned matrix vanishes.
bool has_operator_schmidt_rank_one(const ExactMatrix &u);
/// Second singular value of the realigned matrix.
double second_schmidt_value(const FloatMatrix &u);

/// A 4x4 unitary is non-entangling iff U or SWAP*U is a tensor product.
bool is_entangling(const ExactMatrix &u);
/// Throws std::invalid_argument if the unitarity residual exceeds 1e-8.
bool is_entangling(const FloatMatrix &u, double tol = kEntanglingTolerance);

/// Diagonal two-qubit gate diag(l0, l1, l2, l3) entangles iff l3*l0 != l1*l2.
bool is_entangling_diagonal(const std::array<FieldElement, 4> &lambda);
bool is_entangling_diagonal(const std::array<std::complex<double>, 4> &lambda, double tol = kEntanglingTolerance);
/// |l3*l0 - l1*l2|.
double diagonal_entangling_gap(const std::array<std::complex<double>, 4> &lambda);

// Fixed states and the V decomposition ----------------------------------------

/// Exact: column `index` has a single nonzero entry, on the diagonal.
bool fixes_state_up_to_phase(const ExactMatrix &m, size_t index);
bool fixes_state_up_to_phase(const FloatMatrix &m, size_t index, double tol = kLeakageTolerance);

struct ExactVBlocks {
    ExactMatrix v;       // rows/cols {NC, tautau}
    ExactMatrix v_perp;  // rows/cols {11, 1tau, tau1}
};
struct FloatVBlocks {
    FloatMatrix v;
    FloatMatrix v_perp;
};

/// Nullopt when some entry coupling V and V_perp is nonzero.
std::optional<ExactVBlocks> v_blocks(const ExactMatrix &m);
std::optional<FloatVBlocks> v_blocks(const FloatMatrix &m, double tol = kLeakageTolerance);

GateReport classify(const ExactMatrix &m);
GateReport classify(const FloatMatrix &m);

}  // namespace fibbraid

#endif
