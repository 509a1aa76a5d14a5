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

#ifndef FIBBRAID_REPRESENTATION_HPP
#define FIBBRAID_REPRESENTATION_HPP

#include <array>
#include <vector>

#include "fibbraid/braid.hpp"
#include "fibbraid/compressed_word.hpp"
#include "fibbraid/matrix.hpp"

namespace fibbraid {

enum class Label { One, Tau };

/// Fusion outcomes of a (x) b under tau (x) tau = 1 + tau.
std::vector<Label> fuse(Label a, Label b);

/// Fibonacci category data: the F-move F^{ttt}_t and the braiding
/// eigenvalues R^{tt}_1 = exp(-4 pi i/5), R^{tt}_t = exp(3 pi i/5).
struct FibData {
    ExactMatrix F;
    FieldElement R1;
    FieldElement Rtau;
    ExactMatrix R;  // diag(R1, Rtau)

    static FibData standard();
};

/// Fusion-tree basis of the one-qubit space: L fuses the first pair first.
enum class Basis { L, R };

/// Basis indices of the six-anyon space, fixed throughout the library.
namespace basis6 {
inline constexpr size_t NC = 0;
inline constexpr size_t OneOne = 1;
inline constexpr size_t OneTau = 2;
inline constexpr size_t TauOne = 3;
inline constexpr size_t TauTau = 4;
inline constexpr std::array<size_t, 4> kComputational = {1, 2, 3, 4};
inline constexpr std::array<size_t, 2> kV = {0, 4};
inline constexpr std::array<size_t, 3> kVPerp = {1, 2, 3};
}  // namespace basis6

/// Images of the Artin generators under rho_3 (2x2) and rho_6 (5x5), in both
/// exact and float form. Inverse letters map to conjugate transposes.
///
/// Tables are built once at construction and never mutated, so a
/// Representation can be shared freely between threads.
class Representation {
  public:
    explicit Representation(FibData data = FibData::standard());

    const FibData &data() const {
        return data_;
    }

    /// generator in {1, 2}.
    const ExactMatrix &rho3(int generator, Basis basis = Basis::L) const;
    /// generator in {1, ..., 5}.
    const ExactMatrix &rho6(int generator) const;

    /// Image of a signed letter; strands must be 3 (basis L) or 6.
    const ExactMatrix &exact_letter(int strands, int letter) const;
    const FloatMatrix &float_letter(int strands, int letter) const;

    ExactMatrix evaluate_exact(const BraidWord &word) const;
    ExactMatrix evaluate_exact(const BraidWord &word, Basis basis) const;
    FloatMatrix evaluate_float(const BraidWord &word) const;
    /// Evaluates shared sub-words once; composite pieces are projected back
    /// onto the unitary group to keep rounding drift from compounding.
    FloatMatrix evaluate_float(const CompressedWord &word) const;

  private:
    FibData data_;
    std::array<ExactMatrix, 2> rho3_left_;
    std::array<ExactMatrix, 2> rho3_right_;
    // Index by letter rank: s1, s1^-1, s2, s2^-1, ...
    std::array<ExactMatrix, 4> letters3_;
    std::array<ExactMatrix, 10> letters6_;
    std::array<FloatMatrix, 4> float3_;
    std::array<FloatMatrix, 10> float6_;
};

/// The default representation built from the standard Fibonacci data.
const Representation &standard_representation();

/// Strand-count check shared by all evaluators.
void require_supported_strands(int strands);

}  // namespace fibbraid

#endif
