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

#ifndef FIBBRAID_MATRIX_HPP
#define FIBBRAID_MATRIX_HPP

#include <Eigen/Dense>

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fibbraid/number_field.hpp"

namespace fibbraid {

/// Machine-precision counterpart of ExactMatrix. Storage is inline (at most
/// 5x5), so products in the search loop never allocate.
using FloatMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 5, 5>;

/// Square matrix over the exact field, row-major.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    explicit ExactMatrix(size_t dim);
    ExactMatrix(size_t dim, std::initializer_list<FieldElement> row_major);

    static ExactMatrix identity(size_t dim);
    static ExactMatrix diagonal(std::span<const FieldElement> entries);
    static ExactMatrix diagonal(std::initializer_list<FieldElement> entries);

    size_t dim() const {
        return dim_;
    }
    FieldElement &operator()(size_t i, size_t j) {
        return data_[i * dim_ + j];
    }
    const FieldElement &operator()(size_t i, size_t j) const {
        return data_[i * dim_ + j];
    }

    /// Skips structurally zero terms; braid generators have at most two
    /// nonzero entries per row, so products with them are cheap.
    friend ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b);
    ExactMatrix scaled(const FieldElement &c) const;
    /// Conjugate transpose.
    ExactMatrix adjoint() const;
    bool operator==(const ExactMatrix &other) const = default;

    bool is_identity() const;
    bool is_unitary() const;
    bool is_diagonal() const;
    /// Square submatrix on the given basis indices.
    ExactMatrix block(std::span<const size_t> indices) const;
    ExactMatrix block(std::initializer_list<size_t> indices) const;

    FloatMatrix to_float() const;
    std::string to_symbolic() const;

  private:
    size_t dim_ = 0;
    std::vector<FieldElement> data_;
};

/// A (x) B with the convention (a_ij B).
ExactMatrix tensor(const ExactMatrix &a, const ExactMatrix &b);
ExactMatrix direct_sum(const ExactMatrix &a, const ExactMatrix &b);
/// The 4x4 permutation exchanging |01> and |10>.
ExactMatrix swap_gate();

FloatMatrix float_tensor(const FloatMatrix &a, const FloatMatrix &b);
FloatMatrix float_swap_gate();
FloatMatrix float_block(const FloatMatrix &m, std::span<const size_t> indices);
/// Largest entrywise modulus of a - b.
double max_abs_diff(const FloatMatrix &a, const FloatMatrix &b);
double unitarity_residual(const FloatMatrix &m);
/// Nearest unitary matrix (polar factor), used to strip rounding drift.
FloatMatrix nearest_unitary(const FloatMatrix &m);
std::string format_float_matrix(const FloatMatrix &m);

}  // namespace fibbraid

#endif
