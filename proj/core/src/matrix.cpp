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

#include "fibbraid/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "fibbraid/json_out.hpp"

namespace fibbraid {

ExactMatrix::ExactMatrix(size_t dim) : dim_(dim), data_(dim * dim) {
}

ExactMatrix::ExactMatrix(size_t dim, std::initializer_list<FieldElement> row_major)
    : dim_(dim), data_(row_major) {
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("ExactMatrix: wrong number of entries");
    }
}

ExactMatrix ExactMatrix::identity(size_t dim) {
    ExactMatrix m(dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = 1;
    }
    return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const FieldElement> entries) {
    ExactMatrix m(entries.size());
    for (size_t i = 0; i < entries.size(); i++) {
        m(i, i) = entries[i];
    }
    return m;
}

ExactMatrix ExactMatrix::diagonal(std::initializer_list<FieldElement> entries) {
    return diagonal(std::span<const FieldElement>(entries.begin(), entries.size()));
}

ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b) {
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("matrix product: dimension mismatch");
    }
    const size_t n = a.dim_;
    ExactMatrix r(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            const FieldElement &x = a(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                const FieldElement &y = b(k, j);
                if (y.is_zero()) {
                    continue;
                }
                r(i, j) += x * y;
            }
        }
    }
    return r;
}

ExactMatrix ExactMatrix::scaled(const FieldElement &c) const {
    ExactMatrix r = *this;
    for (auto &x : r.data_) {
        if (!x.is_zero()) {
            x = x * c;
        }
    }
    return r;
}

ExactMatrix ExactMatrix::adjoint() const {
    ExactMatrix r(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            r(j, i) = (*this)(i, j).conj();
        }
    }
    return r;
}

bool ExactMatrix::is_identity() const {
    return *this == identity(dim_);
}

bool ExactMatrix::is_unitary() const {
    return (*this * adjoint()).is_identity();
}

bool ExactMatrix::is_diagonal() const {
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            if (i != j && !(*this)(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

ExactMatrix ExactMatrix::block(std::span<const size_t> indices) const {
    ExactMatrix r(indices.size());
    for (size_t i = 0; i < indices.size(); i++) {
        for (size_t j = 0; j < indices.size(); j++) {
            r(i, j) = (*this)(indices[i], indices[j]);
        }
    }
    return r;
}

ExactMatrix ExactMatrix::block(std::initializer_list<size_t> indices) const {
    return block(std::span<const size_t>(indices.begin(), indices.size()));
}

FloatMatrix ExactMatrix::to_float() const {
    FloatMatrix r(dim_, dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            r(i, j) = (*this)(i, j).to_complex();
        }
    }
    return r;
}

std::string ExactMatrix::to_symbolic() const {
    std::vector<std::string> cells(data_.size());
    size_t width = 1;
    for (size_t k = 0; k < data_.size(); k++) {
        cells[k] = data_[k].to_symbolic();
        width = std::max(width, cells[k].size());
    }
    std::string out;
    for (size_t i = 0; i < dim_; i++) {
        out += "[ ";
        for (size_t j = 0; j < dim_; j++) {
            const std::string &c = cells[i * dim_ + j];
            out += c + std::string(width - c.size(), ' ');
            out += j + 1 < dim_ ? " , " : " ]\n";
        }
    }
    return out;
}

ExactMatrix tensor(const ExactMatrix &a, const ExactMatrix &b) {
    const size_t n = a.dim();
    const size_t m = b.dim();
    ExactMatrix r(n * m);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (a(i, j).is_zero()) {
                continue;
            }
            for (size_t k = 0; k < m; k++) {
                for (size_t l = 0; l < m; l++) {
                    if (!b(k, l).is_zero()) {
                        r(i * m + k, j * m + l) = a(i, j) * b(k, l);
                    }
                }
            }
        }
    }
    return r;
}

ExactMatrix direct_sum(const ExactMatrix &a, const ExactMatrix &b) {
    const size_t n = a.dim();
    ExactMatrix r(n + b.dim());
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            r(i, j) = a(i, j);
        }
    }
    for (size_t i = 0; i < b.dim(); i++) {
        for (size_t j = 0; j < b.dim(); j++) {
            r(n + i, n + j) = b(i, j);
        }
    }
    return r;
}

ExactMatrix swap_gate() {
    ExactMatrix r(4);
    r(0, 0) = 1;
    r(1, 2) = 1;
    r(2, 1) = 1;
    r(3, 3) = 1;
    return r;
}

FloatMatrix float_tensor(const FloatMatrix &a, const FloatMatrix &b) {
    const auto n = a.rows();
    const auto m = b.rows();
    FloatMatrix r = FloatMatrix::Zero(n * m, n * m);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            r.block(i * m, j * m, m, m) = a(i, j) * b;
        }
    }
    return r;
}

FloatMatrix float_swap_gate() {
    return swap_gate().to_float();
}

FloatMatrix float_block(const FloatMatrix &m, std::span<const size_t> indices) {
    const auto n = static_cast<Eigen::Index>(indices.size());
    FloatMatrix r(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index j = 0; j < n; j++) {
            r(i, j) = m(static_cast<Eigen::Index>(indices[i]), static_cast<Eigen::Index>(indices[j]));
        }
    }
    return r;
}

double max_abs_diff(const FloatMatrix &a, const FloatMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_residual(const FloatMatrix &m) {
    FloatMatrix id = FloatMatrix::Identity(m.rows(), m.cols());
    return max_abs_diff(m * m.adjoint(), id);
}

FloatMatrix nearest_unitary(const FloatMatrix &m) {
    Eigen::JacobiSVD<FloatMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

std::string format_float_matrix(const FloatMatrix &m) {
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        out += "[ ";
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            out += format_complex(m(i, j));
            out += j + 1 < m.cols() ? " , " : " ]\n";
        }
    }
    return out;
}

}  // namespace fibbraid
