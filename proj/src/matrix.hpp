// Copyright 2026 The oqp developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "error.hpp"

namespace oqp {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Immutable in spirit: operations return
/// fresh values; in-place mutation is only used while a value is being built.
class CMatrix {
  public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix zero(std::size_t rows, std::size_t cols);
    /// Column vector from entries.
    static CMatrix column(const std::vector<Complex>& entries);
    static CMatrix diagonal(const std::vector<Complex>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::size_t size() const { return entries_.size(); }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Complex>& entries() const { return entries_; }
    std::vector<Complex>& entries() { return entries_; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix conjugate() const;

    CMatrix operator+(const CMatrix& other) const;
    CMatrix operator-(const CMatrix& other) const;
    CMatrix operator*(const CMatrix& other) const;
    CMatrix operator*(Complex scalar) const;
    CMatrix operator-() const;
    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(Complex scalar);

    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    /// Frobenius distance to the own adjoint (0 for Hermitian input).
    double hermiticity_defect() const;

    /// Extract column j as an n x 1 matrix.
    CMatrix col(std::size_t j) const;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

inline CMatrix operator*(Complex scalar, const CMatrix& m) { return m * scalar; }
inline CMatrix operator*(double scalar, const CMatrix& m) { return m * Complex(scalar, 0.0); }

/// Kronecker product; shape (ra*rb) x (ca*cb).
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Hilbert-Schmidt inner product trace(a* b). Conjugate-linear in `a`.
Complex hs_inner(const CMatrix& a, const CMatrix& b);

/// (m + m*)/2; requires square input.
CMatrix hermitize(const CMatrix& m);

/// Column-major vectorization, so that vec(A X B) = kron(B^T, A) vec(X).
CMatrix vec_col(const CMatrix& m);
CMatrix unvec_col(const CMatrix& v, std::size_t rows, std::size_t cols);

/// Place `block` on the diagonal of an ambient x ambient zero matrix at
/// `offset`.
CMatrix embed_block(const CMatrix& block, std::size_t ambient, std::size_t offset);

/// Outer product u v* of two column vectors.
CMatrix outer(const CMatrix& u, const CMatrix& v);

double distance(const CMatrix& a, const CMatrix& b);

// 2x2 stock matrices.
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

/// Unitary DFT matrix, entries exp(2*pi*i*j*k/n)/sqrt(n).
CMatrix fourier(std::size_t n);

/// Cyclic shift on C^n: S e_k = e_{k+1 mod n}.
CMatrix cyclic_shift(std::size_t n);

}  // namespace oqp
