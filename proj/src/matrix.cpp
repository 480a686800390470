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

#include "matrix.hpp"

#include <cmath>
#include <numbers>

namespace oqp {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::ShapeMismatch,
                    std::string(op) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                        " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
}

}  // namespace

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : rows_(rows.size()), cols_(0) {
    for (const auto& row : rows) {
        if (cols_ == 0) cols_ = row.size();
        if (row.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

CMatrix CMatrix::column(const std::vector<Complex>& entries) {
    CMatrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<Complex>& entries) {
    CMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

CMatrix CMatrix::conjugate() const {
    CMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = std::conj(entries_[i]);
    return m;
}

CMatrix CMatrix::operator+(const CMatrix& other) const {
    require_same_shape(*this, other, "add");
    CMatrix m(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] += other.entries_[i];
    return m;
}

CMatrix CMatrix::operator-(const CMatrix& other) const {
    require_same_shape(*this, other, "subtract");
    CMatrix m(*this);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] -= other.entries_[i];
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    require_same_shape(*this, other, "add");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
    require_same_shape(*this, other, "subtract");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

CMatrix CMatrix::operator*(const CMatrix& other) const {
    if (cols_ != other.rows_) {
        throw Error(ErrorCode::ShapeMismatch,
                    "multiply: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                        std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
    }
    CMatrix m(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = (*this)(r, k);
            if (a == Complex(0.0, 0.0)) continue;
            const Complex* brow = &other.entries_[k * other.cols_];
            Complex* mrow = &m.entries_[r * other.cols_];
            for (std::size_t c = 0; c < other.cols_; ++c) mrow[c] += a * brow[c];
        }
    }
    return m;
}

CMatrix CMatrix::operator*(Complex scalar) const {
    CMatrix m(*this);
    for (auto& e : m.entries_) e *= scalar;
    return m;
}

CMatrix& CMatrix::operator*=(Complex scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

CMatrix CMatrix::operator-() const { return (*this) * Complex(-1.0, 0.0); }

Complex CMatrix::trace() const {
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

double CMatrix::hermiticity_defect() const {
    if (!is_square()) return frobenius_norm();
    double s = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) s += std::norm((*this)(r, c) - std::conj((*this)(c, r)));
    return std::sqrt(s);
}

CMatrix CMatrix::col(std::size_t j) const {
    CMatrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, j);
    return v;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            const Complex v = a(ra, ca);
            if (v == Complex(0.0, 0.0)) continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                for (std::size_t cb = 0; cb < b.cols(); ++cb)
                    m(ra * b.rows() + rb, ca * b.cols() + cb) = v * b(rb, cb);
        }
    return m;
}

Complex hs_inner(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::ShapeMismatch, "hs_inner on different shapes");
    Complex s(0.0, 0.0);
    const auto& ae = a.entries();
    const auto& be = b.entries();
    for (std::size_t i = 0; i < ae.size(); ++i) s += std::conj(ae[i]) * be[i];
    return s;
}

CMatrix hermitize(const CMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::ShapeMismatch, "hermitize needs a square matrix");
    CMatrix h(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    return h;
}

CMatrix vec_col(const CMatrix& m) {
    CMatrix v(m.rows() * m.cols(), 1);
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) v(c * m.rows() + r, 0) = m(r, c);
    return v;
}

CMatrix unvec_col(const CMatrix& v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols)
        throw Error(ErrorCode::ShapeMismatch, "unvec_col shape mismatch");
    CMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = v(c * rows + r, 0);
    return m;
}

CMatrix embed_block(const CMatrix& block, std::size_t ambient, std::size_t offset) {
    if (!block.is_square() || offset + block.rows() > ambient)
        throw Error(ErrorCode::ShapeMismatch, "embed_block out of range");
    CMatrix m(ambient, ambient);
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) m(offset + r, offset + c) = block(r, c);
    return m;
}

CMatrix outer(const CMatrix& u, const CMatrix& v) {
    if (u.cols() != 1 || v.cols() != 1) throw Error(ErrorCode::ShapeMismatch, "outer needs column vectors");
    CMatrix m(u.rows(), v.rows());
    for (std::size_t r = 0; r < u.rows(); ++r)
        for (std::size_t c = 0; c < v.rows(); ++c) m(r, c) = u(r, 0) * std::conj(v(c, 0));
    return m;
}

double distance(const CMatrix& a, const CMatrix& b) { return (a - b).frobenius_norm(); }

CMatrix pauli_x() { return CMatrix{{0.0, 1.0}, {1.0, 0.0}}; }

CMatrix pauli_y() {
    return CMatrix{{Complex(0.0, 0.0), Complex(0.0, -1.0)}, {Complex(0.0, 1.0), Complex(0.0, 0.0)}};
}

CMatrix pauli_z() { return CMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

CMatrix fourier(std::size_t n) {
    CMatrix m(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(n);
            m(j, k) = Complex(std::cos(angle) * scale, std::sin(angle) * scale);
        }
    return m;
}

CMatrix cyclic_shift(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m((k + 1) % n, k) = 1.0;
    return m;
}

}  // namespace oqp
