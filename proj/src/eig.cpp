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

#include "eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oqp {

namespace {

double offdiag_mass(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p, q). The unitary acts on the
// (p, q) plane as [[c, s], [-s conj(phase), c conj(phase)]] with phase =
// a(p,q)/|a(p,q)| and the usual stable tangent choice.
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    const Complex phase = apq / r;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * r);
    const double t = (theta >= 0.0) ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                    : -1.0 / (-theta + std::sqrt(1.0 + theta * theta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Complex cp = std::conj(phase);

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {  // A <- A J
        const Complex akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp - s * cp * akq;
        a(k, q) = s * akp + c * cp * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {  // A <- J* A
        const Complex apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * apk + c * phase * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {  // V <- V J
        const Complex vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp - s * cp * vkq;
        v(k, q) = s * vkp + c * cp * vkq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);
}

}  // namespace

CMatrix EigenDecomposition::reconstruct() const {
    const std::size_t n = eigenvalues.size();
    CMatrix scaled(eigenvectors);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) scaled(r, c) *= eigenvalues[c];
    return scaled * eigenvectors.adjoint();
}

EigenDecomposition hermitian_eig(const CMatrix& m) {
    if (!m.is_square()) throw Error(ErrorCode::NotHermitian, "matrix is not square");
    const double norm = m.frobenius_norm();
    if (m.hermiticity_defect() > kHermTol * std::max(1.0, norm))
        throw Error(ErrorCode::NotHermitian, "asymmetry exceeds tolerance");

    const std::size_t n = m.rows();
    CMatrix a = hermitize(m);
    CMatrix v = CMatrix::identity(n);

    const double target = kJacobiTol * norm;
    const double skip = (norm > 0.0) ? 1e-18 * norm : 0.0;
    bool converged = offdiag_mass(a) <= target;
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > skip) rotate(a, v, p, q);
        converged = offdiag_mass(a) <= target;
    }
    if (!converged) throw Error(ErrorCode::NoConvergence, "Jacobi sweep budget exhausted");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const double li = a(i, i).real(), lj = a(j, j).real();
        return li < lj || (li == lj && i < j);
    });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = CMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        out.eigenvalues[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, c) = v(r, order[c]);
    }
    return out;
}

std::vector<CMatrix> nullspace(const CMatrix& l, double tol) {
    if (tol <= 0.0) throw Error(ErrorCode::ShapeMismatch, "nullspace tolerance must be positive");
    const std::size_t n = l.cols();
    if (n == 0) return {};
    const double lnorm = l.frobenius_norm();
    const EigenDecomposition eig = hermitian_eig(hermitize(l.adjoint() * l));
    const double cutoff = (tol * lnorm) * (tol * lnorm);
    std::vector<CMatrix> kernel;
    for (std::size_t i = 0; i < n; ++i) {
        if (eig.eigenvalues[i] <= cutoff) kernel.push_back(eig.eigenvectors.col(i));
    }
    return kernel;
}

std::vector<CMatrix> nullspace_as_operators(const CMatrix& l, std::size_t op_rows, std::size_t op_cols,
                                            double tol) {
    std::vector<CMatrix> ops;
    for (const CMatrix& v : nullspace(l, tol)) ops.push_back(unvec_col(v, op_rows, op_cols));
    return ops;
}

std::vector<CMatrix> joint_nullspace(const std::vector<CMatrix>& maps, double tol) {
    if (maps.empty()) return {};
    const std::size_t n = maps[0].cols();
    CMatrix h(n, n);
    double norm_sq = 0.0;
    for (const CMatrix& l : maps) {
        if (l.cols() != n) throw Error(ErrorCode::ShapeMismatch, "joint_nullspace maps disagree on columns");
        h += l.adjoint() * l;
        const double f = l.frobenius_norm();
        norm_sq += f * f;
    }
    const EigenDecomposition eig = hermitian_eig(hermitize(h));
    const double cutoff = tol * tol * norm_sq;
    std::vector<CMatrix> kernel;
    for (std::size_t i = 0; i < n; ++i)
        if (eig.eigenvalues[i] <= cutoff) kernel.push_back(eig.eigenvectors.col(i));
    return kernel;
}

}  // namespace oqp
