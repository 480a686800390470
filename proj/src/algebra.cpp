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

#include "algebra.hpp"

#include <cmath>
#include <deque>

namespace oqp {

namespace {

// Residual of x against the orthonormal `basis` (two projection passes for
// numerical stability). Fills coefficients when asked.
CMatrix project_out(const std::vector<CMatrix>& basis, const CMatrix& x, std::vector<Complex>* coeffs) {
    CMatrix r = x;
    if (coeffs) coeffs->assign(basis.size(), Complex(0.0, 0.0));
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Complex c = hs_inner(basis[i], r);
            r -= basis[i] * c;
            if (coeffs) (*coeffs)[i] += c;
        }
    }
    return r;
}

}  // namespace

std::vector<CMatrix> orthonormal_span(const std::vector<CMatrix>& mats, double rank_tol) {
    std::vector<CMatrix> basis;
    for (const CMatrix& x : mats) {
        const double xnorm = x.frobenius_norm();
        if (xnorm == 0.0) continue;
        CMatrix r = project_out(basis, x, nullptr);
        const double rnorm = r.frobenius_norm();
        if (rnorm > rank_tol * xnorm) basis.push_back(r * Complex(1.0 / rnorm, 0.0));
    }
    return basis;
}

StarAlgebra StarAlgebra::generate(const std::vector<CMatrix>& generators, std::size_t ambient_dim,
                                  double rank_tol) {
    for (const CMatrix& g : generators) {
        if (g.rows() != ambient_dim || g.cols() != ambient_dim)
            throw Error(ErrorCode::DimensionMismatch,
                        "generator is " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                            ", ambient is " + std::to_string(ambient_dim));
    }

    const double inorm = std::sqrt(static_cast<double>(ambient_dim));
    std::vector<CMatrix> basis;
    basis.push_back(CMatrix::identity(ambient_dim) * Complex(1.0 / inorm, 0.0));

    std::deque<CMatrix> pending;
    for (const CMatrix& g : generators) {
        pending.push_back(g);
        pending.push_back(g.adjoint());
    }

    const std::size_t max_dim = ambient_dim * ambient_dim;
    while (!pending.empty()) {
        const CMatrix x = std::move(pending.front());
        pending.pop_front();
        const double xnorm = x.frobenius_norm();
        if (xnorm == 0.0) continue;
        CMatrix r = project_out(basis, x, nullptr);
        const double rnorm = r.frobenius_norm();
        if (rnorm <= rank_tol * xnorm) continue;

        const CMatrix b = r * Complex(1.0 / rnorm, 0.0);
        basis.push_back(b);
        if (basis.size() > max_dim)
            throw Error(ErrorCode::Internal, "closure exceeded ambient_dim^2");
        pending.push_back(b.adjoint());
        for (const CMatrix& other : basis) {
            pending.push_back(b * other);
            pending.push_back(other * b);
        }
    }
    return StarAlgebra(ambient_dim, std::move(basis));
}

StarAlgebra StarAlgebra::tensor(const StarAlgebra& a, const StarAlgebra& b) {
    std::vector<CMatrix> basis;
    basis.reserve(a.dim() * b.dim());
    for (const CMatrix& ba : a.basis_)
        for (const CMatrix& bb : b.basis_) basis.push_back(kron(ba, bb));
    return StarAlgebra(a.ambient_dim_ * b.ambient_dim_, std::move(basis));
}

StarAlgebra StarAlgebra::direct_sum(const std::vector<std::size_t>& blocks) {
    std::size_t ambient = 0;
    for (std::size_t n : blocks) {
        if (n < 1) throw Error(ErrorCode::DimensionMismatch, "direct_sum block size must be >= 1");
        ambient += n;
    }
    std::vector<CMatrix> units;
    std::size_t offset = 0;
    for (std::size_t n : blocks) {
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                CMatrix e(ambient, ambient);
                e(offset + r, offset + c) = 1.0;
                units.push_back(std::move(e));
            }
        offset += n;
    }
    return generate(units, ambient);
}

StarAlgebra StarAlgebra::full(std::size_t n) { return direct_sum({n}); }

StarAlgebra StarAlgebra::diagonal(std::size_t n) {
    std::vector<CMatrix> basis;
    for (std::size_t i = 0; i < n; ++i) {
        CMatrix e(n, n);
        e(i, i) = 1.0;
        basis.push_back(std::move(e));
    }
    return StarAlgebra(n, std::move(basis));
}

StarAlgebra StarAlgebra::from_orthonormal_basis(std::vector<CMatrix> basis, std::size_t ambient_dim,
                                                bool verify, double rank_tol) {
    for (const CMatrix& b : basis)
        if (b.rows() != ambient_dim || b.cols() != ambient_dim)
            throw Error(ErrorCode::DimensionMismatch, "basis element has wrong shape");
    StarAlgebra alg(ambient_dim, std::move(basis));
    if (verify) {
        for (std::size_t i = 0; i < alg.basis_.size(); ++i)
            for (std::size_t j = 0; j < alg.basis_.size(); ++j) {
                const Complex g = hs_inner(alg.basis_[i], alg.basis_[j]);
                const Complex expect = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
                if (std::abs(g - expect) > 1e-10)
                    throw Error(ErrorCode::Internal, "basis is not orthonormal");
            }
        if (alg.closure_defect() > rank_tol)
            throw Error(ErrorCode::Internal, "basis span is not a *-closed unital algebra");
    }
    return alg;
}

ContainsResult StarAlgebra::contains(const CMatrix& x, double rank_tol) const {
    if (x.rows() != ambient_dim_ || x.cols() != ambient_dim_)
        throw Error(ErrorCode::DimensionMismatch, "contains: operand shape does not match ambient");
    ContainsResult out;
    const CMatrix r = project_out(basis_, x, &out.coefficients);
    out.residual = r.frobenius_norm();
    out.contained = out.residual <= rank_tol * std::max(1.0, x.frobenius_norm());
    return out;
}

double StarAlgebra::closure_defect() const {
    double worst = contains(identity()).residual;
    for (const CMatrix& bi : basis_) {
        worst = std::max(worst, contains(bi.adjoint()).residual);
        for (const CMatrix& bj : basis_) worst = std::max(worst, contains(bi * bj).residual);
    }
    return worst;
}

bool StarAlgebra::is_commutative(double tol) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (distance(basis_[i] * basis_[j], basis_[j] * basis_[i]) > tol) return false;
    return true;
}

}  // namespace oqp
