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

#include <vector>

#include "matrix.hpp"
#include "tolerances.hpp"

namespace oqp {

struct ContainsResult {
    bool contained;
    double residual;
    std::vector<Complex> coefficients;
};

/// A unital *-closed linear span of matrices inside an ambient operator
/// space, kept as a Hilbert-Schmidt orthonormal basis. Immutable once built.
class StarAlgebra {
  public:
    /// Smallest unital *-closed span containing the generators. Worklist
    /// closure: pending products/adjoints are orthonormalized against the
    /// current basis and accepted when the residual exceeds tol * norm.
    /// Basis order: normalized identity first, then acceptance order.
    static StarAlgebra generate(const std::vector<CMatrix>& generators, std::size_t ambient_dim,
                                double rank_tol = kRankTol);

    /// Kronecker-product algebra; basis elements kron(a_i, b_j), which stay
    /// orthonormal, with dim = dim(a) * dim(b).
    static StarAlgebra tensor(const StarAlgebra& a, const StarAlgebra& b);

    /// Block-diagonal sum of full matrix algebras M_{n1} + ... + M_{nk}.
    static StarAlgebra direct_sum(const std::vector<std::size_t>& blocks);

    /// Full matrix algebra on C^n.
    static StarAlgebra full(std::size_t n);

    /// Diagonal matrices on C^n (maximal commutative algebra).
    static StarAlgebra diagonal(std::size_t n);

    /// Wrap an already orthonormal, *-closed basis without re-generating.
    /// With verify=true the closure invariants are checked.
    static StarAlgebra from_orthonormal_basis(std::vector<CMatrix> basis, std::size_t ambient_dim,
                                              bool verify = false, double rank_tol = kRankTol);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<CMatrix>& basis() const { return basis_; }
    CMatrix identity() const { return CMatrix::identity(ambient_dim_); }

    /// Hilbert-Schmidt distance from X to the span, with the projection
    /// coefficients. contained = residual <= tol * max(1, ||X||).
    ContainsResult contains(const CMatrix& x, double rank_tol = kRankTol) const;

    /// Worst closure violation: max residual of b_i b_j, b_i*, and identity
    /// against the span. Used by tests and from_orthonormal_basis(verify).
    double closure_defect() const;

    /// True if all basis elements commute pairwise (within tol).
    bool is_commutative(double tol = 1e-10) const;

  private:
    StarAlgebra(std::size_t ambient_dim, std::vector<CMatrix> basis)
        : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

    std::size_t ambient_dim_;
    std::vector<CMatrix> basis_;
};

/// Orthonormalize a list of matrices (two-pass Gram-Schmidt), dropping near-
/// dependent entries. Deterministic in the input order.
std::vector<CMatrix> orthonormal_span(const std::vector<CMatrix>& mats, double rank_tol = kRankTol);

}  // namespace oqp
