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

/// Spectral data of a Hermitian matrix: ascending real eigenvalues and the
/// matching orthonormal eigenvector columns.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    CMatrix eigenvectors;

    CMatrix reconstruct() const;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Deterministic:
/// identical input yields identical output. Throws NotHermitian when the
/// asymmetry exceeds kHermTol * max(1, ||M||_F), NoConvergence past the
/// sweep budget.
EigenDecomposition hermitian_eig(const CMatrix& m);

/// Orthonormal basis of the kernel of L (columns as n x 1 matrices), via the
/// eigendecomposition of L* L: eigenvalues below (tol * ||L||_F)^2 span the
/// kernel. Every returned v satisfies ||L v|| <= tol * ||L||_F.
std::vector<CMatrix> nullspace(const CMatrix& l, double tol = kRankTol);

/// Same kernel, with each vector reshaped into an op_rows x op_cols operator
/// (column-major unvec). Orthonormal in the Hilbert-Schmidt inner product.
std::vector<CMatrix> nullspace_as_operators(const CMatrix& l, std::size_t op_rows, std::size_t op_cols,
                                            double tol = kRankTol);

/// Kernel of the vertical stack of `maps` (all with equal column counts),
/// computed from the accumulated normal matrix sum_i L_i* L_i so the stack is
/// never materialized.
std::vector<CMatrix> joint_nullspace(const std::vector<CMatrix>& maps, double tol = kRankTol);

}  // namespace oqp
