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

#include <memory>
#include <optional>
#include <vector>

#include "state.hpp"

namespace oqp {

/// The represented triple (pi_omega, H_omega, Omega_omega) of a state on an
/// algebra. Built by quotienting the algebra by the Gram null space:
/// eigenpairs of G_ij = omega(b_i* b_j) above rank_tol * lambda_max survive,
/// and V Lambda^{1/2} columns define the isometry onto H_omega.
struct GNSRepresentation {
    std::shared_ptr<const StarAlgebra> algebra;
    State source;           // the defining state (ambient density)
    std::size_t gns_dim;
    std::vector<CMatrix> rep;  // pi(b_i), one per basis element, gns_dim x gns_dim
    CMatrix cyclic;            // Omega, gns_dim x 1 unit vector
    // Ambient operators F_k realizing the orthonormal GNS basis vectors
    // [F_k]; used to transfer further operators into the representation.
    std::vector<CMatrix> frame;

    /// pi(X) for an ambient operator X in the algebra (NotInAlgebra outside).
    CMatrix represent(const CMatrix& x, double rank_tol = kRankTol) const;

    /// <Omega, T Omega> for an operator T on the GNS space.
    Complex omega_expectation(const CMatrix& t) const;

    /// max_i |<Omega, pi(b_i) Omega> - omega(b_i)|.
    double reproduction_defect() const;

    /// Worst *-morphism violation over all basis pairs:
    /// ||pi(b_i b_j) - pi(b_i) pi(b_j)|| and ||pi(b_i*) - pi(b_i)*||.
    double morphism_defect() const;
};

/// GNS construction; requires is_state(alg, omega) (throws NotAState).
GNSRepresentation gns(const StarAlgebra& alg, const State& omega);

/// Density sigma on the GNS space with trace(sigma pi(b)) = phi(b) for every
/// basis element. Solves the moment problem in span(pi(A)) and verifies
/// positivity; throws NotPiNormal when no positive solution exists within
/// tolerance (1e-9).
State normal_lift(const GNSRepresentation& rep, const State& phi);

}  // namespace oqp
