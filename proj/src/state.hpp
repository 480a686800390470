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

#include "algebra.hpp"
#include "matrix.hpp"

namespace oqp {

/// Positive normalized functional, represented by a density operator:
/// omega(X) = trace(density * X). Construction validates Hermiticity,
/// positivity (eigenvalues >= -1e-12) and unit trace.
class State {
  public:
    static State from_density(const CMatrix& density);
    /// omega = <v, (.) v> for a unit vector; throws NotNormalized.
    static State from_vector(const CMatrix& v);
    static State mixture(const std::vector<double>& weights, const std::vector<State>& states);
    /// Point mass at basis position `k` (density E_kk); the pointer "delta".
    static State point_mass(std::size_t dim, std::size_t k);
    /// Skips validation; for probing functionals that may fail is_state.
    static State unchecked(const CMatrix& density);

    std::size_t dim() const { return density_.rows(); }
    const CMatrix& density() const { return density_; }
    Complex operator()(const CMatrix& x) const;
    Complex expectation(const CMatrix& x) const { return (*this)(x); }

  private:
    explicit State(CMatrix density) : density_(std::move(density)) {}
    CMatrix density_;
};

State state_from_vector(const CMatrix& v);

/// Gram-positivity test: true iff G_ij = omega(b_i* b_j) is positive
/// semidefinite (eigenvalues >= -rank_tol) and omega(1) = 1 within 1e-10.
bool is_state(const StarAlgebra& alg, const State& omega, double rank_tol = kRankTol);

/// The unique element D of span(alg) with trace(D b) = values_b for every
/// basis element; D = sum_j values_j b_j*. Wrapped as a State (validated).
State functional_to_state(const StarAlgebra& alg, const std::vector<Complex>& values);

}  // namespace oqp
