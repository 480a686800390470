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

#include "state.hpp"

#include <cmath>

#include "eig.hpp"

namespace oqp {

State State::from_density(const CMatrix& density) {
    if (!density.is_square()) throw Error(ErrorCode::NotAState, "density must be square");
    if (density.hermiticity_defect() > 1e-12 * std::max(1.0, density.frobenius_norm()))
        throw Error(ErrorCode::NotAState, "density is not Hermitian");
    if (std::abs(density.trace() - Complex(1.0, 0.0)) > 1e-12)
        throw Error(ErrorCode::NotAState, "density trace is not 1");
    const EigenDecomposition eig = hermitian_eig(hermitize(density));
    if (eig.eigenvalues.front() < -1e-12)
        throw Error(ErrorCode::NotAState, "density has a negative eigenvalue");
    return State(hermitize(density));
}

State State::from_vector(const CMatrix& v) {
    if (v.cols() != 1) throw Error(ErrorCode::ShapeMismatch, "state vector must be a column");
    if (std::abs(v.frobenius_norm() - 1.0) > 1e-12)
        throw Error(ErrorCode::NotNormalized, "vector norm differs from 1");
    return State(outer(v, v));
}

State State::mixture(const std::vector<double>& weights, const std::vector<State>& states) {
    if (weights.size() != states.size() || states.empty())
        throw Error(ErrorCode::ShapeMismatch, "mixture needs one weight per state");
    CMatrix rho(states[0].dim(), states[0].dim());
    double total = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (weights[i] < -1e-12) throw Error(ErrorCode::NotAState, "negative mixture weight");
        rho += states[i].density() * Complex(weights[i], 0.0);
        total += weights[i];
    }
    if (std::abs(total - 1.0) > 1e-10) throw Error(ErrorCode::NotAState, "mixture weights do not sum to 1");
    return from_density(rho);
}

State State::point_mass(std::size_t dim, std::size_t k) {
    if (k >= dim) throw Error(ErrorCode::ShapeMismatch, "point mass position out of range");
    CMatrix rho(dim, dim);
    rho(k, k) = 1.0;
    return State(std::move(rho));
}

State State::unchecked(const CMatrix& density) { return State(density); }

Complex State::operator()(const CMatrix& x) const {
    if (x.rows() != dim() || x.cols() != dim())
        throw Error(ErrorCode::DimensionMismatch, "state applied to wrong-size operator");
    return (density_ * x).trace();
}

State state_from_vector(const CMatrix& v) { return State::from_vector(v); }

bool is_state(const StarAlgebra& alg, const State& omega, double rank_tol) {
    if (alg.ambient_dim() != omega.dim())
        throw Error(ErrorCode::DimensionMismatch, "state and algebra live on different spaces");
    const std::size_t d = alg.dim();
    CMatrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) gram(i, j) = omega(alg.basis()[i].adjoint() * alg.basis()[j]);
    if (gram.hermiticity_defect() > 1e-10 * std::max(1.0, gram.frobenius_norm())) return false;
    const EigenDecomposition eig = hermitian_eig(hermitize(gram));
    if (eig.eigenvalues.front() < -rank_tol) return false;
    return std::abs(omega(alg.identity()) - Complex(1.0, 0.0)) <= 1e-10;
}

State functional_to_state(const StarAlgebra& alg, const std::vector<Complex>& values) {
    if (values.size() != alg.dim())
        throw Error(ErrorCode::DimensionMismatch, "one value per basis element expected");
    CMatrix d(alg.ambient_dim(), alg.ambient_dim());
    for (std::size_t j = 0; j < values.size(); ++j) d += alg.basis()[j].adjoint() * values[j];
    return State::from_density(hermitize(d));
}

}  // namespace oqp
