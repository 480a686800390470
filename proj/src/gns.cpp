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

#include "gns.hpp"

#include <cmath>

#include "eig.hpp"

namespace oqp {

CMatrix GNSRepresentation::represent(const CMatrix& x, double rank_tol) const {
    const ContainsResult c = algebra->contains(x, rank_tol);
    if (!c.contained)
        throw Error(ErrorCode::NotInAlgebra,
                    "operator lies outside the algebra (residual " + std::to_string(c.residual) + ")");
    CMatrix out(gns_dim, gns_dim);
    for (std::size_t i = 0; i < rep.size(); ++i) out += rep[i] * c.coefficients[i];
    return out;
}

Complex GNSRepresentation::omega_expectation(const CMatrix& t) const {
    return hs_inner(cyclic, t * cyclic);
}

double GNSRepresentation::reproduction_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < rep.size(); ++i)
        worst = std::max(worst, std::abs(omega_expectation(rep[i]) - source(algebra->basis()[i])));
    return worst;
}

double GNSRepresentation::morphism_defect() const {
    double worst = 0.0;
    const std::size_t d = rep.size();
    for (std::size_t i = 0; i < d; ++i) {
        const ContainsResult adj = algebra->contains(algebra->basis()[i].adjoint());
        CMatrix pi_adj(gns_dim, gns_dim);
        for (std::size_t k = 0; k < d; ++k) pi_adj += rep[k] * adj.coefficients[k];
        worst = std::max(worst, distance(pi_adj, rep[i].adjoint()));
        for (std::size_t j = 0; j < d; ++j) {
            const ContainsResult prod = algebra->contains(algebra->basis()[i] * algebra->basis()[j]);
            CMatrix pi_prod(gns_dim, gns_dim);
            for (std::size_t k = 0; k < d; ++k) pi_prod += rep[k] * prod.coefficients[k];
            worst = std::max(worst, distance(pi_prod, rep[i] * rep[j]));
        }
    }
    return worst;
}

GNSRepresentation gns(const StarAlgebra& alg, const State& omega) {
    if (!is_state(alg, omega)) throw Error(ErrorCode::NotAState, "functional fails the state test");

    const std::size_t d = alg.dim();
    const std::size_t n = alg.ambient_dim();
    CMatrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) gram(i, j) = omega(alg.basis()[i].adjoint() * alg.basis()[j]);

    const EigenDecomposition eig = hermitian_eig(hermitize(gram));
    const double lmax = eig.eigenvalues.back();
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < d; ++i)
        if (eig.eigenvalues[i] > kRankTol * lmax) kept.push_back(i);
    const std::size_t g = kept.size();

    // Frame operators F_k = sum_i V_ik lambda_k^{-1/2} b_i; the classes [F_k]
    // are an orthonormal basis of H_omega.
    GNSRepresentation out;
    out.algebra = std::make_shared<const StarAlgebra>(alg);
    out.source = omega;
    out.gns_dim = g;
    out.frame.reserve(g);
    for (std::size_t k : kept) {
        CMatrix f(n, n);
        const double scale = 1.0 / std::sqrt(eig.eigenvalues[k]);
        for (std::size_t i = 0; i < d; ++i) f += alg.basis()[i] * (eig.eigenvectors(i, k) * scale);
        out.frame.push_back(std::move(f));
    }

    // pi(b_j)_{lk} = omega(F_l* b_j F_k) = trace(rho F_l* b_j F_k).
    out.rep.reserve(d);
    const CMatrix& rho = omega.density();
    for (std::size_t j = 0; j < d; ++j) {
        CMatrix pi(g, g);
        for (std::size_t k = 0; k < g; ++k) {
            const CMatrix m = alg.basis()[j] * out.frame[k] * rho;
            for (std::size_t l = 0; l < g; ++l) pi(l, k) = hs_inner(out.frame[l], m);
        }
        out.rep.push_back(std::move(pi));
    }

    // Omega = class of the identity: Omega_k = omega(F_k* 1) = trace(rho F_k*).
    out.cyclic = CMatrix(g, 1);
    for (std::size_t k = 0; k < g; ++k) out.cyclic(k, 0) = (rho * out.frame[k].adjoint()).trace();
    const double cnorm = out.cyclic.frobenius_norm();
    if (std::abs(cnorm - 1.0) > 1e-8)
        throw Error(ErrorCode::Internal, "GNS cyclic vector norm drifted from 1");
    out.cyclic *= Complex(1.0 / cnorm, 0.0);
    return out;
}

State normal_lift(const GNSRepresentation& rep, const State& phi) {
    const StarAlgebra& alg = *rep.algebra;
    if (phi.dim() != alg.ambient_dim())
        throw Error(ErrorCode::DimensionMismatch, "state lives on the wrong ambient space");
    const std::size_t d = alg.dim();
    const std::size_t g = rep.gns_dim;

    // Solve sigma = sum_i c_i pi_i with trace(sigma pi_j) = phi(b_j); the
    // solution in span(pi(A)) is unique (trace pairing is nondegenerate on a
    // *-closed span), so solve the normal equations T* T c = T* y.
    CMatrix t(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) t(j, i) = (rep.rep[i] * rep.rep[j]).trace();
    CMatrix y(d, 1);
    for (std::size_t j = 0; j < d; ++j) y(j, 0) = phi(alg.basis()[j]);

    const CMatrix tt = hermitize(t.adjoint() * t);
    const CMatrix ty = t.adjoint() * y;
    const EigenDecomposition eig = hermitian_eig(tt);
    const double lmax = std::max(eig.eigenvalues.back(), 0.0);
    CMatrix c(d, 1);
    for (std::size_t k = 0; k < d; ++k) {
        if (eig.eigenvalues[k] <= kRankTol * lmax) continue;
        const CMatrix vk = eig.eigenvectors.col(k);
        c += vk * (hs_inner(vk, ty) / eig.eigenvalues[k]);
    }

    CMatrix sigma(g, g);
    for (std::size_t i = 0; i < d; ++i) sigma += rep.rep[i] * c(i, 0);
    sigma = hermitize(sigma);

    double moment_defect = 0.0;
    for (std::size_t j = 0; j < d; ++j)
        moment_defect = std::max(moment_defect, std::abs((sigma * rep.rep[j]).trace() - y(j, 0)));
    if (moment_defect > 1e-9)
        throw Error(ErrorCode::NotPiNormal,
                    "no representing density matches the moments (defect " + std::to_string(moment_defect) + ")");

    const EigenDecomposition seig = hermitian_eig(sigma);
    if (seig.eigenvalues.front() < -1e-9)
        throw Error(ErrorCode::NotPiNormal, "representing operator is not positive");

    if (seig.eigenvalues.front() < -1e-12) {
        // Clip rounding-level negatives so the result passes State validation.
        CMatrix clipped(g, g);
        for (std::size_t k = 0; k < g; ++k) {
            const double lk = std::max(seig.eigenvalues[k], 0.0);
            const CMatrix vk = seig.eigenvectors.col(k);
            clipped += outer(vk, vk) * Complex(lk, 0.0);
        }
        sigma = clipped * Complex(1.0 / clipped.trace().real(), 0.0);
    }
    return State::from_density(sigma);
}

}  // namespace oqp
