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

#include "rng.hpp"

#include <cmath>
#include <numbers>

namespace oqp {

double SeededRng::uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

double SeededRng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex SeededRng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im);
}

CMatrix SeededRng::matrix(std::size_t rows, std::size_t cols) {
    CMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_normal();
    return m;
}

CMatrix SeededRng::hermitian(std::size_t n) { return hermitize(matrix(n, n)); }

CMatrix SeededRng::unit_vector(std::size_t n) {
    CMatrix v = matrix(n, 1);
    const double norm = v.frobenius_norm();
    return v * Complex(1.0 / norm, 0.0);
}

CMatrix SeededRng::density(std::size_t n) {
    const CMatrix g = matrix(n, n);
    CMatrix rho = g * g.adjoint();
    rho += CMatrix::identity(n) * Complex(1e-6, 0.0);  // keep it full rank
    return rho * Complex(1.0 / rho.trace().real(), 0.0);
}

CMatrix SeededRng::unitary(std::size_t n) {
    const CMatrix g = matrix(n, n);
    CMatrix u(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        CMatrix v = g.col(c);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < c; ++k) {
                const CMatrix uk = u.col(k);
                v -= uk * hs_inner(uk, v);
            }
        }
        v *= Complex(1.0 / v.frobenius_norm(), 0.0);
        for (std::size_t r = 0; r < n; ++r) u(r, c) = v(r, 0);
    }
    return u;
}

}  // namespace oqp
