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

#include <cstdint>
#include <random>

#include "matrix.hpp"

namespace oqp {

/// Deterministic pseudo-random source with an explicit 64-bit seed. Normals
/// come from an in-house Box-Muller so the stream is identical on every
/// platform (std::normal_distribution is implementation-defined).
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    double uniform();  // [0, 1)
    double normal();
    Complex complex_normal();

    CMatrix matrix(std::size_t rows, std::size_t cols);
    CMatrix hermitian(std::size_t n);
    CMatrix unit_vector(std::size_t n);
    /// Full-rank positive-definite unit-trace density.
    CMatrix density(std::size_t n);
    /// Haar-ish unitary via Gram-Schmidt of a random matrix.
    CMatrix unitary(std::size_t n);

  private:
    std::mt19937_64 gen_;
    std::uint64_t seed_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace oqp
