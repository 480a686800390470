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

namespace oqp {

// Single global relative tolerance for all rank decisions (kernel cutoffs,
// Gram ranks, span membership). Overridable per invocation.
inline constexpr double kRankTol = 1e-9;

// Hermiticity pre-checks accept a relative asymmetry up to this.
inline constexpr double kHermTol = 1e-12;

// Cyclic Jacobi: converged when the off-diagonal Frobenius mass drops below
// kJacobiTol * ||M||_F; hard budget of kJacobiMaxSweeps sweeps.
inline constexpr double kJacobiTol = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;

// Default tolerance for spectral-equivalence style checks and query pass/fail.
inline constexpr double kQueryTol = 1e-9;

// Eigenvalue clustering when building a PVM from an observable (relative to
// the spectral width).
inline constexpr double kClusterTol = 1e-9;

// Outcome labels of two PVMs are matched when they agree within this.
inline constexpr double kLabelMatchTol = 1e-7;

// Partition refinement of the center splits eigenvalue clusters separated by
// more than this fraction of the element's spectral width.
inline constexpr double kCenterGapTol = 1e-7;

// Sector components below this weight are dropped from the support and
// reported as suppressed labels.
inline constexpr double kZeroWeightTol = 1e-12;

}  // namespace oqp
