// Copyright 2026 The Privometer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVOMETER_TOLERANCES_HPP
#define PRIVOMETER_TOLERANCES_HPP

namespace privometer::tol {

// Numerical tolerances for double precision at desk scale.
inline constexpr double geo = 1e-9;     // geometric comparisons (distances, radii)
inline constexpr double rank = 1e-8;    // relative SVD cutoff for rank decisions
inline constexpr double orth = 1e-10;   // orthonormality of bases and rotations
inline constexpr double sym = 1e-10;    // matrix symmetry
inline constexpr double pd = 1e-12;     // positive definiteness (min eigenvalue)
inline constexpr double dedup = 1e-12;  // point deduplication
inline constexpr double kkt = 1e-7;     // optimality residuals of solvers

}  // namespace privometer::tol

#endif  // PRIVOMETER_TOLERANCES_HPP
