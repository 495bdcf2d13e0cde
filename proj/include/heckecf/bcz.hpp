// Copyright 2026 The heckecf Authors
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

#ifndef HECKECF_BCZ_HPP_
#define HECKECF_BCZ_HPP_

#include "heckecf/hecke.hpp"

namespace heckecf {

// Point of the parameter triangle {0 < a <= 1, 1 - lambda*a < b <= 1}.
struct TrianglePoint {
  double a = 0.0;
  double b = 0.0;
};

// First-return data along the horocycle section: R is the return roof value,
// next the section point hit.
struct FirstReturn {
  double R = 0.0;
  TrianglePoint next;
};

// Membership in the parameter triangle, tolerant to eps on each boundary.
bool triangle_contains(const HeckeContext& ctx, const TrianglePoint& p,
                       double eps = 1e-12);

// Dot product of (a, b) with the i-th cone vector, d_i = a*x_i + b*y_i.
double triangle_dot(const HeckeContext& ctx, int i, const TrianglePoint& p);

// Index i in {2, .., q-1} with d_{i-1} > 1 and d_i <= 1.  Scans all q-2
// candidate cells and throws std::runtime_error unless exactly one matches;
// throws std::domain_error outside the triangle.
int partition_index(const HeckeContext& ctx, const TrianglePoint& p,
                    double eps = 1e-12);

// Return-time piece y_i / (a * d_i).  Requires 0 <= i <= q-1.
double roof_piece(const HeckeContext& ctx, int i, const TrianglePoint& p);

// Return time of the section map at p, roof_piece evaluated at the
// partition index of p.
double roof(const HeckeContext& ctx, const TrianglePoint& p,
            double eps = 1e-12);

// One step of the section map: p maps to (d_i, d_{i+1} + k*lambda*d_i) with
// i the partition index and k the unique integer placing the second
// coordinate in (1 - lambda*d_i, 1].  Validates that the image lies in the
// triangle (within eps) and throws std::runtime_error otherwise.
TrianglePoint bcz_map(const HeckeContext& ctx, const TrianglePoint& p,
                      double eps = 1e-12);

// Independent first-return oracle.  Enumerates the linear orbit, applies
// g = [[a, b], [0, 1/a]], takes the minimal positive slope over the window
// 0 < x <= 1 as the return value R, then recovers the next section point
// from the sheared frame h_R * g.  norm_bound <= 0 selects the default
// 4 * max(1, 1/a); stage two re-enumerates with at least 4.5 / (a * a').
// Throws std::runtime_error with an "increase bounds" message when the
// enumeration window is too small.
FirstReturn first_return_oracle(const HeckeContext& ctx,
                                const TrianglePoint& p,
                                double norm_bound = 0.0, int word_bound = 30);

}  // namespace heckecf

#endif  // HECKECF_BCZ_HPP_
