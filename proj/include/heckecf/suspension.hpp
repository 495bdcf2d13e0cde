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

#ifndef HECKECF_SUSPENSION_HPP_
#define HECKECF_SUSPENSION_HPP_

#include <cstdint>

#include "heckecf/hecke.hpp"

namespace heckecf {

// Frame pair (u, v) with u . v = 1; u spans the unstable direction, v the
// stable one.
struct PairedPoint {
  Vec2d u;
  Vec2d v;
};

// Section coordinates: (a, b) in the parameter triangle, s the time along
// the stable horocycle.
struct SuspensionCoord {
  double a = 0.0;
  double b = 0.0;
  double s = 0.0;
};

// Point (a, s) of the bottom/top boundary charts of the suspension.
struct SidePoint {
  double a = 0.0;
  double s = 0.0;
};

// Chart coordinates (alpha, sigma) along one identified polygon side.
struct ChartPoint {
  double alpha = 0.0;
  double sigma = 0.0;
};

// Sampled multiplicity report for the polygon slab decomposition.
struct SlabReport {
  int q = 0;
  long long samples = 0;
  long long zero_cover = 0;   // polygon samples covered by no slab
  long long multi_cover = 0;  // polygon samples covered by two or more
  double max_gap_residual = 0.0;
  bool vertex_identities_exact = false;
  bool pass = false;
};

// Matrix [[u.x, u.y], [-v.y, v.x]] built from a frame pair.  Unimodular
// exactly when u . v = 1; throws std::domain_error if |u . v - 1| > eps.
Mat2d phi(const PairedPoint& p, double eps = 1e-9);

// Frame pair of the section point (a, b, s):
//   u = (a, b),  v = ((1 - a*b*s)/a, a*s),
// so that phi(pair) = h_s * g_{a,b} with h_s = [[1,0],[-s,1]] and
// g_{a,b} = [[a,b],[0,1/a]].
PairedPoint coord_to_pair(const SuspensionCoord& c);

// Geodesic flow for time t: u scales by e^t, v by e^{-t}.
PairedPoint geodesic_act(double t, const PairedPoint& p);

// Membership in the cone-vector polygon: convex hull of w_0 .. w_{q-1}
// with the edges w_i -> w_{i+1} closed and the closing segment
// w_{q-1} -> w_0 removed.
bool polygon_contains(const HeckeContext& ctx, const Vec2d& p,
                      double eps = 1e-12);

// Samples the polygon and verifies that the triangle {a<=1, b<=1, a+b>1}
// together with the q-1 transformed base slabs covers it with multiplicity
// exactly one; also verifies the two pinned slab vertex identities in exact
// field arithmetic and the roof gap identity
//   R_i - R_{i-1} = 1 / (d_i * d_{i-1})
// on triangle samples up to each point's partition index.
SlabReport slab_partition_check(const HeckeContext& ctx, long long samples,
                                std::uint64_t seed = 0, double eps = 1e-9);

// Branch cut x_i / (x_i + y_i); cut_0 = 1 and cut_{q-1} = 0.
double branch_cut(const HeckeContext& ctx, int i);

// Vertical strip index: the unique i in {0, .., q-2} with
// cut_{i+1} < a <= cut_i (right-closed; a = 1 gives 0).
// Throws std::domain_error unless 0 < a <= 1.
int v_strip_index(const HeckeContext& ctx, double a);

// Expansion denominator rho_i(a) = (x_{i+1} - y_i) a + (x_i - x_{i+1}).
// Requires a to lie in branch i within eps.
double rho(const HeckeContext& ctx, int i, double a, double eps = 1e-12);

// Height of the side-set fiber over a: 1/(a(1-a)) for a < 1, lambda at a = 1.
double side_fiber_top(const HeckeContext& ctx, double a);

// Roof value R_{q,j}(a, 1-a) = y_j / (a * (a x_j + (1-a) y_j)); +infinity
// is possible at j = q-1 when a = 1.
double roof_at_side(const HeckeContext& ctx, int j, double a);

// Membership in the side set {0 < a <= 1, 0 <= s < side_fiber_top(a)}.
bool in_side_set(const HeckeContext& ctx, double a, double s,
                 double eps = 1e-12);

// Horizontal band index: the unique j in {0, .., q-2} with
// roof_at_side(j, a) <= s < roof_at_side(j+1, a).
int h_index(const HeckeContext& ctx, double a, double s, double eps = 1e-12);

// Chart map from the bottom edge of strip i: (a, s) with v-strip index i
// maps to alpha solving a/rho = alpha x_i + (1-alpha) x_{i+1} and
// sigma = s * rho^2.  Unit Jacobian.
ChartPoint side_map_V_to_S(const HeckeContext& ctx, int i, const SidePoint& p,
                           double eps = 1e-12);

// Chart map onto the horizontal band q-2-i: alpha maps to a = alpha
// unchanged and s = sigma + x_{i+1} / (alpha * (alpha x_i + (1-alpha)
// x_{i+1})).  Unit Jacobian.
SidePoint side_map_S_to_H(const HeckeContext& ctx, int i, const ChartPoint& p,
                          double eps = 1e-12);

}  // namespace heckecf

#endif  // HECKECF_SUSPENSION_HPP_
