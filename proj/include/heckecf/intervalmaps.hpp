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

#ifndef HECKECF_INTERVALMAPS_HPP_
#define HECKECF_INTERVALMAPS_HPP_

#include <utility>
#include <vector>

#include "heckecf/cfrac.hpp"
#include "heckecf/hecke.hpp"
#include "heckecf/rational.hpp"
#include "heckecf/suspension.hpp"

namespace heckecf {

enum class MapKind { kFarey, kGauss };

// Branch index of the slow interval map at a: the strip index, with the
// intervals right-closed and a = 1 belonging to branch 0.
int farey_branch(const HeckeContext& ctx, double a);

// Slow map F(a) = ((x_{i+1} + y_{i+1}) a - x_{i+1}) / rho_i(a) on branch i.
// F(1) = 1 exactly (indifferent fixed point).  Domain (0, 1].
double farey(const HeckeContext& ctx, double a);

// Derivative 1 / rho_i(a)^2 of the branch containing a.  If a lies within
// eps of a branch cut the value is the one-sided derivative of that branch
// and *at_boundary (when non-null) is set.
double farey_derivative(const HeckeContext& ctx, double a,
                        bool* at_boundary = nullptr, double eps = 1e-12);

// Inverse of branch i: the unique a in branch i with F(a) = x, for
// x in [0, 1].
double inverse_branch(const HeckeContext& ctx, int i, double x);

// Transfer-operator residual at x in (0, 1) for the density 1/(t(1-t)):
//   | sum_i rho_i(a_i)^2 / (a_i (1 - a_i))  -  1 / (x (1 - x)) |
// relative to max(1, rhs).
double farey_transfer_residual(const HeckeContext& ctx, double x);

// One step of the slow natural extension on the side set.
struct ExtStep {
  double a = 0.0;
  double s = 0.0;
  int branch = -1;          // strip index consumed
  bool shifted_at_one = false;  // boundary fiber a = 1: s shifts by lambda
};
ExtStep farey_ext_step(const HeckeContext& ctx, double a, double s,
                       double eps = 1e-12);

// Accelerated map value together with the number of slow steps combined.
struct GaussStep {
  double value = 0.0;
  long long n = 0;
  bool fixed_point = false;  // a = 1: indifferent fixed point, no step taken
};
GaussStep gauss(const HeckeContext& ctx, double a);

// Invariant density of the accelerated map (not normalized):
//   lambda / (a (a + lambda (1-a)))          on the branch-0 interval,
//   lambda / ((1-a) ((1-a) + lambda a))      on the last-branch interval,
//   1 / (a (1-a))                            between.
double gauss_density(const HeckeContext& ctx, double a);

// Integral of gauss_density over [lo, hi] (piecewise adaptive Simpson,
// split at the two branch cuts).  Requires 0 <= lo <= hi <= 1.
double gauss_density_integral(const HeckeContext& ctx, double lo, double hi);

// Total mass of gauss_density over (0, 1].
double gauss_mass(const HeckeContext& ctx);

// Domain of the accelerated natural extension: the side set minus the two
// corner products (band 0 with the last strip) and (last band with strip 0).
bool in_gauss_region(const HeckeContext& ctx, double a, double s,
                     double eps = 1e-12);

// One step of the accelerated natural extension: the n-fold slow extension
// step, n from the acceleration count of a.  Small blocks iterate the slow
// step literally; past the same iteration cap the accelerated map uses, the
// block collapses to a closed form (the fiber recursion telescopes inside a
// single strip).  The base coordinate always equals gauss(ctx, a) bitwise.
// Throws std::runtime_error if a literal block degenerates numerically.
struct GaussExtStep {
  double a = 0.0;
  double s = 0.0;
  long long n = 0;
  int branch = -1;
  bool fixed_point = false;
};
GaussExtStep gauss_ext_step(const HeckeContext& ctx, double a, double s,
                            double eps = 1e-12);

// Occupation histogram of the first coordinate along an orbit.  density[j]
// estimates the normalized invariant density on bin j: count over
// (iterates * bin width).  truncated is set when the orbit reached the
// indifferent fixed point or left (0, 1] numerically before n_iter steps.
struct Histogram {
  std::vector<double> density;
  long long iterates = 0;
  bool truncated = false;
};
Histogram birkhoff_histogram(const HeckeContext& ctx, MapKind kind, double a0,
                             long long n_iter, int n_bins);

// Symbolic coding of the slow natural extension orbit of (a, s): the strip
// index consumed at each step, n symbols.  The base track is the slow
// interval map itself, so the symbols equal the sector itinerary of the
// vector (a, 1-a) bitwise; `terminated` mirrors the expansion's termination
// basin (the coded geodesic hit the cusp).  The fiber a = 1 exactly codes as
// 0 forever and is not a termination.
Itinerary geodesic_code(const HeckeContext& ctx, double a, double s, int n,
                        double eps = 1e-12);

// Exact-rational lane, available when the field has degree 1 (q = 3, where
// lambda = 1).  Throws std::domain_error otherwise.
Rational farey_exact(const HeckeContext& ctx, const Rational& a);

struct GaussExactStep {
  Rational value;
  long long n = 0;
  bool fixed_point = false;
};
GaussExactStep gauss_exact(const HeckeContext& ctx, const Rational& a);

// Exact transfer-operator sum  sum_i rho_i(a_i)^2 / (a_i (1 - a_i))  at a
// rational x in (0, 1); equals 1/(x(1-x)) when the density is invariant.
Rational farey_transfer_exact(const HeckeContext& ctx, const Rational& x);

}  // namespace heckecf

#endif  // HECKECF_INTERVALMAPS_HPP_
