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

#ifndef HECKECF_HECKE_HPP_
#define HECKECF_HECKE_HPP_

#include <vector>

#include "heckecf/linalg.hpp"
#include "heckecf/numberfield.hpp"

namespace heckecf {

using Vec2d = Vec2<double>;
using Mat2d = Mat2<double>;
using Vec2x = Vec2<FieldElement>;
using Mat2x = Mat2<FieldElement>;

// Generators and derived data of the index-q triangle group, exact over
// Q(lambda) with double mirrors for the numeric paths.
//
// Invariants (all exact):
//   U^q = -I, w[q] = -w[0]
//   w[0] = (1,0), w[1] = (lambda,1), w[q-2] = (1,lambda), w[q-1] = (0,1)
//   w[i] ∧ w[i+1] = 1, w[0] ∧ w[q-1] = 1
//   M[i] = [w[i] w[i+1]] = U^i T, det M[i] = 1
//   transpose(M[i]) = M[q-2-i]
//   Q(x,y) = x^2 - lambda x y + y^2 = 1 on every w[i]
struct HeckeContext {
  int q = 0;
  FieldPtr field;
  FieldElement lambda;

  Mat2x S;  // (0,-1; 1,0)
  Mat2x T;  // (1,lambda; 0,1)
  Mat2x U;  // T*S = (lambda,-1; 1,0)

  std::vector<Vec2x> w;  // size q+1, w[i] = U^i (1,0)
  std::vector<Mat2x> M;  // size q-1, M[i] = U^i T

  double lambda_d = 0.0;
  std::vector<Vec2d> w_d;
  std::vector<Mat2d> M_d;

  HeckeContext() : lambda(FieldElement()), S{}, T{}, U{} {}
};

HeckeContext make_context(int q);

// Index i in [0, q-2] with w[i] ∧ u >= 0 and u ∧ w[i+1] > 0, comparisons
// taken against eps * max(1, |u|_inf). Rays through (0,1) (and the origin)
// belong to no sector; those throw std::domain_error.
int sector_of(const HeckeContext& ctx, const Vec2d& u, double eps = 1e-12);

// All points of the orbit of (1,0) under the full group with sup-norm at
// most norm_bound, found by breadth-first search over products of
// S^{±1}, T^{±1} of length <= word_bound; v and -v are distinct orbit
// points and both appear. Search expands through the larger ball of radius
// (1+lambda)*norm_bound; one generator step inflates the sup-norm by at
// most that factor, so no shortest path to a kept point leaves the ball.
std::vector<Vec2d> enumerate_lambda_q(const HeckeContext& ctx,
                                      double norm_bound,
                                      int word_bound = 30);

}  // namespace heckecf

#endif  // HECKECF_HECKE_HPP_
