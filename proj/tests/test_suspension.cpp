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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "heckecf/bcz.hpp"
#include "heckecf/hecke.hpp"
#include "heckecf/random.hpp"
#include "heckecf/suspension.hpp"

using namespace heckecf;

namespace {

bool mat_close(const Mat2d& a, const Mat2d& b, double tol) {
  return std::fabs(a.a11 - b.a11) < tol && std::fabs(a.a12 - b.a12) < tol &&
         std::fabs(a.a21 - b.a21) < tol && std::fabs(a.a22 - b.a22) < tol;
}

}  // namespace

TEST_CASE("frame matrix") {
  const Mat2d m = phi({{2.0, 3.0}, {0.5, 0.0}});
  CHECK(m == Mat2d{2.0, 3.0, 0.0, 0.5});
  CHECK_THROWS_AS(phi({{1.0, 0.0}, {0.5, 0.0}}), std::domain_error);
}

TEST_CASE("section coordinates produce sheared frames") {
  Rng rng(7);
  for (int n = 0; n < 50; ++n) {
    const double a = rng.uniform_in(0.05, 1.0);
    const double b = rng.uniform_in(-0.5, 1.0);
    const double s = rng.uniform_in(0.0, 3.0);
    const PairedPoint p = coord_to_pair({a, b, s});
    const Mat2d hs{1.0, 0.0, -s, 1.0};
    const Mat2d g{a, b, 0.0, 1.0 / a};
    CHECK(mat_close(phi(p), hs * g, 1e-13));
  }
  // Fiber limit: at s -> 1/(ab) the stable vector reaches the vertical axis.
  const PairedPoint lim = coord_to_pair({2.0, 1.0, 0.5});
  CHECK(lim.v.x == 0.0);
  CHECK(lim.v.y == 1.0);
}

TEST_CASE("geodesic action scales the frame diagonally") {
  const PairedPoint p = coord_to_pair({0.7, 0.4, 1.3});
  const double t = 0.9;
  const PairedPoint q = geodesic_act(t, p);
  const Mat2d at{std::exp(t), 0.0, 0.0, std::exp(-t)};
  CHECK(mat_close(phi(q), at * phi(p), 1e-13));
}

TEST_CASE("frame equivariance under the group") {
  const HeckeContext ctx = make_context(5);
  const Mat2d sm{0.0, -1.0, 1.0, 0.0};
  const Mat2d tm{1.0, ctx.lambda_d, 0.0, 1.0};
  Rng rng(13);
  for (int n = 0; n < 50; ++n) {
    Mat2d g{1.0, 0.0, 0.0, 1.0};
    for (int k = 0; k < 4; ++k) g = (rng.raw() % 2 ? sm : tm) * g;
    const PairedPoint p = coord_to_pair(
        {rng.uniform_in(0.2, 1.0), rng.uniform_in(-0.3, 1.0),
         rng.uniform_in(0.0, 1.0)});
    const Mat2d gi = inverse_unimodular(g);
    const PairedPoint moved{gi * p.u, transpose(g) * p.v};
    CHECK(mat_close(phi(moved), phi(p) * transpose(gi), 1e-10));
  }
}

TEST_CASE("polygon membership") {
  const HeckeContext c5 = make_context(5);
  CHECK(polygon_contains(c5, {1.3, 1.0}));
  CHECK_FALSE(polygon_contains(c5, {0.5, 0.5}));
  CHECK(polygon_contains(c5, c5.w_d[1]));

  const HeckeContext c3 = make_context(3);
  CHECK(polygon_contains(c3, {0.9, 0.5}));
  CHECK_FALSE(polygon_contains(c3, {0.4, 0.4}));
}

TEST_CASE("slab decomposition covers the polygon once") {
  for (int q = 3; q <= 8; ++q) {
    const HeckeContext ctx = make_context(q);
    const SlabReport rep = slab_partition_check(ctx, 20000, 5);
    CHECK(rep.zero_cover == 0);
    CHECK(rep.multi_cover == 0);
    CHECK(rep.vertex_identities_exact);
    CHECK(rep.max_gap_residual < 1e-9);
    CHECK(rep.pass);
  }
}

TEST_CASE("branch cuts") {
  const HeckeContext c3 = make_context(3);
  CHECK(branch_cut(c3, 0) == 1.0);
  CHECK(branch_cut(c3, 1) == 0.5);
  CHECK(branch_cut(c3, 2) == 0.0);
  for (int q : {5, 8}) {
    const HeckeContext ctx = make_context(q);
    CHECK(branch_cut(ctx, 0) == 1.0);
    CHECK(branch_cut(ctx, q - 1) == 0.0);
    for (int i = 0; i < q - 1; ++i) {
      CHECK(branch_cut(ctx, i) > branch_cut(ctx, i + 1));
    }
  }
}

TEST_CASE("vertical strip index") {
  const HeckeContext c3 = make_context(3);
  CHECK(v_strip_index(c3, 0.75) == 0);
  CHECK(v_strip_index(c3, 0.5) == 1);  // cuts belong to the strip below
  CHECK(v_strip_index(c3, 0.3) == 1);
  CHECK(v_strip_index(c3, 1.0) == 0);
  CHECK_THROWS_AS(v_strip_index(c3, 0.0), std::domain_error);
  CHECK_THROWS_AS(v_strip_index(c3, 1.5), std::domain_error);
}

TEST_CASE("expansion denominators") {
  const HeckeContext c3 = make_context(3);
  CHECK(rho(c3, 0, 0.8) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(rho(c3, 1, 0.3) == doctest::Approx(0.7).epsilon(1e-15));
  const HeckeContext c5 = make_context(5);
  CHECK(rho(c5, 3, 0.2) ==
        doctest::Approx(0.67639320225002095).epsilon(1e-14));
  for (int q = 3; q <= 10; ++q) {
    const HeckeContext ctx = make_context(q);
    CHECK(rho(ctx, 0, 1.0) == 1.0);
  }
}

TEST_CASE("side set membership and fiber height") {
  const HeckeContext c3 = make_context(3);
  CHECK(side_fiber_top(c3, 0.5) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(side_fiber_top(c3, 1.0) == c3.lambda_d);
  CHECK(in_side_set(c3, 0.3, 0.0));
  CHECK(in_side_set(c3, 0.3, 4.0));
  CHECK_FALSE(in_side_set(c3, 0.3, -1.0));
  CHECK_FALSE(in_side_set(c3, 0.3, 1.0 / 0.21 + 1.0));
  CHECK(in_side_set(c3, 1.0, c3.lambda_d - 1e-9));
  CHECK_FALSE(in_side_set(c3, 1.0, c3.lambda_d + 0.1));
  CHECK_FALSE(in_side_set(c3, 0.0, 0.5));
}

TEST_CASE("horizontal band index") {
  const HeckeContext c3 = make_context(3);
  CHECK(h_index(c3, 0.5, 1.0) == 0);  // roof of band 0 at a = 1/2 is 2
  CHECK(h_index(c3, 0.5, 3.0) == 1);
  CHECK(h_index(c3, 1.0, 0.5) == 0);
  CHECK(roof_at_side(c3, 1, 0.5) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(roof_at_side(c3, 1, 0.5) ==
        doctest::Approx(roof_piece(c3, 1, {0.5, 0.5})).epsilon(1e-14));
}

TEST_CASE("side chart maps pinned values") {
  const HeckeContext c3 = make_context(3);

  const ChartPoint c1 = side_map_V_to_S(c3, 1, {0.3, 0.0});
  CHECK(c1.alpha == doctest::Approx(3.0 / 7.0).epsilon(1e-13));
  CHECK(c1.sigma == 0.0);
  const SidePoint s1 = side_map_S_to_H(c3, 1, c1);
  CHECK(s1.a == doctest::Approx(3.0 / 7.0).epsilon(1e-13));
  CHECK(s1.s == 0.0);
  CHECK(h_index(c3, s1.a, s1.s) == 0);

  const ChartPoint c2 = side_map_V_to_S(c3, 0, {0.75, 0.0});
  CHECK(c2.alpha == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  const SidePoint s2 = side_map_S_to_H(c3, 0, c2);
  CHECK(s2.a == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(s2.s == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(h_index(c3, s2.a, s2.s) == 1);
}
