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

using namespace heckecf;

TEST_CASE("triangle membership") {
  const HeckeContext ctx = make_context(3);
  CHECK(triangle_contains(ctx, {1.0, 1.0}));
  CHECK(triangle_contains(ctx, {0.5, 0.9}));
  CHECK_FALSE(triangle_contains(ctx, {0.5, 0.4}));
  CHECK_FALSE(triangle_contains(ctx, {1.2, 1.0}));
  CHECK_FALSE(triangle_contains(ctx, {-0.1, 1.0}));
  CHECK_FALSE(triangle_contains(ctx, {0.5, 1.1}));
}

TEST_CASE("partition index pinned values") {
  const HeckeContext c5 = make_context(5);
  CHECK(partition_index(c5, {1.0, 1.0}) == 4);
  CHECK(partition_index(c5, {1.0, -0.5}) == 2);
  CHECK(triangle_dot(c5, 1, {1.0, -0.5}) ==
        doctest::Approx(1.1180339887498949).epsilon(1e-14));
  CHECK(triangle_dot(c5, 2, {1.0, -0.5}) ==
        doctest::Approx(0.80901699437494745).epsilon(1e-14));

  const HeckeContext c3 = make_context(3);
  CHECK(partition_index(c3, {1.0, 1.0}) == 2);
  CHECK_THROWS_AS(partition_index(c3, {0.5, 0.2}), std::domain_error);
}

TEST_CASE("roof pinned values") {
  const HeckeContext c3 = make_context(3);
  CHECK(roof(c3, {1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(roof(c3, {1.0, 0.5}) == doctest::Approx(2.0).epsilon(1e-14));

  const HeckeContext c5 = make_context(5);
  CHECK(roof(c5, {1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(roof(c5, {1.0, -0.5}) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("section map pinned values") {
  const HeckeContext c3 = make_context(3);
  const TrianglePoint p1 = bcz_map(c3, {1.0, 1.0});
  CHECK(p1.a == 1.0);
  CHECK(p1.b == 1.0);
  const TrianglePoint p2 = bcz_map(c3, {1.0, 0.5});
  CHECK(p2.a == 0.5);
  CHECK(p2.b == 1.0);

  const HeckeContext c5 = make_context(5);
  const TrianglePoint p3 = bcz_map(c5, {1.0, 1.0});
  CHECK(p3.a == 1.0);
  CHECK(p3.b == doctest::Approx(c5.lambda_d - 1.0).epsilon(1e-14));
}

TEST_CASE("section map is total on the triangle") {
  for (int q : {3, 5, 8}) {
    const HeckeContext ctx = make_context(q);
    Rng rng(17 + static_cast<std::uint64_t>(q));
    for (int n = 0; n < 100000; ++n) {
      TrianglePoint p;
      p.a = rng.uniform_left_open(0.0, 1.0);
      p.b = rng.uniform_left_open(1.0 - ctx.lambda_d * p.a, 1.0);
      const int i = partition_index(ctx, p);
      CHECK(i >= 2);
      CHECK(i <= q - 1);
      const TrianglePoint nx = bcz_map(ctx, p);
      CHECK(triangle_contains(ctx, nx, 1e-9));
    }
  }
}

TEST_CASE("index 3 reduces to the classical one step map") {
  const HeckeContext ctx = make_context(3);
  REQUIRE(ctx.lambda_d == 1.0);
  Rng rng(23);
  for (int n = 0; n < 500; ++n) {
    TrianglePoint p;
    p.a = rng.uniform_left_open(0.0, 1.0);
    p.b = rng.uniform_left_open(1.0 - p.a, 1.0);
    const TrianglePoint nx = bcz_map(ctx, p);
    const double kk = std::floor((1.0 + p.a) / p.b);
    CHECK(nx.a == p.b);
    CHECK(nx.b == -p.a + kk * p.b);
  }
}

TEST_CASE("first return oracle pinned values") {
  const HeckeContext c3 = make_context(3);
  const FirstReturn f1 = first_return_oracle(c3, {1.0, 1.0});
  CHECK(f1.R == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f1.next.a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f1.next.b == doctest::Approx(1.0).epsilon(1e-12));

  const FirstReturn f2 = first_return_oracle(c3, {1.0, 0.5});
  CHECK(f2.R == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(f2.next.a == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(f2.next.b == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("oracle agrees with the section map") {
  const HeckeContext ctx = make_context(5);
  Rng rng(31);
  for (int n = 0; n < 25; ++n) {
    TrianglePoint p;
    p.a = rng.uniform_left_open(0.3, 1.0);
    p.b = rng.uniform_left_open(1.0 - ctx.lambda_d * p.a, 1.0);
    const FirstReturn fr = first_return_oracle(ctx, p);
    CHECK(roof(ctx, p) == doctest::Approx(fr.R).epsilon(1e-9));
    const TrianglePoint nx = bcz_map(ctx, p);
    CHECK(nx.a == doctest::Approx(fr.next.a).epsilon(1e-9));
    CHECK(nx.b == doctest::Approx(fr.next.b).epsilon(1e-9));
  }
}
