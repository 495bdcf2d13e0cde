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

// Acceptance battery: one line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "heckecf/bcz.hpp"
#include "heckecf/cfrac.hpp"
#include "heckecf/hecke.hpp"
#include "heckecf/intervalmaps.hpp"
#include "heckecf/numberfield.hpp"
#include "heckecf/random.hpp"
#include "heckecf/suspension.hpp"

using namespace heckecf;

namespace {

bool close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

// 1: the six exact identity families over the field, q = 3 .. 12.
bool criterion_identities() {
  for (int q = 3; q <= 12; ++q) {
    const HeckeContext ctx = make_context(q);
    const FieldPtr& f = ctx.field;
    const FieldElement zero = FieldElement::zero(f);
    const FieldElement one = FieldElement::one(f);
    const FieldElement lam = FieldElement::lambda(f);
    for (int i = 0; i <= q - 1; ++i) {
      const Vec2x& w = ctx.w[static_cast<std::size_t>(i)];
      if (!(w.x * w.x - lam * w.x * w.y + w.y * w.y == one)) return false;
      if (!(wedge(w, ctx.w[static_cast<std::size_t>(i + 1)]) == one)) return false;
    }
    if (!(wedge(ctx.w[0], ctx.w[static_cast<std::size_t>(q - 1)]) == one)) return false;
    for (int i = 0; i <= q - 2; ++i) {
      const Mat2x& m = ctx.M[static_cast<std::size_t>(i)];
      if (!(m == from_columns(ctx.w[static_cast<std::size_t>(i)],
                              ctx.w[static_cast<std::size_t>(i + 1)]))) return false;
      if (!(transpose(m) == ctx.M[static_cast<std::size_t>(q - 2 - i)])) return false;
      if (!(det(m) == one)) return false;
    }
    Mat2x p{one, zero, zero, one};
    for (int k = 0; k < q; ++k) p = ctx.U * p;
    if (!(p == Mat2x{-one, zero, zero, -one})) return false;
    if (!(det(ctx.S) == one) || !(det(ctx.T) == one)) return false;
  }
  return true;
}

// 2: section map and return time against the independent first-return
// oracle, plus the pinned examples and the classical reduction.
bool criterion_section_oracle() {
  const HeckeContext c5 = make_context(5);
  if (partition_index(c5, {1.0, 1.0}) != 4) return false;
  if (partition_index(c5, {1.0, -0.5}) != 2) return false;
  if (!close(roof(c5, {1.0, 1.0}), 1.0, 1e-12)) return false;
  if (!close(roof(c5, {1.0, -0.5}), 2.0, 1e-12)) return false;
  const TrianglePoint n5 = bcz_map(c5, {1.0, 1.0});
  if (n5.a != 1.0 || !close(n5.b, c5.lambda_d - 1.0, 1e-12)) return false;

  const HeckeContext c3 = make_context(3);
  const TrianglePoint n3a = bcz_map(c3, {1.0, 1.0});
  if (n3a.a != 1.0 || n3a.b != 1.0) return false;
  const TrianglePoint n3b = bcz_map(c3, {1.0, 0.5});
  if (n3b.a != 0.5 || n3b.b != 1.0) return false;

  // Classical reduction at index 3: exact float agreement.
  {
    Rng rng(1003);
    for (int n = 0; n < 500; ++n) {
      TrianglePoint p;
      p.a = rng.uniform_left_open(0.0, 1.0);
      p.b = rng.uniform_left_open(1.0 - p.a, 1.0);
      const TrianglePoint nx = bcz_map(c3, p);
      const double k = std::floor((1.0 + p.a) / p.b);
      if (nx.a != p.b || nx.b != -p.a + k * p.b) return false;
    }
  }

  for (int q : {3, 5, 6}) {
    const HeckeContext ctx = make_context(q);
    Rng rng(2000 + static_cast<std::uint64_t>(q));
    for (int n = 0; n < 100; ++n) {
      TrianglePoint p;
      p.a = rng.uniform_left_open(0.2, 1.0);
      p.b = rng.uniform_left_open(1.0 - ctx.lambda_d * p.a, 1.0);
      const FirstReturn fr = first_return_oracle(ctx, p);
      if (!close(roof(ctx, p), fr.R, 1e-9)) return false;
      const TrianglePoint nx = bcz_map(ctx, p);
      if (std::fabs(nx.a - fr.next.a) > 1e-9) return false;
      if (std::fabs(nx.b - fr.next.b) > 1e-9) return false;
    }
  }
  return true;
}

// 3: expansion digits: pinned lattice example, genuine non-termination,
// termination on lattice directions, scale invariance.
bool criterion_expansion() {
  const HeckeContext c3 = make_context(3);
  const Itinerary pin = cf_itinerary(c3, {3.0, 2.0}, 100);
  if (pin.steps != std::vector<int>{0, 1, 1}) return false;
  if (!pin.terminated || pin.last.x != 1.0 || pin.last.y != 0.0) return false;

  const double cs[] = {std::sqrt(2.0), M_PI - 3.0, std::exp(1.0) - 2.0};
  for (int q : {3, 5, 7}) {
    const HeckeContext ctx = make_context(q);
    for (const double c : cs) {
      const Itinerary it = cf_itinerary(ctx, {1.0, c}, 10000);
      if (it.terminated || it.steps.size() != 10000) return false;
    }

    const Mat2d sm{0.0, -1.0, 1.0, 0.0};
    const Mat2d tm{1.0, ctx.lambda_d, 0.0, 1.0};
    Rng rng(3000 + static_cast<std::uint64_t>(q));
    int kept = 0;
    while (kept < 100) {
      Vec2d u{1.0, 0.0};
      const int len = 1 + static_cast<int>(rng.raw() % 12);
      for (int k = 0; k < len; ++k) u = (rng.raw() % 2 ? sm : tm) * u;
      if (u.x < 0.0 || (u.x == 0.0 && u.y < 0.0)) u = -u;
      if (!(u.x > 0.0) || !(u.y > 0.0)) continue;  // need positive entries
      ++kept;
      if (!cf_itinerary(ctx, u, 10000).terminated) return false;
    }

    Rng rng2(3100 + static_cast<std::uint64_t>(q));
    for (int n = 0; n < 50; ++n) {
      const Vec2d u{rng2.uniform_in(0.1, 2.0), rng2.uniform_in(0.0, 2.0)};
      const Itinerary a = cf_itinerary(ctx, u, 300);
      const Itinerary b = cf_itinerary(ctx, {2.0 * u.x, 2.0 * u.y}, 300);
      if (a.steps != b.steps) return false;
    }
  }
  return true;
}

// 4: transfer identity for the reciprocal density: exact rational witness
// and small float residuals across q.
bool criterion_transfer() {
  const HeckeContext c3 = make_context(3);
  const Rational x(3, 5);
  if (farey_transfer_exact(c3, x) != Rational(25, 6)) return false;
  if (Rational(1) / (x * (Rational(1) - x)) != Rational(25, 6)) return false;

  for (int q = 3; q <= 10; ++q) {
    const HeckeContext ctx = make_context(q);
    Rng rng(4000 + static_cast<std::uint64_t>(q));
    for (int n = 0; n < 200; ++n) {
      if (farey_transfer_residual(ctx, rng.uniform_in(0.01, 0.99)) > 1e-10)
        return false;
    }
  }
  return true;
}

template <class F>
double jac_det(const F& f, double x, double y, double h) {
  const std::pair<double, double> fxp = f(x + h, y);
  const std::pair<double, double> fxm = f(x - h, y);
  const std::pair<double, double> fyp = f(x, y + h);
  const std::pair<double, double> fym = f(x, y - h);
  return ((fxp.first - fxm.first) * (fyp.second - fym.second) -
          (fyp.first - fym.first) * (fxp.second - fxm.second)) /
         (4.0 * h * h);
}

// 5: the side charts and both natural-extension steps preserve area, the
// worked chart values hold, and the Markov images land in the
// complementary band.
bool criterion_area_and_markov() {
  const HeckeContext c3 = make_context(3);
  {
    const ChartPoint c1 = side_map_V_to_S(c3, 1, {0.3, 0.0});
    if (!close(c1.alpha, 3.0 / 7.0, 1e-12) || c1.sigma != 0.0) return false;
    const SidePoint s1 = side_map_S_to_H(c3, 1, c1);
    if (!close(s1.a, 3.0 / 7.0, 1e-12) || s1.s != 0.0) return false;
    const SidePoint s2 =
        side_map_S_to_H(c3, 0, side_map_V_to_S(c3, 0, {0.75, 0.0}));
    if (!close(s2.a, 2.0 / 3.0, 1e-12) || !close(s2.s, 1.5, 1e-12)) return false;
    const ExtStep e = farey_ext_step(c3, 0.3, 1.0);
    if (!close(e.a, 3.0 / 7.0, 1e-12) || !close(e.s, 0.49, 1e-12)) return false;
  }

  const double h = 1e-5;
  const double margin = 10.0 * h;
  for (int q : {3, 5, 7}) {
    const HeckeContext ctx = make_context(q);
    Rng rng(5000 + static_cast<std::uint64_t>(q));
    const auto sample = [&](int* strip, double* a, double* s) {
      for (;;) {
        const int i =
            static_cast<int>(rng.raw() % static_cast<std::uint64_t>(q - 1));
        const double lo = branch_cut(ctx, i + 1);
        const double hi = branch_cut(ctx, i);
        if (hi - lo < 4.0 * margin) continue;
        const double aa = rng.uniform_in(lo + 2.0 * margin, hi - 2.0 * margin);
        const double top = std::min(side_fiber_top(ctx, aa), 50.0);
        *strip = i;
        *a = aa;
        *s = rng.uniform_in(2.0 * margin, 0.8 * top);
        return;
      }
    };

    for (int n = 0; n < 100; ++n) {
      int i = 0;
      double a = 0.0, s = 0.0;
      sample(&i, &a, &s);
      const auto v_to_s = [&](double x, double y) {
        const ChartPoint c = side_map_V_to_S(ctx, i, {x, y});
        return std::make_pair(c.alpha, c.sigma);
      };
      if (std::fabs(jac_det(v_to_s, a, s, h) - 1.0) > 1e-6) return false;

      const auto ext = [&](double x, double y) {
        const ExtStep e = farey_ext_step(ctx, x, y);
        return std::make_pair(e.a, e.s);
      };
      if (std::fabs(jac_det(ext, a, s, h) - 1.0) > 1e-6) return false;

      const double alpha = rng.uniform_in(0.1, 0.9);
      const Vec2d& wi = ctx.w_d[static_cast<std::size_t>(i)];
      const Vec2d& wn = ctx.w_d[static_cast<std::size_t>(i + 1)];
      const double av = alpha * wi.x + (1.0 - alpha) * wn.x;
      const double bv = alpha * wi.y + (1.0 - alpha) * wn.y;
      const double sigma = rng.uniform_in(2.0 * margin, 0.8 / (av * bv));
      const auto s_to_h = [&](double x, double y) {
        const SidePoint sp = side_map_S_to_H(ctx, i, {x, y});
        return std::make_pair(sp.a, sp.s);
      };
      if (std::fabs(jac_det(s_to_h, alpha, sigma, h) - 1.0) > 1e-6) return false;

      // The accelerated step: keep the slow-step count small and constant
      // across the four probes so the difference quotient is conditioned.
      for (int tries = 0; tries < 200; ++tries) {
        sample(&i, &a, &s);
        const long long n0 = gauss(ctx, a).n;
        if (n0 > 3) continue;
        if (gauss(ctx, a + h).n != n0 || gauss(ctx, a - h).n != n0) continue;
        const auto gext = [&](double x, double y) {
          const GaussExtStep e = gauss_ext_step(ctx, x, y);
          return std::make_pair(e.a, e.s);
        };
        if (std::fabs(jac_det(gext, a, s, h) - 1.0) > 1e-6) return false;
        break;
      }
    }

    for (int i = 0; i <= q - 2; ++i) {
      Rng mrng(5100 + static_cast<std::uint64_t>(16 * q + i));
      for (int n = 0; n < 10000; ++n) {
        const double a = mrng.uniform_left_open(branch_cut(ctx, i + 1),
                                                branch_cut(ctx, i));
        const double s = mrng.uniform() * side_fiber_top(ctx, a);
        const ExtStep e = farey_ext_step(ctx, a, s);
        if (!in_side_set(ctx, e.a, e.s)) return false;
        if (h_index(ctx, e.a, e.s) != q - 2 - i) return false;
      }
    }
  }
  return true;
}

// 6: polygon slab decomposition: multiplicity-one cover, exact vertex
// identities, roof gap residuals.
bool criterion_slabs() {
  for (int q = 3; q <= 8; ++q) {
    const HeckeContext ctx = make_context(q);
    const SlabReport rep =
        slab_partition_check(ctx, 100000, 6000 + static_cast<std::uint64_t>(q));
    if (!rep.pass || rep.zero_cover != 0 || rep.multi_cover != 0) return false;
    if (!rep.vertex_identities_exact) return false;
    if (rep.max_gap_residual > 1e-9) return false;
  }
  return true;
}

// 7: accelerated map: exact rational block counts and values, and bitwise
// agreement between the plain and extended accelerated maps.
bool criterion_accelerated() {
  const HeckeContext c3 = make_context(3);
  const GaussExactStep g1 = gauss_exact(c3, Rational(3, 10));
  if (g1.value != Rational(3, 4) || g1.n != 2) return false;
  const GaussExactStep g2 = gauss_exact(c3, Rational(4, 5));
  if (g2.value != Rational(1, 2) || g2.n != 3) return false;

  const GaussStep gf = gauss(c3, 0.3);
  if (gf.n != 2 || !close(gf.value, 0.75, 1e-13)) return false;

  for (int q : {3, 5}) {
    const HeckeContext ctx = make_context(q);
    Rng rng(7000 + static_cast<std::uint64_t>(q));
    for (int n = 0; n < 1000; ++n) {
      const double a = rng.uniform_in(0.001, 0.999);
      const double s = rng.uniform() * side_fiber_top(ctx, a);
      const GaussStep g = gauss(ctx, a);
      double x = a;
      for (long long k = 0; k < g.n; ++k) x = farey(ctx, x);
      if (x != g.value) return false;  // bitwise slow-step composition
      const GaussExtStep e = gauss_ext_step(ctx, a, s);
      if (e.a != g.value || e.n != g.n) return false;  // bitwise agreement
    }
  }
  return true;
}

// 8: occupation histograms of long accelerated orbits against the
// bin-averaged invariant density.
bool criterion_histograms() {
  const int bins = 64;
  const long long iters = 1000000;
  for (int q : {3, 5}) {
    const HeckeContext ctx = make_context(q);
    const double mass = gauss_mass(ctx);
    for (const double a0 : {std::sqrt(0.5), M_PI / 6.0}) {
      const Histogram hist =
          birkhoff_histogram(ctx, MapKind::kGauss, a0, iters, bins);
      if (hist.truncated) return false;
      int admissible = 0;
      for (int j = 0; j < bins; ++j) {
        const double lo = static_cast<double>(j) / bins;
        const double hi = static_cast<double>(j + 1) / bins;
        const double frac = gauss_density_integral(ctx, lo, hi) / mass;
        if (frac * static_cast<double>(iters) < 100.0) continue;
        ++admissible;
        const double expect = frac * bins;
        if (std::fabs(hist.density[static_cast<std::size_t>(j)] - expect) >=
            0.05) {
          return false;
        }
      }
      if (admissible == 0) return false;
    }
  }
  return true;
}

// 9: the geodesic coding equals the vector expansion digits.
bool criterion_coding() {
  for (int q = 3; q <= 8; ++q) {
    const HeckeContext ctx = make_context(q);
    Rng rng(9000 + static_cast<std::uint64_t>(q));
    for (int n = 0; n < 1000; ++n) {
      const double a = rng.uniform_in(0.001, 1.0);
      const double s = rng.uniform() * side_fiber_top(ctx, a);
      const Itinerary code = geodesic_code(ctx, a, s, 50);
      const Itinerary cf = cf_itinerary(ctx, {a, 1.0 - a}, 50);
      const std::size_t m = std::min(code.steps.size(), cf.steps.size());
      if (m == 0) return false;
      for (std::size_t k = 0; k < m; ++k) {
        if (code.steps[k] != cf.steps[k]) return false;
      }
      if (code.steps.size() != cf.steps.size() && !cf.terminated) return false;
    }
  }
  return true;
}

// 10: the accelerated natural-extension orbit stays in its domain, visits
// every strip and band, and respects the Markov band rule.
bool criterion_extension_orbit() {
  const HeckeContext ctx = make_context(5);
  double a = 0.45;
  double s = 0.2;
  if (!in_gauss_region(ctx, a, s)) return false;
  std::set<int> strips;
  std::set<int> bands;
  for (int k = 0; k < 2000; ++k) {
    if (!in_gauss_region(ctx, a, s)) return false;
    strips.insert(v_strip_index(ctx, a));
    const GaussExtStep e = gauss_ext_step(ctx, a, s);
    if (e.fixed_point) return false;
    if (h_index(ctx, e.a, e.s) != 3 - e.branch) return false;
    bands.insert(h_index(ctx, e.a, e.s));
    a = e.a;
    s = e.s;
  }
  return strips == std::set<int>{0, 1, 2, 3} && bands == std::set<int>{0, 1, 2, 3};
}

struct Criterion {
  const char* name;
  bool (*fn)();
};

}  // namespace

int main() {
  const Criterion table[] = {
      {"exact identity families (q = 3 .. 12)", criterion_identities},
      {"section map and return time match the first-return oracle",
       criterion_section_oracle},
      {"expansion digits: pinned value, non-termination, lattice termination",
       criterion_expansion},
      {"transfer identity for the reciprocal density", criterion_transfer},
      {"unit Jacobians and Markov band images", criterion_area_and_markov},
      {"polygon slab decomposition with exact vertices", criterion_slabs},
      {"accelerated map: exact blocks and bitwise extension agreement",
       criterion_accelerated},
      {"occupation histograms match the invariant density",
       criterion_histograms},
      {"geodesic coding equals the expansion digits", criterion_coding},
      {"accelerated extension orbit occupies its domain",
       criterion_extension_orbit},
  };
  int failures = 0;
  int idx = 0;
  for (const Criterion& c : table) {
    ++idx;
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::printf("criterion %2d: exception: %s\n", idx, e.what());
      ok = false;
    }
    std::printf("criterion %2d: %s  %s\n", idx, ok ? "PASS" : "FAIL", c.name);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
