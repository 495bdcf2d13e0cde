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

#include "heckecf/intervalmaps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "heckecf/numberfield.hpp"

namespace heckecf {

namespace {

// Number of slow steps the accelerated map combines at a, together with the
// branch index.  Derived from the shift conjugacies of the two end branches:
// branch 0 is w -> w + lambda in w = 1/(a-1) and exits when w + n*lambda >=
// -(1+lambda) (inclusive, the exit interval is right-closed); the last
// branch is v -> v - lambda in v = 1/a and exits when v - n*lambda <
// 1 + lambda (strict).
std::pair<int, long long> accel_count(const HeckeContext& ctx, double a) {
  const int i = v_strip_index(ctx, a);
  const double lam = ctx.lambda_d;
  if (i == 0) {
    const double w = 1.0 / (a - 1.0);
    const double t = (-(1.0 + lam) - w) / lam;
    if (!(t < 9.0e15)) {
      throw std::runtime_error("gauss: acceleration count too large");
    }
    long long n = static_cast<long long>(std::ceil(t));
    if (n < 1) n = 1;
    return {0, n};
  }
  if (i == ctx.q - 2) {
    const double v = 1.0 / a;
    const double t = (v - (1.0 + lam)) / lam;
    if (!(t < 9.0e15)) {
      throw std::runtime_error("gauss: acceleration count too large");
    }
    long long n = static_cast<long long>(std::floor(t)) + 1;
    if (n < 1) n = 1;
    return {i, n};
  }
  return {i, 1};
}

// Up to this many combined steps the accelerated value is produced by
// literally iterating the slow map, which keeps it in exact agreement with
// the natural-extension iteration; beyond it the shift closed form is used.
constexpr long long kIterMax = 1000000;

template <class F>
double simpson_rec(const F& f, double a, double m, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double integrate(const F& f, double a, double b, double tol) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, 48);
}

// Rational coordinate tables for the exact lane (degree-1 field).
struct ExactTables {
  Rational lam;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
};

ExactTables exact_tables(const HeckeContext& ctx) {
  if (ctx.field->degree() != 1) {
    throw std::domain_error(
        "exact lane requires a rational lambda (degree-1 field)");
  }
  ExactTables t;
  t.lam = FieldElement::lambda(ctx.field).rational_part();
  t.xs.reserve(static_cast<std::size_t>(ctx.q));
  t.ys.reserve(static_cast<std::size_t>(ctx.q));
  for (int i = 0; i <= ctx.q - 1; ++i) {
    t.xs.push_back(ctx.w[static_cast<std::size_t>(i)].x.rational_part());
    t.ys.push_back(ctx.w[static_cast<std::size_t>(i)].y.rational_part());
  }
  return t;
}

Rational exact_cut(const ExactTables& t, int q, int i) {
  if (i == 0) return Rational(1);
  if (i == q - 1) return Rational(0);
  const std::size_t k = static_cast<std::size_t>(i);
  return t.xs[k] / (t.xs[k] + t.ys[k]);
}

int exact_branch(const ExactTables& t, int q, const Rational& a) {
  if (!(a > Rational(0)) || !(a <= Rational(1))) {
    throw std::domain_error("exact branch: a outside (0, 1]");
  }
  for (int i = 0; i <= q - 2; ++i) {
    if (a > exact_cut(t, q, i + 1) && a <= exact_cut(t, q, i)) return i;
  }
  throw std::logic_error("exact branch: no strip matched");
}

Rational farey_exact_impl(const ExactTables& t, int q, const Rational& a) {
  const int i = exact_branch(t, q, a);
  const std::size_t k = static_cast<std::size_t>(i);
  const Rational r = (t.xs[k + 1] - t.ys[k]) * a + (t.xs[k] - t.xs[k + 1]);
  return ((t.xs[k + 1] + t.ys[k + 1]) * a - t.xs[k + 1]) / r;
}

}  // namespace

int farey_branch(const HeckeContext& ctx, double a) {
  return v_strip_index(ctx, a);
}

double farey(const HeckeContext& ctx, double a) {
  if (!(a > 0.0) || !(a <= 1.0)) {
    throw std::domain_error("farey: a outside (0, 1]");
  }
  const int i = v_strip_index(ctx, a);
  const Vec2d& wi = ctx.w_d[static_cast<std::size_t>(i)];
  const Vec2d& wn = ctx.w_d[static_cast<std::size_t>(i + 1)];
  // Image of the direction (a, 1-a) under the inverse sector matrix,
  // renormalized onto x + y = 1.  The arithmetic deliberately matches the
  // vector expansion's step so the two orbits agree bitwise; at a == 1 the
  // expression returns exactly 1.
  const double y = 1.0 - a;
  const double xn = wn.y * a - wn.x * y;
  const double yn = wi.x * y - wi.y * a;
  const double out = xn / (xn + yn);
  return out > 1.0 ? 1.0 : out;  // rounding at the strip's right edge
}

double farey_derivative(const HeckeContext& ctx, double a, bool* at_boundary,
                        double eps) {
  const int i = v_strip_index(ctx, a);
  if (at_boundary != nullptr) {
    *at_boundary = std::fabs(a - branch_cut(ctx, i)) <= eps ||
                   std::fabs(a - branch_cut(ctx, i + 1)) <= eps;
  }
  const double r = rho(ctx, i, a);
  return 1.0 / (r * r);
}

double inverse_branch(const HeckeContext& ctx, int i, double x) {
  if (i < 0 || i > ctx.q - 2) {
    throw std::domain_error("inverse_branch: branch index out of range");
  }
  if (!(x >= 0.0) || !(x <= 1.0)) {
    throw std::domain_error("inverse_branch: x outside [0, 1]");
  }
  const Vec2d& wi = ctx.w_d[static_cast<std::size_t>(i)];
  const Vec2d& wn = ctx.w_d[static_cast<std::size_t>(i + 1)];
  return ((wi.x - wn.x) * x + wn.x) / ((wn.x + wn.y) - (wn.x - wi.y) * x);
}

double farey_transfer_residual(const HeckeContext& ctx, double x) {
  if (!(x > 0.0) || !(x < 1.0)) {
    throw std::domain_error("farey_transfer_residual: x outside (0, 1)");
  }
  double sum = 0.0;
  for (int i = 0; i <= ctx.q - 2; ++i) {
    const double a = inverse_branch(ctx, i, x);
    const double r = rho(ctx, i, a);
    sum += r * r / (a * (1.0 - a));
  }
  const double rhs = 1.0 / (x * (1.0 - x));
  return std::fabs(sum - rhs) / std::max(1.0, rhs);
}

ExtStep farey_ext_step(const HeckeContext& ctx, double a, double s,
                       double eps) {
  if (!in_side_set(ctx, a, s, eps)) {
    throw std::domain_error("farey_ext_step: point outside side set");
  }
  if (a == 1.0) {
    // Boundary fiber: s advances by lambda and the deck shift by lambda
    // folds it straight back, so the point is fixed.
    ExtStep out;
    out.a = 1.0;
    out.s = s;
    out.branch = 0;
    out.shifted_at_one = true;
    return out;
  }
  const int i = v_strip_index(ctx, a);
  const double r = rho(ctx, i, a, eps);
  const double an = farey(ctx, a);
  const Vec2d& wn = ctx.w_d[static_cast<std::size_t>(i + 1)];
  ExtStep out;
  out.a = an;
  out.s = s * r * r + wn.x * r / (an * a);
  out.branch = i;
  return out;
}

GaussStep gauss(const HeckeContext& ctx, double a) {
  if (!(a > 0.0) || !(a <= 1.0)) {
    throw std::domain_error("gauss: a outside (0, 1]");
  }
  GaussStep st;
  if (a == 1.0) {
    st.value = 1.0;
    st.fixed_point = true;
    return st;
  }
  const std::pair<int, long long> bn = accel_count(ctx, a);
  st.n = bn.second;
  if (st.n <= kIterMax) {
    double v = a;
    for (long long k = 0; k < st.n; ++k) v = farey(ctx, v);
    st.value = v;
  } else if (bn.first == 0) {
    const double w = 1.0 / (a - 1.0);
    st.value = 1.0 + 1.0 / (w + static_cast<double>(st.n) * ctx.lambda_d);
  } else {
    st.value = a / (1.0 - static_cast<double>(st.n) * ctx.lambda_d * a);
  }
  return st;
}

double gauss_density(const HeckeContext& ctx, double a) {
  if (!(a > 0.0) || !(a <= 1.0)) {
    throw std::domain_error("gauss_density: a outside (0, 1]");
  }
  const double lam = ctx.lambda_d;
  if (a > branch_cut(ctx, 1)) {
    return lam / (a * (a + lam * (1.0 - a)));
  }
  if (a <= branch_cut(ctx, ctx.q - 2)) {
    return lam / ((1.0 - a) * ((1.0 - a) + lam * a));
  }
  return 1.0 / (a * (1.0 - a));
}

double gauss_density_integral(const HeckeContext& ctx, double lo, double hi) {
  if (!(lo >= 0.0) || !(hi <= 1.0) || !(lo <= hi)) {
    throw std::domain_error("gauss_density_integral: bad interval");
  }
  const double lam = ctx.lambda_d;
  const double c1 = branch_cut(ctx, 1);
  const double cq2 = branch_cut(ctx, ctx.q - 2);
  const auto low_piece = [lam](double a) {
    return lam / ((1.0 - a) * ((1.0 - a) + lam * a));
  };
  const auto mid_piece = [](double a) { return 1.0 / (a * (1.0 - a)); };
  const auto high_piece = [lam](double a) {
    return lam / (a * (a + lam * (1.0 - a)));
  };
  const double tol = 1e-13;
  double total = 0.0;
  total += integrate(low_piece, lo, std::min(hi, cq2), tol);
  total += integrate(mid_piece, std::max(lo, cq2), std::min(hi, c1), tol);
  total += integrate(high_piece, std::max(lo, c1), hi, tol);
  return total;
}

double gauss_mass(const HeckeContext& ctx) {
  return gauss_density_integral(ctx, 0.0, 1.0);
}

bool in_gauss_region(const HeckeContext& ctx, double a, double s, double eps) {
  if (!in_side_set(ctx, a, s, eps)) return false;
  const int v = v_strip_index(ctx, a);
  const int h = h_index(ctx, a, s, eps);
  if (v == ctx.q - 2 && h == 0) return false;
  if (v == 0 && h == ctx.q - 2) return false;
  return true;
}

GaussExtStep gauss_ext_step(const HeckeContext& ctx, double a, double s,
                            double eps) {
  if (!in_side_set(ctx, a, s, eps)) {
    throw std::domain_error("gauss_ext_step: point outside side set");
  }
  GaussExtStep out;
  if (a == 1.0) {
    out.a = 1.0;
    out.s = s;
    out.branch = 0;
    out.fixed_point = true;
    return out;
  }
  const std::pair<int, long long> bn = accel_count(ctx, a);
  out.branch = bn.first;
  out.n = bn.second;
  if (bn.second > kIterMax) {
    // All slow steps of an extreme block stay in one strip, so the fiber
    // recursion telescopes; the base track reuses the accelerated map's own
    // value lane so the two stay bitwise equal.
    const GaussStep g = gauss(ctx, a);
    if (bn.first == 0) {
      const double w0 = 1.0 / (a - 1.0);
      const double wn = w0 + static_cast<double>(bn.second) * ctx.lambda_d;
      out.s = wn * wn * (s / (w0 * w0) + 1.0 / g.value - 1.0 / a);
    } else {
      const double t = 1.0 - static_cast<double>(bn.second) * ctx.lambda_d * a;
      out.s = s * (t * t);
    }
    out.a = g.value;
    return out;
  }
  double aa = a;
  double ss = s;
  for (long long k = 0; k < bn.second; ++k) {
    const ExtStep e = farey_ext_step(ctx, aa, ss, eps);
    aa = e.a;
    ss = e.s;
    if (!(aa > 0.0) || !(aa <= 1.0) || !std::isfinite(ss)) {
      throw std::runtime_error("gauss_ext_step: orbit degenerated numerically");
    }
  }
  out.a = aa;
  out.s = ss;
  return out;
}

Histogram birkhoff_histogram(const HeckeContext& ctx, MapKind kind, double a0,
                             long long n_iter, int n_bins) {
  if (n_iter < 1 || n_bins < 1) {
    throw std::domain_error("birkhoff_histogram: need n_iter, n_bins >= 1");
  }
  if (!(a0 > 0.0) || !(a0 <= 1.0)) {
    throw std::domain_error("birkhoff_histogram: a0 outside (0, 1]");
  }
  Histogram h;
  std::vector<long long> counts(static_cast<std::size_t>(n_bins), 0);
  double a = a0;
  long long rec = 0;
  for (long long k = 0; k < n_iter; ++k) {
    if (!(a > 0.0) || !(a <= 1.0)) {
      h.truncated = true;
      break;
    }
    int bin = static_cast<int>(a * n_bins);
    if (bin >= n_bins) bin = n_bins - 1;
    ++counts[static_cast<std::size_t>(bin)];
    ++rec;
    if (kind == MapKind::kFarey) {
      a = farey(ctx, a);
    } else {
      const GaussStep st = gauss(ctx, a);
      if (st.fixed_point) {
        h.truncated = true;
        break;
      }
      a = st.value;
    }
  }
  h.iterates = rec;
  h.density.assign(static_cast<std::size_t>(n_bins), 0.0);
  if (rec > 0) {
    const double scale = static_cast<double>(n_bins) / static_cast<double>(rec);
    for (int j = 0; j < n_bins; ++j) {
      h.density[static_cast<std::size_t>(j)] =
          static_cast<double>(counts[static_cast<std::size_t>(j)]) * scale;
    }
  }
  return h;
}

Itinerary geodesic_code(const HeckeContext& ctx, double a, double s, int n,
                        double eps) {
  if (!in_side_set(ctx, a, s, eps)) {
    throw std::domain_error("geodesic_code: point outside side set");
  }
  Itinerary out;
  const bool fixed_fiber = (a == 1.0);  // the slow map fixes a = 1 exactly
  double aa = a;
  double ss = s;
  for (int k = 0; k < n; ++k) {
    if (!fixed_fiber && 1.0 - aa <= kCfDriftEps) {
      // Mirror of the expansion's termination basin: the coded geodesic hits
      // the cusp exactly when the vector orbit of (a, 1-a) terminates.
      out.terminated = true;
      break;
    }
    const int i = v_strip_index(ctx, aa);
    out.steps.push_back(i);
    const double next = farey(ctx, aa);
    if (aa != 1.0) {
      // Fiber update of the natural extension, fed with the locked base
      // track; at a == 1 the flagged convention leaves s unchanged.
      const double r = rho(ctx, i, aa, eps);
      const Vec2d& wn = ctx.w_d[static_cast<std::size_t>(i + 1)];
      ss = ss * r * r + wn.x * r / (next * aa);
    }
    aa = next;
  }
  out.last = {aa, ss};
  return out;
}

Rational farey_exact(const HeckeContext& ctx, const Rational& a) {
  const ExactTables t = exact_tables(ctx);
  if (!(a > Rational(0)) || !(a <= Rational(1))) {
    throw std::domain_error("farey_exact: a outside (0, 1]");
  }
  return farey_exact_impl(t, ctx.q, a);
}

GaussExactStep gauss_exact(const HeckeContext& ctx, const Rational& a) {
  const ExactTables t = exact_tables(ctx);
  if (!(a > Rational(0)) || !(a <= Rational(1))) {
    throw std::domain_error("gauss_exact: a outside (0, 1]");
  }
  GaussExactStep out;
  if (a == Rational(1)) {
    out.value = Rational(1);
    out.fixed_point = true;
    return out;
  }
  const int i0 = exact_branch(t, ctx.q, a);
  if (i0 != 0 && i0 != ctx.q - 2) {
    out.value = farey_exact_impl(t, ctx.q, a);
    out.n = 1;
    return out;
  }
  const Rational c1 = exact_cut(t, ctx.q, 1);
  const Rational cq2 = exact_cut(t, ctx.q, ctx.q - 2);
  Rational v = a;
  long long n = 0;
  while (true) {
    v = farey_exact_impl(t, ctx.q, v);
    ++n;
    if (n > 1000000) {
      throw std::runtime_error("gauss_exact: acceleration count too large");
    }
    const bool inside = (i0 == 0) ? (v > c1) : (v <= cq2);
    if (!inside) break;
  }
  out.value = v;
  out.n = n;
  return out;
}

Rational farey_transfer_exact(const HeckeContext& ctx, const Rational& x) {
  const ExactTables t = exact_tables(ctx);
  if (!(x > Rational(0)) || !(x < Rational(1))) {
    throw std::domain_error("farey_transfer_exact: x outside (0, 1)");
  }
  Rational sum(0);
  for (int i = 0; i <= ctx.q - 2; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    const Rational a = ((t.xs[k] - t.xs[k + 1]) * x + t.xs[k + 1]) /
                       ((t.xs[k + 1] + t.ys[k + 1]) - (t.xs[k + 1] - t.ys[k]) * x);
    const Rational r = (t.xs[k + 1] - t.ys[k]) * a + (t.xs[k] - t.xs[k + 1]);
    sum += r * r / (a * (Rational(1) - a));
  }
  return sum;
}

}  // namespace heckecf
