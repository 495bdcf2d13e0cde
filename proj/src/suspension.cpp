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

#include "heckecf/suspension.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "heckecf/bcz.hpp"
#include "heckecf/random.hpp"

namespace heckecf {

Mat2d phi(const PairedPoint& p, double eps) {
  const double d = dot(p.u, p.v);
  if (std::fabs(d - 1.0) > eps) {
    throw std::domain_error("phi: frame pair is not unimodular (u.v != 1)");
  }
  return {p.u.x, p.u.y, -p.v.y, p.v.x};
}

PairedPoint coord_to_pair(const SuspensionCoord& c) {
  if (!(c.a > 0.0)) {
    throw std::domain_error("coord_to_pair: requires a > 0");
  }
  PairedPoint p;
  p.u = {c.a, c.b};
  p.v = {(1.0 - c.a * c.b * c.s) / c.a, c.a * c.s};
  return p;
}

PairedPoint geodesic_act(double t, const PairedPoint& p) {
  const double e = std::exp(t);
  return {{e * p.u.x, e * p.u.y}, {p.v.x / e, p.v.y / e}};
}

bool polygon_contains(const HeckeContext& ctx, const Vec2d& p, double eps) {
  const double thresh =
      eps * std::max(1.0, std::max(std::fabs(p.x), std::fabs(p.y)));
  const int q = ctx.q;
  for (int i = 0; i + 1 <= q - 1; ++i) {
    const Vec2d& a = ctx.w_d[static_cast<std::size_t>(i)];
    const Vec2d& b = ctx.w_d[static_cast<std::size_t>(i + 1)];
    if (wedge(b - a, p - a) < -thresh) return false;
  }
  // Closing segment w_{q-1} -> w_0 is removed: strict inequality.
  const Vec2d& a = ctx.w_d[static_cast<std::size_t>(q - 1)];
  const Vec2d& b = ctx.w_d[0];
  return wedge(b - a, p - a) > thresh;
}

namespace {

// Base slab membership in untransformed coordinates: the lower triangle
// piece of the parameter triangle, a + b <= 1.
bool base_one_contains(const HeckeContext& ctx, const Vec2d& t) {
  return t.x > 0.0 && t.x <= 1.0 && t.y > 1.0 - ctx.lambda_d * t.x &&
         t.x + t.y <= 1.0;
}

// The two slab vertex identities, in exact field arithmetic:
//   transpose(M_{q-2}) * A_{q-1} == w_0   with A_{q-1} = (1, (1-x_{q-2})/y_{q-2})
//   transpose(M_1) * B_2 == w_{q-2}       with B_2 = (0, 1)
bool slab_vertex_identities(const HeckeContext& ctx) {
  const FieldPtr& f = ctx.field;
  const FieldElement one = FieldElement::one(f);
  const FieldElement zero = FieldElement::zero(f);
  const Vec2x& w_pen = ctx.w[static_cast<std::size_t>(ctx.q - 2)];
  const Vec2x A{one, (one - w_pen.x) / w_pen.y};
  const Vec2x imgA = transpose(ctx.M[static_cast<std::size_t>(ctx.q - 2)]) * A;
  if (!(imgA == ctx.w[0])) return false;
  const Vec2x B{zero, one};
  const Vec2x imgB = transpose(ctx.M[1]) * B;
  return imgB == ctx.w[static_cast<std::size_t>(ctx.q - 2)];
}

}  // namespace

SlabReport slab_partition_check(const HeckeContext& ctx, long long samples,
                                std::uint64_t seed, double eps) {
  SlabReport rep;
  rep.q = ctx.q;
  rep.samples = samples;
  rep.vertex_identities_exact = slab_vertex_identities(ctx);

  const int q = ctx.q;
  const double lam = ctx.lambda_d;
  double xmax = 0.0;
  double ymax = 0.0;
  for (int i = 0; i <= q - 1; ++i) {
    xmax = std::max(xmax, ctx.w_d[static_cast<std::size_t>(i)].x);
    ymax = std::max(ymax, ctx.w_d[static_cast<std::size_t>(i)].y);
  }
  std::vector<Mat2d> slab_inv;
  slab_inv.reserve(static_cast<std::size_t>(q - 1));
  for (int i = 1; i <= q - 1; ++i) {
    slab_inv.push_back(
        inverse_unimodular(transpose(ctx.M_d[static_cast<std::size_t>(i - 1)])));
  }

  Rng rng(seed);
  long long accepted = 0;
  long long attempts = 0;
  const long long max_attempts = 200 * samples + 1000;
  while (accepted < samples && attempts < max_attempts) {
    ++attempts;
    const Vec2d p{rng.uniform_in(0.0, xmax), rng.uniform_in(0.0, ymax)};
    if (!polygon_contains(ctx, p)) continue;
    ++accepted;
    int cover = 0;
    if (p.x <= 1.0 && p.y <= 1.0 && p.x + p.y > 1.0) ++cover;
    for (int i = 1; i <= q - 1; ++i) {
      const Vec2d t = slab_inv[static_cast<std::size_t>(i - 1)] * p;
      if (!base_one_contains(ctx, t)) continue;
      if (i >= 2 &&
          !(dot(t, ctx.w_d[static_cast<std::size_t>(i - 1)]) > 1.0)) {
        continue;
      }
      ++cover;
    }
    if (cover == 0) ++rep.zero_cover;
    if (cover >= 2) ++rep.multi_cover;
  }
  if (accepted < samples) {
    throw std::runtime_error("slab_partition_check: sampling failed to fill");
  }

  // Roof gap identity on triangle samples, up to each partition index.
  for (long long n = 0; n < samples; ++n) {
    TrianglePoint tp;
    tp.a = rng.uniform_left_open(0.0, 1.0);
    tp.b = rng.uniform_left_open(1.0 - lam * tp.a, 1.0);
    const int istar = partition_index(ctx, tp);
    double prev_r = roof_piece(ctx, 0, tp);  // y_0 = 0, so this is 0
    double prev_d = triangle_dot(ctx, 0, tp);
    for (int i = 1; i <= istar; ++i) {
      const double d_i = triangle_dot(ctx, i, tp);
      if (!(d_i > 0.0) || !(prev_d > 0.0)) {
        rep.max_gap_residual = std::numeric_limits<double>::infinity();
        break;
      }
      const double r_i = roof_piece(ctx, i, tp);
      const double gap = 1.0 / (d_i * prev_d);
      const double scale =
          std::max(std::max(1.0, gap), std::max(std::fabs(r_i), std::fabs(prev_r)));
      const double res = std::fabs((r_i - prev_r) - gap) / scale;
      rep.max_gap_residual = std::max(rep.max_gap_residual, res);
      prev_r = r_i;
      prev_d = d_i;
    }
  }

  rep.pass = rep.zero_cover == 0 && rep.multi_cover == 0 &&
             rep.vertex_identities_exact && rep.max_gap_residual < eps;
  return rep;
}

double branch_cut(const HeckeContext& ctx, int i) {
  if (i < 0 || i > ctx.q - 1) {
    throw std::domain_error("branch_cut: index out of range");
  }
  if (i == 0) return 1.0;
  if (i == ctx.q - 1) return 0.0;
  const Vec2d& w = ctx.w_d[static_cast<std::size_t>(i)];
  return w.x / (w.x + w.y);
}

int v_strip_index(const HeckeContext& ctx, double a) {
  if (!(a > 0.0) || !(a <= 1.0)) {
    throw std::domain_error("v_strip_index: requires 0 < a <= 1");
  }
  for (int i = 0; i <= ctx.q - 2; ++i) {
    if (a > branch_cut(ctx, i + 1) && a <= branch_cut(ctx, i)) return i;
  }
  // Unreachable: the cuts partition (0, 1] into right-closed intervals.
  throw std::logic_error("v_strip_index: no strip matched");
}

double rho(const HeckeContext& ctx, int i, double a, double eps) {
  if (i < 0 || i > ctx.q - 2) {
    throw std::domain_error("rho: branch index out of range");
  }
  if (!(a > branch_cut(ctx, i + 1) - eps) ||
      !(a <= branch_cut(ctx, i) + eps)) {
    throw std::domain_error("rho: a outside branch interval");
  }
  const Vec2d& wi = ctx.w_d[static_cast<std::size_t>(i)];
  const Vec2d& wn = ctx.w_d[static_cast<std::size_t>(i + 1)];
  return (wn.x - wi.y) * a + (wi.x - wn.x);
}

double side_fiber_top(const HeckeContext& ctx, double a) {
  if (a == 1.0) return ctx.lambda_d;
  return 1.0 / (a * (1.0 - a));
}

double roof_at_side(const HeckeContext& ctx, int j, double a) {
  if (j < 0 || j > ctx.q - 1) {
    throw std::domain_error("roof_at_side: index out of range");
  }
  const Vec2d& w = ctx.w_d[static_cast<std::size_t>(j)];
  return w.y / (a * (a * w.x + (1.0 - a) * w.y));
}

bool in_side_set(const HeckeContext& ctx, double a, double s, double eps) {
  if (!(a > 0.0) || !(a <= 1.0)) return false;
  return s >= -eps && s < side_fiber_top(ctx, a) + eps;
}

int h_index(const HeckeContext& ctx, double a, double s, double eps) {
  if (!in_side_set(ctx, a, s, eps)) {
    throw std::domain_error("h_index: point outside side set");
  }
  // Tolerated inputs may sit a hair outside [0, top); clamp into the fiber.
  const double top = side_fiber_top(ctx, a);
  const double sc = std::min(std::max(s, 0.0), top * (1.0 - 1e-15));
  for (int j = 0; j <= ctx.q - 2; ++j) {
    if (sc >= roof_at_side(ctx, j, a) && sc < roof_at_side(ctx, j + 1, a)) {
      return j;
    }
  }
  throw std::logic_error("h_index: no band matched");
}

ChartPoint side_map_V_to_S(const HeckeContext& ctx, int i, const SidePoint& p,
                           double eps) {
  const double r = rho(ctx, i, p.a, eps);
  if (!(p.s >= -eps) || !(p.s < side_fiber_top(ctx, p.a) + eps)) {
    throw std::domain_error("side_map_V_to_S: s outside fiber");
  }
  const Vec2d& wi = ctx.w_d[static_cast<std::size_t>(i)];
  const Vec2d& wn = ctx.w_d[static_cast<std::size_t>(i + 1)];
  const double t = p.a / r;
  ChartPoint out;
  // alpha solves both t = alpha x_i + (1-alpha) x_{i+1} and
  // (1-a)/r = alpha y_i + (1-alpha) y_{i+1}; take the better conditioned one
  // (the x denominator vanishes at the symmetric middle strip of even q).
  if (std::fabs(wi.x - wn.x) >= std::fabs(wi.y - wn.y)) {
    out.alpha = (t - wn.x) / (wi.x - wn.x);
  } else {
    out.alpha = ((1.0 - p.a) / r - wn.y) / (wi.y - wn.y);
  }
  out.sigma = p.s * r * r;
  return out;
}

SidePoint side_map_S_to_H(const HeckeContext& ctx, int i, const ChartPoint& p,
                          double eps) {
  if (i < 0 || i > ctx.q - 2) {
    throw std::domain_error("side_map_S_to_H: branch index out of range");
  }
  if (!(p.alpha > 0.0) || !(p.alpha <= 1.0 + eps)) {
    throw std::domain_error("side_map_S_to_H: alpha outside chart");
  }
  const Vec2d& wi = ctx.w_d[static_cast<std::size_t>(i)];
  const Vec2d& wn = ctx.w_d[static_cast<std::size_t>(i + 1)];
  const double A = p.alpha * wi.x + (1.0 - p.alpha) * wn.x;
  const double B = p.alpha * wi.y + (1.0 - p.alpha) * wn.y;
  if (!(p.sigma >= -eps) || !(p.sigma < 1.0 / (A * B) + eps)) {
    throw std::domain_error("side_map_S_to_H: sigma outside chart fiber");
  }
  SidePoint out;
  out.a = p.alpha;
  out.s = p.sigma + wn.x / (p.alpha * A);
  return out;
}

}  // namespace heckecf
