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

#include "heckecf/bcz.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace heckecf {

bool triangle_contains(const HeckeContext& ctx, const TrianglePoint& p,
                       double eps) {
  if (!(p.a > -eps) || !(p.a <= 1.0 + eps)) return false;
  const double lo = 1.0 - ctx.lambda_d * p.a;
  return p.b > lo - eps && p.b <= 1.0 + eps;
}

double triangle_dot(const HeckeContext& ctx, int i, const TrianglePoint& p) {
  const Vec2d& w = ctx.w_d[static_cast<std::size_t>(i)];
  return p.a * w.x + p.b * w.y;
}

int partition_index(const HeckeContext& ctx, const TrianglePoint& p,
                    double eps) {
  if (!triangle_contains(ctx, p, eps)) {
    throw std::domain_error("partition_index: point outside parameter triangle");
  }
  int found = -1;
  int count = 0;
  for (int i = 2; i <= ctx.q - 1; ++i) {
    const double d_prev = triangle_dot(ctx, i - 1, p);
    const double d_cur = triangle_dot(ctx, i, p);
    if (d_prev > 1.0 && d_cur <= 1.0) {
      found = i;
      ++count;
    }
  }
  if (count != 1) {
    throw std::runtime_error("partition_index: cell count " +
                             std::to_string(count) + ", expected exactly 1");
  }
  return found;
}

double roof_piece(const HeckeContext& ctx, int i, const TrianglePoint& p) {
  if (i < 0 || i > ctx.q - 1) {
    throw std::domain_error("roof_piece: index out of range");
  }
  const double y = ctx.w_d[static_cast<std::size_t>(i)].y;
  return y / (p.a * triangle_dot(ctx, i, p));
}

double roof(const HeckeContext& ctx, const TrianglePoint& p, double eps) {
  return roof_piece(ctx, partition_index(ctx, p, eps), p);
}

TrianglePoint bcz_map(const HeckeContext& ctx, const TrianglePoint& p,
                      double eps) {
  const int i = partition_index(ctx, p, eps);
  const double d_i = triangle_dot(ctx, i, p);
  // w[q] = -w[0] extends the fan one step past the last cone vector.
  const double d_next = triangle_dot(ctx, i + 1, p);
  const double lam = ctx.lambda_d;
  const double k = std::floor((1.0 - d_next) / (lam * d_i));
  TrianglePoint out;
  out.a = d_i;
  out.b = d_next + k * (lam * d_i);
  if (!triangle_contains(ctx, out, eps)) {
    throw std::runtime_error("bcz_map: image escaped the parameter triangle");
  }
  return out;
}

namespace {

struct Affine {
  double a11, a12, a21, a22;
  Vec2d apply(const Vec2d& v) const {
    return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
  }
};

}  // namespace

FirstReturn first_return_oracle(const HeckeContext& ctx,
                                const TrianglePoint& p, double norm_bound,
                                int word_bound) {
  if (!(p.a > 0.0)) {
    throw std::domain_error("first_return_oracle: requires a > 0");
  }
  const double eps = 1e-12;
  const double nb1 =
      norm_bound > 0.0 ? norm_bound : 4.0 * std::max(1.0, 1.0 / p.a);
  const Affine g{p.a, p.b, 0.0, 1.0 / p.a};

  // Stage one: minimal positive slope over the unit window 0 < x <= 1.
  double R = std::numeric_limits<double>::infinity();
  std::vector<Vec2d> orbit = enumerate_lambda_q(ctx, nb1, word_bound);
  for (const Vec2d& v : orbit) {
    const Vec2d u = g.apply(v);
    if (u.x > 0.0 && u.x <= 1.0 && u.y > eps) {
      const double slope = u.y / u.x;
      if (slope < R) R = slope;
    }
  }
  if (!std::isfinite(R)) {
    throw std::runtime_error(
        "first_return_oracle: no positive-slope hit in window; "
        "increase bounds");
  }
  double a_next = std::numeric_limits<double>::infinity();
  for (const Vec2d& v : orbit) {
    const Vec2d u = g.apply(v);
    if (u.x > 0.0 && u.x <= 1.0 && u.y > eps &&
        std::fabs(u.y / u.x - R) <= 1e-9 * std::max(1.0, R)) {
      if (u.x < a_next) a_next = u.x;
    }
  }

  // Stage two: in the sheared frame h_R * g the next section point (a', b')
  // appears as the column pair (a', 0), (b' mod lambda*a', 1/a').
  const double nb2 = std::max(nb1, 4.5 / (p.a * a_next));
  if (nb2 > nb1) orbit = enumerate_lambda_q(ctx, nb2, word_bound);
  double b_raw = std::numeric_limits<double>::quiet_NaN();
  double best_abs = std::numeric_limits<double>::infinity();
  for (const Vec2d& v : orbit) {
    const Vec2d u = g.apply(v);
    const Vec2d w{u.x, u.y - R * u.x};
    if (std::fabs(w.y - 1.0 / a_next) < 1e-7 && std::fabs(w.x) < best_abs) {
      best_abs = std::fabs(w.x);
      b_raw = w.x;
    }
  }
  if (!std::isfinite(best_abs)) {
    throw std::runtime_error(
        "first_return_oracle: no frame vector matched height 1/a'; "
        "increase bounds");
  }
  const double lam = ctx.lambda_d;
  const double k = std::ceil((b_raw - 1.0) / (lam * a_next));
  FirstReturn fr;
  fr.R = R;
  fr.next.a = a_next;
  fr.next.b = b_raw - k * (lam * a_next);
  return fr;
}

}  // namespace heckecf
