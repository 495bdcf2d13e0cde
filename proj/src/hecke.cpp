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

#include "heckecf/hecke.hpp"

#include <cmath>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <utility>

namespace heckecf {

namespace {

Vec2d embed(const Vec2x& v) { return {v.x.embed(), v.y.embed()}; }

Mat2d embed(const Mat2x& m) {
  return {m.a11.embed(), m.a12.embed(), m.a21.embed(), m.a22.embed()};
}

}  // namespace

HeckeContext make_context(int q) {
  if (q < 3) throw std::domain_error("make_context: q must be >= 3");
  HeckeContext ctx;
  ctx.q = q;
  ctx.field = make_field(q);
  const FieldPtr& f = ctx.field;
  FieldElement zero = FieldElement::zero(f);
  FieldElement one = FieldElement::one(f);
  ctx.lambda = FieldElement::lambda(f);

  ctx.S = Mat2x{zero, -one, one, zero};
  ctx.T = Mat2x{one, ctx.lambda, zero, one};
  ctx.U = ctx.T * ctx.S;

  ctx.w.reserve(q + 1);
  ctx.w.push_back(Vec2x{one, zero});
  for (int i = 0; i < q; ++i) ctx.w.push_back(ctx.U * ctx.w.back());

  ctx.M.reserve(q - 1);
  ctx.M.push_back(ctx.T);
  for (int i = 1; i <= q - 2; ++i) ctx.M.push_back(ctx.U * ctx.M.back());

  ctx.lambda_d = ctx.lambda.embed();
  ctx.w_d.reserve(ctx.w.size());
  for (const Vec2x& v : ctx.w) ctx.w_d.push_back(embed(v));
  ctx.M_d.reserve(ctx.M.size());
  for (const Mat2x& m : ctx.M) ctx.M_d.push_back(embed(m));
  return ctx;
}

int sector_of(const HeckeContext& ctx, const Vec2d& u, double eps) {
  double mag = std::max(std::fabs(u.x), std::fabs(u.y));
  double thresh = eps * std::max(1.0, mag);
  for (int i = 0; i + 1 < static_cast<int>(ctx.w_d.size()) && i <= ctx.q - 2;
       ++i) {
    // Left edge of the sector is inclusive, right edge exclusive; with the
    // relative threshold the two tests hand a near-boundary ray to exactly
    // one of the adjacent sectors.
    if (wedge(ctx.w_d[i], u) >= -thresh && wedge(u, ctx.w_d[i + 1]) > thresh) {
      return i;
    }
  }
  throw std::domain_error("sector_of: direction not in any sector");
}

std::vector<Vec2d> enumerate_lambda_q(const HeckeContext& ctx,
                                      double norm_bound, int word_bound) {
  const double lam = ctx.lambda_d;
  const double expand_bound = (1.0 + lam) * norm_bound;
  auto key = [](const Vec2d& v) {
    return std::pair<long long, long long>{llround(v.x * 1e9),
                                           llround(v.y * 1e9)};
  };
  auto sup = [](const Vec2d& v) {
    return std::max(std::fabs(v.x), std::fabs(v.y));
  };

  std::set<std::pair<long long, long long>> seen;
  std::deque<std::pair<Vec2d, int>> queue;
  std::vector<Vec2d> out;

  Vec2d v0{1.0, 0.0};
  seen.insert(key(v0));
  queue.emplace_back(v0, 0);
  if (sup(v0) <= norm_bound) out.push_back(v0);

  while (!queue.empty()) {
    auto [v, depth] = queue.front();
    queue.pop_front();
    if (depth >= word_bound) continue;
    const Vec2d steps[4] = {
        {-v.y, v.x},              // S
        {v.y, -v.x},              // S^-1
        {v.x + lam * v.y, v.y},   // T
        {v.x - lam * v.y, v.y},   // T^-1
    };
    for (const Vec2d& u : steps) {
      if (sup(u) > expand_bound) continue;
      if (!seen.insert(key(u)).second) continue;
      queue.emplace_back(u, depth + 1);
      if (sup(u) <= norm_bound) out.push_back(u);
    }
  }
  return out;
}

}  // namespace heckecf
