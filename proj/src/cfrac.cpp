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

#include "heckecf/cfrac.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heckecf {

namespace {

// Clamps drift residue around the quadrant boundary.  The exact orbit stays
// in the closed first quadrant and reaches y == 0 exactly on lattice
// directions; rounding leaves a residue of either sign, so both signs of a
// tiny y collapse to zero, while x is only repaired from below.
void clamp_boundary(Vec2d& v) {
  const double mag = std::max(std::fabs(v.x), std::fabs(v.y));
  const double clamp = kCfDriftEps * std::max(1.0, mag);
  if (std::fabs(v.y) <= clamp) v.y = 0.0;
  if (v.x < 0.0 && v.x >= -clamp) v.x = 0.0;
}

}  // namespace

bool cf_terminal(const Vec2d& u, double eps) {
  const double mag = std::max(std::fabs(u.x), std::fabs(u.y));
  return u.x > 0.0 && std::fabs(u.y) <= eps * std::max(1.0, mag);
}

CfStep cf_step(const HeckeContext& ctx, const Vec2d& u, double eps) {
  if (cf_terminal(u, eps)) {
    throw std::domain_error("cf_step: input is a fixed point of the algorithm");
  }
  CfStep st;
  st.input = u;
  st.sector = sector_of(ctx, u, eps);
  st.output = inverse_unimodular(ctx.M_d[static_cast<std::size_t>(st.sector)]) * u;
  return st;
}

Itinerary cf_itinerary(const HeckeContext& ctx, const Vec2d& u, int max_steps,
                       double eps) {
  Itinerary it;
  Vec2d v = u;
  for (int k = 0; k < max_steps; ++k) {
    clamp_boundary(v);
    if (v.x > 0.0 && v.y == 0.0) {
      it.terminated = true;
      v = {1.0, 0.0};  // projective representative of the terminal ray
      break;
    }
    if (k > 0 && v.x == 0.0) break;  // drifted onto the sectorless vertical ray
    const int i = sector_of(ctx, v, eps);
    it.steps.push_back(i);
    v = inverse_unimodular(ctx.M_d[static_cast<std::size_t>(i)]) * v;
    // Renormalize onto the section x + y = 1.  The rounding here keeps float
    // orbits of generic directions generic, and makes the x-track bitwise
    // equal to the slow interval map acting on a = x / (x + y).
    const double t = v.x + v.y;
    if (!(t > 0.0) || !std::isfinite(t)) break;
    const double a = v.x / t;
    v = {a, 1.0 - a};
  }
  if (!it.terminated) {
    clamp_boundary(v);
    if (v.x > 0.0 && v.y == 0.0) {
      it.terminated = true;
      v = {1.0, 0.0};
    }
  }
  it.last = v;
  return it;
}

}  // namespace heckecf
