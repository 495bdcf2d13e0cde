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

#ifndef HECKECF_CFRAC_HPP_
#define HECKECF_CFRAC_HPP_

#include <vector>

#include "heckecf/hecke.hpp"

namespace heckecf {

// One pullback step of the sector algorithm.  `output` is the raw image
// inverse(M[sector]) * input, not rescaled.
struct CfStep {
  Vec2d input;
  int sector = -1;
  Vec2d output;
};

// Digit sequence of the sector algorithm.  `steps` holds the sector index
// consumed at each step.  `terminated` means the orbit reached a fixed
// direction of the algorithm (positive x-axis).  `last` is the final vector
// after the recorded steps, in the rescaled coordinates the iteration uses.
struct Itinerary {
  std::vector<int> steps;
  bool terminated = false;
  Vec2d last{0.0, 0.0};
};

// True when u is a fixed direction of the algorithm: u.x > 0 and |u.y| below
// eps relative to the magnitude of u.
bool cf_terminal(const Vec2d& u, double eps = 1e-12);

// Termination basin used by orbit iteration (cf_itinerary) and mirrored by
// the geodesic coding: |y| <= kCfDriftEps * max(1, sup|u|) collapses to the
// terminal ray.  Wider than cf_terminal's default because rounding drift
// along a lattice descent scales with the square of the continuant; a
// detector at 1e-12 would let a true termination slip past.
inline constexpr double kCfDriftEps = 1e-9;

// Applies one pullback step.  Throws std::domain_error if u is terminal
// (fixed point of the algorithm) or lies in no sector.
CfStep cf_step(const HeckeContext& ctx, const Vec2d& u, double eps = 1e-12);

// Iterates the pullback step until termination or max_steps.  After each
// step the vector is renormalized onto the section x + y = 1, so the x-track
// equals the slow interval map acting on a = x / (x + y) bitwise.  Tiny
// coordinates (within kCfDriftEps, relative) are clamped to zero so that
// boundary rounding cannot eject the orbit from the closed first quadrant,
// and a terminated orbit reports last = (1, 0) exactly.  eps controls sector
// selection only.
Itinerary cf_itinerary(const HeckeContext& ctx, const Vec2d& u, int max_steps,
                       double eps = 1e-12);

}  // namespace heckecf

#endif  // HECKECF_CFRAC_HPP_
