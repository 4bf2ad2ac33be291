#pragma once

#include <string>
#include <vector>

#include "satgame/geometry.hpp"

namespace satgame {

// Initial state of one engagement: a sensor that must keep the target within
// range r, an attacker trying to reach the target, and the target itself.
// All three move with constant speed on constant headings.
struct EngagementConfig {
  Point2 s0;  // sensor
  Point2 a0;  // attacker
  Point2 t0;  // target
  double v_s = 0.0;
  double v_t = 0.0;
  double v_a = 0.0;
  double r = 0.0;  // sensing radius
};

// Every violated rule, one message each. Empty means the config is usable:
// finite values, 0 < v_s < v_t < v_a, r > 0, target within range at t = 0,
// and distinct positions wherever a line of sight is needed.
std::vector<std::string> validate(const EngagementConfig&);

// Throws ValidationError carrying the full list from validate().
void ensure_valid(const EngagementConfig&);

// Quantities every downstream formula consumes, computed once.
struct DerivedGeometry {
  double d_st0 = 0.0;  // sensor-target separation
  double d_at0 = 0.0;  // attacker-target separation
  Heading theta_st0;   // line of sight sensor -> target
  Heading theta_at0;   // line of sight attacker -> target
  double nu = 0.0;     // v_s / v_t, in (0, 1)
  double mu = 0.0;     // v_t / v_a, in (0, 1)
};

// Validates, then derives. The speed ratios are both below one by the strict
// speed ordering, which is what keeps the escape quadratic and the Apollonius
// construction well defined.
DerivedGeometry derive_geometry(const EngagementConfig&);

// Same engagement with the target speed swapped out (used by sweeps and the
// critical-speed search).
EngagementConfig with_target_speed(EngagementConfig cfg, double v_t);

}  // namespace satgame
