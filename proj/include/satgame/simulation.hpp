#pragma once

#include <vector>

#include "satgame/engagement.hpp"
#include "satgame/strategy.hpp"

namespace satgame {

struct SimulationParams {
  double dt = 1e-3;
  double capture_tol = 1e-6;  // attacker-target distance that counts as capture
  double max_time = 1e4;
};

// Sampled positions, one row per recorded step plus the final event row.
// Rows are spaced stride * dt apart; stride starts at 1 and doubles whenever
// the buffer would outgrow its cap, so very long runs stay bounded without
// losing the overall shape.
struct Trajectory {
  std::vector<double> times;
  std::vector<Point2> s, a, t;
  int stride = 1;
};

enum class OutcomeKind { capture, escape, timeout };

const char* to_string(OutcomeKind);

struct EngagementOutcome {
  OutcomeKind kind = OutcomeKind::timeout;
  double t_final = 0.0;
  Point2 terminal_point;  // target position at t_final
  bool tie = false;       // capture and escape landed on the same instant
  Trajectory trajectory;
};

// Steps the three straight-line tracks with exact (closed-form) positions and
// watches for two events per step window:
//   capture: attacker-target separation dips to capture_tol. The squared
//     separation is an exact quadratic in t, so the window minimum sits at
//     its clamped vertex; endpoint checks alone miss stern-chase closures
//     whose dip is far narrower than dt. Event time = earliest in-window root.
//   escape: sensor-target separation reaches r. That quadratic is convex with
//     a single upward crossing; linear interpolation plus one Newton step on
//     the polynomial pins the crossing.
// The earlier event wins; an exact tie counts as capture (and sets the flag).
// If neither fires by max_time the outcome is timeout.
EngagementOutcome simulate(const EngagementConfig&, const StrategyAssignment&,
                           const SimulationParams& = {});

// Escape time observed by stepping only the sensor-target pair, with the
// sensor on its pursuit heading for gamma_t. Independent check of the escape
// quadratic: no analysis formulas beyond the sensor aim point are involved.
// Throws if the boundary is not reached before max_time.
double oracle_escape_time(const EngagementConfig&, Heading gamma_t,
                          const SimulationParams& = {});

struct InterceptionResult {
  double intercept_time = 0.0;  // time of closest approach
  double miss_distance = 0.0;   // attacker-target separation at that time
};

// Closest approach between attacker (on its interception course for gamma_t)
// and target, stepped until the separation starts growing, then refined on
// the step quadratic. A genuine interception shows up as miss_distance ~ 0.
InterceptionResult oracle_interception(const EngagementConfig&, Heading gamma_t,
                                       const SimulationParams& = {});

}  // namespace satgame
