#include "satgame/engagement.hpp"

#include <cmath>

#include "satgame/detail/text.hpp"
#include "satgame/errors.hpp"

namespace satgame {

namespace {

using detail::num;

bool finite_point(const Point2& p) {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

std::vector<std::string> validate(const EngagementConfig& c) {
  std::vector<std::string> bad;

  if (!finite_point(c.s0)) bad.push_back("sensor position must be finite");
  if (!finite_point(c.a0)) bad.push_back("attacker position must be finite");
  if (!finite_point(c.t0)) bad.push_back("target position must be finite");

  if (!positive_finite(c.v_s))
    bad.push_back("v_s must be a positive finite speed, got " + num(c.v_s));
  if (!positive_finite(c.v_t))
    bad.push_back("v_t must be a positive finite speed, got " + num(c.v_t));
  if (!positive_finite(c.v_a))
    bad.push_back("v_a must be a positive finite speed, got " + num(c.v_a));
  if (!positive_finite(c.r))
    bad.push_back("sensing radius r must be positive and finite, got " +
                  num(c.r));

  if (positive_finite(c.v_s) && positive_finite(c.v_t) &&
      positive_finite(c.v_a) && !(c.v_s < c.v_t && c.v_t < c.v_a)) {
    bad.push_back("speeds must be strictly ordered v_s < v_t < v_a, got " +
                  num(c.v_s) + ", " + num(c.v_t) + ", " + num(c.v_a));
  }

  if (finite_point(c.s0) && finite_point(c.t0)) {
    double d = distance(c.s0, c.t0);
    if (d <= kCoincidenceTol) {
      bad.push_back("sensor and target must not coincide");
    } else if (positive_finite(c.r) && d >= c.r) {
      bad.push_back("target must start inside sensing range: d_st0=" + num(d) +
                    " >= r=" + num(c.r));
    }
  }
  if (finite_point(c.a0) && finite_point(c.t0) &&
      distance(c.a0, c.t0) <= kCoincidenceTol)
    bad.push_back("attacker and target must not coincide");

  return bad;
}

void ensure_valid(const EngagementConfig& c) {
  auto bad = validate(c);
  if (!bad.empty()) throw ValidationError(std::move(bad));
}

DerivedGeometry derive_geometry(const EngagementConfig& c) {
  ensure_valid(c);
  DerivedGeometry g;
  g.d_st0 = distance(c.s0, c.t0);
  g.d_at0 = distance(c.a0, c.t0);
  g.theta_st0 = los_angle(c.s0, c.t0);
  g.theta_at0 = los_angle(c.a0, c.t0);
  g.nu = c.v_s / c.v_t;
  g.mu = c.v_t / c.v_a;
  return g;
}

EngagementConfig with_target_speed(EngagementConfig cfg, double v_t) {
  cfg.v_t = v_t;
  return cfg;
}

}  // namespace satgame
