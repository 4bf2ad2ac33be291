#pragma once

#include <optional>
#include <vector>

#include "satgame/engagement.hpp"

namespace satgame {

inline constexpr int kDefaultBoundarySamples = 512;
inline constexpr int kMinBoundarySamples = 16;
// Containment slack, as a fraction of the sensing radius. A boundary point
// whose clearance is below eps = kContainmentSlack * r counts as a breach.
inline constexpr double kContainmentSlack = 1e-6;

// Solution of the escape problem along one target heading: how far (and how
// long) the target must run before even a best-responding sensor loses it.
struct EscapeSolution {
  double omega = 0.0;            // nu*r - d_st0*cos(gamma_t - theta_st0)
  double escape_distance = 0.0;  // path length to the range boundary
  double escape_time = 0.0;      // escape_distance / v_t
  Point2 escape_point;           // where the target crosses out of range
};

// Positive root L of  (1 - nu^2) L^2 - 2 omega L + (d_st0^2 - r^2) = 0.
// The constant term is negative (target starts in range), so the two real
// roots straddle zero and exactly one is meaningful.
EscapeSolution escape_distance(const DerivedGeometry&, const EngagementConfig&,
                               Heading gamma_t);

// Shortest escape over all headings: run straight away from the sensor, which
// collapses the root to (r - d_st0) / (1 - nu).
EscapeSolution min_escape(const DerivedGeometry&, const EngagementConfig&);

struct BoundarySample {
  Heading heading;
  double escape_distance = 0.0;
  Point2 boundary_point;
};

// The reachable-before-loss region around the target is star shaped about
// t0, so its boundary is one escape solve per ray. Samples sit on the
// strictly increasing grid gamma_k = -pi + 2 pi k / n, k = 1..n.
struct SensableBoundary {
  std::vector<BoundarySample> samples;
};

SensableBoundary sensable_boundary(const DerivedGeometry&,
                                   const EngagementConfig&, int n);

// Locus of points the attacker and target reach simultaneously when both fly
// straight: |P - t0| / |P - a0| = mu on the boundary. The target sits
// strictly inside.
struct ApolloniusCircle {
  Point2 center;
  double radius = 0.0;
};

ApolloniusCircle apollonius(const DerivedGeometry&, const EngagementConfig&);

// Signed radial clearance of p: escape distance along the ray t0 -> p minus
// |p - t0|. Positive means the sensor keeps the target in range all the way
// out to p. p == t0 returns the min escape distance (deep inside).
double point_in_sensable(const DerivedGeometry&, const EngagementConfig&,
                         const Point2& p);

struct ContainmentReport {
  bool contained = false;   // every sampled interception point stays covered
  double worst_margin = 0.0;
  Heading worst_heading;    // ray from t0 with the smallest clearance
};

// Capture is guaranteed exactly when the whole Apollonius circle lies inside
// the sensable region. Sampled test: n points on the circle, contained iff
// the minimum clearance stays above eps (default kContainmentSlack * r).
ContainmentReport capture_guaranteed(const DerivedGeometry&,
                                     const EngagementConfig&,
                                     int n = kDefaultBoundarySamples,
                                     std::optional<double> eps = {});

// Closed-form target-speed window. Below v_lower the attacker outruns every
// escape; v_upper (when the denominator is positive) is the speed at which
// the stern-chase interception distance reaches the escape distance. The
// window is only usable when v_upper < v_a.
struct SpeedBounds {
  double v_lower = 0.0;
  std::optional<double> v_upper;
  bool admissible = false;
};

SpeedBounds speed_bounds(const EngagementConfig&);

// Smallest target speed at which containment fails, found by bisection over
// [v_lower, v_upper] on the capture_guaranteed predicate. Returns the upper
// end of the final interval (the first failing speed). Throws BracketError if
// the bounds are inadmissible or containment does not flip across them.
double critical_speed(const EngagementConfig&, double tol = 1e-4,
                      int n = kDefaultBoundarySamples);

enum class TangentSpeedStatus {
  selected,
  both_roots_in_bracket,
  no_real_root,
  no_root_in_bracket,
};

struct TangentQuadratic {
  double d_ratio = 0.0;  // (r - d_st0) / d_at0
  double p_theta = 0.0;  // -cos(theta_at0 - theta_st0), interior-angle form
  double q_theta = 0.0;  //  sin(theta_at0 - theta_st0)
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// Speeds at which the Apollonius circle passes exactly through the min-escape
// point, i.e. the stern-chase interception distance equals the minimum escape
// distance. Roots of a*v^2 + b*v + c with
//   a = 1 - 2 D p + D^2,  b = -2 v_s (1 - D p),  c = v_s^2 - D^2 v_a^2.
// a > 0 always: a = (1 - D p)^2 + D^2 (1 - p^2). A root is selected only if
// exactly one lands in [v_lower, v_upper]; two-in-bracket is flagged rather
// than guessed. literal_root_* carry the naive-cosine variant (p = +cos) for
// diagnosis; the two agree only when the lines of sight are acutely separated.
struct TangentSpeedResult {
  TangentQuadratic quad;
  std::optional<double> root_low, root_high;
  std::optional<double> literal_root_low, literal_root_high;
  std::optional<double> selected;
  TangentSpeedStatus status = TangentSpeedStatus::no_real_root;
};

TangentSpeedResult tangent_escape_speed(const EngagementConfig&);

// Heading whose sampled interception point overshoots the sensable region by
// the largest factor |P - t0| / escape_distance. Empty when containment holds
// (then no heading escapes). Samples the circle at the same resolution and
// slack as capture_guaranteed.
std::optional<Heading> escape_heading(const DerivedGeometry&,
                                      const EngagementConfig&,
                                      int n = kDefaultBoundarySamples);

namespace detail {

// Positive escape root from scalars. Clamps a (numerically) negative
// discriminant to zero so rendering paths can draw a boundary even when the
// sensor-target separation has drifted onto r; validated configs never hit
// the clamp.
double escape_root(double d_st, double r, double nu, double cos_delta);

// Forward intersection of the ray origin -> `ray` with a circle that strictly
// contains the origin.
Point2 ray_circle_exit(const Point2& origin, Heading ray,
                       const ApolloniusCircle&);

}  // namespace detail

}  // namespace satgame
