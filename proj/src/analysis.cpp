#include "satgame/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <utility>

#include "satgame/detail/text.hpp"
#include "satgame/errors.hpp"

namespace satgame {

namespace {

using detail::num;

void require_resolution(int n) {
  if (n < kMinBoundarySamples)
    throw ValidationError({"boundary resolution too small: need at least " +
                           std::to_string(kMinBoundarySamples) +
                           " samples, got " + std::to_string(n)});
}

// Real roots of a x^2 + b x + c, ascending. Callers here always pass a > 0.
std::optional<std::pair<double, double>> quadratic_roots(double a, double b,
                                                         double c) {
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return std::nullopt;
  double s = std::sqrt(disc);
  double r1 = (-b - s) / (2.0 * a);
  double r2 = (-b + s) / (2.0 * a);
  if (r1 > r2) std::swap(r1, r2);
  return std::make_pair(r1, r2);
}

}  // namespace

namespace detail {

double escape_root(double d_st, double r, double nu, double cos_delta) {
  double one_minus = 1.0 - nu * nu;
  double omega = nu * r - d_st * cos_delta;
  double disc = omega * omega + one_minus * (r * r - d_st * d_st);
  if (disc < 0.0) disc = 0.0;
  double root = (omega + std::sqrt(disc)) / one_minus;
  return root > 0.0 ? root : 0.0;
}

Point2 ray_circle_exit(const Point2& origin, Heading ray,
                       const ApolloniusCircle& circle) {
  Point2 u = unit(ray);
  Point2 o = origin - circle.center;
  double b = 2.0 * dot(o, u);
  double c = dot(o, o) - circle.radius * circle.radius;
  double disc = b * b - 4.0 * c;
  assert(disc > 0.0 && "ray origin must sit strictly inside the circle");
  double s = 0.5 * (-b + std::sqrt(disc));  // forward hit; the other is behind
  return origin + s * u;
}

}  // namespace detail

EscapeSolution escape_distance(const DerivedGeometry& g,
                               const EngagementConfig& c, Heading gamma_t) {
  double one_minus = 1.0 - g.nu * g.nu;
  double cosd = std::cos(angular_difference(gamma_t, g.theta_st0));
  double omega = g.nu * c.r - g.d_st0 * cosd;
  double disc = omega * omega + one_minus * (c.r * c.r - g.d_st0 * g.d_st0);
  // d_st0 < r makes the constant term of the quadratic negative, so the
  // discriminant is a sum of nonnegative pieces.
  assert(disc >= 0.0);

  EscapeSolution out;
  out.omega = omega;
  out.escape_distance = (omega + std::sqrt(disc)) / one_minus;
  out.escape_time = out.escape_distance / c.v_t;
  out.escape_point = point_along(c.t0, gamma_t, out.escape_distance);
  return out;
}

EscapeSolution min_escape(const DerivedGeometry& g,
                          const EngagementConfig& c) {
  EscapeSolution out;
  out.omega = g.nu * c.r - g.d_st0;  // cos term at +1: fleeing straight out
  out.escape_distance = (c.r - g.d_st0) / (1.0 - g.nu);
  out.escape_time = out.escape_distance / c.v_t;
  out.escape_point = point_along(c.t0, g.theta_st0, out.escape_distance);
  return out;
}

SensableBoundary sensable_boundary(const DerivedGeometry& g,
                                   const EngagementConfig& c, int n) {
  require_resolution(n);
  SensableBoundary b;
  b.samples.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) {
    Heading gamma(-kPi + kTwoPi * k / n);
    EscapeSolution sol = escape_distance(g, c, gamma);
    b.samples.push_back({gamma, sol.escape_distance, sol.escape_point});
  }
  return b;
}

ApolloniusCircle apollonius(const DerivedGeometry& g,
                            const EngagementConfig& c) {
  double f = g.mu * g.mu / (1.0 - g.mu * g.mu);
  ApolloniusCircle circle;
  circle.center = c.t0 + f * (c.t0 - c.a0);
  circle.radius = g.mu * g.d_at0 / (1.0 - g.mu * g.mu);
  return circle;
}

double point_in_sensable(const DerivedGeometry& g, const EngagementConfig& c,
                         const Point2& p) {
  double reach = distance(c.t0, p);
  if (reach <= kCoincidenceTol) return min_escape(g, c).escape_distance;
  return escape_distance(g, c, los_angle(c.t0, p)).escape_distance - reach;
}

ContainmentReport capture_guaranteed(const DerivedGeometry& g,
                                     const EngagementConfig& c, int n,
                                     std::optional<double> eps) {
  require_resolution(n);
  double slack = eps ? *eps : kContainmentSlack * c.r;
  ApolloniusCircle circle = apollonius(g, c);

  double worst = std::numeric_limits<double>::infinity();
  Point2 worst_point;
  for (int k = 0; k < n; ++k) {
    double phi = kTwoPi * k / n;
    Point2 p = circle.center +
               Point2{circle.radius * std::cos(phi), circle.radius * std::sin(phi)};
    double m = point_in_sensable(g, c, p);
    if (m < worst) {
      worst = m;
      worst_point = p;
    }
  }
  // The target is strictly interior to the circle (clearance mu d/(1+mu)),
  // so every sample admits a line of sight.
  return {worst > slack, worst, los_angle(c.t0, worst_point)};
}

SpeedBounds speed_bounds(const EngagementConfig& c) {
  DerivedGeometry g = derive_geometry(c);
  double lead = c.r - g.d_st0;  // room the target has before the range closes
  double numer = lead * c.v_a + g.d_at0 * c.v_s;

  SpeedBounds out;
  out.v_lower = numer / (g.d_at0 + lead);
  // Weighted mean of v_a and v_s with positive weights, hence inside (v_s, v_a).
  assert(out.v_lower > c.v_s && out.v_lower < c.v_a);

  double denom = g.d_at0 - lead;
  if (denom > 0.0) {
    out.v_upper = numer / denom;
    out.admissible = *out.v_upper < c.v_a;
  }
  return out;
}

double critical_speed(const EngagementConfig& c, double tol, int n) {
  if (!std::isfinite(tol) || tol <= 0.0)
    throw ValidationError({"bisection tolerance must be positive and finite"});
  SpeedBounds b = speed_bounds(c);
  if (!b.admissible)
    throw BracketError(
        "critical speed undefined: upper escape-speed bound is not admissible "
        "for this geometry");

  auto margin_at = [&](double v) {
    EngagementConfig probe = with_target_speed(c, v);
    return capture_guaranteed(derive_geometry(probe), probe, n).worst_margin;
  };

  double slack = kContainmentSlack * c.r;
  double lo = b.v_lower;
  double hi = *b.v_upper;
  double m_lo = margin_at(lo);
  double m_hi = margin_at(hi);
  if (!(m_lo > slack) || m_hi > slack)
    throw BracketError("containment does not flip across the speed bracket: "
                       "margin " + num(m_lo) + " at v_lower=" + num(lo) +
                       ", margin " + num(m_hi) + " at v_upper=" + num(hi));

  for (int it = 0; it < 60 && hi - lo > tol; ++it) {
    double mid = 0.5 * (lo + hi);
    (margin_at(mid) > slack ? lo : hi) = mid;
  }
  return hi;
}

TangentSpeedResult tangent_escape_speed(const EngagementConfig& c) {
  DerivedGeometry g = derive_geometry(c);
  SpeedBounds b = speed_bounds(c);

  TangentSpeedResult out;
  double D = (c.r - g.d_st0) / g.d_at0;
  double delta = angular_difference(g.theta_at0, g.theta_st0);
  // Interior angle at the target between the two lines of sight: the law of
  // cosines wants the cosine of (pi - delta). Using cos(delta) directly flips
  // the cross term whenever the sight lines open past a right angle.
  double p = -std::cos(delta);
  double q = std::sin(delta);
  out.quad = {D,
              p,
              q,
              1.0 - 2.0 * D * p + D * D,
              -2.0 * c.v_s * (1.0 - D * p),
              c.v_s * c.v_s - D * D * c.v_a * c.v_a};
  assert(out.quad.a > 0.0);

  double hi_end = b.admissible ? *b.v_upper : c.v_a;
  auto in_bracket = [&](double v) { return v >= b.v_lower && v <= hi_end; };

  if (auto roots = quadratic_roots(out.quad.a, out.quad.b, out.quad.c)) {
    out.root_low = roots->first;
    out.root_high = roots->second;
    bool lo_in = in_bracket(roots->first);
    bool hi_in = in_bracket(roots->second);
    if (lo_in && hi_in) {
      out.status = TangentSpeedStatus::both_roots_in_bracket;
    } else if (lo_in || hi_in) {
      out.selected = lo_in ? roots->first : roots->second;
      out.status = TangentSpeedStatus::selected;
    } else {
      out.status = TangentSpeedStatus::no_root_in_bracket;
    }
  } else {
    out.status = TangentSpeedStatus::no_real_root;
  }

  // Same quadratic built with the raw cosine, kept purely for diagnosis.
  double pl = std::cos(delta);
  if (auto lit = quadratic_roots(1.0 - 2.0 * D * pl + D * D,
                                 -2.0 * c.v_s * (1.0 - D * pl), out.quad.c)) {
    out.literal_root_low = lit->first;
    out.literal_root_high = lit->second;
  }
  return out;
}

std::optional<Heading> escape_heading(const DerivedGeometry& g,
                                      const EngagementConfig& c, int n) {
  ContainmentReport rep = capture_guaranteed(g, c, n);
  if (rep.contained) return std::nullopt;

  ApolloniusCircle circle = apollonius(g, c);
  double best = -1.0;
  std::optional<Heading> pick;
  for (int k = 0; k < n; ++k) {
    double phi = kTwoPi * k / n;
    Point2 p = circle.center +
               Point2{circle.radius * std::cos(phi), circle.radius * std::sin(phi)};
    Heading gamma = los_angle(c.t0, p);
    double ratio =
        distance(c.t0, p) / escape_distance(g, c, gamma).escape_distance;
    if (ratio > best) {
      best = ratio;
      pick = gamma;
    }
  }
  return pick;
}

}  // namespace satgame
