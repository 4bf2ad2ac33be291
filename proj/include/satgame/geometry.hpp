#pragma once

#include <cmath>

#include "satgame/errors.hpp"

namespace satgame {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Two points closer than this are treated as coincident (no line of sight).
inline constexpr double kCoincidenceTol = 1e-12;

// Planar direction, always normalised to (-pi, pi].
class Heading {
 public:
  Heading() = default;

  explicit Heading(double radians) {
    if (!std::isfinite(radians))
      throw DegenerateGeometryError("heading must be finite");
    rad_ = wrap(radians);
  }

  static Heading from_degrees(double deg) { return Heading(deg * kPi / 180.0); }

  double radians() const { return rad_; }
  double degrees() const { return rad_ * 180.0 / kPi; }

  Heading rotated(double delta) const { return Heading(rad_ + delta); }
  Heading reversed() const { return Heading(rad_ + kPi); }

 private:
  // remainder() lands in [-pi, pi]; fold the closed bottom end onto +pi so a
  // heading has exactly one representation.
  static double wrap(double a) {
    double r = std::remainder(a, kTwoPi);
    return r <= -kPi ? kPi : r;
  }

  double rad_ = 0.0;
};

// Wrapped difference a - b in (-pi, pi].
double angular_difference(Heading a, Heading b);

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2() = default;
  Point2(double px, double py);  // rejects non-finite coordinates
};

inline Point2 operator+(const Point2& a, const Point2& b) {
  return {a.x + b.x, a.y + b.y};
}
inline Point2 operator-(const Point2& a, const Point2& b) {
  return {a.x - b.x, a.y - b.y};
}
inline Point2 operator*(double k, const Point2& p) { return {k * p.x, k * p.y}; }
inline double dot(const Point2& a, const Point2& b) {
  return a.x * b.x + a.y * b.y;
}

double distance(const Point2& a, const Point2& b);

// Direction from one point to another; throws on coincident points.
Heading los_angle(const Point2& from, const Point2& to);

// The point `dist` along `h` from `origin`. Negative dist walks backwards.
Point2 point_along(const Point2& origin, Heading h, double dist);

inline Point2 unit(Heading h) {
  return {std::cos(h.radians()), std::sin(h.radians())};
}

}  // namespace satgame
