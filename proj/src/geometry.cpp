#include "satgame/geometry.hpp"

#include <cmath>

namespace satgame {

double angular_difference(Heading a, Heading b) {
  double r = std::remainder(a.radians() - b.radians(), kTwoPi);
  return r <= -kPi ? kPi : r;
}

Point2::Point2(double px, double py) : x(px), y(py) {
  if (!std::isfinite(px) || !std::isfinite(py))
    throw DegenerateGeometryError("point coordinates must be finite");
}

double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Heading los_angle(const Point2& from, const Point2& to) {
  if (distance(from, to) <= kCoincidenceTol)
    throw DegenerateGeometryError(
        "line of sight undefined between coincident points");
  return Heading(std::atan2(to.y - from.y, to.x - from.x));
}

Point2 point_along(const Point2& origin, Heading h, double dist) {
  if (!std::isfinite(dist))
    throw DegenerateGeometryError("displacement must be finite");
  return {origin.x + dist * std::cos(h.radians()),
          origin.y + dist * std::sin(h.radians())};
}

}  // namespace satgame
