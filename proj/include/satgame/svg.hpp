#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "satgame/geometry.hpp"

namespace satgame {

// Minimal plot surface: world-coordinate primitives mapped onto a fixed-size
// SVG with a uniform scale and flipped y. Collect shapes first, then write().
class SvgCanvas {
 public:
  // World-space bounding box; content outside is clipped by viewers, so grow
  // the box before drawing rather than after.
  SvgCanvas(double min_x, double min_y, double max_x, double max_y,
            int width_px = 760);

  void polyline(const std::vector<Point2>& pts, const std::string& color,
                double width_px, bool dashed = false);
  void circle(const Point2& center, double radius, const std::string& color,
              double width_px, bool dashed = false);
  void ring(const std::vector<Point2>& pts, const std::string& color,
            double width_px, bool dashed = false);  // closed polyline
  void marker(const Point2& p, const std::string& color, double size_px = 4.0);
  void cross(const Point2& p, const std::string& color, double size_px = 5.0);
  // Screen-space label, y measured down from the top-left corner.
  void label(double x_px, double y_px, const std::string& text,
             const std::string& color);

  void write(std::ostream&) const;

 private:
  double sx(double x) const;
  double sy(double y) const;
  void poly_impl(const std::vector<Point2>& pts, const std::string& color,
                 double width_px, bool dashed, bool closed);

  double min_x_, min_y_, scale_;
  int width_px_, height_px_;
  std::vector<std::string> shapes_;
};

}  // namespace satgame
