#include "satgame/svg.hpp"

#include <algorithm>
#include <cmath>

#include "satgame/detail/text.hpp"

namespace satgame {

namespace {
constexpr double kPadPx = 24.0;

std::string px(double v) { return detail::num(v, 7); }
}  // namespace

SvgCanvas::SvgCanvas(double min_x, double min_y, double max_x, double max_y,
                     int width_px) {
  double dx = std::max(max_x - min_x, 1e-9);
  double dy = std::max(max_y - min_y, 1e-9);
  min_x_ = min_x;
  min_y_ = min_y;
  width_px_ = width_px;
  scale_ = (width_px - 2.0 * kPadPx) / dx;
  height_px_ = static_cast<int>(std::lround(dy * scale_ + 2.0 * kPadPx));
}

double SvgCanvas::sx(double x) const { return kPadPx + (x - min_x_) * scale_; }
double SvgCanvas::sy(double y) const {
  return height_px_ - kPadPx - (y - min_y_) * scale_;
}

void SvgCanvas::poly_impl(const std::vector<Point2>& pts,
                          const std::string& color, double width_px,
                          bool dashed, bool closed) {
  if (pts.size() < 2) return;
  std::string d;
  for (const Point2& p : pts) {
    if (!d.empty()) d += " ";
    d += px(sx(p.x)) + "," + px(sy(p.y));
  }
  std::string s = std::string(closed ? "<polygon" : "<polyline") +
                  " points=\"" + d + "\" fill=\"none\" stroke=\"" + color +
                  "\" stroke-width=\"" + px(width_px) + "\"";
  if (dashed) s += " stroke-dasharray=\"6 4\"";
  s += "/>";
  shapes_.push_back(std::move(s));
}

void SvgCanvas::polyline(const std::vector<Point2>& pts,
                         const std::string& color, double width_px,
                         bool dashed) {
  poly_impl(pts, color, width_px, dashed, false);
}

void SvgCanvas::ring(const std::vector<Point2>& pts, const std::string& color,
                     double width_px, bool dashed) {
  poly_impl(pts, color, width_px, dashed, true);
}

void SvgCanvas::circle(const Point2& center, double radius,
                       const std::string& color, double width_px,
                       bool dashed) {
  std::string s = "<circle cx=\"" + px(sx(center.x)) + "\" cy=\"" +
                  px(sy(center.y)) + "\" r=\"" + px(radius * scale_) +
                  "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
                  px(width_px) + "\"";
  if (dashed) s += " stroke-dasharray=\"6 4\"";
  s += "/>";
  shapes_.push_back(std::move(s));
}

void SvgCanvas::marker(const Point2& p, const std::string& color,
                       double size_px) {
  shapes_.push_back("<circle cx=\"" + px(sx(p.x)) + "\" cy=\"" + px(sy(p.y)) +
                    "\" r=\"" + px(size_px) + "\" fill=\"" + color + "\"/>");
}

void SvgCanvas::cross(const Point2& p, const std::string& color,
                      double size_px) {
  double cx = sx(p.x), cy = sy(p.y), s = size_px;
  shapes_.push_back("<path d=\"M " + px(cx - s) + " " + px(cy - s) + " L " +
                    px(cx + s) + " " + px(cy + s) + " M " + px(cx - s) + " " +
                    px(cy + s) + " L " + px(cx + s) + " " + px(cy - s) +
                    "\" stroke=\"" + color + "\" stroke-width=\"2\"/>");
}

void SvgCanvas::label(double x_px, double y_px, const std::string& text,
                      const std::string& color) {
  shapes_.push_back("<text x=\"" + px(x_px) + "\" y=\"" + px(y_px) +
                    "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" +
                    color + "\">" + text + "</text>");
}

void SvgCanvas::write(std::ostream& os) const {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px_
     << "\" height=\"" << height_px_ << "\" viewBox=\"0 0 " << width_px_ << " "
     << height_px_ << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& s : shapes_) os << s << "\n";
  os << "</svg>\n";
}

}  // namespace satgame
