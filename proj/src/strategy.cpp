#include "satgame/strategy.hpp"

#include <charconv>
#include <cmath>

#include "satgame/detail/text.hpp"
#include "satgame/errors.hpp"

namespace satgame {

std::optional<TargetPolicy> parse_policy(std::string_view text) {
  if (text == "away-sensor") return TargetPolicy::away_from_sensor();
  if (text == "away-attacker") return TargetPolicy::away_from_attacker();
  if (text == "toward-attacker") return TargetPolicy::toward_attacker();
  if (text == "best-escape") return TargetPolicy::best_escape();

  constexpr std::string_view kFixed = "fixed:";
  if (text.substr(0, kFixed.size()) == kFixed) {
    std::string_view rest = text.substr(kFixed.size());
    double deg = 0.0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), deg);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() ||
        !std::isfinite(deg))
      return std::nullopt;
    return TargetPolicy::fixed(Heading::from_degrees(deg));
  }
  return std::nullopt;
}

std::string policy_name(const TargetPolicy& p) {
  switch (p.kind) {
    case TargetPolicy::Kind::fixed:
      return "fixed:" + detail::num(p.fixed_heading.degrees(), 10);
    case TargetPolicy::Kind::away_from_sensor:
      return "away-sensor";
    case TargetPolicy::Kind::away_from_attacker:
      return "away-attacker";
    case TargetPolicy::Kind::toward_attacker:
      return "toward-attacker";
    case TargetPolicy::Kind::best_escape:
      return "best-escape";
  }
  return "?";
}

Heading sensor_heading(const DerivedGeometry& g, const EngagementConfig& c,
                       Heading gamma_t) {
  // The escape point is at distance nu*L + r from the sensor, never zero, so
  // the line of sight always exists.
  return los_angle(c.s0, escape_distance(g, c, gamma_t).escape_point);
}

Heading attacker_heading(const DerivedGeometry& g, Heading gamma_t) {
  double lead = std::asin(g.mu * std::sin(angular_difference(g.theta_at0, gamma_t)));
  return Heading(g.theta_at0.radians() - lead);
}

Heading target_heading(const TargetPolicy& p, const DerivedGeometry& g,
                       const EngagementConfig& c) {
  switch (p.kind) {
    case TargetPolicy::Kind::fixed:
      return p.fixed_heading;
    case TargetPolicy::Kind::away_from_sensor:
      return g.theta_st0;
    case TargetPolicy::Kind::away_from_attacker:
      return g.theta_at0;
    case TargetPolicy::Kind::toward_attacker:
      return g.theta_at0.reversed();
    case TargetPolicy::Kind::best_escape:
      if (auto h = escape_heading(g, c)) return *h;
      return g.theta_at0;  // boxed in: stretch the chase instead
  }
  throw Error("unhandled target policy kind");
}

StrategyAssignment make_assignment(const TargetPolicy& p,
                                   const DerivedGeometry& g,
                                   const EngagementConfig& c) {
  Heading gamma_t = target_heading(p, g, c);
  return {sensor_heading(g, c, gamma_t), attacker_heading(g, gamma_t), gamma_t};
}

}  // namespace satgame
