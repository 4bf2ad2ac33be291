#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "satgame/analysis.hpp"

namespace satgame {

// How the target picks its (open-loop) heading. The other two players do not
// get policies: the sensor and attacker best responses are fully determined
// by the target heading.
struct TargetPolicy {
  enum class Kind {
    fixed,
    away_from_sensor,
    away_from_attacker,
    toward_attacker,
    best_escape,
  };

  Kind kind = Kind::away_from_sensor;
  Heading fixed_heading;  // meaningful only when kind == fixed

  static TargetPolicy fixed(Heading h) { return {Kind::fixed, h}; }
  static TargetPolicy away_from_sensor() { return {Kind::away_from_sensor, {}}; }
  static TargetPolicy away_from_attacker() {
    return {Kind::away_from_attacker, {}};
  }
  static TargetPolicy toward_attacker() { return {Kind::toward_attacker, {}}; }
  static TargetPolicy best_escape() { return {Kind::best_escape, {}}; }
};

// Command-line spellings: "fixed:<degrees>", "away-sensor", "away-attacker",
// "toward-attacker", "best-escape". Unrecognized input returns empty.
std::optional<TargetPolicy> parse_policy(std::string_view text);
std::string policy_name(const TargetPolicy&);

// One heading per player, all frozen at t = 0.
struct StrategyAssignment {
  Heading gamma_s;
  Heading gamma_a;
  Heading gamma_t;
};

// The sensor aims at the point where the target will cross out of range; a
// straight pursuit of that point is the unique heading that keeps the target
// in range for the whole escape run.
Heading sensor_heading(const DerivedGeometry&, const EngagementConfig&,
                       Heading gamma_t);

// Constant-bearing interception course: gamma_a = theta_at0 - asin(mu *
// sin(theta_at0 - gamma_t)). The asin argument is bounded by mu < 1, so the
// course exists for every target heading.
Heading attacker_heading(const DerivedGeometry&, Heading gamma_t);

// Resolves a policy to a concrete heading. best_escape asks the analysis for
// the most-overshooting ray and, when the target is boxed in (containment
// holds), falls back to fleeing the attacker to stretch the chase.
Heading target_heading(const TargetPolicy&, const DerivedGeometry&,
                       const EngagementConfig&);

StrategyAssignment make_assignment(const TargetPolicy&, const DerivedGeometry&,
                                   const EngagementConfig&);

}  // namespace satgame
