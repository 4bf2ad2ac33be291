#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "satgame/analysis.hpp"
#include "satgame/scenario.hpp"
#include "satgame/simulation.hpp"

namespace satgame {

// Everything the analyze command reports for one scenario. Numbers stay in
// library units (radians live only inside Heading); degree conversion happens
// at the printing/JSON edge.
struct AnalyzeReport {
  EngagementConfig config;
  DerivedGeometry geom;
  EscapeSolution min_escape_sol;
  ApolloniusCircle circle;
  ContainmentReport containment;
  int containment_samples = 0;
  SpeedBounds bounds;
  double admissibility_lhs = 0.0;  // 2 (r - d_st0) / d_at0
  double admissibility_rhs = 0.0;  // 1 - v_s / v_a
  TangentSpeedResult tangent;
  std::optional<double> critical;
  std::string critical_note;  // why critical is absent, when it is
};

AnalyzeReport analyze(const Scenario&);
nlohmann::json report_to_json(const AnalyzeReport&);
void print_report(const AnalyzeReport&, std::ostream&);

// simulate command: resolve the policy, run, optionally write artifacts.
struct SimulateRun {
  StrategyAssignment assignment;
  EngagementOutcome outcome;
  std::optional<std::filesystem::path> csv_path, svg_path;
};

SimulateRun run_simulation(const Scenario&, const TargetPolicy&, double dt,
                           const std::optional<std::string>& out_prefix);

// Exact column set for trajectory CSVs. Rows are stride-thinned to keep files
// reviewable; the final event row is always present.
inline constexpr const char* kTrajectoryCsvHeader =
    "time,sx,sy,ax,ay,tx,ty";

void write_trajectory_csv(std::ostream&, const Trajectory&);

enum class SweepAxis { heading, speed };

struct SweepCell {
  double value = 0.0;  // heading in degrees, or target speed
  bool valid = true;   // speed cells outside (v_s, v_a) are kept but flagged
  OutcomeKind kind = OutcomeKind::timeout;
  double t_final = 0.0;
  double escape_distance = 0.0;  // heading axis only
  double worst_margin = 0.0;     // speed axis only
};

struct SweepResult {
  SweepAxis axis = SweepAxis::heading;
  std::vector<SweepCell> cells;
};

// Uniform inclusive grid of n cells over [lo, hi] (a zero-width range
// collapses to one cell). Heading cells pin the target on the swept heading;
// speed cells swap the target speed and use the best-escape policy. Cells are
// independent and evaluated in parallel.
SweepResult run_sweep(const Scenario&, SweepAxis, double lo, double hi, int n);

void write_sweep_csv(std::ostream&, const SweepResult&);
void print_sweep(const SweepResult&, std::ostream&);

// regions command: sensable boundary + interception circle per target speed.
struct RegionSet {
  EngagementConfig base;
  std::vector<double> speeds;  // caller order
  std::vector<SensableBoundary> sensable;
  std::vector<ApolloniusCircle> circles;
};

RegionSet compute_regions(const Scenario&, const std::vector<double>& speeds);

// Monotonicity audit: along every sampled ray the sensable boundary must pull
// in as the target gets faster, and the interception circles must nest
// outward. Throws Error naming the first violation.
void check_region_nesting(const RegionSet&);

void write_regions_csv(std::ostream&, const RegionSet&);
void write_regions_svg(std::ostream&, const RegionSet&);

// Trajectory picture for one run: paths, start/end markers, the sensable
// boundary and interception circle at t = 0 (dashed) and at the final time
// (solid).
void write_run_svg(std::ostream&, const EngagementConfig&,
                   const EngagementOutcome&);

}  // namespace satgame
