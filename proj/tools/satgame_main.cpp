#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "satgame/detail/text.hpp"
#include "satgame/errors.hpp"
#include "satgame/scenario.hpp"
#include "satgame/workbench.hpp"

namespace {

// Exit codes: 0 success, 2 bad input (file, schema, option values),
// 3 numeric trouble (no bracket, failed nesting check, simulation time cap).
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

int run_analyze(const std::string& path, bool as_json) {
  satgame::Scenario sc = satgame::load_scenario(path);
  satgame::AnalyzeReport rep = satgame::analyze(sc);
  if (as_json)
    std::cout << satgame::report_to_json(rep).dump(2) << "\n";
  else
    satgame::print_report(rep, std::cout);
  return 0;
}

int run_simulate(const std::string& path, const std::string& policy_str,
                 double dt, const std::optional<std::string>& out_prefix) {
  satgame::Scenario sc = satgame::load_scenario(path);
  std::optional<satgame::TargetPolicy> pol = satgame::parse_policy(policy_str);
  if (!pol)
    throw satgame::ValidationError(
        {"unknown policy '" + policy_str +
         "': expected fixed:<degrees>, away-sensor, away-attacker, "
         "toward-attacker or best-escape"});
  if (!(dt > 0.0))
    throw satgame::ValidationError({"--dt must be a positive step in seconds"});

  satgame::SimulateRun run = satgame::run_simulation(sc, *pol, dt, out_prefix);

  std::cout << "policy " << satgame::policy_name(*pol) << "\n";
  std::cout << "headings (deg): sensor "
            << satgame::detail::num(run.assignment.gamma_s.degrees(), 8)
            << ", attacker "
            << satgame::detail::num(run.assignment.gamma_a.degrees(), 8)
            << ", target "
            << satgame::detail::num(run.assignment.gamma_t.degrees(), 8)
            << "\n";
  std::cout << satgame::to_string(run.outcome.kind) << " at t = "
            << satgame::detail::num(run.outcome.t_final, 8)
            << " s, target at ("
            << satgame::detail::num(run.outcome.terminal_point.x, 8) << ", "
            << satgame::detail::num(run.outcome.terminal_point.y, 8) << ")\n";
  if (run.outcome.tie)
    std::cout << "note: capture and range exit landed on the same instant\n";
  if (run.csv_path)
    std::cout << "wrote " << run.csv_path->string() << " and "
              << run.svg_path->string() << "\n";

  if (run.outcome.kind == satgame::OutcomeKind::timeout) {
    std::cerr << "simulation hit the time cap before either event\n";
    return kExitNumeric;
  }
  return 0;
}

int run_sweep_cmd(const std::string& path, const std::string& axis_str,
                  std::optional<double> min_opt, std::optional<double> max_opt,
                  std::optional<int> n_opt,
                  const std::optional<std::string>& out_csv) {
  satgame::Scenario sc = satgame::load_scenario(path);
  satgame::SweepAxis axis = axis_str == "heading" ? satgame::SweepAxis::heading
                                                  : satgame::SweepAxis::speed;
  double lo, hi;
  int n;
  if (axis == satgame::SweepAxis::heading) {
    lo = min_opt.value_or(-180.0);
    hi = max_opt.value_or(180.0);
    n = n_opt.value_or(121);
  } else {
    if (!sc.v_sweep && (!min_opt || !max_opt))
      throw satgame::ValidationError(
          {"speed sweep needs --min and --max, or a v_sweep range in the "
           "scenario file"});
    lo = min_opt.value_or(sc.v_sweep ? sc.v_sweep->first : 0.0);
    hi = max_opt.value_or(sc.v_sweep ? sc.v_sweep->second : 0.0);
    n = n_opt.value_or(15);
  }

  satgame::SweepResult res = satgame::run_sweep(sc, axis, lo, hi, n);
  if (out_csv) {
    std::ofstream f(*out_csv);
    if (!f) throw satgame::Error("cannot write " + *out_csv);
    satgame::write_sweep_csv(f, res);
    std::cout << "wrote " << *out_csv << "\n";
  }
  satgame::print_sweep(res, std::cout);
  return 0;
}

int run_regions(const std::string& path, const std::vector<double>& speeds,
                bool check, const std::string& prefix) {
  satgame::Scenario sc = satgame::load_scenario(path);
  satgame::RegionSet rs = satgame::compute_regions(sc, speeds);

  std::string csv = prefix + ".csv";
  std::string svg = prefix + ".svg";
  {
    std::ofstream f(csv);
    if (!f) throw satgame::Error("cannot write " + csv);
    satgame::write_regions_csv(f, rs);
  }
  {
    std::ofstream f(svg);
    if (!f) throw satgame::Error("cannot write " + svg);
    satgame::write_regions_svg(f, rs);
  }
  std::cout << "wrote " << csv << " and " << svg << "\n";

  if (check) {
    satgame::check_region_nesting(rs);
    std::cout << "nesting check passed: both regions shrink toward the "
                 "target as v_t grows\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sensor-attacker-target engagement workbench"};
  app.require_subcommand(1);

  std::string scenario_path;

  bool as_json = false;
  CLI::App* cmd_analyze =
      app.add_subcommand("analyze", "closed-form engagement analysis");
  cmd_analyze->add_option("scenario", scenario_path, "scenario JSON file")
      ->required();
  cmd_analyze->add_flag("--json", as_json, "emit the report as JSON");

  std::string policy_str;
  double dt = 1e-3;
  std::optional<std::string> out_prefix;
  CLI::App* cmd_simulate =
      app.add_subcommand("simulate", "time-stepped engagement run");
  cmd_simulate->add_option("scenario", scenario_path, "scenario JSON file")
      ->required();
  cmd_simulate
      ->add_option("--policy", policy_str,
                   "target policy: fixed:<degrees>, away-sensor, "
                   "away-attacker, toward-attacker, best-escape")
      ->required();
  cmd_simulate->add_option("--dt", dt, "integration step in seconds");
  cmd_simulate->add_option("--out-prefix", out_prefix,
                           "write <prefix>.csv and <prefix>.svg");

  std::string axis_str;
  std::optional<double> min_opt, max_opt;
  std::optional<int> n_opt;
  std::optional<std::string> sweep_out;
  CLI::App* cmd_sweep =
      app.add_subcommand("sweep", "grid study over a heading or speed axis");
  cmd_sweep->add_option("scenario", scenario_path, "scenario JSON file")
      ->required();
  cmd_sweep->add_option("--axis", axis_str, "sweep axis")
      ->required()
      ->check(CLI::IsMember({"heading", "speed"}));
  cmd_sweep->add_option("--min", min_opt, "axis start (deg or speed)");
  cmd_sweep->add_option("--max", max_opt, "axis end (deg or speed)");
  cmd_sweep->add_option("--n", n_opt, "number of grid cells");
  cmd_sweep->add_option("--out", sweep_out, "also write the table as CSV");

  std::vector<double> speeds;
  bool check_nesting = false;
  std::string regions_prefix = "regions";
  CLI::App* cmd_regions = app.add_subcommand(
      "regions", "escape and interception regions for several target speeds");
  cmd_regions->add_option("scenario", scenario_path, "scenario JSON file")
      ->required();
  cmd_regions
      ->add_option("--speeds", speeds, "comma separated target speeds")
      ->required()
      ->delimiter(',');
  cmd_regions->add_flag("--check", check_nesting,
                        "verify the regions nest as v_t grows");
  cmd_regions->add_option("--out-prefix", regions_prefix,
                          "output prefix for <prefix>.csv / <prefix>.svg");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (app.got_subcommand(cmd_analyze))
      return run_analyze(scenario_path, as_json);
    if (app.got_subcommand(cmd_simulate))
      return run_simulate(scenario_path, policy_str, dt, out_prefix);
    if (app.got_subcommand(cmd_sweep))
      return run_sweep_cmd(scenario_path, axis_str, min_opt, max_opt, n_opt,
                           sweep_out);
    if (app.got_subcommand(cmd_regions))
      return run_regions(scenario_path, speeds, check_nesting, regions_prefix);
  } catch (const satgame::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const satgame::DegenerateGeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const satgame::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
