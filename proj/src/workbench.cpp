#include "satgame/workbench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "satgame/detail/text.hpp"
#include "satgame/errors.hpp"
#include "satgame/svg.hpp"

namespace satgame {

namespace {

using detail::num;

const char* status_name(TangentSpeedStatus s) {
  switch (s) {
    case TangentSpeedStatus::selected: return "selected";
    case TangentSpeedStatus::both_roots_in_bracket: return "both-roots-in-bracket";
    case TangentSpeedStatus::no_real_root: return "no-real-root";
    case TangentSpeedStatus::no_root_in_bracket: return "no-root-in-bracket";
  }
  return "?";
}

// Runs fn(0..n-1) across a small worker pool. Cells must be independent; the
// first exception (if any) is rethrown after everyone drains.
template <class Fn>
void parallel_cells(int n, Fn&& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  unsigned workers = std::min<unsigned>(hw ? hw : 1u, static_cast<unsigned>(n));
  if (workers < 2) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (int i; (i = next.fetch_add(1)) < n;) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

struct Bounds {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void take(const Point2& p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  void take(const std::vector<Point2>& pts) {
    for (const auto& p : pts) take(p);
  }
  void take_circle(const ApolloniusCircle& c) {
    take({c.center.x - c.radius, c.center.y - c.radius});
    take({c.center.x + c.radius, c.center.y + c.radius});
  }
  void pad(double frac) {
    double dx = std::max(max_x - min_x, 1e-6) * frac;
    double dy = std::max(max_y - min_y, 1e-6) * frac;
    min_x -= dx; max_x += dx;
    min_y -= dy; max_y += dy;
  }
};

std::vector<Point2> thin_points(const std::vector<Point2>& in, size_t cap) {
  if (in.size() <= cap) return in;
  std::vector<Point2> out;
  size_t stride = (in.size() + cap - 1) / cap;
  out.reserve(in.size() / stride + 2);
  for (size_t i = 0; i < in.size(); i += stride) out.push_back(in[i]);
  const Point2& last = in.back();
  if (out.back().x != last.x || out.back().y != last.y) out.push_back(last);
  return out;
}

std::vector<Point2> boundary_points(const SensableBoundary& b) {
  std::vector<Point2> pts;
  pts.reserve(b.samples.size());
  for (const auto& s : b.samples) pts.push_back(s.boundary_point);
  return pts;
}

constexpr const char* kSensorColor = "#1f77b4";
constexpr const char* kAttackerColor = "#d62728";
constexpr const char* kTargetColor = "#2ca02c";

const char* region_color(size_t i) {
  static constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                             "#9467bd", "#ff7f0e", "#8c564b"};
  return kPalette[i % (sizeof kPalette / sizeof kPalette[0])];
}

}  // namespace

AnalyzeReport analyze(const Scenario& sc) {
  AnalyzeReport r;
  r.config = sc.config;
  r.geom = derive_geometry(sc.config);
  r.min_escape_sol = min_escape(r.geom, sc.config);
  r.circle = apollonius(r.geom, sc.config);
  r.containment = capture_guaranteed(r.geom, sc.config, sc.boundary_samples);
  r.containment_samples = sc.boundary_samples;
  r.bounds = speed_bounds(sc.config);
  r.admissibility_lhs = 2.0 * (sc.config.r - r.geom.d_st0) / r.geom.d_at0;
  r.admissibility_rhs = 1.0 - sc.config.v_s / sc.config.v_a;
  r.tangent = tangent_escape_speed(sc.config);
  if (r.bounds.admissible) {
    try {
      r.critical = critical_speed(sc.config, 1e-4, sc.boundary_samples);
    } catch (const BracketError& e) {
      r.critical_note = e.what();
    }
  } else {
    r.critical_note =
        "skipped: speed window not admissible, the stern-chase bound would "
        "meet or exceed v_a";
  }
  return r;
}

nlohmann::json report_to_json(const AnalyzeReport& r) {
  using nlohmann::json;
  json j;
  j["config"] = {{"s0", {r.config.s0.x, r.config.s0.y}},
                 {"a0", {r.config.a0.x, r.config.a0.y}},
                 {"t0", {r.config.t0.x, r.config.t0.y}},
                 {"v_s", r.config.v_s},
                 {"v_t", r.config.v_t},
                 {"v_a", r.config.v_a},
                 {"r", r.config.r}};
  j["geometry"] = {{"d_st0", r.geom.d_st0},
                   {"d_at0", r.geom.d_at0},
                   {"theta_st0_deg", r.geom.theta_st0.degrees()},
                   {"theta_at0_deg", r.geom.theta_at0.degrees()},
                   {"nu", r.geom.nu},
                   {"mu", r.geom.mu}};
  j["min_escape"] = {{"distance", r.min_escape_sol.escape_distance},
                     {"time", r.min_escape_sol.escape_time},
                     {"heading_deg", r.geom.theta_st0.degrees()},
                     {"point", {r.min_escape_sol.escape_point.x,
                                r.min_escape_sol.escape_point.y}}};
  j["apollonius"] = {{"center", {r.circle.center.x, r.circle.center.y}},
                     {"radius", r.circle.radius}};
  j["containment"] = {{"contained", r.containment.contained},
                      {"worst_margin", r.containment.worst_margin},
                      {"worst_heading_deg", r.containment.worst_heading.degrees()},
                      {"samples", r.containment_samples}};
  j["speed_bounds"] = {
      {"v_lower", r.bounds.v_lower},
      {"v_upper", r.bounds.v_upper ? nlohmann::json(*r.bounds.v_upper)
                                   : nlohmann::json(nullptr)},
      {"admissible", r.bounds.admissible},
      {"condition_lhs", r.admissibility_lhs},
      {"condition_rhs", r.admissibility_rhs}};
  j["critical_speed"] =
      r.critical ? nlohmann::json(*r.critical) : nlohmann::json(nullptr);
  if (!r.critical_note.empty()) j["critical_note"] = r.critical_note;

  json t;
  t["d_ratio"] = r.tangent.quad.d_ratio;
  t["p_theta"] = r.tangent.quad.p_theta;
  t["q_theta"] = r.tangent.quad.q_theta;
  t["a"] = r.tangent.quad.a;
  t["b"] = r.tangent.quad.b;
  t["c"] = r.tangent.quad.c;
  t["roots"] = r.tangent.root_low
                   ? nlohmann::json({*r.tangent.root_low, *r.tangent.root_high})
                   : nlohmann::json(nullptr);
  t["literal_roots"] =
      r.tangent.literal_root_low
          ? nlohmann::json({*r.tangent.literal_root_low, *r.tangent.literal_root_high})
          : nlohmann::json(nullptr);
  t["selected"] = r.tangent.selected ? nlohmann::json(*r.tangent.selected)
                                     : nlohmann::json(nullptr);
  t["status"] = status_name(r.tangent.status);
  j["tangent_speed"] = std::move(t);
  return j;
}

void print_report(const AnalyzeReport& r, std::ostream& os) {
  auto pt = [](const Point2& p) {
    return "(" + num(p.x, 9) + ", " + num(p.y, 9) + ")";
  };
  os << "scenario\n";
  os << "  sensor   " << pt(r.config.s0) << "   v_s " << num(r.config.v_s, 9) << "\n";
  os << "  attacker " << pt(r.config.a0) << "   v_a " << num(r.config.v_a, 9) << "\n";
  os << "  target   " << pt(r.config.t0) << "   v_t " << num(r.config.v_t, 9) << "\n";
  os << "  sensing radius " << num(r.config.r, 9) << "\n";
  os << "derived geometry\n";
  os << "  d_st0 " << num(r.geom.d_st0, 9) << "   theta_st0 "
     << num(r.geom.theta_st0.degrees(), 9) << " deg\n";
  os << "  d_at0 " << num(r.geom.d_at0, 9) << "   theta_at0 "
     << num(r.geom.theta_at0.degrees(), 9) << " deg\n";
  os << "  nu " << num(r.geom.nu, 9) << "   mu " << num(r.geom.mu, 9) << "\n";
  os << "min escape (straight away from the sensor)\n";
  os << "  distance " << num(r.min_escape_sol.escape_distance, 9) << "   time "
     << num(r.min_escape_sol.escape_time, 9) << " s   exit point "
     << pt(r.min_escape_sol.escape_point) << "\n";
  os << "interception circle\n";
  os << "  center " << pt(r.circle.center) << "   radius "
     << num(r.circle.radius, 9) << "\n";
  os << "containment (" << r.containment_samples << " samples)\n";
  os << "  " << (r.containment.contained ? "contained: capture guaranteed"
                                         : "breached: escape heading exists")
     << "   worst margin " << num(r.containment.worst_margin, 9) << " on ray "
     << num(r.containment.worst_heading.degrees(), 9) << " deg\n";
  os << "speed window\n";
  os << "  v_lower " << num(r.bounds.v_lower, 9) << "   v_upper "
     << (r.bounds.v_upper ? num(*r.bounds.v_upper, 9) : std::string("n/a"))
     << "   admissible " << (r.bounds.admissible ? "yes" : "no") << "\n";
  os << "  admissibility: 2(r - d_st0)/d_at0 = " << num(r.admissibility_lhs, 9)
     << (r.admissibility_lhs < r.admissibility_rhs ? " < " : " >= ")
     << "1 - v_s/v_a = " << num(r.admissibility_rhs, 9) << "\n";
  os << "critical speed\n";
  if (r.critical)
    os << "  " << num(*r.critical, 9) << "   (bisection over the speed window)\n";
  else
    os << "  " << r.critical_note << "\n";
  os << "tangency speeds\n";
  os << "  quadratic a " << num(r.tangent.quad.a, 9) << "  b "
     << num(r.tangent.quad.b, 9) << "  c " << num(r.tangent.quad.c, 9) << "\n";
  if (r.tangent.root_low)
    os << "  roots " << num(*r.tangent.root_low, 9) << " / "
       << num(*r.tangent.root_high, 9) << "   status "
       << status_name(r.tangent.status) << "\n";
  else
    os << "  no real roots\n";
  if (r.tangent.selected)
    os << "  selected " << num(*r.tangent.selected, 9) << "\n";
  if (r.tangent.literal_root_low)
    os << "  plain-cosine diagnostic roots " << num(*r.tangent.literal_root_low, 9)
       << " / " << num(*r.tangent.literal_root_high, 9) << "\n";
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
  os << kTrajectoryCsvHeader << "\n";
  size_t n = tr.times.size();
  if (n == 0) return;
  size_t stride = n > 20000 ? (n + 19999) / 20000 : 1;
  auto row = [&](size_t i) {
    os << num(tr.times[i], 12) << ',' << num(tr.s[i].x, 10) << ','
       << num(tr.s[i].y, 10) << ',' << num(tr.a[i].x, 10) << ','
       << num(tr.a[i].y, 10) << ',' << num(tr.t[i].x, 10) << ','
       << num(tr.t[i].y, 10) << '\n';
  };
  size_t last_written = 0;
  for (size_t i = 0; i < n; i += stride) {
    row(i);
    last_written = i;
  }
  if (last_written != n - 1) row(n - 1);
}

SimulateRun run_simulation(const Scenario& sc, const TargetPolicy& pol,
                           double dt,
                           const std::optional<std::string>& out_prefix) {
  DerivedGeometry g = derive_geometry(sc.config);
  SimulationParams par;
  par.dt = dt;

  SimulateRun run;
  run.assignment = make_assignment(pol, g, sc.config);
  run.outcome = simulate(sc.config, run.assignment, par);

  if (out_prefix) {
    std::filesystem::path csv = *out_prefix + ".csv";
    std::filesystem::path svg = *out_prefix + ".svg";
    std::ofstream fc(csv);
    if (!fc) throw Error("cannot write " + csv.string());
    write_trajectory_csv(fc, run.outcome.trajectory);
    std::ofstream fs(svg);
    if (!fs) throw Error("cannot write " + svg.string());
    write_run_svg(fs, sc.config, run.outcome);
    run.csv_path = csv;
    run.svg_path = svg;
  }
  return run;
}

SweepResult run_sweep(const Scenario& sc, SweepAxis axis, double lo, double hi,
                      int n) {
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw ValidationError({"sweep range must be finite"});
  if (hi < lo)
    throw ValidationError({"sweep range must have min <= max, got [" +
                           num(lo) + ", " + num(hi) + "]"});
  if (n < 1) throw ValidationError({"sweep needs at least one cell"});
  if (hi == lo) n = 1;

  const DerivedGeometry g = derive_geometry(sc.config);
  const SimulationParams params;

  SweepResult out;
  out.axis = axis;
  out.cells.resize(static_cast<size_t>(n));
  parallel_cells(n, [&](int i) {
    double v = n == 1 ? lo : lo + (hi - lo) * i / (n - 1.0);
    SweepCell& cell = out.cells[static_cast<size_t>(i)];
    cell.value = v;
    if (axis == SweepAxis::heading) {
      Heading gamma = Heading::from_degrees(v);
      cell.worst_margin = std::numeric_limits<double>::quiet_NaN();
      cell.escape_distance =
          escape_distance(g, sc.config, gamma).escape_distance;
      StrategyAssignment strat{sensor_heading(g, sc.config, gamma),
                               attacker_heading(g, gamma), gamma};
      EngagementOutcome o = simulate(sc.config, strat, params);
      cell.kind = o.kind;
      cell.t_final = o.t_final;
    } else {
      cell.escape_distance = std::numeric_limits<double>::quiet_NaN();
      if (!(v > sc.config.v_s && v < sc.config.v_a)) {
        cell.valid = false;
        cell.t_final = std::numeric_limits<double>::quiet_NaN();
        cell.worst_margin = std::numeric_limits<double>::quiet_NaN();
        return;
      }
      EngagementConfig probe = with_target_speed(sc.config, v);
      DerivedGeometry pg = derive_geometry(probe);
      cell.worst_margin =
          capture_guaranteed(pg, probe, sc.boundary_samples).worst_margin;
      StrategyAssignment strat =
          make_assignment(TargetPolicy::best_escape(), pg, probe);
      EngagementOutcome o = simulate(probe, strat, params);
      cell.kind = o.kind;
      cell.t_final = o.t_final;
    }
  });
  return out;
}

void write_sweep_csv(std::ostream& os, const SweepResult& r) {
  if (r.axis == SweepAxis::heading) {
    os << "heading_deg,outcome,t_final,escape_distance\n";
    for (const auto& c : r.cells)
      os << num(c.value, 10) << ',' << to_string(c.kind) << ','
         << num(c.t_final, 10) << ',' << num(c.escape_distance, 10) << '\n';
  } else {
    os << "v_t,valid,outcome,t_final,worst_margin\n";
    for (const auto& c : r.cells)
      os << num(c.value, 10) << ',' << (c.valid ? "yes" : "no") << ','
         << (c.valid ? to_string(c.kind) : "skipped") << ','
         << num(c.t_final, 10) << ',' << num(c.worst_margin, 10) << '\n';
  }
}

void print_sweep(const SweepResult& r, std::ostream& os) {
  if (r.axis == SweepAxis::heading) {
    os << "heading_deg   outcome   t_final        escape_distance\n";
    for (const auto& c : r.cells)
      os << num(c.value, 8) << "   " << to_string(c.kind) << "   "
         << num(c.t_final, 8) << "   " << num(c.escape_distance, 8) << "\n";
  } else {
    os << "v_t        outcome   t_final       worst_margin\n";
    for (const auto& c : r.cells)
      os << num(c.value, 8) << "   " << (c.valid ? to_string(c.kind) : "skipped")
         << "   " << num(c.t_final, 8) << "   " << num(c.worst_margin, 8)
         << "\n";
    // Flag the capture -> escape transition when the grid brackets one.
    for (size_t i = 1; i < r.cells.size(); ++i) {
      const auto& a = r.cells[i - 1];
      const auto& b = r.cells[i];
      if (a.valid && b.valid && a.kind == OutcomeKind::capture &&
          b.kind == OutcomeKind::escape) {
        os << "outcome flips between v_t = " << num(a.value, 8) << " and "
           << num(b.value, 8) << "\n";
        break;
      }
    }
  }
}

RegionSet compute_regions(const Scenario& sc,
                          const std::vector<double>& speeds) {
  if (speeds.empty())
    throw ValidationError({"regions: need at least one target speed"});
  std::vector<std::string> bad;
  for (double v : speeds)
    if (!(std::isfinite(v) && v > sc.config.v_s && v < sc.config.v_a))
      bad.push_back("target speed " + num(v) +
                    " outside the open interval (v_s, v_a) = (" +
                    num(sc.config.v_s) + ", " + num(sc.config.v_a) + ")");
  if (!bad.empty()) throw ValidationError(std::move(bad));

  RegionSet rs;
  rs.base = sc.config;
  rs.speeds = speeds;
  for (double v : speeds) {
    EngagementConfig probe = with_target_speed(sc.config, v);
    DerivedGeometry g = derive_geometry(probe);
    rs.sensable.push_back(sensable_boundary(g, probe, sc.boundary_samples));
    rs.circles.push_back(apollonius(g, probe));
  }
  return rs;
}

void check_region_nesting(const RegionSet& rs) {
  std::vector<size_t> order(rs.speeds.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return rs.speeds[a] < rs.speeds[b]; });

  for (size_t k = 1; k < order.size(); ++k) {
    size_t slow = order[k - 1], fast = order[k];
    const auto& bs = rs.sensable[slow].samples;
    const auto& bf = rs.sensable[fast].samples;
    for (size_t i = 0; i < bs.size(); ++i) {
      double tol = 1e-9 * (1.0 + std::abs(bs[i].escape_distance));
      if (bf[i].escape_distance > bs[i].escape_distance + tol)
        throw Error("sensable boundary failed to shrink between v_t=" +
                    num(rs.speeds[slow]) + " and v_t=" + num(rs.speeds[fast]) +
                    " on ray " + num(bs[i].heading.degrees()) + " deg");
    }
    const auto& cs = rs.circles[slow];
    const auto& cf = rs.circles[fast];
    double slackc = 1e-9 * (1.0 + cf.radius);
    if (distance(cs.center, cf.center) + cs.radius > cf.radius + slackc)
      throw Error("interception circles failed to nest between v_t=" +
                  num(rs.speeds[slow]) + " and v_t=" + num(rs.speeds[fast]));
  }
}

void write_regions_csv(std::ostream& os, const RegionSet& rs) {
  os << "region,v_t,angle_deg,x,y\n";
  for (size_t i = 0; i < rs.speeds.size(); ++i) {
    for (const auto& s : rs.sensable[i].samples)
      os << "sensable," << num(rs.speeds[i], 10) << ','
         << num(s.heading.degrees(), 10) << ',' << num(s.boundary_point.x, 10)
         << ',' << num(s.boundary_point.y, 10) << '\n';
    size_t n = rs.sensable[i].samples.size();
    const auto& c = rs.circles[i];
    for (size_t k = 0; k < n; ++k) {
      double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
      os << "interception," << num(rs.speeds[i], 10) << ','
         << num(phi * 180.0 / kPi, 10) << ','
         << num(c.center.x + c.radius * std::cos(phi), 10) << ','
         << num(c.center.y + c.radius * std::sin(phi), 10) << '\n';
    }
  }
}

void write_regions_svg(std::ostream& os, const RegionSet& rs) {
  Bounds box;
  box.take(rs.base.s0);
  box.take(rs.base.a0);
  box.take(rs.base.t0);
  for (size_t i = 0; i < rs.speeds.size(); ++i) {
    box.take(boundary_points(rs.sensable[i]));
    box.take_circle(rs.circles[i]);
  }
  box.pad(0.08);

  SvgCanvas canvas(box.min_x, box.min_y, box.max_x, box.max_y);
  for (size_t i = 0; i < rs.speeds.size(); ++i) {
    canvas.ring(boundary_points(rs.sensable[i]), region_color(i), 1.6);
    canvas.circle(rs.circles[i].center, rs.circles[i].radius, region_color(i),
                  1.6, /*dashed=*/true);
    canvas.label(10, 16 + 16 * static_cast<double>(i),
                 "v_t = " + num(rs.speeds[i], 6) +
                     "  (solid: sensable boundary, dashed: interception circle)",
                 region_color(i));
  }
  canvas.marker(rs.base.s0, kSensorColor);
  canvas.marker(rs.base.a0, kAttackerColor);
  canvas.marker(rs.base.t0, kTargetColor);
  canvas.write(os);
}

void write_run_svg(std::ostream& os, const EngagementConfig& cfg,
                   const EngagementOutcome& out) {
  const Trajectory& tr = out.trajectory;
  const int kOverlaySamples = 256;

  DerivedGeometry g0 = derive_geometry(cfg);
  SensableBoundary b0 = sensable_boundary(g0, cfg, kOverlaySamples);
  ApolloniusCircle c0 = apollonius(g0, cfg);

  // End-of-run overlays are rebuilt from raw final positions. These can be
  // degenerate on purpose (escape puts the target exactly on the range
  // boundary, capture puts the attacker on the target), so this path uses the
  // clamped scalar escape root and skips anything without a line of sight.
  std::vector<Point2> final_boundary;
  ApolloniusCircle cf;
  bool have_final_circle = false;
  if (!tr.times.empty()) {
    Point2 sf = tr.s.back(), af = tr.a.back(), tf = tr.t.back();
    double dst = distance(sf, tf);
    if (dst > kCoincidenceTol) {
      double nu = cfg.v_s / cfg.v_t;
      Heading th_st = los_angle(sf, tf);
      final_boundary.reserve(kOverlaySamples);
      for (int k = 1; k <= kOverlaySamples; ++k) {
        Heading gm(-kPi + kTwoPi * k / kOverlaySamples);
        double L = detail::escape_root(
            dst, cfg.r, nu, std::cos(angular_difference(gm, th_st)));
        final_boundary.push_back(point_along(tf, gm, L));
      }
    }
    double mu = cfg.v_t / cfg.v_a;
    double f = mu * mu / (1.0 - mu * mu);
    cf.center = tf + f * (tf - af);
    cf.radius = mu * distance(af, tf) / (1.0 - mu * mu);
    have_final_circle = true;
  }

  Bounds box;
  box.take(tr.s);
  box.take(tr.a);
  box.take(tr.t);
  box.take(boundary_points(b0));
  box.take_circle(c0);
  if (!final_boundary.empty()) box.take(final_boundary);
  if (have_final_circle) box.take_circle(cf);
  box.pad(0.08);

  SvgCanvas canvas(box.min_x, box.min_y, box.max_x, box.max_y);
  canvas.ring(boundary_points(b0), kSensorColor, 1.2, /*dashed=*/true);
  canvas.circle(c0.center, c0.radius, kAttackerColor, 1.2, /*dashed=*/true);
  if (!final_boundary.empty()) canvas.ring(final_boundary, kSensorColor, 1.6);
  if (have_final_circle)
    canvas.circle(cf.center, cf.radius, kAttackerColor, 1.6);

  canvas.polyline(thin_points(tr.s, 1500), kSensorColor, 2.0);
  canvas.polyline(thin_points(tr.a, 1500), kAttackerColor, 2.0);
  canvas.polyline(thin_points(tr.t, 1500), kTargetColor, 2.0);

  canvas.marker(cfg.s0, kSensorColor);
  canvas.marker(cfg.a0, kAttackerColor);
  canvas.marker(cfg.t0, kTargetColor);
  if (!tr.times.empty()) {
    canvas.cross(tr.s.back(), kSensorColor);
    canvas.cross(tr.a.back(), kAttackerColor);
    canvas.cross(tr.t.back(), kTargetColor);
  }
  canvas.label(10, 16,
               std::string(to_string(out.kind)) +
                   " at t = " + num(out.t_final, 8) + " s",
               "#000000");
  canvas.label(10, 32, "sensor", kSensorColor);
  canvas.label(70, 32, "attacker", kAttackerColor);
  canvas.label(145, 32, "target", kTargetColor);
  canvas.write(os);
}

}  // namespace satgame
