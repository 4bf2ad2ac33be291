#include "satgame/simulation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "satgame/detail/text.hpp"
#include "satgame/errors.hpp"

namespace satgame {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr size_t kMaxTrajectorySamples = 1u << 19;

struct Mover {
  double x, y, vx, vy;
  Point2 at(double t) const { return {x + vx * t, y + vy * t}; }
};

Mover make_mover(const Point2& p, Heading h, double speed) {
  return {p.x, p.y, speed * std::cos(h.radians()),
          speed * std::sin(h.radians())};
}

// Squared separation between two straight-line movers, which is exactly
// |dp + dv t|^2: a single quadratic valid for the whole run.
struct PairTrack {
  double px, py, vx, vy;

  PairTrack(const Mover& a, const Mover& b)
      : px(a.x - b.x), py(a.y - b.y), vx(a.vx - b.vx), vy(a.vy - b.vy) {}

  double sq(double t) const {
    double dx = px + vx * t, dy = py + vy * t;
    return dx * dx + dy * dy;
  }
  double dot_pv() const { return px * vx + py * vy; }
  double vv() const { return vx * vx + vy * vy; }
  double dsq(double t) const { return 2.0 * (dot_pv() + vv() * t); }

  // Unclamped time of minimum separation; callers clamp into their window.
  double vertex() const {
    double a = vv();
    return a > 0.0 ? -dot_pv() / a : 0.0;
  }
};

// Earliest t in [ta, tb] with sq(t) == thr2, given that the window minimum
// dips to thr2 or below. Exact roots of the step quadratic.
double capture_event_time(const PairTrack& at, double ta, double tb,
                          double thr2) {
  double a = at.vv();
  if (a <= 0.0) return ta;  // co-moving at equal velocity: already inside
  double bh = at.dot_pv() / a;
  double c = (at.px * at.px + at.py * at.py - thr2) / a;
  // The window minimum is at or below thr2, so the roots are real; only
  // rounding can push the discriminant a hair negative.
  double disc = bh * bh - c;
  assert(disc >= -1e-12 * (1.0 + bh * bh));
  disc = std::max(disc, 0.0);
  return std::clamp(-bh - std::sqrt(disc), ta, tb);
}

// First t in (ta, tb] where sq reaches r2 from below: linear interpolation
// between the endpoint residuals, then one Newton step on the quadratic.
double escape_event_time(const PairTrack& st, double ta, double tb, double r2) {
  double f0 = st.sq(ta) - r2;  // < 0
  double f1 = st.sq(tb) - r2;  // >= 0
  double t = f1 > f0 ? ta + (tb - ta) * (-f0) / (f1 - f0) : tb;
  double slope = st.dsq(t);
  if (std::abs(slope) > 1e-300) t -= (st.sq(t) - r2) / slope;
  return std::clamp(t, ta, tb);
}

void validate_params(const SimulationParams& p) {
  std::vector<std::string> bad;
  if (!std::isfinite(p.dt) || p.dt <= 0.0)
    bad.push_back("dt must be a positive finite step, got " + detail::num(p.dt));
  if (!std::isfinite(p.capture_tol) || p.capture_tol < 0.0)
    bad.push_back("capture_tol must be nonnegative and finite, got " +
                  detail::num(p.capture_tol));
  if (!std::isfinite(p.max_time) || p.max_time <= 0.0)
    bad.push_back("max_time must be positive and finite, got " +
                  detail::num(p.max_time));
  if (!bad.empty()) throw ValidationError(std::move(bad));
}

}  // namespace

const char* to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::capture: return "capture";
    case OutcomeKind::escape: return "escape";
    case OutcomeKind::timeout: return "timeout";
  }
  return "?";
}

EngagementOutcome simulate(const EngagementConfig& cfg,
                           const StrategyAssignment& strat,
                           const SimulationParams& par) {
  ensure_valid(cfg);
  validate_params(par);

  Mover s = make_mover(cfg.s0, strat.gamma_s, cfg.v_s);
  Mover a = make_mover(cfg.a0, strat.gamma_a, cfg.v_a);
  Mover t = make_mover(cfg.t0, strat.gamma_t, cfg.v_t);
  PairTrack at(a, t), st(s, t);

  const double r2 = cfg.r * cfg.r;
  const double tol2 = par.capture_tol * par.capture_tol;

  EngagementOutcome out;
  Trajectory& traj = out.trajectory;

  auto record = [&](double tk) {
    traj.times.push_back(tk);
    traj.s.push_back(s.at(tk));
    traj.a.push_back(a.at(tk));
    traj.t.push_back(t.at(tk));
  };
  auto thin_if_full = [&] {
    if (traj.times.size() < kMaxTrajectorySamples) return;
    size_t w = 0;
    for (size_t rd = 0; rd < traj.times.size(); rd += 2, ++w) {
      traj.times[w] = traj.times[rd];
      traj.s[w] = traj.s[rd];
      traj.a[w] = traj.a[rd];
      traj.t[w] = traj.t[rd];
    }
    traj.times.resize(w);
    traj.s.resize(w);
    traj.a.resize(w);
    traj.t.resize(w);
    traj.stride *= 2;
  };

  for (long k = 0;; ++k) {
    double ta = k * par.dt;
    if (ta >= par.max_time) {
      out.kind = OutcomeKind::timeout;
      out.t_final = par.max_time;
      break;
    }
    double tb = std::min(ta + par.dt, par.max_time);
    if (k % traj.stride == 0) {
      record(ta);
      thin_if_full();
    }

    double cap_t = kInf;
    double tv = std::clamp(at.vertex(), ta, tb);
    if (at.sq(tv) <= tol2) cap_t = capture_event_time(at, ta, tb, tol2);

    double esc_t = kInf;
    if (st.sq(tb) >= r2) esc_t = escape_event_time(st, ta, tb, r2);

    if (cap_t <= esc_t && cap_t < kInf) {
      out.kind = OutcomeKind::capture;
      out.t_final = cap_t;
      out.tie = cap_t == esc_t;
      break;
    }
    if (esc_t < kInf) {
      out.kind = OutcomeKind::escape;
      out.t_final = esc_t;
      break;
    }
  }

  if (traj.times.empty() || traj.times.back() < out.t_final)
    record(out.t_final);
  out.terminal_point = t.at(out.t_final);
  return out;
}

double oracle_escape_time(const EngagementConfig& cfg, Heading gamma_t,
                          const SimulationParams& par) {
  validate_params(par);
  DerivedGeometry g = derive_geometry(cfg);
  Mover s = make_mover(cfg.s0, sensor_heading(g, cfg, gamma_t), cfg.v_s);
  Mover t = make_mover(cfg.t0, gamma_t, cfg.v_t);
  PairTrack st(s, t);
  const double r2 = cfg.r * cfg.r;

  for (long k = 0;; ++k) {
    double ta = k * par.dt;
    if (ta >= par.max_time)
      throw Error("sensing boundary not reached within max_time");
    double tb = std::min(ta + par.dt, par.max_time);
    if (st.sq(tb) >= r2) return escape_event_time(st, ta, tb, r2);
  }
}

InterceptionResult oracle_interception(const EngagementConfig& cfg,
                                       Heading gamma_t,
                                       const SimulationParams& par) {
  validate_params(par);
  DerivedGeometry g = derive_geometry(cfg);
  Mover a = make_mover(cfg.a0, attacker_heading(g, gamma_t), cfg.v_a);
  Mover t = make_mover(cfg.t0, gamma_t, cfg.v_t);
  PairTrack at(a, t);
  const double tol2 = par.capture_tol * par.capture_tol;

  double best_t = 0.0;
  double best_sq = at.sq(0.0);
  for (long k = 0;; ++k) {
    double ta = k * par.dt;
    double tb = std::min(ta + par.dt, par.max_time);
    double tv = std::clamp(at.vertex(), ta, tb);
    double sv = at.sq(tv);
    if (sv < best_sq) {
      best_sq = sv;
      best_t = tv;
    }
    if (sv <= tol2) break;        // inside the capture ball
    if (at.dsq(tb) > 0.0) break;  // separation growing: past closest approach
    if (tb >= par.max_time) break;
  }
  return {best_t, std::sqrt(best_sq)};
}

}  // namespace satgame
