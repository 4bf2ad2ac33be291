#include <doctest.h>

#include <string>

#include "satgame/engagement.hpp"
#include "satgame/errors.hpp"
#include "test_support.hpp"

using namespace satgame;
using doctest::Approx;

namespace {

bool mentions(const std::vector<std::string>& issues, const char* phrase) {
  for (const auto& msg : issues)
    if (msg.find(phrase) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("worked examples validate cleanly") {
  CHECK(validate(testsup::tab1_config()).empty());
  CHECK(validate(testsup::thm2_config()).empty());
  CHECK(validate(testsup::thm3_config()).empty());
}

TEST_CASE("validation reports every violated rule at once") {
  EngagementConfig cfg = testsup::tab1_config();
  cfg.v_t = 0.05;  // below the sensor speed
  cfg.r = -1.0;
  auto issues = validate(cfg);
  CHECK(issues.size() >= 2);
  CHECK(mentions(issues, "strictly ordered"));
  CHECK(mentions(issues, "radius"));
  CHECK_THROWS_AS(ensure_valid(cfg), ValidationError);
}

TEST_CASE("target outside sensing range is rejected") {
  EngagementConfig cfg = testsup::tab1_config();
  cfg.t0 = {5.0, 5.0};
  CHECK(mentions(validate(cfg), "inside sensing range"));
}

TEST_CASE("coincident positions are rejected") {
  EngagementConfig cfg = testsup::tab1_config();
  cfg.a0 = cfg.t0;
  CHECK(mentions(validate(cfg), "attacker and target"));

  cfg = testsup::tab1_config();
  cfg.s0 = cfg.t0;
  CHECK(mentions(validate(cfg), "sensor and target"));
}

TEST_CASE("derived geometry of the slow-sensor example") {
  DerivedGeometry g = derive_geometry(testsup::tab1_config());
  CHECK(g.d_st0 == Approx(1.7677669529663689).epsilon(1e-12));
  CHECK(g.d_at0 == Approx(1.7677669529663689).epsilon(1e-12));
  CHECK(g.theta_st0.degrees() == Approx(45.0).epsilon(1e-12));
  CHECK(g.theta_at0.degrees() == Approx(-81.86989764584403).epsilon(1e-12));
  CHECK(g.nu == Approx(0.125 / 0.35).epsilon(1e-15));
  CHECK(g.mu == Approx(0.35).epsilon(1e-15));
}

TEST_CASE("derived geometry of the side-attacker example") {
  DerivedGeometry g = derive_geometry(testsup::thm2_config());
  CHECK(g.d_st0 == Approx(1.118033988749895).epsilon(1e-12));
  CHECK(g.d_at0 == Approx(3.0413812651491097).epsilon(1e-12));
  CHECK(g.theta_st0.degrees() == Approx(26.56505117707799).epsilon(1e-12));
  CHECK(g.theta_at0.degrees() == Approx(-9.462322208025617).epsilon(1e-12));
}

TEST_CASE("speed ratios stay inside (0, 1) for random configs") {
  testsup::Rng rng(20260814u);
  for (int i = 0; i < 200; ++i) {
    EngagementConfig cfg = testsup::random_config(rng);
    DerivedGeometry g = derive_geometry(cfg);
    CHECK(g.nu > 0.0);
    CHECK(g.nu < 1.0);
    CHECK(g.mu > 0.0);
    CHECK(g.mu < 1.0);
    CHECK(g.d_st0 < cfg.r);
  }
}

TEST_CASE("with_target_speed swaps exactly one field") {
  EngagementConfig base = testsup::thm3_config();
  EngagementConfig probe = with_target_speed(base, 0.5);
  CHECK(probe.v_t == 0.5);
  CHECK(probe.v_s == base.v_s);
  CHECK(probe.v_a == base.v_a);
  CHECK(probe.t0.x == base.t0.x);
  CHECK(probe.r == base.r);
}
