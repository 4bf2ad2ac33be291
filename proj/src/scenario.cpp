#include "satgame/scenario.hpp"

#include <fstream>

#include "satgame/errors.hpp"

namespace satgame {

using nlohmann::json;

Scenario parse_scenario(const json& j) {
  std::vector<std::string> bad;
  if (!j.is_object()) throw ValidationError({"scenario must be a JSON object"});

  auto get_point = [&](const char* key, Point2& out) {
    if (!j.contains(key)) {
      bad.push_back(std::string(key) + ": missing");
      return;
    }
    const json& v = j.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number()) {
      bad.push_back(std::string(key) + ": expected [x, y] with two numbers");
      return;
    }
    out = Point2(v[0].get<double>(), v[1].get<double>());
  };
  auto get_number = [&](const char* key, double& out) {
    if (!j.contains(key)) {
      bad.push_back(std::string(key) + ": missing");
      return;
    }
    const json& v = j.at(key);
    if (!v.is_number()) {
      bad.push_back(std::string(key) + ": expected a number");
      return;
    }
    out = v.get<double>();
  };

  Scenario sc;
  get_point("s0", sc.config.s0);
  get_point("a0", sc.config.a0);
  get_point("t0", sc.config.t0);
  get_number("v_s", sc.config.v_s);
  get_number("v_t", sc.config.v_t);
  get_number("v_a", sc.config.v_a);
  get_number("r", sc.config.r);

  if (j.contains("policy")) {
    const json& v = j.at("policy");
    if (!v.is_string()) {
      bad.push_back("policy: expected a string");
    } else if (auto p = parse_policy(v.get<std::string>())) {
      sc.policy = *p;
    } else {
      bad.push_back("policy: unrecognized \"" + v.get<std::string>() +
                    "\" (use fixed:<degrees>, away-sensor, away-attacker, "
                    "toward-attacker or best-escape)");
    }
  }

  if (j.contains("v_sweep")) {
    const json& v = j.at("v_sweep");
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number() || !(v[0].get<double>() <= v[1].get<double>())) {
      bad.push_back("v_sweep: expected [lo, hi] with lo <= hi");
    } else {
      sc.v_sweep = {v[0].get<double>(), v[1].get<double>()};
    }
  }

  if (j.contains("boundary_samples")) {
    const json& v = j.at("boundary_samples");
    if (!v.is_number_integer() || v.get<int>() < kMinBoundarySamples) {
      bad.push_back("boundary_samples: expected an integer >= " +
                    std::to_string(kMinBoundarySamples));
    } else {
      sc.boundary_samples = v.get<int>();
    }
  }

  if (!bad.empty()) throw ValidationError(std::move(bad));

  auto semantic = validate(sc.config);
  if (!semantic.empty()) throw ValidationError(std::move(semantic));
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError({"cannot open scenario file: " + path.string()});
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(
        {"scenario file is not valid JSON: " + std::string(e.what())});
  }
  return parse_scenario(j);
}

json scenario_to_json(const Scenario& sc) {
  json j{
      {"s0", {sc.config.s0.x, sc.config.s0.y}},
      {"a0", {sc.config.a0.x, sc.config.a0.y}},
      {"t0", {sc.config.t0.x, sc.config.t0.y}},
      {"v_s", sc.config.v_s},
      {"v_t", sc.config.v_t},
      {"v_a", sc.config.v_a},
      {"r", sc.config.r},
      {"boundary_samples", sc.boundary_samples},
  };
  if (sc.policy) j["policy"] = policy_name(*sc.policy);
  if (sc.v_sweep) j["v_sweep"] = {sc.v_sweep->first, sc.v_sweep->second};
  return j;
}

}  // namespace satgame
