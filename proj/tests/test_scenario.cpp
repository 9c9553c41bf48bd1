// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "anaconda/benchmarks/comm_graph.hpp"
#include "anaconda/errors.hpp"
#include "anaconda/objective/set_function.hpp"
#include "anaconda/scenario/config.hpp"
#include "anaconda/scenario/instance.hpp"
#include "anaconda/scenario/presets.hpp"
#include "anaconda/scenario/runner.hpp"
#include "anaconda/timing/delay_model.hpp"
#include "support.hpp"

using namespace anaconda;
using namespace anaconda::scenario;
using objective::Point;

namespace {

ScenarioConfig small_config() {
  return parse_config(R"(
name: small
world:
  width_units: 20
  height_units: 20
cameras:
  count: 4
  placement: uniform
  fov_radius_units: 6
  aov_degrees: 90
  directions: 4
  comm_range_units: 30
  alpha: 1
run:
  algorithms: [anaconda, nearest, random, dfs-bsg]
  rounds: 60
  trials: 3
  seed: 5
delays:
  tau_f_seconds: 0.01
  tau_c_seconds: 0.02
)");
}

bool same_series(const TrialResult& a, const TrialResult& b) {
  if (a.series.size() != b.series.size()) return false;
  for (std::size_t k = 0; k < a.series.size(); ++k) {
    const auto& x = a.series[k];
    const auto& y = b.series[k];
    if (x.round != y.round || x.sim_time != y.sim_time ||
        x.f_value != y.f_value || x.beta_running != y.beta_running) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("coordination neighborhoods from ranges") {
  std::vector<Point> pos{{0, 0}, {3, 4}, {10, 0}};
  std::vector<double> zero(3, 0.0);
  for (const auto& m : build_coordination_neighborhoods(pos, zero)) {
    CHECK(m.empty());
  }
  std::vector<double> huge(3, 100.0);
  auto all = build_coordination_neighborhoods(pos, huge);
  CHECK(all[0] == std::vector<int>{1, 2});
  CHECK(all[2] == std::vector<int>{0, 1});
  // Exactly at range counts; ranges differ, so M is not symmetric.
  std::vector<double> mixed{5.0, 1.0, 10.0};
  auto m = build_coordination_neighborhoods(pos, mixed);
  CHECK(m[0] == std::vector<int>{1});
  CHECK(m[1].empty());
  CHECK(m[2] == std::vector<int>{0, 1});
}

TEST_CASE("urban layout with comm range 25 against a distance table") {
  auto urban = build_urban_preset();
  std::vector<double> ranges(8, 25.0);
  auto m = build_coordination_neighborhoods(urban.positions, ranges);
  for (int i = 0; i < 8; ++i) {
    std::vector<int> expected;
    for (int j = 0; j < 8; ++j) {
      const double dx = urban.positions[i].x - urban.positions[j].x;
      const double dy = urban.positions[i].y - urban.positions[j].y;
      if (j != i && dx * dx + dy * dy <= 625.0) expected.push_back(j);
    }
    CHECK(m[i] == expected);
  }
  // The camera pairs at the block gaps: 1-2, 3-4, 5-6 are 10 apart.
  CHECK(m[0] == std::vector<int>{1});
  CHECK(m[1] == std::vector<int>{0, 2});
}

TEST_CASE("urban preset") {
  auto c = build_urban_preset();
  CHECK(c.camera_count == 8);
  CHECK(c.directions == 16);
  CHECK(c.alpha == 1);
  CHECK(*c.rounds == 3000);
  CHECK(c.trials == 20);
  auto w = build_urban_world();
  CHECK(w.interest_count() == 3200);
  CHECK(w.interest_area() == 3200.0);
  // The shipped YAML describes exactly the same scenario.
  CHECK(canonical_text(load_preset("urban")) == canonical_text(c));
}

TEST_CASE("presets") {
  const auto& all = presets();
  REQUIRE(all.size() == 5);
  std::vector<std::string> names;
  for (const auto& p : all) names.push_back(p.name);
  CHECK(names == std::vector<std::string>{"urban", "density", "no-delay",
                                          "delay", "scalability"});
  for (const auto& p : all) {
    auto c = load_preset(p.name);
    CHECK_NOTHROW(validate(c));
    for (const auto& point : expand_sweep(c)) CHECK_NOTHROW(validate(point.config));
  }
  CHECK(is_preset("delay"));
  CHECK_FALSE(is_preset("nope"));
  CHECK_THROWS_AS(load_preset("nope"), ConfigError);
}

TEST_CASE("canonical text round-trips") {
  for (const auto& p : presets()) {
    auto c = load_preset(p.name);
    const std::string text = canonical_text(c);
    auto back = parse_canonical(text);
    CHECK(canonical_text(back) == text);
    CHECK(config_digest(back) == config_digest(c));
    CHECK(config_digest(c).size() == 16);
  }
  auto c = small_config();
  c.algorithms = {"anaconda", "random-2n"};
  apply_setting(c, "cameras.overrides", "[{index: 2, fov_radius_units: 9, alpha: 0}]");
  apply_setting(c, "events", "[{round: 10, leave: 3}, {round: 20, join: 3}]");
  validate(c);
  CHECK(canonical_text(parse_canonical(canonical_text(c))) == canonical_text(c));
}

TEST_CASE("settings and overrides") {
  auto c = small_config();
  apply_overrides(c, {"trials=7", "run.seed=9", "alpha=3"});
  CHECK(c.trials == 7);
  CHECK(c.seed == 9);
  CHECK(c.alpha == 3);
  apply_setting(c, "delays.tau_f_seconds", "0.5");
  CHECK(c.delays.tau_f == 0.5);
  apply_setting(c, "cameras.aov_degrees", "180");
  CHECK(c.aov == doctest::Approx(M_PI));
  CHECK_THROWS_AS(apply_setting(c, "no.such.key", "1"), ConfigError);
  CHECK_THROWS_AS(apply_setting(c, "run.trials", "[1, 2]"), ConfigError);
  CHECK_THROWS_AS(apply_overrides(c, {"trials"}), ConfigError);
  CHECK_FALSE(known_keys().empty());
}

TEST_CASE("config errors name the line") {
  try {
    parse_config("name: x\nrun:\n  trials: -3\n", "bad.yaml");
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    CHECK(what.find("bad.yaml:3") != std::string::npos);
    CHECK(what.find("trials") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("run: [1, 2"), ConfigError);
  CHECK_THROWS_AS(parse_config("bogus_section: 1\n"), ConfigError);
  auto c = small_config();
  c.budget_seconds = 10.0;
  CHECK_THROWS_AS(validate(c), ConfigError);  // rounds and budget both set
  CHECK_THROWS_AS(parse_algorithm("greedy"), ConfigError);
  CHECK(parse_algorithm("random-3n").alpha == 3);
  CHECK(parse_algorithm("dfs-bsg").kind == AlgorithmKind::kDfsBsg);
}

TEST_CASE("sweep expansion") {
  auto c = small_config();
  c.sweep.keys = {"cameras.alpha", "run.seed"};
  c.sweep.values = {{"0", "1", "2"}, {"4", "5"}};
  auto pts = expand_sweep(c);
  REQUIRE(pts.size() == 6);
  CHECK(pts[0].label == "p0");
  CHECK(pts[1].config.alpha == 0);
  CHECK(pts[1].config.seed == 5);  // last key fastest
  CHECK(pts[5].config.alpha == 2);
  CHECK(pts[5].config.sweep.empty());
  c.sweep.zip = true;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c.sweep.values[0].pop_back();
  auto zipped = expand_sweep(c);
  REQUIRE(zipped.size() == 2);
  CHECK(zipped[1].config.alpha == 1);
  CHECK(zipped[1].config.seed == 5);
}

TEST_CASE("uniform placement is per trial and reproducible") {
  auto c = small_config();
  auto a = build_instance(c, 0);
  auto b = build_instance(c, 0);
  auto d = build_instance(c, 1);
  CHECK(a.world.camera_positions() == b.world.camera_positions());
  CHECK(a.world.camera_positions() != d.world.camera_positions());
  for (const auto& p : a.world.camera_positions()) {
    CHECK(p.x >= 0.0);
    CHECK(p.x <= 20.0);
  }
  // Short ranges force redraws for the sequential benchmark.
  c.comm_range = 9.0;
  auto r = build_instance(c, 0);
  CHECK(bench::CommGraph::from_neighborhoods(r.neighborhoods).strongly_connected());
  // Without a sequential benchmark nothing is redrawn.
  c.algorithms = {"anaconda"};
  CHECK(build_instance(c, 0).placement_rejections == 0);
}

TEST_CASE("one round, one agent, no neighbors") {
  auto c = parse_config(R"(
world: {width_units: 10, height_units: 10}
cameras: {count: 1, placement: explicit, positions: [[5, 5]], fov_radius_units: 3,
          directions: 4, alpha: 0}
run: {algorithms: [anaconda], rounds: 1, trials: 1}
)");
  auto inst = build_instance(c, 0);
  auto r = run_trial(c, inst, parse_algorithm("anaconda"), 0);
  REQUIRE(r.series.size() == 1);
  const double covered = r.series[0].f_value;
  CHECK(r.series[0].coverage_pct == doctest::Approx(100.0 * covered / 100.0));
  CHECK(covered > 0.0);
}

TEST_CASE("trials are deterministic and audits are clean") {
  auto c = small_config();
  for (const char* algo : {"anaconda", "nearest", "random", "dfs-bsg"}) {
    auto a = run_trial(c, algo, 1);
    auto b = run_trial(c, algo, 1);
    CHECK(same_series(a, b));
    CHECK(a.audit.clean());
    CHECK(a.audit.eval_calls == a.audit.eval_charged);
    CHECK(a.rounds_completed == 60);
  }
  // Shuffled visiting order inside the phases changes nothing.
  TrialHooks shuffle;
  shuffle.shuffle_seed = 99;
  CHECK(same_series(run_trial(c, "anaconda", 2),
                    run_trial(c, "anaconda", 2, shuffle)));
}

TEST_CASE("budget mode plays budget / round time rounds") {
  auto c = small_config();
  c.rounds.reset();
  c.budget_seconds = 3.0;
  c.alpha = 2;
  c.algorithms = {"anaconda", "dfs-bsg"};
  validate(c);
  auto inst = build_instance(c, 0);
  auto spec = parse_algorithm("anaconda");
  const long expected = timing::budget_to_rounds(
      3.0, timing::anaconda_round_time(2, c.delays));
  CHECK(planned_rounds(c, inst, spec) == expected);
  auto r = run_trial(c, inst, spec, 0);
  CHECK(r.rounds_completed == expected);
  CHECK(r.series.back().sim_time <= 3.0 + 1e-9);
  auto bsg = run_trial(c, inst, parse_algorithm("dfs-bsg"), 0);
  CHECK(bsg.rounds_completed ==
        timing::budget_to_rounds(3.0, per_round_time(c, inst, parse_algorithm("dfs-bsg"))));
}

TEST_CASE("agents leaving and joining") {
  auto c = small_config();
  c.algorithms = {"anaconda"};
  apply_setting(c, "events", "[{round: 20, leave: 1}, {round: 40, join: 1}]");
  validate(c);
  std::vector<int> sizes;
  TrialHooks hooks;
  hooks.on_round = [&](const coord::RoundRecord& r) {
    sizes.push_back(static_cast<int>(r.agents.size()));
    for (const auto& a : r.agents) {
      for (int j : a.neighbors) CHECK(r.actions.contains(j));
    }
  };
  auto r = run_trial(c, "anaconda", 0, hooks);
  REQUIRE(sizes.size() == 60);
  CHECK(sizes[18] == 4);
  CHECK(sizes[19] == 3);
  CHECK(sizes[38] == 3);
  CHECK(sizes[39] == 4);
  CHECK(r.audit.clean());
}

TEST_CASE("summaries") {
  // A single agent with one action: every trial identical.
  auto c = parse_config(R"(
world: {width_units: 10, height_units: 10}
cameras: {count: 1, placement: explicit, positions: [[5, 5]], directions: 1, alpha: 0}
run: {algorithms: [anaconda], rounds: 10, trials: 20}
)");
  auto res = run_experiment(c, 2);
  REQUIRE(res.points.size() == 1);
  const auto& s = res.points[0].summaries[0];
  CHECK(s.trials == 20);
  CHECK(s.std_over_trials == 0.0);
  CHECK(s.std_over_rounds == 0.0);
  CHECK(s.curve.size() == 10);

  // Job count does not change results.
  auto small = small_config();
  auto r1 = run_experiment(small, 1);
  auto r3 = run_experiment(small, 3);
  for (std::size_t a = 0; a < r1.points[0].summaries.size(); ++a) {
    CHECK(r1.points[0].summaries[a].mean_pct == r3.points[0].summaries[a].mean_pct);
  }
}

TEST_CASE("urban convergence trend") {
  // 100-round moving average of f / f_max never falls more than 0.05 below
  // its running peak after round 500. f_max is the two-quarter-discs-per-
  // block layout.
  auto c = build_urban_preset();
  auto inst = build_instance(c, 0);
  objective::JointAssignment best;
  for (int i = 0; i < 8; ++i) best.insert(i, i % 2 == 0 ? 2 : 10);
  const double f_max = inst.oracle.eval(best);
  auto r = run_trial(c, inst, parse_algorithm("anaconda-1n"), 0);
  REQUIRE(r.series.size() == 3000);
  double window = 0.0, peak = 0.0, worst_drop = 0.0;
  for (std::size_t t = 0; t < r.series.size(); ++t) {
    window += r.series[t].f_value / f_max;
    if (t >= 100) window -= r.series[t - 100].f_value / f_max;
    if (t + 1 < 500) continue;
    const double ma = window / 100.0;
    peak = std::max(peak, ma);
    worst_drop = std::max(worst_drop, peak - ma);
  }
  CHECK(worst_drop <= 0.05);
  CHECK(r.audit.clean());
  CHECK(r.audit.bandwidth_violations == 0);
}
