// Copyright 2026 The mapc-csr Authors.
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

#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "mapc/error.hpp"
#include "mapc/evaluation.hpp"
#include "mapc/feasibility.hpp"
#include "mapc/propagation.hpp"
#include "mapc/rng.hpp"
#include "oracle.hpp"

using namespace mapc;
using mapc::testing::make_scenario;

namespace {

// Hand calculation of the log-distance gain, kept separate from the library.
double hand_gain(double d) {
  const double lambda = 299792458.0 / 2.4e9;
  const double pl = 20.0 * std::log10(4.0 * std::numbers::pi / lambda) +
                    25.0 * std::log10(d);
  return std::pow(10.0, -pl / 10.0);
}

Scenario single_link() { return make_scenario({{0, 0}}, {{{10, 0}, 0}}); }

// Every STA 10 m from both APs.
Scenario symmetric_pair() {
  return make_scenario({{-6, 0}, {6, 0}}, {{{0, 8}, 0}, {{0, -8}, 1}});
}

Allocation grouped(Allocation a, std::vector<GroupId> g) {
  a.group_of_ap = g;
  a.active_groups = std::set<GroupId>(g.begin(), g.end());
  return a;
}

}  // namespace

TEST_CASE("unit conversions") {
  CHECK(dbm_to_mw(-96.0) == doctest::Approx(2.511886431509580e-10).epsilon(1e-12));
  CHECK(db_to_linear(2.0) == doctest::Approx(1.584893192461113).epsilon(1e-12));
  CHECK(mw_to_dbm(dbm_to_mw(11.76)) == doctest::Approx(11.76));
  CHECK(linear_to_db(100.0) == doctest::Approx(20.0));
  const auto ref = NetworkParams::reference();
  CHECK(ref.noise_power_mw == doctest::Approx(std::pow(10.0, -9.6)).epsilon(1e-12));
  CHECK(ref.num_rus == 10);
  CHECK(ref.g_max == 4);
}

TEST_CASE("parameter and scenario validation") {
  NetworkParams p;
  p.p_max_sta_mw = -1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  auto s = make_scenario({{0, 0}, {10, 0}}, {{{1, 0}, 0}});
  CHECK_THROWS_AS(s.validate(), InfeasibleInputError);
  s = make_scenario({{0, 0}}, {{{1, 0}, 3}});
  CHECK_THROWS_AS(s.validate(), StructuralError);
  CHECK_NOTHROW(symmetric_pair().validate());
}

TEST_CASE("single link SINR and throughput") {
  const auto s = single_link();
  const auto g = build_gain_matrix(s);
  auto a = Allocation::unassigned(1);
  a.assign(0, 0, 15.0);
  const double expected = 15.0 * hand_gain(10.0) / std::pow(10.0, -9.6);
  const double sinr = compute_sinr(s, g, a, 0);
  CHECK(sinr == doctest::Approx(expected).epsilon(1e-9));
  CHECK(sinr == doctest::Approx(1.867e4).epsilon(0.005));
  CHECK(10 * std::log10(sinr) == doctest::Approx(42.7).epsilon(0.002));
  const auto r = evaluate(s, g, a);
  CHECK(std::log2(1 + sinr) == doctest::Approx(14.19).epsilon(0.001));
  CHECK(r.total_throughput_bps == doctest::Approx(28.4e6).epsilon(0.002));
  CHECK(r.power_used_by_ap_mw[0] == 15.0);
}

TEST_CASE("zero power and unassigned STAs give zero") {
  const auto s = symmetric_pair();
  const auto g = build_gain_matrix(s);
  auto a = Allocation::unassigned(2);
  a.assign(0, 0, 0.0);
  CHECK(compute_sinr(s, g, a, 0) == 0.0);
  CHECK(compute_sinr(s, g, a, 1) == 0.0);
  CHECK(evaluate(s, g, a).total_throughput_bps == 0.0);
}

TEST_CASE("symmetric co-RU pair sits at 0 dB") {
  const auto s = symmetric_pair();
  const auto g = build_gain_matrix(s);
  CHECK(g(0, 0) == doctest::Approx(g(0, 1)).epsilon(1e-12));
  auto a = Allocation::unassigned(2);
  a.assign(0, 0, 15.0);
  a.assign(1, 0, 15.0);
  for (int u = 0; u < 2; ++u) {
    CHECK(compute_sinr(s, g, a, u) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(compute_sinr(s, g, a, u) < 1.0);
  }
}

TEST_CASE("SINR monotone in own power and in interference") {
  Rng rng(7);
  const auto s = generate_scenario(3, 9, NetworkParams::reference(), {});
  const auto g = build_gain_matrix(s);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = Allocation::unassigned(s.num_stas());
    for (int u = 0; u < s.num_stas(); ++u)
      a.assign(u, static_cast<int>(uniform_index(rng, 2)), uniform_real(rng, 1, 15));
    const int u = static_cast<int>(uniform_index(rng, 9));
    const double before = compute_sinr(s, g, a, u);
    auto up = a;
    up.power_of_sta_mw[u] *= 1.1;
    CHECK(compute_sinr(s, g, up, u) > before);
    for (int v = 0; v < s.num_stas(); ++v) {
      if (v == u || a.ru_of_sta[v] != a.ru_of_sta[u]) continue;
      auto fewer = a;
      fewer.unassign(v);
      CHECK(compute_sinr(s, g, fewer, u) > before);
      break;
    }
  }
}

TEST_CASE("throughput is additive and unchanged by joint scaling") {
  const auto s = generate_scenario(4, 12, NetworkParams::reference(), {});
  const auto g = build_gain_matrix(s);
  Rng rng(3);
  auto a = Allocation::unassigned(s.num_stas());
  for (int u = 0; u < s.num_stas(); ++u)
    if (uniform01(rng) < 0.8)
      a.assign(u, static_cast<int>(uniform_index(rng, 3)), uniform_real(rng, 1, 15));
  const auto r = evaluate(s, g, a);
  double sum = 0.0;
  for (double t : r.throughput_of_sta_bps) sum += t;
  CHECK(sum == r.total_throughput_bps);
  for (int u = 0; u < s.num_stas(); ++u)
    if (!a.is_assigned(u)) CHECK(r.throughput_of_sta_bps[u] == 0.0);

  auto scaled_s = s;
  scaled_s.params.noise_power_mw *= 7.5;
  auto scaled_a = a;
  for (double& p : scaled_a.power_of_sta_mw) p *= 7.5;
  const auto r2 = evaluate(scaled_s, g, scaled_a);
  for (int u = 0; u < s.num_stas(); ++u)
    CHECK(r2.sinr_of_sta[u] == doctest::Approx(r.sinr_of_sta[u]).epsilon(1e-12));
}

TEST_CASE("throughput gain") {
  CHECK(throughput_gain(171.6, 100.0) == doctest::Approx(71.6));
  CHECK(throughput_gain(134.2, 100.0) == doctest::Approx(34.2));
  CHECK(throughput_gain(100.0, 100.0) == 0.0);
  CHECK_THROWS_AS(throughput_gain(1.0, 0.0), UndefinedGainError);
}

TEST_CASE("structure checks") {
  const auto s = symmetric_pair();
  const auto g = build_gain_matrix(s);
  auto a = Allocation::unassigned(3);
  CHECK_THROWS_AS(check_structure(s, g, a), StructuralError);
  CHECK_THROWS_AS(check_feasibility(s, a), StructuralError);
  a = Allocation::unassigned(2);
  a.ru_of_sta[0] = 10;
  CHECK_THROWS_AS(evaluate(s, g, a), StructuralError);
}

TEST_CASE("allocation equality ignores group labels") {
  auto a = Allocation::unassigned(2);
  a.assign(0, 1, 5.0);
  const auto x = grouped(a, {1, 0, 1});
  const auto y = grouped(a, {0, 1, 0});
  CHECK(x == y);
  CHECK(x.canonical().group_of_ap == std::vector<GroupId>{0, 1, 0});
  CHECK_FALSE(x == grouped(a, {0, 0, 1}));
}

TEST_CASE("feasibility examples") {
  SUBCASE("intra-BSS reuse") {
    const auto s = make_scenario({{0, 0}}, {{{1, 0}, 0}, {{0, 1}, 0}});
    auto a = Allocation::unassigned(2);
    a.assign(0, 3, 10);
    a.assign(1, 3, 10);
    const auto rep = check_feasibility(s, a);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].constraint == Constraint::kNoIntraBssReuse);
  }
  SUBCASE("AP budget: 7 x 15 mW") {
    std::vector<mapc::testing::StaSpec> stas;
    for (int i = 0; i < 7; ++i) stas.push_back({{1.0 + i, 0}, 0});
    const auto s = make_scenario({{0, 0}}, stas);
    auto a = Allocation::unassigned(7);
    for (int i = 0; i < 7; ++i) a.assign(i, i, 15.0);
    const auto rep = check_feasibility(s, a);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].constraint == Constraint::kApPower);
    CHECK(rep.violations[0].indices == std::vector<int>{0});
  }
  SUBCASE("co-RU STAs in a shared group") {
    const auto s = symmetric_pair();
    auto a = Allocation::unassigned(2);
    a.assign(0, 0, 15);
    a.assign(1, 0, 15);
    const auto rep = check_feasibility(s, grouped(a, {0, 0}));
    CHECK(rep.feasible());
    CHECK(rep.grouping_checked);
    const auto ungrouped = check_feasibility(s, a);
    CHECK(ungrouped.feasible());
    CHECK_FALSE(ungrouped.grouping_checked);
  }
}

TEST_CASE("feasibility soundness over random feasible allocations") {
  Rng rng(11);
  const std::vector<double> grid{5, 10, 15};
  for (int trial = 0; trial < 40; ++trial) {
    PlacementConfig pc;
    pc.seed = 100 + static_cast<std::uint64_t>(trial);
    auto params = NetworkParams::reference();
    params.num_rus = 3;
    const auto s = generate_scenario(3, 6, params, pc);
    const auto a = mapc::testing::random_feasible_allocation(s, grid, rng);
    REQUIRE(check_feasibility(s, a).feasible());
  }
}

TEST_CASE("each deliberate breach reports exactly its family") {
  // AP0 serves STAs 0 and 1, AP1 serves 2, AP2 serves 3.
  auto params = NetworkParams::reference();
  params.g_max = 2;
  params.p_max_ap_mw = 25.0;
  params.max_aps_per_group = 2;
  const auto s = make_scenario(
      {{0, 0}, {20, 0}, {40, 0}},
      {{{1, 0}, 0}, {{0, 1}, 0}, {{21, 0}, 1}, {{41, 0}, 2}}, params);
  auto base = Allocation::unassigned(4);
  base.assign(0, 0, 10);
  base.assign(1, 1, 10);
  base.assign(2, 0, 10);  // shares RU 0 with STA 0 inside group 0
  base.assign(3, 2, 10);
  base = grouped(base, {0, 0, 1});
  REQUIRE(check_feasibility(s, base).feasible());

  auto only = [&](const Allocation& a, Constraint c) {
    const auto rep = check_feasibility(s, a);
    CHECK_FALSE(rep.violations.empty());
    for (const auto& v : rep.violations) CHECK(to_string(v.constraint) == to_string(c));
  };
  auto a = base;
  a.ru_of_sta[3] = params.num_rus;
  only(a, Constraint::kOneRu);

  a = base;
  a.power_of_sta_mw[3] = 16;
  only(a, Constraint::kStaPower);
  a = base;
  a.unassign(3);
  a.power_of_sta_mw[3] = 1;
  only(a, Constraint::kStaPower);

  a = base;
  a.ru_of_sta[1] = 1;
  a.ru_of_sta[0] = 1;
  only(a, Constraint::kNoIntraBssReuse);

  a = base;
  a.power_of_sta_mw[0] = 15;
  a.power_of_sta_mw[1] = 15;
  only(a, Constraint::kApPower);

  a = base;
  a.active_groups = {0};
  only(a, Constraint::kOneGroup);
  a = base;
  a.group_of_ap = {0, 0, 0};
  a.active_groups = {0};
  only(a, Constraint::kOneGroup);

  a = base;
  a.active_groups = {0, 1, 2};
  only(a, Constraint::kGroupCap);

  a = base;
  a.group_of_ap = {0, 1, 1};
  a.active_groups = {0, 1};
  only(a, Constraint::kGroupRuReuse);
}

TEST_CASE("rng helpers are deterministic and in range") {
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
  Rng a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    const double x = uniform01(a);
    CHECK(x == uniform01(b));
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    CHECK(uniform_index(a, 7) < 7u);
    uniform_index(b, 7);
  }
  std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7};
  Rng c(9);
  mapc::shuffle(v.begin(), v.end(), c);
  std::multiset<int> seen(v.begin(), v.end());
  CHECK(seen == std::multiset<int>{0, 1, 2, 3, 4, 5, 6, 7});
}
