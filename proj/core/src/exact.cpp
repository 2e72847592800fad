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

#include "mapc/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>
#include <unordered_map>

#include "mapc/error.hpp"
#include "mapc/evaluation.hpp"

namespace mapc {

void ExactConfig::validate(const NetworkParams& params) const {
  if (power_grid_mw.empty()) throw DomainError("power grid is empty");
  for (std::size_t i = 0; i < power_grid_mw.size(); ++i) {
    const double p = power_grid_mw[i];
    if (!(p > 0.0) || p > params.p_max_sta_mw) {
      throw DomainError("power grid level " + std::to_string(p) +
                        " mW outside (0, P_max]");
    }
    if (i > 0 && !(p > power_grid_mw[i - 1])) {
      throw DomainError("power grid must be strictly increasing");
    }
  }
  if (max_groups < 0) throw DomainError("max_groups must be non-negative");
  if (limits.max_stas < 1 || limits.max_rus < 1 || limits.max_aps < 1 ||
      limits.max_grid_levels < 1) {
    throw DomainError("exact solver limits must be positive");
  }
  if (limits.max_stas > 64) {
    throw DomainError("exact solver supports at most 64 STAs");
  }
  if (time_budget_s < 0.0) throw DomainError("time budget must be >= 0");
  if (workers < 1) throw DomainError("workers must be at least 1");
}

std::vector<Grouping> enumerate_groupings(int n_aps, int g_max,
                                          int max_group_size) {
  std::vector<Grouping> out;
  if (n_aps < 1 || g_max < 1) return out;
  const int cap = max_group_size > 0 ? max_group_size : n_aps;

  Grouping labels(static_cast<std::size_t>(n_aps), 0);
  std::vector<int> block_size(static_cast<std::size_t>(n_aps), 0);
  auto place = [&](auto&& self, int ap, int blocks) -> void {
    if (ap == n_aps) {
      out.push_back(labels);
      return;
    }
    const int limit = std::min(blocks + 1, g_max);
    for (int g = 0; g < limit; ++g) {
      auto& size = block_size[static_cast<std::size_t>(g)];
      if (size == cap) continue;
      labels[static_cast<std::size_t>(ap)] = g;
      ++size;
      self(self, ap + 1, std::max(blocks, g + 1));
      --size;
    }
  };
  place(place, 0, 0);
  return out;
}

void for_each_assignment(
    std::span<const ApIndex> association, int num_rus, const Grouping& grouping,
    const std::function<bool(std::span<const RuIndex>)>& visit) {
  const std::size_t n_stas = association.size();
  const std::size_t n_aps = grouping.size();
  const auto rus = static_cast<std::size_t>(std::max(num_rus, 0));

  std::vector<RuIndex> ru_of(n_stas, kUnassigned);
  std::vector<char> bss_uses(n_aps * rus, 0);
  std::vector<int> ru_occupants(rus, 0);
  std::vector<GroupId> ru_group(rus, -1);
  bool stop = false;

  auto step = [&](auto&& self, std::size_t u) -> void {
    if (stop) return;
    if (u == n_stas) {
      if (!visit(ru_of)) stop = true;
      return;
    }
    ru_of[u] = kUnassigned;
    self(self, u + 1);

    const auto ap = static_cast<std::size_t>(association[u]);
    const GroupId g = grouping[ap];
    for (std::size_t j = 0; j < rus && !stop; ++j) {
      if (bss_uses[ap * rus + j]) continue;
      if (ru_occupants[j] > 0 && ru_group[j] != g) continue;
      bss_uses[ap * rus + j] = 1;
      ++ru_occupants[j];
      ru_group[j] = g;
      ru_of[u] = static_cast<RuIndex>(j);
      self(self, u + 1);
      bss_uses[ap * rus + j] = 0;
      if (--ru_occupants[j] == 0) ru_group[j] = -1;
    }
    ru_of[u] = kUnassigned;
  };
  step(step, 0);
}

std::vector<std::vector<RuIndex>> enumerate_assignments(
    const Scenario& scenario, const Grouping& grouping) {
  std::vector<std::vector<RuIndex>> out;
  for_each_assignment(scenario.association, scenario.params.num_rus, grouping,
                      [&](std::span<const RuIndex> a) {
                        out.emplace_back(a.begin(), a.end());
                        return true;
                      });
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kBudgetSlack = 1e-9;

// Every grid power vector for one co-channel STA set, best first.
struct SetTable {
  std::vector<StaIndex> members;  // ascending
  std::vector<std::vector<double>> powers;
  std::vector<double> values;  // throughput of the set, bit/s
};

SetTable build_set_table(const Scenario& scenario, const GainMatrix& gains,
                         std::uint64_t mask, std::span<const double> grid) {
  SetTable t;
  for (StaIndex u = 0; u < scenario.num_stas(); ++u) {
    if (mask >> u & 1U) t.members.push_back(u);
  }
  const std::size_t m = t.members.size();
  const double noise = scenario.params.noise_power_mw;

  std::vector<std::size_t> digit(m, 0);
  std::vector<double> p(m);
  std::vector<std::pair<double, std::size_t>> order;
  std::vector<std::vector<double>> all;
  for (bool more = true; more;) {
    for (std::size_t i = 0; i < m; ++i) p[i] = grid[digit[i]];
    double value = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const StaIndex u = t.members[i];
      double interference = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        if (k != i) interference += p[k] * gains(u, scenario.ap_of(t.members[k]));
      }
      const double sinr = p[i] * gains(u, scenario.ap_of(u)) / (interference + noise);
      value += ru_throughput_bps(scenario.params, sinr);
    }
    order.emplace_back(value, all.size());
    all.push_back(p);

    more = false;
    for (std::size_t pos = m; pos-- > 0;) {
      if (++digit[pos] < grid.size()) {
        more = true;
        break;
      }
      digit[pos] = 0;
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [value, idx] : order) {
    t.values.push_back(value);
    t.powers.push_back(std::move(all[idx]));
  }
  return t;
}

struct Incumbent {
  bool found = false;
  double value = -1.0;
  std::size_t grouping_index = 0;
  std::vector<RuIndex> ru_of_sta;
  std::vector<double> power_of_sta;
};

struct WorkerStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
  bool timed_out = false;
};

class GroupingSearch {
 public:
  GroupingSearch(const Scenario& scenario, const GainMatrix& gains,
                 const ExactConfig& config, Clock::time_point deadline,
                 bool has_deadline, std::atomic<bool>& stop)
      : scenario_(scenario),
        gains_(gains),
        grid_(config.power_grid_mw),
        max_level_(config.power_grid_mw.back()),
        deadline_(deadline),
        has_deadline_(has_deadline),
        stop_(stop) {}

  void run(const Grouping& grouping, std::size_t grouping_index) {
    grouping_ = &grouping;
    grouping_index_ = grouping_index;
    const auto n_stas = static_cast<std::size_t>(scenario_.num_stas());
    const auto rus = static_cast<std::size_t>(scenario_.params.num_rus);
    ru_of_.assign(n_stas, kUnassigned);
    bss_uses_.assign(static_cast<std::size_t>(scenario_.num_aps()) * rus, 0);
    ru_mask_.assign(rus, 0);
    ru_group_.assign(rus, -1);
    assign(0, 0);
  }

  const Incumbent& best() const { return best_; }
  const WorkerStats& stats() const { return stats_; }

 private:
  bool out_of_time() {
    if (stop_.load(std::memory_order_relaxed)) return true;
    if (has_deadline_ && (stats_.nodes & 0x3FF) == 0 && Clock::now() > deadline_) {
      stats_.timed_out = true;
      stop_.store(true, std::memory_order_relaxed);
    }
    return stop_.load(std::memory_order_relaxed);
  }

  // Depth-first over STAs. RUs are interchangeable, so labels are opened in
  // order: STA u may only use an already opened RU or the next new one.
  void assign(std::size_t u, std::size_t opened) {
    ++stats_.nodes;
    if (out_of_time()) return;
    if (u == ru_of_.size()) {
      leaf(opened);
      return;
    }
    ru_of_[u] = kUnassigned;
    assign(u + 1, opened);

    const auto rus = ru_mask_.size();
    const auto ap = static_cast<std::size_t>(scenario_.ap_of(static_cast<StaIndex>(u)));
    const GroupId g = (*grouping_)[ap];
    const std::size_t last = std::min(opened + 1, rus);
    for (std::size_t j = 0; j < last; ++j) {
      if (bss_uses_[ap * rus + j]) continue;
      if (ru_mask_[j] != 0 && ru_group_[j] != g) continue;
      const GroupId saved_group = ru_group_[j];
      bss_uses_[ap * rus + j] = 1;
      ru_mask_[j] |= std::uint64_t{1} << u;
      ru_group_[j] = g;
      ru_of_[u] = static_cast<RuIndex>(j);
      assign(u + 1, j == opened ? opened + 1 : opened);
      bss_uses_[ap * rus + j] = 0;
      ru_mask_[j] &= ~(std::uint64_t{1} << u);
      ru_group_[j] = saved_group;
    }
    ru_of_[u] = kUnassigned;
  }

  const SetTable& table(std::uint64_t mask) {
    auto it = tables_.find(mask);
    if (it == tables_.end()) {
      it = tables_.emplace(mask, build_set_table(scenario_, gains_, mask, grid_)).first;
    }
    return it->second;
  }

  bool budget_can_bind() const {
    std::vector<int> assigned(static_cast<std::size_t>(scenario_.num_aps()), 0);
    for (std::size_t u = 0; u < ru_of_.size(); ++u) {
      if (ru_of_[u] != kUnassigned) {
        ++assigned[static_cast<std::size_t>(scenario_.ap_of(static_cast<StaIndex>(u)))];
      }
    }
    for (int c : assigned) {
      if (c * max_level_ > scenario_.params.p_max_ap_mw * (1.0 + kBudgetSlack)) return true;
    }
    return false;
  }

  void leaf(std::size_t opened) {
    leaf_tables_.clear();
    double upper = 0.0;
    for (std::size_t j = 0; j < opened; ++j) {
      leaf_tables_.push_back(&table(ru_mask_[j]));
      upper += leaf_tables_.back()->values.front();
    }
    if (best_.found && upper <= best_.value) {
      ++stats_.pruned;
      return;
    }
    choice_.assign(opened, 0);
    if (!budget_can_bind()) {
      record(upper);
      return;
    }
    // Budget-coupled: branch over each RU's power vectors, best first.
    suffix_best_.assign(opened + 1, 0.0);
    for (std::size_t j = opened; j-- > 0;) {
      suffix_best_[j] = suffix_best_[j + 1] + leaf_tables_[j]->values.front();
    }
    spent_.assign(static_cast<std::size_t>(scenario_.num_aps()), 0.0);
    powers_branch(0, 0.0);
  }

  void powers_branch(std::size_t j, double value) {
    ++stats_.nodes;
    if (out_of_time()) return;
    if (j == leaf_tables_.size()) {
      if (!best_.found || value > best_.value) record(value);
      return;
    }
    const SetTable& t = *leaf_tables_[j];
    const double cap = scenario_.params.p_max_ap_mw * (1.0 + kBudgetSlack);
    for (std::size_t k = 0; k < t.values.size(); ++k) {
      const double bound = value + t.values[k] + suffix_best_[j + 1];
      if (best_.found && bound <= best_.value) {
        ++stats_.pruned;
        break;  // options are sorted, the rest are no better
      }
      bool fits = true;
      for (std::size_t i = 0; i < t.members.size(); ++i) {
        const auto ap = static_cast<std::size_t>(scenario_.ap_of(t.members[i]));
        spent_[ap] += t.powers[k][i];
        if (spent_[ap] > cap) fits = false;
      }
      if (fits) {
        choice_[j] = k;
        powers_branch(j + 1, value + t.values[k]);
      } else {
        ++stats_.pruned;
      }
      for (std::size_t i = 0; i < t.members.size(); ++i) {
        spent_[static_cast<std::size_t>(scenario_.ap_of(t.members[i]))] -= t.powers[k][i];
      }
    }
  }

  void record(double value) {
    best_.found = true;
    best_.value = value;
    best_.grouping_index = grouping_index_;
    best_.ru_of_sta = ru_of_;
    best_.power_of_sta.assign(ru_of_.size(), 0.0);
    for (std::size_t j = 0; j < leaf_tables_.size(); ++j) {
      const SetTable& t = *leaf_tables_[j];
      for (std::size_t i = 0; i < t.members.size(); ++i) {
        best_.power_of_sta[static_cast<std::size_t>(t.members[i])] =
            t.powers[choice_[j]][i];
      }
    }
  }

  const Scenario& scenario_;
  const GainMatrix& gains_;
  std::span<const double> grid_;
  double max_level_;
  Clock::time_point deadline_;
  bool has_deadline_;
  std::atomic<bool>& stop_;

  const Grouping* grouping_ = nullptr;
  std::size_t grouping_index_ = 0;
  std::vector<RuIndex> ru_of_;
  std::vector<char> bss_uses_;
  std::vector<std::uint64_t> ru_mask_;
  std::vector<GroupId> ru_group_;

  std::unordered_map<std::uint64_t, SetTable> tables_;
  std::vector<const SetTable*> leaf_tables_;
  std::vector<std::size_t> choice_;
  std::vector<double> suffix_best_;
  std::vector<double> spent_;

  Incumbent best_;
  WorkerStats stats_;
};

void check_limits(const Scenario& scenario, const ExactConfig& config) {
  const auto& l = config.limits;
  auto refuse = [](const std::string& what, int got, int limit) {
    throw SizeLimitError("exact solver refuses " + std::to_string(got) + " " +
                         what + " (limit " + std::to_string(limit) + ")");
  };
  if (scenario.num_stas() > l.max_stas) refuse("STAs", scenario.num_stas(), l.max_stas);
  if (scenario.params.num_rus > l.max_rus) refuse("RUs", scenario.params.num_rus, l.max_rus);
  if (scenario.num_aps() > l.max_aps) refuse("APs", scenario.num_aps(), l.max_aps);
  const auto levels = static_cast<int>(config.power_grid_mw.size());
  if (levels > l.max_grid_levels) refuse("power levels", levels, l.max_grid_levels);
}

}  // namespace

ExactSolution solve_exact(const Scenario& scenario, const GainMatrix& gains,
                          const ExactConfig& config) {
  const auto start = Clock::now();
  scenario.validate();
  config.validate(scenario.params);
  check_limits(scenario, config);
  if (gains.num_stas() != scenario.num_stas() ||
      gains.num_aps() != scenario.num_aps()) {
    throw StructuralError("gain matrix does not match the scenario");
  }

  const NetworkParams& params = scenario.params;
  const int g_max = config.max_groups > 0 ? config.max_groups : params.g_max;
  const std::vector<Grouping> groupings = enumerate_groupings(
      scenario.num_aps(), g_max, params.max_aps_per_group);

  const bool has_deadline = config.time_budget_s > 0.0;
  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(
                  std::chrono::duration<double>(config.time_budget_s));
  std::atomic<bool> stop{false};

  const auto n_workers = static_cast<std::size_t>(
      std::min<std::size_t>(static_cast<std::size_t>(config.workers),
                            std::max<std::size_t>(groupings.size(), 1)));
  std::vector<Incumbent> bests(n_workers);
  std::vector<WorkerStats> stats(n_workers);
  auto work = [&](std::size_t w) {
    GroupingSearch search(scenario, gains, config, deadline, has_deadline, stop);
    for (std::size_t g = w; g < groupings.size(); g += n_workers) {
      search.run(groupings[g], g);
      if (stop.load()) break;
    }
    bests[w] = search.best();
    stats[w] = search.stats();
  };
  if (n_workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < n_workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  // Highest value wins; ties go to the earliest grouping, as a sequential
  // search would have found it first.
  const Incumbent* best = nullptr;
  ExactSolution solution;
  for (std::size_t w = 0; w < n_workers; ++w) {
    solution.nodes_explored += stats[w].nodes;
    solution.pruned += stats[w].pruned;
    if (stats[w].timed_out) solution.proven_optimal = false;
    const Incumbent& b = bests[w];
    if (!b.found) continue;
    if (!best || b.value > best->value ||
        (b.value == best->value && b.grouping_index < best->grouping_index)) {
      best = &b;
    }
  }
  if (stop.load()) solution.proven_optimal = false;

  Allocation alloc = Allocation::unassigned(scenario.num_stas());
  const Grouping& grouping = best ? groupings[best->grouping_index] : groupings.front();
  if (best) {
    alloc.ru_of_sta = best->ru_of_sta;
    alloc.power_of_sta_mw = best->power_of_sta;
  }
  alloc.group_of_ap = grouping;
  for (GroupId g : grouping) alloc.active_groups.insert(g);

  solution.grid_objective_bps = evaluate(scenario, gains, alloc).total_throughput_bps;
  if (config.refine_powers) alloc = refine_powers(scenario, gains, std::move(alloc));
  solution.evaluation = evaluate(scenario, gains, alloc);
  solution.allocation = std::move(alloc);
  solution.wall_time_s =
      std::chrono::duration<double>(Clock::now() - start).count();
  return solution;
}

namespace {

// Golden-section maximization of f on [lo, hi].
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int iters) {
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - ratio * (b - a), d = a + ratio * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc >= fd) {
      b = d; d = c; fd = fc;
      c = b - ratio * (b - a); fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + ratio * (b - a); fd = f(d);
    }
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace

Allocation refine_powers(const Scenario& scenario, const GainMatrix& gains,
                         Allocation alloc) {
  const NetworkParams& params = scenario.params;
  auto objective = [&](const Allocation& a) {
    return evaluate(scenario, gains, a).total_throughput_bps;
  };
  double current = objective(alloc);

  constexpr int kMaxRounds = 100;
  constexpr int kSamples = 64;
  for (int round = 0; round < kMaxRounds; ++round) {
    const double round_start = current;
    for (StaIndex u = 0; u < scenario.num_stas(); ++u) {
      if (!alloc.is_assigned(u)) continue;
      const auto su = static_cast<std::size_t>(u);
      double others = 0.0;
      for (StaIndex k : scenario.stas_of(scenario.ap_of(u))) {
        if (k != u) others += alloc.power_of_sta_mw[static_cast<std::size_t>(k)];
      }
      const double hi = std::min(params.p_max_sta_mw, params.p_max_ap_mw - others);
      if (!(hi > 0.0)) continue;

      Allocation trial = alloc;
      auto f = [&](double p) {
        trial.power_of_sta_mw[su] = p;
        return objective(trial);
      };
      double best_p = alloc.power_of_sta_mw[su];
      double best_v = current;
      const double step = hi / kSamples;
      for (int s = 0; s <= kSamples; ++s) {
        const double p = s == kSamples ? hi : step * s;
        const double v = f(p);
        if (v > best_v) {
          best_v = v;
          best_p = p;
        }
      }
      const auto [gp, gv] = golden_max(f, std::max(0.0, best_p - step),
                                       std::min(hi, best_p + step), 60);
      if (gv > best_v) {
        best_v = gv;
        best_p = gp;
      }
      if (best_v > current) {
        alloc.power_of_sta_mw[su] = best_p;
        current = best_v;
      }
    }
    if (current - round_start <= 1e-9 * std::abs(round_start)) break;
  }
  for (StaIndex u = 0; u < scenario.num_stas(); ++u) {
    if (alloc.is_assigned(u) && alloc.power_of_sta_mw[static_cast<std::size_t>(u)] == 0.0) {
      alloc.unassign(u);
    }
  }
  return alloc;
}

}  // namespace mapc
