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

#include "mapc/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mapc/error.hpp"

namespace mapc {

double reference_path_loss_db(const NetworkParams& params) {
  const double wavelength_m = kSpeedOfLight / params.frequency_hz;
  return 20.0 * std::log10(4.0 * std::numbers::pi * params.ref_distance_m /
                           wavelength_m);
}

double path_loss_db(double distance_m, const NetworkParams& params) {
  if (!(distance_m > 0.0)) {
    throw DomainError("path loss needs a positive distance, got " +
                      std::to_string(distance_m));
  }
  const double d = std::max(distance_m, params.ref_distance_m);
  return reference_path_loss_db(params) +
         10.0 * params.pathloss_exponent *
             std::log10(d / params.ref_distance_m);
}

double channel_gain(double distance_m, const NetworkParams& params) {
  return std::pow(10.0, -path_loss_db(distance_m, params) / 10.0);
}

GainMatrix build_gain_matrix(const Scenario& scenario) {
  GainMatrix gains(scenario.num_stas(), scenario.num_aps());
  for (StaIndex u = 0; u < scenario.num_stas(); ++u) {
    const Point& sta = scenario.sta_positions[static_cast<std::size_t>(u)];
    for (ApIndex n = 0; n < scenario.num_aps(); ++n) {
      const double d = std::max(
          distance(sta, scenario.ap_positions[static_cast<std::size_t>(n)]),
          scenario.params.ref_distance_m);
      gains(u, n) = channel_gain(d, scenario.params);
    }
  }
  return gains;
}

void PlacementConfig::validate() const {
  if (!(coverage_radius_m > 0.0)) {
    throw DomainError("coverage_radius_m must be positive");
  }
  if (!(mean_inter_ap_distance_m > 0.0)) {
    throw DomainError("mean_inter_ap_distance_m must be positive");
  }
  if (!(near_fraction >= 0.0 && near_fraction <= 1.0)) {
    throw DomainError("near_fraction must lie in [0, 1]");
  }
  if (!(rayleigh_shape_divisor > 0.0)) {
    throw DomainError("rayleigh_shape_divisor must be positive");
  }
}

double mean_pairwise_distance(std::span<const Point> points) {
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t k = i + 1; k < points.size(); ++k) {
      sum += distance(points[i], points[k]);
      ++pairs;
    }
  }
  return pairs == 0 ? 0.0 : sum / static_cast<double>(pairs);
}

std::vector<Point> place_aps(int n_aps, double mean_inter_ap_distance_m) {
  if (n_aps < 1) throw DomainError("need at least one AP");
  if (n_aps == 1) return {Point{0.0, 0.0}};

  std::vector<Point> unit;
  unit.reserve(static_cast<std::size_t>(n_aps));
  const double step = 2.0 * std::numbers::pi / n_aps;
  for (int k = 0; k < n_aps; ++k) {
    const double angle = std::numbers::pi / n_aps + k * step;
    unit.push_back({std::cos(angle), std::sin(angle)});
  }
  const double scale = mean_inter_ap_distance_m / mean_pairwise_distance(unit);
  for (Point& p : unit) {
    p.x *= scale;
    p.y *= scale;
  }
  return unit;
}

double sample_near_radius(Rng& rng, double coverage_radius_m,
                          double shape_divisor) {
  const double sigma = coverage_radius_m / shape_divisor;
  for (;;) {
    // Inverse CDF; 1 - u lies in (0, 1].
    const double r = sigma * std::sqrt(-2.0 * std::log(1.0 - uniform01(rng)));
    if (r <= coverage_radius_m) return r;
  }
}

double sample_edge_radius(Rng& rng, double coverage_radius_m) {
  return uniform_real(rng, 0.5 * coverage_radius_m, coverage_radius_m);
}

std::vector<ApIndex> draw_association(Rng& rng, int n_aps, int n_stas) {
  if (n_aps < 1) throw DomainError("need at least one AP");
  if (n_stas < n_aps) {
    throw InfeasibleInputError(
        std::to_string(n_stas) + " STAs cannot cover " +
        std::to_string(n_aps) + " APs with at least one STA each");
  }
  const auto n = static_cast<std::size_t>(n_aps);
  std::vector<ApIndex> assoc(static_cast<std::size_t>(n_stas));

  // Rejection sampling gives the exact conditional distribution; it is
  // cheap for the sizes used here. Very unbalanced requests (n_stas close
  // to a large n_aps) fall back to seeding one STA per AP.
  constexpr int kMaxAttempts = 4096;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<int> served(n, 0);
    for (ApIndex& a : assoc) {
      a = static_cast<ApIndex>(uniform_index(rng, n));
      ++served[static_cast<std::size_t>(a)];
    }
    if (std::find(served.begin(), served.end(), 0) == served.end()) {
      return assoc;
    }
  }
  std::vector<StaIndex> order(assoc.size());
  for (std::size_t u = 0; u < order.size(); ++u) {
    order[u] = static_cast<StaIndex>(u);
  }
  shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < order.size(); ++i) {
    assoc[static_cast<std::size_t>(order[i])] =
        i < n ? static_cast<ApIndex>(i)
              : static_cast<ApIndex>(uniform_index(rng, n));
  }
  return assoc;
}

Scenario generate_scenario(int n_aps, int n_stas, const NetworkParams& params,
                           const PlacementConfig& config) {
  Rng rng(config.seed);
  return generate_scenario(n_aps, n_stas, params, config, rng);
}

Scenario generate_scenario(int n_aps, int n_stas, const NetworkParams& params,
                           const PlacementConfig& config, Rng& rng) {
  params.validate();
  config.validate();

  Scenario s;
  s.params = params;
  s.ap_positions = place_aps(n_aps, config.mean_inter_ap_distance_m);
  s.association = draw_association(rng, n_aps, n_stas);

  const auto count = static_cast<std::size_t>(n_stas);
  const auto n_near = static_cast<std::size_t>(
      std::lround(config.near_fraction * static_cast<double>(n_stas)));
  std::vector<StaIndex> order(count);
  for (std::size_t u = 0; u < count; ++u) order[u] = static_cast<StaIndex>(u);
  shuffle(order.begin(), order.end(), rng);
  std::vector<bool> is_near(count, false);
  for (std::size_t i = 0; i < std::min(n_near, count); ++i) {
    is_near[static_cast<std::size_t>(order[i])] = true;
  }

  const double radius = config.coverage_radius_m;
  s.sta_positions.resize(count);
  for (std::size_t u = 0; u < count; ++u) {
    const double r =
        is_near[u]
            ? sample_near_radius(rng, radius, config.rayleigh_shape_divisor)
            : sample_edge_radius(rng, radius);
    const double theta = uniform_real(rng, 0.0, 2.0 * std::numbers::pi);
    const Point& ap = s.ap_positions[static_cast<std::size_t>(s.association[u])];
    s.sta_positions[u] = {ap.x + r * std::cos(theta), ap.y + r * std::sin(theta)};
  }
  return s;
}

Scenario rescale_ap_layout(const Scenario& scenario,
                           double mean_inter_ap_distance_m) {
  Scenario out = scenario;
  out.ap_positions = place_aps(scenario.num_aps(), mean_inter_ap_distance_m);
  for (StaIndex u = 0; u < scenario.num_stas(); ++u) {
    const auto su = static_cast<std::size_t>(u);
    const auto n = static_cast<std::size_t>(scenario.ap_of(u));
    const Point& old_ap = scenario.ap_positions[n];
    const Point& new_ap = out.ap_positions[n];
    out.sta_positions[su].x = scenario.sta_positions[su].x - old_ap.x + new_ap.x;
    out.sta_positions[su].y = scenario.sta_positions[su].y - old_ap.y + new_ap.y;
  }
  return out;
}

}  // namespace mapc
