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

#ifndef MAPC_PROPAGATION_HPP_
#define MAPC_PROPAGATION_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "mapc/rng.hpp"
#include "mapc/types.hpp"

namespace mapc {

inline constexpr double kSpeedOfLight = 299792458.0;

// Free-space loss at the reference distance: 20 log10(4 pi d0 / lambda).
double reference_path_loss_db(const NetworkParams& params);

// Log-distance path loss. Distances below the reference distance are
// clamped to it; d <= 0 throws DomainError.
double path_loss_db(double distance_m, const NetworkParams& params);

// Linear gain 10^(-PL/10), always in (0, 1] for physical parameters.
double channel_gain(double distance_m, const NetworkParams& params);

// Gain from every AP to every STA. Coincident positions are treated as the
// reference distance.
GainMatrix build_gain_matrix(const Scenario& scenario);

struct PlacementConfig {
  double coverage_radius_m = 10.0;
  double mean_inter_ap_distance_m = 11.74;
  // Fraction of STAs clustered near their AP (Rayleigh radius).
  double near_fraction = 0.30;
  // Rayleigh scale is coverage_radius_m / rayleigh_shape_divisor.
  double rayleigh_shape_divisor = 2.0;
  std::uint64_t seed = 1;

  void validate() const;
};

double mean_pairwise_distance(std::span<const Point> points);

// APs on a regular polygon centred at the origin (a square for four APs)
// scaled so the mean pairwise AP distance equals the target.
std::vector<Point> place_aps(int n_aps, double mean_inter_ap_distance_m);

// Radius of a near STA: Rayleigh(sigma = R / a), redrawn until it is <= R.
double sample_near_radius(Rng& rng, double coverage_radius_m,
                          double shape_divisor);

// Radius of an edge STA: uniform on [R/2, R].
double sample_edge_radius(Rng& rng, double coverage_radius_m);

// Uniform STA-to-AP association conditioned on every AP getting at least
// one STA. Throws InfeasibleInputError when n_stas < n_aps.
std::vector<ApIndex> draw_association(Rng& rng, int n_aps, int n_stas);

// Full random instance: APs from place_aps, association, then each STA at a
// polar offset around its AP. Reproducible from config.seed.
Scenario generate_scenario(int n_aps, int n_stas, const NetworkParams& params,
                           const PlacementConfig& config);
Scenario generate_scenario(int n_aps, int n_stas, const NetworkParams& params,
                           const PlacementConfig& config, Rng& rng);

// Moves the APs to a layout with a new mean inter-AP distance while keeping
// every STA's offset from its serving AP.
Scenario rescale_ap_layout(const Scenario& scenario,
                           double mean_inter_ap_distance_m);

}  // namespace mapc

#endif  // MAPC_PROPAGATION_HPP_
