#pragma once

#include <cstdint>
#include <vector>

#include "cognet/config.hpp"
#include "cognet/geometry.hpp"

namespace cognet::throughput {

// Constant per-user rate floor C1_bar = log(1 + P_r_min / (sigma2 + I_P + I_inf)).
// I_P comes from the hexagonal primary lattice (normalized eps_c/R0, rescaled by
// P0/R0^alpha) including its truncation tail, so the floor stays a true bound.
struct RateLowerBound {
    double c1_bar = 0.0;
    double p_r_min = 0.0;  // P / D_max^alpha (constant) or Pc / K_d^alpha (scaled)
    double i_p = 0.0;      // worst-case primary interference, power units
    double i_infty = 0.0;  // limit of the average cognitive interference
};

RateLowerBound rate_lower_bound(const NetworkConfig& config, int lattice_K = 200,
                                int theta_grid = 720);

// SINR rate of every cognitive pair under the full placement:
//   C_i = log(1 + P(r_i) |h_ii|^2 / (I_ci + I_pi + sigma2)).
std::vector<double> per_user_rates(const geometry::NodePlacement& placement,
                                   const NetworkConfig& config);

struct ScalingPoint {
    long n = 0;
    double mean_per_user_rate = 0.0; // T_n, averaged over seeds
    double sum_rate = 0.0;           // S_n = n * T_n
    double std_across_seeds = 0.0;
    double lower_bound_c1bar = 0.0;
    int seeds_used = 0;
};

struct ScalingRun {
    std::vector<long> n_values;
    std::vector<ScalingPoint> per_n;
};

struct ExperimentOptions {
    int workers = 1;
    int lattice_K = 200;
    int theta_grid = 720;
};

// Fixed density: the network radius grows as R(n) = sqrt(n/(lambda pi) + (R0+eps_p)^2);
// each (n, seed) cell draws an independent placement of exactly n pairs.
ScalingRun scaling_experiment(const NetworkConfig& config,
                              const std::vector<long>& n_values, int seeds_per_n,
                              std::uint64_t seed, const ExperimentOptions& options = {});

struct ConcentrationPoint {
    long n = 0;
    double delta = 0.0;
    double p_delta = 0.0;           // empirical Pr[|S_n - mean| / n >= delta]
    double p_delta_std_error = 0.0; // binomial
    double std_sn_over_n = 0.0;     // std of S_n / n across trials
    double var_per_user = 0.0;      // var(S_n) / n, the K2 proxy
    int trials = 0;
};

std::vector<ConcentrationPoint> concentration_experiment(
    const NetworkConfig& config, const std::vector<long>& n_values, int trials,
    double delta, std::uint64_t seed, const ExperimentOptions& options = {});

} // namespace cognet::throughput
