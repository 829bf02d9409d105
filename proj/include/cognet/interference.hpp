#pragma once

#include <cstdint>
#include <vector>

#include "cognet/config.hpp"
#include "cognet/geometry.hpp"

namespace cognet::interference {

enum class RoleFilter { CognitiveOnly, PrimaryOnly, All };

struct AtOptions {
    int exclude_pair = -1;      // cognitive pair index whose tx is skipped
    double min_distance = 0.0;  // protected radius to enforce (0 = off)
};

// Sum of tx_power(r_j) * d_j^-alpha over the selected transmitters at `point`.
// Throws DomainError when a contributing tx violates min_distance.
double mc_interference_at(const geometry::Point& point,
                          const geometry::NodePlacement& placement,
                          const NetworkConfig& config, RoleFilter filter,
                          const AtOptions& options = {});

// Closed-form worst-case mean interference at a central cognitive receiver:
//   2 pi lambda P / (a-2) * (eps_c^-(a-2) - R^-(a-2)),  a = alpha - gamma.
// R = infinity gives the I_infinity limit.
double avg_cog_interference(const NetworkConfig& config, OuterRadius R);

struct LatticeSumResult {
    double value = 0.0;     // truncated double sum, both sublattices
    int truncation_K = 0;
    double tail_bound = 0.0; // rigorous bound on the dropped terms
    double theta = 0.0;
};

struct LatticeOptions {
    // The origin primary tx sits eps_c away from the worst-case cognitive rx;
    // kept by default (worst case), excludable when the rx belongs to that cell.
    bool include_origin = true;
};

// Interference from the hexagonal primary lattice to a cognitive receiver at
// angle theta on the eps_c circle (normalized units, 1 unit = R0).
LatticeSumResult lattice_interference(double theta, double eps_c, double alpha,
                                      int truncation_K,
                                      const LatticeOptions& options = {});

struct WorstCaseInterference {
    double value = 0.0;       // max over the theta grid
    double tail_bound = 0.0;  // worst tail bound over the grid (upper enclosure)
    double theta_at_max = 0.0;
};

WorstCaseInterference worst_case_primary_interference(double eps_c, double alpha,
                                                      int truncation_K,
                                                      int theta_grid_size,
                                                      const LatticeOptions& options = {});

struct InterferenceEstimate {
    double mean = 0.0;
    double variance = 0.0;       // sample variance across trials
    double stderr_of_mean = 0.0; // sqrt(variance / n_trials)
    long n_trials = 0;
    std::uint64_t seed = 0;
};

struct McOptions {
    int workers = 1;
    std::vector<double>* raw_sink = nullptr; // per-trial draws, for --dump-raw
};

// Monte Carlo E[I0] at the primary receiver on the PER edge (single PER at
// the origin): repeated Poisson draws of the cognitive field on the annulus
// [R0+eps_p, R].
InterferenceEstimate mc_primary_rx_interference(const NetworkConfig& config,
                                                long n_trials, std::uint64_t seed,
                                                const McOptions& options = {});

// Monte Carlo counterpart of avg_cog_interference: interferers on [eps_c, R]
// around a receiver at the network center.
InterferenceEstimate mc_central_rx_interference(const NetworkConfig& config, double R,
                                                long n_trials, std::uint64_t seed,
                                                const McOptions& options = {});

} // namespace cognet::interference
