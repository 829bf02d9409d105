#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cognet/config.hpp"

namespace cognet::per_design {

enum class BindingConstraint { Noise, MarkovBound, Implicit };

struct PerSolution {
    double r0_interference_free = 0.0;
    double r0_markov = 0.0;
    std::optional<double> r0_implicit; // alpha - gamma == 4 only
    BindingConstraint binding_constraint = BindingConstraint::MarkovBound;
    bool multiple_roots_warning = false;
};

// Noise-only ceiling: R0 <= (P0 / (sigma2 (2^C0 - 1)))^(1/alpha).
double interference_free_radius(const NetworkConfig& config);

// Markov-inequality radius using the R->infinity upper bound on E[I0]:
//   R0^alpha <= P0/(2^C0-1) * (2 pi P lambda / (beta (a-2) eps_p^(a-2)) + sigma2)^-1.
double markov_radius(const NetworkConfig& config);

// Largest R0 satisfying the exact-exponent-4 outage inequality
//   (R0+eps_p)^2 / (eps_p^2 (2R0+eps_p)^2) <= beta/(lambda pi P) (P0 R0^-alpha/(2^C0-1) - sigma2),
// found by bisection to 1e-9 absolute inside (0, r0_interference_free].
double implicit_radius_alpha4(const NetworkConfig& config,
                              bool* multiple_roots_warning = nullptr);

// Both sides of the implicit inequality at a given radius (root diagnostics).
struct ImplicitSides {
    double lhs = 0.0;
    double rhs = 0.0;
};
ImplicitSides implicit_sides(const NetworkConfig& config, double r0);

PerSolution solve(const NetworkConfig& config);

struct TradeoffRow {
    double c0 = 0.0;
    double eps_p = 0.0;
    double r0_markov = 0.0;
    std::optional<double> r0_implicit;
};

// Fig. 10 analogue: R0 against the guard band width, one series per C0.
std::vector<TradeoffRow> tradeoff_r0_vs_eps(const NetworkConfig& config,
                                            const std::vector<double>& c0_list,
                                            const std::vector<double>& eps_grid);

struct PowerRow {
    double eps_p = 0.0;
    double r0 = 0.0;
    double p0_markov = 0.0;
    std::optional<double> p0_implicit;
};

// Fig. 11 analogue: required primary power against R0, one series per eps_p.
std::vector<PowerRow> tradeoff_p0_vs_r0(const NetworkConfig& config,
                                        const std::vector<double>& eps_list,
                                        const std::vector<double>& r0_grid);

struct OutageEstimate {
    long trials = 0;
    long outages = 0;
    double p_hat = 0.0;
    double std_error = 0.0; // binomial
};

// Empirical Pr[primary rate <= C0] with the receiver on the PER edge, over
// independent cognitive placements on [R0+eps_p, R].
OutageEstimate empirical_outage(const NetworkConfig& config, long trials,
                                std::uint64_t seed, int workers = 1);

} // namespace cognet::per_design
