#include "cognet/per_design.hpp"

#include <cmath>

#include "cognet/channel.hpp"
#include "cognet/errors.hpp"
#include "cognet/parallel.hpp"
#include "cognet/rng.hpp"

namespace cognet::per_design {

namespace {

constexpr std::uint64_t kTagOutageTrial = 0x07a9eull;

double snr_threshold_factor(const NetworkConfig& config) {
    const double c0 = derived_quantities(config).outage_C0;
    if (!(c0 > 0.0)) throw DomainError("per_design: outage rate C0 must be positive");
    return config.rate_log2 ? std::exp2(c0) - 1.0 : std::expm1(c0);
}

} // namespace

double interference_free_radius(const NetworkConfig& config) {
    const double t = snr_threshold_factor(config);
    return std::pow(config.primary_power_P0 / (config.noise_sigma2 * t),
                    1.0 / config.path_loss_alpha);
}

double markov_radius(const NetworkConfig& config) {
    const double beta = config.outage_prob_beta;
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("markov_radius: beta must lie in (0,1)");
    const double a = config.alpha_eff();
    if (!(a > 2.0)) throw DomainError("markov_radius: alpha - gamma must exceed 2");
    const double t = snr_threshold_factor(config);
    const double interference_term = 2.0 * M_PI * config.power_coeff() *
                                     config.density_lambda /
                                     (beta * (a - 2.0) *
                                      std::pow(config.guard_band_eps_p, a - 2.0));
    const double rhs = config.primary_power_P0 / t /
                       (interference_term + config.noise_sigma2);
    return std::pow(rhs, 1.0 / config.path_loss_alpha);
}

ImplicitSides implicit_sides(const NetworkConfig& config, double r0) {
    const double eps_p = config.guard_band_eps_p;
    const double t = snr_threshold_factor(config);
    ImplicitSides sides;
    sides.lhs = (r0 + eps_p) * (r0 + eps_p) /
                (eps_p * eps_p * (2.0 * r0 + eps_p) * (2.0 * r0 + eps_p));
    sides.rhs = config.outage_prob_beta /
                (config.density_lambda * M_PI * config.power_coeff()) *
                (config.primary_power_P0 * std::pow(r0, -config.path_loss_alpha) / t -
                 config.noise_sigma2);
    return sides;
}

double implicit_radius_alpha4(const NetworkConfig& config, bool* multiple_roots_warning) {
    if (std::fabs(config.alpha_eff() - 4.0) > 1e-12)
        throw DomainError("implicit_radius_alpha4: requires alpha - gamma == 4");
    const double top = interference_free_radius(config);

    auto excess = [&](double r0) {
        const ImplicitSides s = implicit_sides(config, r0);
        return s.rhs - s.lhs;
    };

    // Largest feasible radius: scan downward from the noise ceiling for the
    // first bracket where the inequality flips back to holding.
    const int grid = 4096;
    const double lo_end = top * 1e-6;
    double hi = top, hi_val = excess(top);
    double bracket_lo = 0.0, bracket_hi = 0.0;
    bool found = false;
    int sign_changes = 0;
    for (int i = 1; i <= grid; ++i) {
        const double r = top - (top - lo_end) * i / grid;
        const double v = excess(r);
        if ((v >= 0.0) != (hi_val >= 0.0)) {
            ++sign_changes;
            if (!found && v >= 0.0) {
                bracket_lo = r;
                bracket_hi = hi;
                found = true;
            }
        }
        hi = r;
        hi_val = v;
    }
    if (multiple_roots_warning) *multiple_roots_warning = sign_changes > 1;
    if (!found)
        throw InfeasibleError(
            "implicit_radius_alpha4: no feasible R0 (outage inequality never holds)");

    double lo = bracket_lo;
    hi = bracket_hi;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) >= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

PerSolution solve(const NetworkConfig& config) {
    PerSolution sol;
    sol.r0_interference_free = interference_free_radius(config);
    sol.r0_markov = markov_radius(config);
    if (std::fabs(config.alpha_eff() - 4.0) <= 1e-12) {
        sol.r0_implicit = implicit_radius_alpha4(config, &sol.multiple_roots_warning);
        sol.binding_constraint = BindingConstraint::Implicit;
    } else {
        sol.binding_constraint = BindingConstraint::MarkovBound;
    }
    const double recommended = sol.r0_implicit.value_or(sol.r0_markov);
    if (sol.r0_interference_free - recommended <= 1e-9 * sol.r0_interference_free)
        sol.binding_constraint = BindingConstraint::Noise;
    return sol;
}

std::vector<TradeoffRow> tradeoff_r0_vs_eps(const NetworkConfig& config,
                                            const std::vector<double>& c0_list,
                                            const std::vector<double>& eps_grid) {
    std::vector<TradeoffRow> rows;
    const bool alpha4 = std::fabs(config.alpha_eff() - 4.0) <= 1e-12;
    for (double c0 : c0_list) {
        for (double eps_p : eps_grid) {
            NetworkConfig c = config;
            c.outage_rate_C0 = c0;
            c.eta_fraction.reset();
            c.guard_band_eps_p = eps_p;
            TradeoffRow row;
            row.c0 = c0;
            row.eps_p = eps_p;
            try {
                row.r0_markov = markov_radius(c);
                if (alpha4) row.r0_implicit = implicit_radius_alpha4(c);
            } catch (const InfeasibleError&) {
                continue; // missing row, not a global failure
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<PowerRow> tradeoff_p0_vs_r0(const NetworkConfig& config,
                                        const std::vector<double>& eps_list,
                                        const std::vector<double>& r0_grid) {
    std::vector<PowerRow> rows;
    const double t = snr_threshold_factor(config);
    const double a = config.alpha_eff();
    const bool alpha4 = std::fabs(a - 4.0) <= 1e-12;
    for (double eps_p : eps_list) {
        for (double r0 : r0_grid) {
            NetworkConfig c = config;
            c.guard_band_eps_p = eps_p;
            PowerRow row;
            row.eps_p = eps_p;
            row.r0 = r0;
            const double signal_decay = std::pow(r0, config.path_loss_alpha);
            const double markov_interference =
                2.0 * M_PI * c.power_coeff() * c.density_lambda /
                (c.outage_prob_beta * (a - 2.0) * std::pow(eps_p, a - 2.0));
            row.p0_markov = signal_decay * t * (c.noise_sigma2 + markov_interference);
            if (alpha4) {
                const double lhs = implicit_sides(c, r0).lhs;
                row.p0_implicit =
                    signal_decay * t *
                    (c.noise_sigma2 + c.density_lambda * M_PI * c.power_coeff() * lhs /
                                          c.outage_prob_beta);
            }
            rows.push_back(row);
        }
    }
    return rows;
}

OutageEstimate empirical_outage(const NetworkConfig& config, long trials,
                                std::uint64_t seed, int workers) {
    const double t = snr_threshold_factor(config);
    const double threshold =
        config.primary_power_P0 * std::pow(config.per_radius_R0, -config.path_loss_alpha) /
            t -
        config.noise_sigma2;

    const double inner = config.per_radius_R0 + config.guard_band_eps_p;
    const double R = config.network_radius_R;
    const double r0 = config.per_radius_R0;
    const double mean_count = config.density_lambda * M_PI * (R * R - inner * inner);
    const double in2 = inner * inner, span2 = R * R - in2;
    const double half_alpha = 0.5 * config.path_loss_alpha;

    std::vector<unsigned char> outage(static_cast<std::size_t>(trials), 0);
    parallel_for(outage.size(), workers, [&](std::size_t trial) {
        if (threshold <= 0.0) { // outage by noise alone
            outage[trial] = 1;
            return;
        }
        Rng rng = Rng::stream(seed, kTagOutageTrial, trial);
        const long count = rng.poisson(mean_count);
        double i0 = 0.0;
        for (long i = 0; i < count; ++i) {
            const double r = std::sqrt(in2 + rng.uniform01() * span2);
            const double theta = 2.0 * M_PI * rng.uniform01();
            const double d2 = r * r + r0 * r0 - 2.0 * r0 * r * std::cos(theta);
            i0 += channel::tx_power(r, config) * std::pow(d2, -half_alpha);
            if (i0 >= threshold) break;
        }
        outage[trial] = i0 >= threshold ? 1 : 0;
    });

    OutageEstimate est;
    est.trials = trials;
    for (unsigned char o : outage) est.outages += o;
    est.p_hat = trials > 0 ? static_cast<double>(est.outages) / trials : 0.0;
    est.std_error =
        trials > 0 ? std::sqrt(est.p_hat * (1.0 - est.p_hat) / trials) : 0.0;
    return est;
}

} // namespace cognet::per_design
