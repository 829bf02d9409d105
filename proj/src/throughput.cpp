#include "cognet/throughput.hpp"

#include <cmath>

#include "cognet/channel.hpp"
#include "cognet/errors.hpp"
#include "cognet/interference.hpp"
#include "cognet/parallel.hpp"
#include "cognet/rng.hpp"

namespace cognet::throughput {

namespace {

constexpr std::uint64_t kTagScaling = 0x5ca11ull;
constexpr std::uint64_t kTagConcentration = 0xc0ccull;

double rate_from_sinr(double sinr, const NetworkConfig& config) {
    return config.rate_log2 ? std::log2(1.0 + sinr) : std::log1p(sinr);
}

// Network radius that keeps the admissible area at n/lambda.
double radius_for_n(const NetworkConfig& config, long n) {
    const double inner = config.per_radius_R0 + config.guard_band_eps_p;
    return std::sqrt(static_cast<double>(n) / (config.density_lambda * M_PI) +
                     inner * inner);
}

} // namespace

RateLowerBound rate_lower_bound(const NetworkConfig& config, int lattice_K,
                                int theta_grid) {
    RateLowerBound lb;
    const double alpha = config.path_loss_alpha;
    lb.p_r_min = config.power_coeff() / std::pow(config.dmax, alpha);

    const auto worst = interference::worst_case_primary_interference(
        config.rx_protect_eps_c / config.per_radius_R0, alpha, lattice_K, theta_grid);
    // Lattice sum is in units normalized to R0 and unit primary power.
    lb.i_p = config.primary_power_P0 * std::pow(config.per_radius_R0, -alpha) *
             (worst.value + worst.tail_bound);
    lb.i_infty = interference::avg_cog_interference(config, OuterRadius::infinity());
    lb.c1_bar = rate_from_sinr(
        lb.p_r_min / (config.noise_sigma2 + lb.i_p + lb.i_infty), config);
    return lb;
}

std::vector<double> per_user_rates(const geometry::NodePlacement& placement,
                                   const NetworkConfig& config) {
    const double alpha = config.path_loss_alpha;
    const std::size_t n = placement.cognitive_tx.size();
    if (placement.cognitive_rx.size() != n)
        throw DomainError("per_user_rates: placement has unpaired transmitters");

    std::vector<double> power(n);
    for (std::size_t j = 0; j < n; ++j)
        power[j] = channel::tx_power(geometry::norm(placement.cognitive_tx[j]), config);

    std::vector<double> rates(n);
    for (std::size_t i = 0; i < n; ++i) {
        const geometry::Point& rx = placement.cognitive_rx[i];
        const double d_own = geometry::dist(placement.cognitive_tx[i], rx);
        const double signal = power[i] * std::pow(d_own, -alpha);
        double interference = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            interference +=
                power[j] * std::pow(geometry::dist(placement.cognitive_tx[j], rx), -alpha);
        }
        for (const auto& ptx : placement.primary_tx)
            interference +=
                config.primary_power_P0 * std::pow(geometry::dist(ptx, rx), -alpha);
        rates[i] = rate_from_sinr(signal / (config.noise_sigma2 + interference), config);
    }
    return rates;
}

ScalingRun scaling_experiment(const NetworkConfig& config,
                              const std::vector<long>& n_values, int seeds_per_n,
                              std::uint64_t seed, const ExperimentOptions& options) {
    const RateLowerBound lb =
        rate_lower_bound(config, options.lattice_K, options.theta_grid);

    ScalingRun run;
    run.n_values = n_values;
    run.per_n.resize(n_values.size());

    // Flatten (n, seed) cells; each draws its own placement stream.
    struct Cell {
        std::size_t n_index;
        int seed_index;
    };
    std::vector<Cell> cells;
    for (std::size_t ni = 0; ni < n_values.size(); ++ni)
        for (int s = 0; s < seeds_per_n; ++s) cells.push_back({ni, s});
    std::vector<double> cell_mean(cells.size(), 0.0);

    parallel_for(cells.size(), options.workers, [&](std::size_t idx) {
        const Cell cell = cells[idx];
        const long n = n_values[cell.n_index];
        NetworkConfig c = config;
        c.network_radius_R = radius_for_n(config, n);
        const std::uint64_t placement_seed =
            derive_seed(seed, kTagScaling, static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(cell.seed_index));
        const auto placement =
            geometry::place_network(c, geometry::NMode::fixed(n), placement_seed);
        const auto rates = per_user_rates(placement, c);
        double sum = 0.0;
        for (double r : rates) sum += r;
        cell_mean[idx] = rates.empty() ? 0.0 : sum / static_cast<double>(rates.size());
    });

    for (std::size_t ni = 0; ni < n_values.size(); ++ni) {
        double sum = 0.0, sum2 = 0.0;
        int used = 0;
        for (std::size_t idx = 0; idx < cells.size(); ++idx) {
            if (cells[idx].n_index != ni) continue;
            sum += cell_mean[idx];
            ++used;
        }
        const double mean = used ? sum / used : 0.0;
        for (std::size_t idx = 0; idx < cells.size(); ++idx) {
            if (cells[idx].n_index != ni) continue;
            sum2 += (cell_mean[idx] - mean) * (cell_mean[idx] - mean);
        }
        ScalingPoint& point = run.per_n[ni];
        point.n = n_values[ni];
        point.mean_per_user_rate = mean;
        point.sum_rate = mean * static_cast<double>(point.n);
        point.std_across_seeds = used > 1 ? std::sqrt(sum2 / (used - 1)) : 0.0;
        point.lower_bound_c1bar = lb.c1_bar;
        point.seeds_used = used;
    }
    return run;
}

std::vector<ConcentrationPoint> concentration_experiment(
    const NetworkConfig& config, const std::vector<long>& n_values, int trials,
    double delta, std::uint64_t seed, const ExperimentOptions& options) {
    std::vector<ConcentrationPoint> points;
    for (long n : n_values) {
        NetworkConfig c = config;
        c.network_radius_R = radius_for_n(config, n);

        std::vector<double> sums(static_cast<std::size_t>(trials), 0.0);
        parallel_for(sums.size(), options.workers, [&](std::size_t t) {
            const std::uint64_t placement_seed = derive_seed(
                seed, kTagConcentration, static_cast<std::uint64_t>(n), t);
            const auto placement =
                geometry::place_network(c, geometry::NMode::fixed(n), placement_seed);
            const auto rates = per_user_rates(placement, c);
            double sum = 0.0;
            for (double r : rates) sum += r;
            sums[t] = sum;
        });

        double mean = 0.0;
        for (double s : sums) mean += s;
        mean /= static_cast<double>(trials);
        double var = 0.0;
        long exceed = 0;
        for (double s : sums) {
            var += (s - mean) * (s - mean);
            if (std::fabs(s - mean) / static_cast<double>(n) >= delta) ++exceed;
        }
        var = trials > 1 ? var / (trials - 1) : 0.0;

        ConcentrationPoint point;
        point.n = n;
        point.delta = delta;
        point.p_delta = static_cast<double>(exceed) / static_cast<double>(trials);
        point.p_delta_std_error =
            std::sqrt(point.p_delta * (1.0 - point.p_delta) / trials);
        point.std_sn_over_n = std::sqrt(var) / static_cast<double>(n);
        point.var_per_user = var / static_cast<double>(n);
        point.trials = trials;
        points.push_back(point);
    }
    return points;
}

} // namespace cognet::throughput
