#include "cognet/interference.hpp"

#include <cmath>

#include "cognet/channel.hpp"
#include "cognet/errors.hpp"
#include "cognet/parallel.hpp"

namespace cognet::interference {

namespace {

constexpr std::uint64_t kTagPrimaryRxTrial = 0x11901ull;
constexpr std::uint64_t kTagCentralRxTrial = 0x11902ull;

struct Welford {
    long n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / n;
        m2 += d * (x - mean);
    }
    double variance() const { return n > 1 ? m2 / (n - 1) : 0.0; }
};

InterferenceEstimate summarize(const std::vector<double>& draws, std::uint64_t seed) {
    Welford w;
    for (double v : draws) w.add(v);
    InterferenceEstimate est;
    est.mean = w.mean;
    est.variance = w.variance();
    est.stderr_of_mean = w.n > 0 ? std::sqrt(est.variance / w.n) : 0.0;
    est.n_trials = w.n;
    est.seed = seed;
    return est;
}

} // namespace

double mc_interference_at(const geometry::Point& point,
                          const geometry::NodePlacement& placement,
                          const NetworkConfig& config, RoleFilter filter,
                          const AtOptions& options) {
    const double alpha = config.path_loss_alpha;
    double total = 0.0;
    if (filter != RoleFilter::PrimaryOnly) {
        for (std::size_t j = 0; j < placement.cognitive_tx.size(); ++j) {
            if (static_cast<int>(j) == options.exclude_pair) continue;
            const auto& tx = placement.cognitive_tx[j];
            const double d = geometry::dist(tx, point);
            if (options.min_distance > 0.0 && d < options.min_distance)
                throw DomainError("mc_interference_at: protected radius violated");
            total += channel::tx_power(geometry::norm(tx), config) * std::pow(d, -alpha);
        }
    }
    if (filter != RoleFilter::CognitiveOnly) {
        for (const auto& ptx : placement.primary_tx) {
            const double d = geometry::dist(ptx, point);
            if (options.min_distance > 0.0 && d < options.min_distance)
                throw DomainError("mc_interference_at: protected radius violated");
            total += config.primary_power_P0 * std::pow(d, -alpha);
        }
    }
    return total;
}

double avg_cog_interference(const NetworkConfig& config, OuterRadius R) {
    const double a = config.alpha_eff();
    if (!(a > 2.0)) throw DomainError("avg_cog_interference: alpha - gamma must exceed 2");
    const double eps_c = config.rx_protect_eps_c;
    const double coeff = 2.0 * M_PI * config.density_lambda * config.power_coeff() / (a - 2.0);
    double tail = 0.0;
    if (R.is_finite()) {
        if (R.value() <= eps_c) return 0.0; // empty annulus
        tail = std::pow(R.value(), 2.0 - a);
    }
    return coeff * (std::pow(eps_c, 2.0 - a) - tail);
}

namespace {

// One sublattice of the hexagonal packing, seen from the receiver at
// (eps_c cos t, eps_c sin t): x(k) = a k + s, y(m) = c m + t_shift.
struct Sublattice {
    double a, s, c, t;
};

// Bound for the quarter-plane sum
//   sum_{k,m >= 0} [(a k + b)^2 + (c m + d)^2]^(-alpha/2),   b + d > 0:
// flatten with 1/(x^2+y^2)^(alpha/2) <= 2^(alpha/2)/(x+y)^alpha, then apply
//   sum_{k>=0} (s k + B)^-alpha <= B^-alpha + B^(1-alpha)/((alpha-1) s)
// once per index.
double quarter_bound(double a, double b, double c, double d, double alpha) {
    const double bd = b + d;
    const double lead = std::pow(2.0, 0.5 * alpha);
    const double p0 = std::pow(bd, -alpha);
    const double p1 = std::pow(bd, 1.0 - alpha);
    const double p2 = std::pow(bd, 2.0 - alpha);
    return lead * (p0 + p1 / ((alpha - 1.0) * c) +
                   (p1 + p2 / ((alpha - 2.0) * c)) / ((alpha - 1.0) * a));
}

// 1-D tail sum_{m>=0} [X^2 + (c m + B)^2]^(-alpha/2), X >= 0, B > 0.
double strip_bound(double X, double B, double c, double alpha) {
    const double base = X + B;
    return std::pow(2.0, 0.5 * alpha) *
           (std::pow(base, -alpha) + std::pow(base, 1.0 - alpha) / ((alpha - 1.0) * c));
}

// Bound on everything the |k|,|m| <= K box drops for one sublattice: the two
// half-strips |k| > K (each split at m >= 0 / m < 0) plus the top and bottom
// middle strips |k| <= K, |m| > K (bounded per column).
double sublattice_tail_bound(const Sublattice& sl, int K, double alpha) {
    const double b_right = sl.a * (K + 1) + sl.s;
    const double b_left = sl.a * (K + 1) - sl.s;
    const double d_up = sl.t;
    const double d_down = sl.c - sl.t;
    double tail = quarter_bound(sl.a, b_right, sl.c, d_up, alpha) +
                  quarter_bound(sl.a, b_right, sl.c, d_down, alpha) +
                  quarter_bound(sl.a, b_left, sl.c, d_up, alpha) +
                  quarter_bound(sl.a, b_left, sl.c, d_down, alpha);
    const double B_top = sl.c * (K + 1) + sl.t;
    const double B_bottom = sl.c * (K + 1) - sl.t;
    for (int k = -K; k <= K; ++k) {
        const double X = std::fabs(sl.a * k + sl.s);
        tail += strip_bound(X, B_top, sl.c, alpha);
        tail += strip_bound(X, B_bottom, sl.c, alpha);
    }
    return tail;
}

double sublattice_value(const Sublattice& sl, int K, double alpha, bool skip_origin) {
    const double half_alpha = 0.5 * alpha;
    double sum = 0.0;
    for (int k = -K; k <= K; ++k) {
        const double x = sl.a * k + sl.s;
        for (int m = -K; m <= K; ++m) {
            if (skip_origin && k == 0 && m == 0) continue;
            const double y = sl.c * m + sl.t;
            sum += std::pow(x * x + y * y, -half_alpha);
        }
    }
    return sum;
}

} // namespace

LatticeSumResult lattice_interference(double theta, double eps_c, double alpha,
                                      int truncation_K, const LatticeOptions& options) {
    if (!(eps_c > 0.0 && eps_c < 1.0))
        throw DomainError("lattice_interference: eps_c must lie in (0,1) (normalized to R0)");
    if (!(alpha > 2.0)) throw DomainError("lattice_interference: alpha must exceed 2");
    if (truncation_K < 1) throw DomainError("lattice_interference: truncation_K >= 1 required");

    const double s3 = std::sqrt(3.0);
    const double u = eps_c * std::cos(theta);
    const double v = eps_c * std::sin(theta);
    const Sublattice even{2.0 * s3, -u, 2.0, -v};
    const Sublattice odd{2.0 * s3, s3 - u, 2.0, 1.0 - v};

    LatticeSumResult result;
    result.truncation_K = truncation_K;
    result.theta = theta;
    result.value = sublattice_value(even, truncation_K, alpha, !options.include_origin) +
                   sublattice_value(odd, truncation_K, alpha, false);
    result.tail_bound = sublattice_tail_bound(even, truncation_K, alpha) +
                        sublattice_tail_bound(odd, truncation_K, alpha);
    return result;
}

WorstCaseInterference worst_case_primary_interference(double eps_c, double alpha,
                                                      int truncation_K,
                                                      int theta_grid_size,
                                                      const LatticeOptions& options) {
    if (theta_grid_size < 1)
        throw DomainError("worst_case_primary_interference: grid size >= 1 required");
    WorstCaseInterference worst;
    for (int i = 0; i < theta_grid_size; ++i) {
        const double theta = 2.0 * M_PI * i / theta_grid_size;
        const LatticeSumResult r =
            lattice_interference(theta, eps_c, alpha, truncation_K, options);
        if (i == 0 || r.value > worst.value) {
            worst.value = r.value;
            worst.theta_at_max = theta;
        }
        worst.tail_bound = std::max(worst.tail_bound, r.tail_bound);
    }
    return worst;
}

InterferenceEstimate mc_primary_rx_interference(const NetworkConfig& config,
                                                long n_trials, std::uint64_t seed,
                                                const McOptions& options) {
    const double inner = config.per_radius_R0 + config.guard_band_eps_p;
    const double R = config.network_radius_R;
    const double r0 = config.per_radius_R0;
    const double mean_count = config.density_lambda * M_PI * (R * R - inner * inner);
    const double half_alpha = 0.5 * config.path_loss_alpha;
    const double in2 = inner * inner, span2 = R * R - inner * inner;

    std::vector<double> draws(static_cast<std::size_t>(n_trials), 0.0);
    parallel_for(draws.size(), options.workers, [&](std::size_t t) {
        Rng rng = Rng::stream(seed, kTagPrimaryRxTrial, t);
        const long count = rng.poisson(mean_count);
        double total = 0.0;
        for (long i = 0; i < count; ++i) {
            const double r = std::sqrt(in2 + rng.uniform01() * span2);
            const double theta = 2.0 * M_PI * rng.uniform01();
            const double d2 = r * r + r0 * r0 - 2.0 * r0 * r * std::cos(theta);
            total += channel::tx_power(r, config) * std::pow(d2, -half_alpha);
        }
        draws[t] = total;
    });
    if (options.raw_sink) *options.raw_sink = draws;
    return summarize(draws, seed);
}

InterferenceEstimate mc_central_rx_interference(const NetworkConfig& config, double R,
                                                long n_trials, std::uint64_t seed,
                                                const McOptions& options) {
    const double eps_c = config.rx_protect_eps_c;
    if (!(R > eps_c)) throw DomainError("mc_central_rx_interference: R must exceed eps_c");
    const double mean_count = config.density_lambda * M_PI * (R * R - eps_c * eps_c);
    const double in2 = eps_c * eps_c, span2 = R * R - in2;
    const double alpha = config.path_loss_alpha;

    std::vector<double> draws(static_cast<std::size_t>(n_trials), 0.0);
    parallel_for(draws.size(), options.workers, [&](std::size_t t) {
        Rng rng = Rng::stream(seed, kTagCentralRxTrial, t);
        const long count = rng.poisson(mean_count);
        double total = 0.0;
        for (long i = 0; i < count; ++i) {
            const double r = std::sqrt(in2 + rng.uniform01() * span2);
            total += channel::tx_power(r, config) * std::pow(r, -alpha);
        }
        draws[t] = total;
    });
    if (options.raw_sink) *options.raw_sink = draws;
    return summarize(draws, seed);
}

} // namespace cognet::interference
