#include "cognet/bounds.hpp"

#include <cmath>
#include <sstream>

#include "cognet/errors.hpp"
#include "cognet/quadrature.hpp"

namespace cognet::bounds {

namespace {

bool near_integer(double x, long& out) {
    const double r = std::round(x);
    if (std::fabs(x - r) < 1e-12) {
        out = static_cast<long>(r);
        return true;
    }
    return false;
}

struct EffectiveParams {
    double a;  // alpha - gamma
    double p;  // P or Pc
};

EffectiveParams effective(const NetworkConfig& config, const char* where) {
    const EffectiveParams e{config.alpha_eff(), config.power_coeff()};
    if (!(e.a > 2.0))
        throw DomainError(std::string(where) + ": alpha - gamma must exceed 2");
    return e;
}

} // namespace

double a_alpha(double alpha) {
    if (!(alpha >= 2.0)) throw DomainError("a_alpha: alpha must be >= 2");
    long n = 0;
    if (near_integer(alpha, n) && n >= 2 && n <= 10) {
        switch (n) {
            case 2: return M_PI;
            case 3: return 2.0;
            case 4: return M_PI / 2.0;
            case 5: return 4.0 / 3.0;
            case 6: return 3.0 * M_PI / 8.0;
            case 7: return 16.0 / 15.0;
            case 8: return 5.0 * M_PI / 16.0;
            case 9: return 32.0 / 35.0;
            case 10: return 35.0 * M_PI / 128.0;
        }
    }
    return a_alpha_quadrature(alpha);
}

double a_alpha_quadrature(double alpha, double tol) {
    if (!(alpha >= 2.0)) throw DomainError("a_alpha_quadrature: alpha must be >= 2");
    const double expo = alpha - 2.0;
    const auto result = quadrature::integrate_adaptive(
        [expo](double phi) { return std::pow(std::cos(phi), expo); }, -M_PI / 2.0,
        M_PI / 2.0, tol * 0.5, 1e-14);
    if (!result.converged)
        throw NumericError("a_alpha_quadrature: did not converge, error " +
                           std::to_string(result.error));
    return result.value;
}

double lower_bound_1(const NetworkConfig& config, OuterRadius R) {
    const auto [a, p] = effective(config, "lower_bound_1");
    const double r0 = config.per_radius_R0, eps_p = config.guard_band_eps_p;
    const double coeff = 2.0 * M_PI * config.density_lambda * p / (a - 2.0);
    const double near = std::pow(2.0 * r0 + eps_p, 2.0 - a);
    if (!R.is_finite()) return coeff * near;
    // Re-centered ring [2R0+eps_p, R-R0]; empty ring still lower-bounds by 0.
    if (R.value() - r0 <= 2.0 * r0 + eps_p) return 0.0;
    return coeff * (near - std::pow(R.value() - r0, 2.0 - a));
}

double lower_bound_2(const NetworkConfig& config, OuterRadius R) {
    const auto [a, p] = effective(config, "lower_bound_2");
    const double r0 = config.per_radius_R0, eps_p = config.guard_band_eps_p;
    const double coeff = config.density_lambda * p / (a - 2.0);
    const double planes = a_alpha(a) * (std::pow(eps_p, 2.0 - a) +
                                        std::pow(2.0 * r0 + eps_p, 2.0 - a));
    if (!R.is_finite()) return coeff * planes;
    return std::max(0.0, coeff * (planes - M_PI * std::pow(R.value(), 2.0 - a)));
}

double upper_bound(const NetworkConfig& config, OuterRadius R) {
    const auto [a, p] = effective(config, "upper_bound");
    const double coeff = 2.0 * M_PI * config.density_lambda * p / (a - 2.0);
    const double near = std::pow(config.guard_band_eps_p, 2.0 - a);
    if (!R.is_finite()) return coeff * near;
    return coeff * (near - std::pow(R.value() + config.per_radius_R0, 2.0 - a));
}

double exact_interference_alpha4(const NetworkConfig& config, OuterRadius R) {
    const auto [a, p] = effective(config, "exact_interference_alpha4");
    if (std::fabs(a - 4.0) > 1e-12)
        throw DomainError(
            "exact_interference_alpha4: requires alpha - gamma == 4; "
            "use quadrature_oracle for other exponents");
    const double r0 = config.per_radius_R0, eps_p = config.guard_band_eps_p;
    const double coeff = config.density_lambda * M_PI * p;
    const double near = (r0 + eps_p) * (r0 + eps_p) /
                        (eps_p * eps_p * (2.0 * r0 + eps_p) * (2.0 * r0 + eps_p));
    if (!R.is_finite()) return coeff * near;
    const double R2 = R.value() * R.value(), r02 = r0 * r0;
    return coeff * (near - R2 / ((R2 - r02) * (R2 - r02)));
}

double quadrature_oracle(const NetworkConfig& config, double R,
                         const OracleOptions& options) {
    const double alpha = config.path_loss_alpha;
    if (!(alpha > 2.0)) throw DomainError("quadrature_oracle: alpha must exceed 2");
    if (config.mode == PowerMode::DistanceScaledPower &&
        !(config.power_exponent_gamma < alpha - 2.0))
        throw DomainError("quadrature_oracle: gamma < alpha - 2 required");
    const double r0 = config.per_radius_R0, eps_p = config.guard_band_eps_p;
    if (!(R > r0 + eps_p))
        throw DomainError("quadrature_oracle: R must exceed R0 + eps_p");
    if (config.density_lambda == 0.0) return 0.0;

    const double gamma = config.gamma();
    const double coeff = config.density_lambda * config.power_coeff();
    const double half_alpha = 0.5 * alpha;

    long twice_half = 0;
    const bool even_alpha = !options.force_numeric_theta &&
                            near_integer(half_alpha, twice_half) && twice_half >= 2;

    // Angle integral H(r) = int_0^{2pi} (a + b cos t)^(-alpha/2) dt with
    // a = r^2 + R0^2, b = -2 R0 r.
    auto angle_integral = [&](double r) {
        const double ca = r * r + r0 * r0;
        const double cb = -2.0 * r0 * r;
        if (even_alpha)
            return quadrature::ring_integral_even(ca, cb, static_cast<int>(twice_half));
        const auto inner = quadrature::integrate_adaptive(
            [&](double t) { return std::pow(ca + cb * std::cos(t), -half_alpha); }, 0.0,
            M_PI, 0.0, 5e-13);
        if (!inner.converged)
            throw NumericError("quadrature_oracle: inner angle integral stalled at error " +
                               std::to_string(inner.error));
        return 2.0 * inner.value; // integrand symmetric about theta = pi
    };

    const auto outer = quadrature::integrate_adaptive(
        [&](double r) { return coeff * std::pow(r, 1.0 + gamma) * angle_integral(r); },
        r0 + eps_p, R, options.abs_tol, options.rel_tol);
    if (!outer.converged) {
        std::ostringstream os;
        os << "quadrature_oracle: did not reach tolerance, achieved " << outer.error;
        throw NumericError(os.str());
    }
    return outer.value;
}

BoundSet evaluate_bounds(const NetworkConfig& config, OuterRadius R) {
    BoundSet set;
    set.lb1 = lower_bound_1(config, R);
    set.lb2 = lower_bound_2(config, R);
    set.ub = upper_bound(config, R);
    set.finite_R = R.is_finite();
    set.gamma_used = config.gamma();
    if (std::fabs(config.alpha_eff() - 4.0) <= 1e-12)
        set.exact_alpha4 = exact_interference_alpha4(config, R);
    return set;
}

std::vector<FigureRow> figure_sweep(double alpha, double oracle_R, int r0_min,
                                    int r0_max) {
    NetworkConfig c = NetworkConfig::defaults();
    c.density_lambda = 1.0;
    c.cognitive_power_P = 1.0;
    c.guard_band_eps_p = 2.0;
    c.path_loss_alpha = alpha;
    c.mode = PowerMode::ConstantPower;

    NetworkConfig exact_cfg = c;
    exact_cfg.path_loss_alpha = 4.0;

    const bool is_alpha4 = std::fabs(alpha - 4.0) <= 1e-12;
    std::vector<FigureRow> rows;
    for (int r0 = r0_min; r0 <= r0_max; ++r0) {
        c.per_radius_R0 = r0;
        c.network_radius_R = oracle_R;
        exact_cfg.per_radius_R0 = r0;
        FigureRow row;
        row.r0 = r0;
        row.lb1 = lower_bound_1(c, OuterRadius::infinity());
        row.lb2 = lower_bound_2(c, OuterRadius::infinity());
        row.ub = upper_bound(c, OuterRadius::infinity());
        row.exact_alpha4 = exact_interference_alpha4(exact_cfg, OuterRadius::infinity());
        if (!is_alpha4) row.oracle = quadrature_oracle(c, oracle_R);
        rows.push_back(row);
    }
    return rows;
}

} // namespace cognet::bounds
