#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cognet {

enum class PowerMode {
    ConstantPower,       // every cognitive tx sends with power P
    DistanceScaledPower, // P(r) = Pc * r^gamma, r = distance to the primary tx
};

// Receiver pairing at the network edge: clip the pairing disc to the network
// disc, or let receivers fall outside it.
enum class EdgePolicy { Clip, WrapNone };

// One scenario. All lengths share one abstract unit and the channel constant
// is fixed at 1, so gains are plain d^-alpha. Immutable value record, freely
// shareable across workers.
struct NetworkConfig {
    double network_radius_R = 10.0;
    double per_radius_R0 = 2.0;
    double guard_band_eps_p = 2.0;
    // Kept well under 1/sqrt(lambda pi): the rx exclusion discs then leave
    // enough vacant area for rejection sampling to stay inside its budget.
    double rx_protect_eps_c = 0.5;
    double density_lambda = 1.0;
    double path_loss_alpha = 4.0;
    double cognitive_power_P = 1.0;
    double cognitive_power_Pc = 1.0;
    double power_exponent_gamma = 0.0;
    double primary_power_P0 = 100.0;
    double noise_sigma2 = 1.0;
    double outage_rate_C0 = 3.0;
    double outage_prob_beta = 0.1;
    std::optional<double> eta_fraction; // when set, C0 = eta * log2(1 + P0/sigma2)
    // Constant mode: max tx-rx pairing distance (default 5 * eps_c). Scaled
    // mode: the coefficient K_d in D_max(r) = K_d * r^(gamma/alpha).
    double dmax = 2.5;
    PowerMode mode = PowerMode::ConstantPower;

    // Artifact knobs with documented defaults.
    double pair_min_distance = 1e-3; // own tx-rx floor, keeps rates bounded
    bool rate_log2 = true;           // false -> natural log rates
    EdgePolicy edge_policy = EdgePolicy::Clip;

    // Effective path loss alpha* = alpha - gamma; the power-scaled network
    // behaves like an unscaled one with this exponent.
    double alpha_eff() const {
        return mode == PowerMode::DistanceScaledPower
                   ? path_loss_alpha - power_exponent_gamma
                   : path_loss_alpha;
    }

    double power_coeff() const {
        return mode == PowerMode::DistanceScaledPower ? cognitive_power_Pc
                                                      : cognitive_power_P;
    }

    double gamma() const {
        return mode == PowerMode::DistanceScaledPower ? power_exponent_gamma : 0.0;
    }

    static NetworkConfig defaults() { return NetworkConfig{}; }
};

// Explicit finite-or-infinite outer radius. The R->infinity limit formulas
// are evaluated directly instead of pushing a huge float through the finite
// expressions.
class OuterRadius {
public:
    OuterRadius(double r) : finite_(true), value_(r) {} // NOLINT(google-explicit-constructor)
    static OuterRadius infinity() { return OuterRadius(); }

    bool is_finite() const { return finite_; }
    double value() const { return value_; }

private:
    OuterRadius() : finite_(false), value_(0.0) {}
    bool finite_;
    double value_;
};

struct Violation {
    std::string field;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

struct DerivedQuantities {
    double expected_n;  // lambda * pi * (R^2 - (R0+eps_p)^2)
    double capacity_C;  // log2(1 + P0/sigma2), bits per channel use
    double outage_C0;   // eta*C when eta is set, else the configured C0
};

// Report-style validation: never throws, one named violation per rule.
ValidationReport validate(const NetworkConfig& config);

DerivedQuantities derived_quantities(const NetworkConfig& config);

// Flat key=value config text. Every key optional, unknown keys are a hard
// error (ConfigError). '#' starts a comment.
NetworkConfig parse_config_text(const std::string& text);
NetworkConfig load_config_file(const std::string& path);

// Fully resolved config as ordered key/value pairs (manifest + replay).
std::vector<std::pair<std::string, std::string>> config_to_pairs(const NetworkConfig& config);
NetworkConfig config_from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);

} // namespace cognet
