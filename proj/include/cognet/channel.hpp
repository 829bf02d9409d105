#pragma once

#include <cmath>

#include "cognet/config.hpp"
#include "cognet/errors.hpp"

namespace cognet::channel {

// Path-loss only channel: amplitude 1/d^(alpha/2), so the power gain is
// d^-alpha. Everything stays in linear scale; dB shows up only as a CSV
// convenience column.
inline double power_gain(double d, double alpha) {
    if (!(d > 0.0)) throw DomainError("power_gain: distance must be positive");
    return std::pow(d, -alpha);
}

struct LinkGain {
    double distance;
    double gain; // 1/d^alpha

    static LinkGain at(double d, double alpha) { return {d, power_gain(d, alpha)}; }
};

// Transmit power of a cognitive user at radius r from the primary tx.
inline double tx_power(double r, const NetworkConfig& config) {
    if (config.mode == PowerMode::ConstantPower) return config.cognitive_power_P;
    return config.cognitive_power_Pc * std::pow(r, config.power_exponent_gamma);
}

inline double to_db(double linear) { return 10.0 * std::log10(linear); }

} // namespace cognet::channel
