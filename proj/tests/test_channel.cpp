#include <doctest.h>

#include <cmath>

#include "cognet/channel.hpp"
#include "cognet/errors.hpp"
#include "cognet/rng.hpp"

using namespace cognet;

TEST_SUITE("channel") {

TEST_CASE("power gain values") {
    CHECK(channel::power_gain(1.0, 3.7) == 1.0);
    CHECK(channel::power_gain(2.0, 4.0) == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
    CHECK(channel::power_gain(0.5, 3.0) == doctest::Approx(8.0).epsilon(1e-15));
    CHECK_THROWS_AS(channel::power_gain(0.0, 4.0), DomainError);
}

TEST_CASE("gain * d^alpha stays 1") {
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const double d = rng.uniform(1e-3, 50.0);
        const double alpha = rng.uniform(2.1, 8.0);
        const auto link = channel::LinkGain::at(d, alpha);
        CHECK(std::fabs(link.gain * std::pow(d, alpha) - 1.0) < 1e-12);
    }
}

TEST_CASE("gain monotonicity in d and alpha") {
    CHECK(channel::power_gain(2.0, 4.0) < channel::power_gain(1.9, 4.0));
    CHECK(channel::power_gain(3.0, 4.5) < channel::power_gain(3.0, 4.0)); // d > 1
    CHECK(channel::power_gain(0.5, 4.5) > channel::power_gain(0.5, 4.0)); // d < 1
}

TEST_CASE("transmit power law") {
    NetworkConfig c = NetworkConfig::defaults();
    c.cognitive_power_P = 1.0;
    CHECK(channel::tx_power(3.7, c) == 1.0);

    c.mode = PowerMode::DistanceScaledPower;
    c.cognitive_power_Pc = 1.0;
    c.power_exponent_gamma = 1.0;
    CHECK(channel::tx_power(4.0, c) == doctest::Approx(4.0).epsilon(1e-15));

    c.power_exponent_gamma = 0.0;
    CHECK(channel::tx_power(123.0, c) == c.cognitive_power_Pc);
}

TEST_CASE("gamma = 0 scaled mode is pointwise identical to constant mode") {
    NetworkConfig constant = NetworkConfig::defaults();
    NetworkConfig scaled = constant;
    scaled.mode = PowerMode::DistanceScaledPower;
    scaled.cognitive_power_Pc = constant.cognitive_power_P;
    scaled.power_exponent_gamma = 0.0;
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double r = rng.uniform(1e-6, 100.0);
        CHECK(channel::tx_power(r, scaled) == channel::tx_power(r, constant));
    }
}

} // TEST_SUITE
