#include <doctest.h>

#include <cmath>

#include "cognet/config.hpp"
#include "cognet/errors.hpp"
#include "cognet/rng.hpp"

using namespace cognet;

namespace {

bool has_violation(const ValidationReport& report, const std::string& field) {
    for (const auto& v : report.violations)
        if (v.field == field) return true;
    return false;
}

} // namespace

TEST_SUITE("config") {

TEST_CASE("default demo config is admissible") {
    CHECK(validate(NetworkConfig::defaults()).ok());
}

TEST_CASE("alpha at the path loss boundary is rejected") {
    NetworkConfig c = NetworkConfig::defaults();
    c.path_loss_alpha = 2.0;
    const auto report = validate(c);
    CHECK_FALSE(report.ok());
    CHECK(has_violation(report, "path_loss_alpha"));
}

TEST_CASE("scaling mode enforces gamma < alpha - 2") {
    NetworkConfig c = NetworkConfig::defaults();
    c.mode = PowerMode::DistanceScaledPower;
    c.path_loss_alpha = 4.0;
    c.power_exponent_gamma = 2.0;
    CHECK(has_violation(validate(c), "power_exponent_gamma"));
    c.power_exponent_gamma = 1.5;
    CHECK(validate(c).ok());

    c.per_radius_R0 = 0.9; // scaling mode also needs R0 > 1
    c.rx_protect_eps_c = 0.5;
    CHECK(has_violation(validate(c), "per_radius_R0"));
}

TEST_CASE("each remaining rule maps to one named violation") {
    NetworkConfig c = NetworkConfig::defaults();
    c.rx_protect_eps_c = 3.0; // >= R0
    CHECK(has_violation(validate(c), "rx_protect_eps_c"));

    c = NetworkConfig::defaults();
    c.network_radius_R = 3.5; // <= R0 + eps_p
    CHECK(has_violation(validate(c), "network_radius_R"));

    c = NetworkConfig::defaults();
    c.outage_prob_beta = 1.0;
    CHECK(has_violation(validate(c), "outage_prob_beta"));

    c = NetworkConfig::defaults();
    c.eta_fraction = 1.5;
    CHECK(has_violation(validate(c), "eta_fraction"));
}

TEST_CASE("derived quantities") {
    NetworkConfig c = NetworkConfig::defaults(); // lambda=1, R=10, R0=2, eps_p=2
    const auto d = derived_quantities(c);
    CHECK(d.expected_n == doctest::Approx(M_PI * (100.0 - 16.0)).epsilon(1e-12));
    CHECK(d.expected_n == doctest::Approx(263.89378).epsilon(1e-6));

    c.primary_power_P0 = 1.0;
    c.noise_sigma2 = 1.0;
    CHECK(derived_quantities(c).capacity_C == doctest::Approx(1.0)); // log2(2)

    c.eta_fraction = 0.0;
    CHECK(derived_quantities(c).outage_C0 == 0.0);
}

TEST_CASE("expected n is monotone in R, lambda, R0, eps_p") {
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        NetworkConfig c = NetworkConfig::defaults();
        c.per_radius_R0 = rng.uniform(0.5, 4.0);
        c.guard_band_eps_p = rng.uniform(0.5, 4.0);
        c.network_radius_R = c.per_radius_R0 + c.guard_band_eps_p + rng.uniform(1.0, 20.0);
        c.density_lambda = rng.uniform(0.1, 5.0);
        const double base = derived_quantities(c).expected_n;

        NetworkConfig up = c;
        up.network_radius_R += 1.0;
        CHECK(derived_quantities(up).expected_n > base);
        up = c;
        up.density_lambda *= 1.5;
        CHECK(derived_quantities(up).expected_n > base);
        up = c;
        up.per_radius_R0 += 0.5;
        CHECK(derived_quantities(up).expected_n < base);
        up = c;
        up.guard_band_eps_p += 0.5;
        CHECK(derived_quantities(up).expected_n < base);
    }
}

TEST_CASE("config text parsing, defaults and unknown keys") {
    const NetworkConfig c = parse_config_text(
        "# demo\n"
        "path_loss_alpha = 3.5\n"
        "mode = scaled\n"
        "power_exponent_gamma = 0.5\n");
    CHECK(c.path_loss_alpha == 3.5);
    CHECK(c.mode == PowerMode::DistanceScaledPower);
    CHECK(c.dmax == 1.0); // K_d default in scaled mode
    CHECK_FALSE(c.eta_fraction.has_value());

    const NetworkConfig d = parse_config_text("rx_protect_eps_c = 0.5\n");
    CHECK(d.dmax == doctest::Approx(2.5)); // 5*eps_c default in constant mode

    CHECK_THROWS_AS(parse_config_text("no_such_key = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("path_loss_alpha = abc\n"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("mode = hybrid\n"), ConfigError);
}

TEST_CASE("config round-trips through resolved pairs") {
    NetworkConfig c = NetworkConfig::defaults();
    c.path_loss_alpha = 3.25;
    c.eta_fraction = 0.75;
    c.mode = PowerMode::DistanceScaledPower;
    c.power_exponent_gamma = 0.5;
    c.rate_log2 = false;
    const NetworkConfig back = config_from_pairs(config_to_pairs(c));
    CHECK(back.path_loss_alpha == c.path_loss_alpha);
    CHECK(back.eta_fraction == c.eta_fraction);
    CHECK(back.mode == c.mode);
    CHECK(back.rate_log2 == c.rate_log2);
    CHECK(back.power_exponent_gamma == c.power_exponent_gamma);
}

} // TEST_SUITE
