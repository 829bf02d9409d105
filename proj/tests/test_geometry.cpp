#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cognet/errors.hpp"
#include "cognet/geometry.hpp"
#include "cognet/rng.hpp"

using namespace cognet;
using geometry::Point;

TEST_SUITE("geometry") {

TEST_CASE("sample_annulus basics") {
    Rng rng(1);
    CHECK(geometry::sample_annulus(0, 1.0, 10.0, rng).empty());
    CHECK_THROWS_AS(geometry::sample_annulus(10, 5.0, 5.0, rng), DomainError);
    CHECK_THROWS_AS(geometry::sample_annulus(10, 0.0, 5.0, rng), DomainError);

    const auto pts = geometry::sample_annulus(20000, 1.0, 10.0, rng);
    for (const auto& p : pts) {
        const double r = geometry::norm(p);
        REQUIRE(r >= 1.0);
        REQUIRE(r <= 10.0);
    }
}

TEST_CASE("sample_annulus first moment matches the closed form") {
    // E[r] = (2/3) (R^3 - inner^3) / (R^2 - inner^2) for f_r = 2r / (R^2 - inner^2).
    const double expected = (2.0 / 3.0) * (1000.0 - 1.0) / (100.0 - 1.0);
    Rng rng(31337);
    const std::size_t n = 200000;
    const auto pts = geometry::sample_annulus(n, 1.0, 10.0, rng);
    double sum = 0.0, sum2 = 0.0;
    for (const auto& p : pts) {
        const double r = geometry::norm(p);
        sum += r;
        sum2 += r * r;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    const double stderr_mean = std::sqrt(var / n);
    CHECK(std::fabs(mean - expected) <= 3.0 * stderr_mean);
}

TEST_CASE("sample_annulus uniformity passes a 1% chi-square test") {
    const int bins = 20;
    const double chi2_crit = 36.1909; // chi-square(df=19) at the 1% level
    Rng rng(777);
    const std::size_t n = 100000;
    const auto pts = geometry::sample_annulus(n, 1.0, 10.0, rng);

    std::vector<long> radial(bins, 0), angular(bins, 0);
    for (const auto& p : pts) {
        const double r = geometry::norm(p);
        const double u = (r * r - 1.0) / (100.0 - 1.0); // radial CDF, uniform on [0,1)
        radial[std::min(bins - 1, static_cast<int>(u * bins))]++;
        const double t = std::atan2(p.y, p.x) + M_PI;
        angular[std::min(bins - 1, static_cast<int>(t / (2.0 * M_PI) * bins))]++;
    }
    const double expected = static_cast<double>(n) / bins;
    double chi2_r = 0.0, chi2_a = 0.0;
    for (int b = 0; b < bins; ++b) {
        chi2_r += (radial[b] - expected) * (radial[b] - expected) / expected;
        chi2_a += (angular[b] - expected) * (angular[b] - expected) / expected;
    }
    CHECK(chi2_r < chi2_crit);
    CHECK(chi2_a < chi2_crit);
}

TEST_CASE("distance to the PER edge") {
    CHECK(geometry::distance_to_per_edge(2.0, 0.0, 2.0) == doctest::Approx(0.0));
    CHECK(geometry::distance_to_per_edge(4.0, M_PI, 2.0) == doctest::Approx(6.0));
    CHECK(geometry::distance_to_per_edge(5.0, M_PI / 3.0, 2.0) ==
          doctest::Approx(std::sqrt(19.0)).epsilon(1e-14));
    CHECK_THROWS_AS(geometry::distance_to_per_edge(0.0, 1.0, 2.0), DomainError);
}

TEST_CASE("hex lattice enumeration") {
    CHECK_THROWS_AS(geometry::hex_lattice(0), DomainError);

    const auto lattice = geometry::hex_lattice(1);
    CHECK(lattice.points.size() == 18); // 2 sublattices x 3x3 index boxes

    // Nearest nonzero sublattice-1 point to the origin is (0, +-2).
    double nearest = 1e300;
    for (const auto& p : lattice.points) {
        const double r = geometry::norm(p);
        if (r > 1e-12) nearest = std::min(nearest, r);
    }
    CHECK(nearest == doctest::Approx(2.0).epsilon(1e-14));

    // Every point solves one of the two defining index formulas exactly.
    const double s3 = std::sqrt(3.0);
    for (const auto& p : geometry::hex_lattice(3).points) {
        const double k_even = p.x / (2.0 * s3), m_even = p.y / 2.0;
        const double k_odd = (p.x / s3 - 1.0) / 2.0, m_odd = (p.y - 1.0) / 2.0;
        const bool even_ok = std::fabs(k_even - std::round(k_even)) < 1e-12 &&
                             std::fabs(m_even - std::round(m_even)) < 1e-12;
        const bool odd_ok = std::fabs(k_odd - std::round(k_odd)) < 1e-12 &&
                            std::fabs(m_odd - std::round(m_odd)) < 1e-12;
        CHECK((even_ok || odd_ok));
    }
}

TEST_CASE("fixed(0) placement keeps primaries only") {
    const auto p = geometry::place_network(NetworkConfig::defaults(),
                                           geometry::NMode::fixed(0), 5);
    CHECK(p.cognitive_tx.empty());
    CHECK(p.cognitive_rx.empty());
    CHECK(p.primary_tx.size() == 1);
    CHECK(p.primary_rx.size() == 1);
    CHECK(geometry::dist(p.primary_rx[0], p.primary_tx[0]) ==
          doctest::Approx(NetworkConfig::defaults().per_radius_R0));
}

TEST_CASE("poisson placement hits the expected intensity") {
    const NetworkConfig c = NetworkConfig::defaults(); // lambda pi (R^2-16) = 263.9
    const int seeds = 40;
    double total = 0.0;
    for (int s = 0; s < seeds; ++s) {
        const auto p = geometry::place_network(c, geometry::NMode::poisson(), 1000 + s);
        total += static_cast<double>(p.cognitive_tx.size());
    }
    const double expected = derived_quantities(c).expected_n;
    const double stderr_mean = std::sqrt(expected / seeds); // Poisson counts
    CHECK(std::fabs(total / seeds - expected) <= 3.0 * stderr_mean);
}

TEST_CASE("sampled placements replay their invariants") {
    NetworkConfig c = NetworkConfig::defaults();
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const auto p = geometry::place_network(c, geometry::NMode::poisson(), seed);
        CHECK(geometry::check_invariants(p, c).empty());
    }

    NetworkConfig scaled = c;
    scaled.mode = PowerMode::DistanceScaledPower;
    scaled.power_exponent_gamma = 1.0;
    scaled.dmax = 1.0;
    const auto p = geometry::place_network(scaled, geometry::NMode::fixed(100), 7);
    CHECK(p.cognitive_tx.size() == 100);
    CHECK(geometry::check_invariants(p, scaled).empty());
}

TEST_CASE("minimum tx exclusion holds in every placement") {
    const NetworkConfig c = NetworkConfig::defaults();
    const auto p = geometry::place_network(c, geometry::NMode::fixed(200), 99);
    double closest = 1e300;
    for (const auto& tx : p.cognitive_tx)
        for (const auto& ptx : p.primary_tx)
            closest = std::min(closest, geometry::dist(tx, ptx));
    CHECK(closest >= c.per_radius_R0 + c.guard_band_eps_p);
}

TEST_CASE("placement is deterministic in the seed") {
    const NetworkConfig c = NetworkConfig::defaults();
    const auto a = geometry::place_network(c, geometry::NMode::poisson(), 42);
    const auto b = geometry::place_network(c, geometry::NMode::poisson(), 42);
    CHECK(geometry::placement_to_csv(a) == geometry::placement_to_csv(b));
    const auto other = geometry::place_network(c, geometry::NMode::poisson(), 43);
    CHECK(geometry::placement_to_csv(a) != geometry::placement_to_csv(other));
}

TEST_CASE("acceptance ratio tracks the admissible area fraction") {
    const NetworkConfig c = NetworkConfig::defaults();
    geometry::PlacementStats stats;
    (void)geometry::place_network(c, geometry::NMode::poisson(), 11, &stats);
    CHECK(stats.tx_acceptance_ratio == doctest::Approx(0.84).epsilon(0.10));
}

TEST_CASE("placement csv round-trips exactly") {
    const auto p = geometry::place_network(NetworkConfig::defaults(),
                                           geometry::NMode::fixed(25), 3);
    const std::string csv = geometry::placement_to_csv(p);
    const auto q = geometry::placement_from_csv(csv);
    REQUIRE(q.cognitive_tx.size() == p.cognitive_tx.size());
    REQUIRE(q.cognitive_rx.size() == p.cognitive_rx.size());
    for (std::size_t i = 0; i < p.cognitive_tx.size(); ++i) {
        CHECK(q.cognitive_tx[i].x == p.cognitive_tx[i].x);
        CHECK(q.cognitive_tx[i].y == p.cognitive_tx[i].y);
        CHECK(q.cognitive_rx[i].y == p.cognitive_rx[i].y);
    }
    CHECK_THROWS_AS(geometry::placement_from_csv("bogus\n"), ConfigError);
}

} // TEST_SUITE
