#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cognet/config.hpp"
#include "cognet/rng.hpp"

namespace cognet::geometry {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double dist(const Point& a, const Point& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

inline double norm(const Point& p) { return std::sqrt(p.x * p.x + p.y * p.y); }

// A sampled scenario: paired cognitive tx/rx lists plus primary nodes.
// Primary receivers sit at the PER edge (the worst case for outage).
struct NodePlacement {
    std::vector<Point> cognitive_tx;
    std::vector<Point> cognitive_rx; // rx[i] paired with tx[i]
    std::vector<Point> primary_tx;
    std::vector<Point> primary_rx;
    std::uint64_t seed = 0;
};

struct PlacementStats {
    std::size_t tx_attempts = 0;
    std::size_t rx_attempts = 0;
    double tx_acceptance_ratio = 1.0;
};

enum class CountMode { Poisson, Fixed };

struct NMode {
    CountMode mode = CountMode::Poisson;
    long fixed_n = 0;
    static NMode poisson() { return {CountMode::Poisson, 0}; }
    static NMode fixed(long n) { return {CountMode::Fixed, n}; }
};

// i.i.d. uniform points on the annulus inner <= |p| <= outer; radial CDF is
// (r^2 - inner^2) / (outer^2 - inner^2).
std::vector<Point> sample_annulus(std::size_t count, double inner, double outer, Rng& rng);

// Cognitive transmitters only: uniform on the disc of radius R minus every
// PER+guard disc, by rejection sampling. fill_pers drops the exclusion and
// fills the PERs too -- the worst-case field used by bound-validation tests,
// never by the main experiments.
std::vector<Point> place_cognitive_tx(const NetworkConfig& config, NMode n_mode,
                                      std::uint64_t seed,
                                      const std::vector<Point>& per_centers,
                                      PlacementStats* stats = nullptr,
                                      bool fill_pers = false);

// Full scenario with a single PER at the origin. Throws PlacementError when
// the per-node retry budget (10^4) is exhausted.
NodePlacement place_network(const NetworkConfig& config, NMode n_mode,
                            std::uint64_t seed, PlacementStats* stats = nullptr,
                            bool fill_pers = false);

// Distance from a cognitive tx at polar (r, theta) to the primary receiver on
// the PER edge: sqrt(r^2 + R0^2 - 2 R0 r cos(theta)).
double distance_to_per_edge(double r, double theta, double r0);

// Primary transmitters on the densest (hexagonal) packing of PER discs, in
// normalized units (1 unit = R0). Two sublattices:
//   {(2 sqrt(3) k, 2 m)}  and  {(sqrt(3) (2k+1), 2m+1)},  |k|,|m| <= K.
struct HexLattice {
    int truncation_K = 0;
    std::vector<Point> points;
};

HexLattice hex_lattice(int truncation_K);

// Replays the NodePlacement invariants; returns one message per violation.
std::vector<std::string> check_invariants(const NodePlacement& placement,
                                          const NetworkConfig& config);

// CSV export/import, columns: role (ctx|crx|ptx|prx), pair_id, x, y.
std::string placement_to_csv(const NodePlacement& placement);
NodePlacement placement_from_csv(const std::string& text);

} // namespace cognet::geometry
