#include "cognet/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>

#include "cognet/channel.hpp"
#include "cognet/errors.hpp"

namespace cognet::geometry {

namespace {

constexpr std::uint64_t kTagCount = 0x636e741ull;
constexpr std::uint64_t kTagTx = 0x7478ull;
constexpr std::uint64_t kTagRx = 0x7278ull;
constexpr int kRetryBudget = 10000;

// Uniform point in the disc of radius `radius` around `center`.
Point uniform_in_disc(const Point& center, double radius, Rng& rng) {
    const double r = radius * std::sqrt(rng.uniform01());
    const double t = 2.0 * M_PI * rng.uniform01();
    return {center.x + r * std::cos(t), center.y + r * std::sin(t)};
}

bool outside_all_pers(const Point& p, const std::vector<Point>& per_centers,
                      double exclusion) {
    for (const auto& c : per_centers)
        if (dist(p, c) < exclusion) return false;
    return true;
}

// Fixed-cell hash grid for eps_c neighbor queries during rx placement.
class GridIndex {
public:
    GridIndex(const std::vector<Point>& points, double cell) : cell_(cell) {
        for (std::size_t i = 0; i < points.size(); ++i)
            cells_[key(points[i])].push_back(static_cast<int>(i));
        points_ = &points;
    }

    // True when some point other than `exclude` lies within `radius` of p.
    bool any_within(const Point& p, double radius, int exclude) const {
        const long long cx = coord(p.x), cy = coord(p.y);
        const long long reach = static_cast<long long>(radius / cell_) + 1;
        for (long long gx = cx - reach; gx <= cx + reach; ++gx) {
            for (long long gy = cy - reach; gy <= cy + reach; ++gy) {
                const auto it = cells_.find(pack(gx, gy));
                if (it == cells_.end()) continue;
                for (int idx : it->second) {
                    if (idx == exclude) continue;
                    if (dist((*points_)[idx], p) < radius) return true;
                }
            }
        }
        return false;
    }

private:
    long long coord(double v) const { return static_cast<long long>(std::floor(v / cell_)); }
    long long pack(long long x, long long y) const { return x * 0x100000001LL + y; }
    long long key(const Point& p) const { return pack(coord(p.x), coord(p.y)); }

    double cell_;
    std::unordered_map<long long, std::vector<int>> cells_;
    const std::vector<Point>* points_ = nullptr;
};

} // namespace

std::vector<Point> sample_annulus(std::size_t count, double inner, double outer, Rng& rng) {
    if (!(inner > 0.0) || !(inner < outer))
        throw DomainError("sample_annulus: need 0 < inner < outer");
    std::vector<Point> points;
    points.reserve(count);
    const double in2 = inner * inner, out2 = outer * outer;
    for (std::size_t i = 0; i < count; ++i) {
        const double r = std::sqrt(in2 + rng.uniform01() * (out2 - in2));
        const double t = 2.0 * M_PI * rng.uniform01();
        points.push_back({r * std::cos(t), r * std::sin(t)});
    }
    return points;
}

std::vector<Point> place_cognitive_tx(const NetworkConfig& config, NMode n_mode,
                                      std::uint64_t seed,
                                      const std::vector<Point>& per_centers,
                                      PlacementStats* stats, bool fill_pers) {
    const double R = config.network_radius_R;
    const double exclusion = config.per_radius_R0 + config.guard_band_eps_p;
    std::vector<Point> tx;
    std::size_t attempts = 0;

    auto admissible = [&](const Point& p) {
        return fill_pers || outside_all_pers(p, per_centers, exclusion);
    };

    if (n_mode.mode == CountMode::Poisson) {
        // Thinning a Poisson process on the full disc gives exactly density
        // lambda on the admissible region.
        Rng count_rng = Rng::stream(seed, kTagCount);
        const long candidates =
            count_rng.poisson(config.density_lambda * M_PI * R * R);
        for (long i = 0; i < candidates; ++i) {
            Rng rng = Rng::stream(seed, kTagTx, static_cast<std::uint64_t>(i));
            const Point p = uniform_in_disc({0.0, 0.0}, R, rng);
            ++attempts;
            if (admissible(p)) tx.push_back(p);
        }
    } else {
        for (long i = 0; i < n_mode.fixed_n; ++i) {
            Rng rng = Rng::stream(seed, kTagTx, static_cast<std::uint64_t>(i));
            bool placed = false;
            for (int tries = 0; tries < kRetryBudget; ++tries) {
                const Point p = uniform_in_disc({0.0, 0.0}, R, rng);
                ++attempts;
                if (admissible(p)) {
                    tx.push_back(p);
                    placed = true;
                    break;
                }
            }
            if (!placed)
                throw PlacementError(
                    "place_cognitive_tx: retry budget exhausted; exclusions cover the disc");
        }
    }

    if (stats) {
        stats->tx_attempts = attempts;
        stats->tx_acceptance_ratio =
            attempts ? static_cast<double>(tx.size()) / static_cast<double>(attempts) : 1.0;
    }
    return tx;
}

NodePlacement place_network(const NetworkConfig& config, NMode n_mode,
                            std::uint64_t seed, PlacementStats* stats,
                            bool fill_pers) {
    NodePlacement placement;
    placement.seed = seed;
    placement.primary_tx = {{0.0, 0.0}};
    placement.primary_rx = {{config.per_radius_R0, 0.0}}; // PER edge, worst case

    placement.cognitive_tx =
        place_cognitive_tx(config, n_mode, seed, placement.primary_tx, stats, fill_pers);

    const double eps_c = config.rx_protect_eps_c;
    const double R = config.network_radius_R;
    GridIndex tx_index(placement.cognitive_tx, eps_c);

    placement.cognitive_rx.reserve(placement.cognitive_tx.size());
    std::size_t rx_attempts = 0;
    for (std::size_t i = 0; i < placement.cognitive_tx.size(); ++i) {
        const Point& tx = placement.cognitive_tx[i];
        double pair_radius = config.dmax;
        if (config.mode == PowerMode::DistanceScaledPower)
            pair_radius = config.dmax * std::pow(norm(tx), config.power_exponent_gamma /
                                                              config.path_loss_alpha);
        Rng rng = Rng::stream(seed, kTagRx, static_cast<std::uint64_t>(i));
        bool placed = false;
        for (int tries = 0; tries < kRetryBudget; ++tries) {
            const Point rx = uniform_in_disc(tx, pair_radius, rng);
            ++rx_attempts;
            if (dist(rx, tx) < config.pair_min_distance) continue;
            if (config.edge_policy == EdgePolicy::Clip && norm(rx) > R) continue;
            bool ok = true;
            for (const auto& ptx : placement.primary_tx)
                if (dist(rx, ptx) < eps_c) { ok = false; break; }
            if (!ok) continue;
            if (tx_index.any_within(rx, eps_c, static_cast<int>(i))) continue;
            placement.cognitive_rx.push_back(rx);
            placed = true;
            break;
        }
        if (!placed)
            throw PlacementError("place_network: receiver retry budget exhausted for pair " +
                                 std::to_string(i));
    }
    if (stats) stats->rx_attempts = rx_attempts;
    return placement;
}

double distance_to_per_edge(double r, double theta, double r0) {
    if (!(r > 0.0)) throw DomainError("distance_to_per_edge: r must be positive");
    const double d2 = r * r + r0 * r0 - 2.0 * r0 * r * std::cos(theta);
    return std::sqrt(std::max(d2, 0.0));
}

HexLattice hex_lattice(int truncation_K) {
    if (truncation_K < 1) throw DomainError("hex_lattice: truncation_K >= 1 required");
    HexLattice lattice;
    lattice.truncation_K = truncation_K;
    const double s3 = std::sqrt(3.0);
    lattice.points.reserve(2 * (2 * truncation_K + 1) * (2 * truncation_K + 1));
    for (int k = -truncation_K; k <= truncation_K; ++k)
        for (int m = -truncation_K; m <= truncation_K; ++m)
            lattice.points.push_back({2.0 * s3 * k, 2.0 * m});
    for (int k = -truncation_K; k <= truncation_K; ++k)
        for (int m = -truncation_K; m <= truncation_K; ++m)
            lattice.points.push_back({s3 * (2.0 * k + 1.0), 2.0 * m + 1.0});
    return lattice;
}

std::vector<std::string> check_invariants(const NodePlacement& p,
                                          const NetworkConfig& config) {
    std::vector<std::string> issues;
    const double tol = 1e-9;
    if (p.cognitive_tx.size() != p.cognitive_rx.size())
        issues.push_back("tx/rx list length mismatch");

    const double exclusion = config.per_radius_R0 + config.guard_band_eps_p;
    for (std::size_t i = 0; i < p.cognitive_tx.size(); ++i) {
        const Point& tx = p.cognitive_tx[i];
        for (const auto& ptx : p.primary_tx)
            if (dist(tx, ptx) < exclusion - tol)
                issues.push_back("cognitive tx " + std::to_string(i) + " inside PER+guard disc");
        for (const auto& prx : p.primary_rx)
            if (dist(tx, prx) < config.guard_band_eps_p - tol)
                issues.push_back("cognitive tx " + std::to_string(i) + " within eps_p of a primary rx");
    }
    for (std::size_t i = 0; i < p.cognitive_rx.size() && i < p.cognitive_tx.size(); ++i) {
        const Point& rx = p.cognitive_rx[i];
        double pair_radius = config.dmax;
        if (config.mode == PowerMode::DistanceScaledPower)
            pair_radius = config.dmax * std::pow(norm(p.cognitive_tx[i]),
                                                 config.power_exponent_gamma /
                                                     config.path_loss_alpha);
        if (dist(rx, p.cognitive_tx[i]) > pair_radius + tol)
            issues.push_back("pair " + std::to_string(i) + " exceeds its pairing radius");
        for (std::size_t j = 0; j < p.cognitive_tx.size(); ++j) {
            if (j == i) continue;
            if (dist(rx, p.cognitive_tx[j]) < config.rx_protect_eps_c - tol) {
                issues.push_back("cognitive rx " + std::to_string(i) +
                                 " within eps_c of interfering tx " + std::to_string(j));
                break;
            }
        }
        for (const auto& ptx : p.primary_tx)
            if (dist(rx, ptx) < config.rx_protect_eps_c - tol)
                issues.push_back("cognitive rx " + std::to_string(i) + " within eps_c of a primary tx");
    }
    for (std::size_t i = 0; i < p.primary_rx.size() && i < p.primary_tx.size(); ++i)
        if (dist(p.primary_rx[i], p.primary_tx[i]) > config.per_radius_R0 + tol)
            issues.push_back("primary rx " + std::to_string(i) + " outside its PER");
    return issues;
}

std::string placement_to_csv(const NodePlacement& p) {
    std::ostringstream os;
    os << "role,pair_id,x,y\n";
    char buf[96];
    auto emit = [&](const char* role, std::size_t id, const Point& pt) {
        std::snprintf(buf, sizeof(buf), "%s,%zu,%.17g,%.17g\n", role, id, pt.x, pt.y);
        os << buf;
    };
    for (std::size_t i = 0; i < p.cognitive_tx.size(); ++i) emit("ctx", i, p.cognitive_tx[i]);
    for (std::size_t i = 0; i < p.cognitive_rx.size(); ++i) emit("crx", i, p.cognitive_rx[i]);
    for (std::size_t i = 0; i < p.primary_tx.size(); ++i) emit("ptx", i, p.primary_tx[i]);
    for (std::size_t i = 0; i < p.primary_rx.size(); ++i) emit("prx", i, p.primary_rx[i]);
    return os.str();
}

NodePlacement placement_from_csv(const std::string& text) {
    NodePlacement p;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("role,", 0) != 0)
        throw ConfigError("placement csv: missing header");
    auto ensure_size = [](std::vector<Point>& v, std::size_t id) {
        if (v.size() <= id) v.resize(id + 1);
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        char role[8];
        std::size_t id = 0;
        double x = 0, y = 0;
        if (std::sscanf(line.c_str(), "%7[^,],%zu,%lg,%lg", role, &id, &x, &y) != 4)
            throw ConfigError("placement csv: bad row: " + line);
        const std::string r(role);
        if (r == "ctx") { ensure_size(p.cognitive_tx, id); p.cognitive_tx[id] = {x, y}; }
        else if (r == "crx") { ensure_size(p.cognitive_rx, id); p.cognitive_rx[id] = {x, y}; }
        else if (r == "ptx") { ensure_size(p.primary_tx, id); p.primary_tx[id] = {x, y}; }
        else if (r == "prx") { ensure_size(p.primary_rx, id); p.primary_rx[id] = {x, y}; }
        else throw ConfigError("placement csv: unknown role: " + r);
    }
    return p;
}

} // namespace cognet::geometry
