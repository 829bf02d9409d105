#include "cognet/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cognet/errors.hpp"

namespace cognet {

std::string ValidationReport::to_string() const {
    if (violations.empty()) return "config admissible\n";
    std::ostringstream os;
    for (const auto& v : violations) os << v.field << ": " << v.message << "\n";
    return os.str();
}

ValidationReport validate(const NetworkConfig& c) {
    ValidationReport report;
    auto flag = [&](const char* field, const char* message) {
        report.violations.push_back({field, message});
    };

    if (!(c.path_loss_alpha > 2.0))
        flag("path_loss_alpha", "path loss must exceed 2");
    if (c.mode == PowerMode::DistanceScaledPower) {
        if (!(c.power_exponent_gamma < c.path_loss_alpha - 2.0))
            flag("power_exponent_gamma", "gamma < alpha-2 required");
        if (!(c.per_radius_R0 > 1.0))
            flag("per_radius_R0", "R0 > 1 required in power-scaling mode");
    }
    if (!(c.power_exponent_gamma >= 0.0))
        flag("power_exponent_gamma", "gamma must be >= 0");
    if (!(c.network_radius_R > 0.0))
        flag("network_radius_R", "length must be positive");
    if (!(c.per_radius_R0 > 0.0))
        flag("per_radius_R0", "length must be positive");
    if (!(c.guard_band_eps_p > 0.0))
        flag("guard_band_eps_p", "length must be positive");
    if (!(c.rx_protect_eps_c > 0.0))
        flag("rx_protect_eps_c", "length must be positive");
    if (!(c.dmax > 0.0))
        flag("dmax", "length must be positive");
    if (!(c.pair_min_distance > 0.0))
        flag("pair_min_distance", "length must be positive");
    if (!(c.rx_protect_eps_c < c.per_radius_R0))
        flag("rx_protect_eps_c", "eps_c < R0 required");
    if (!(c.network_radius_R > c.per_radius_R0 + c.guard_band_eps_p))
        flag("network_radius_R", "R > R0 + eps_p required");
    if (!(c.density_lambda > 0.0))
        flag("density_lambda", "density must be positive");
    if (!(c.cognitive_power_P > 0.0))
        flag("cognitive_power_P", "power must be positive");
    if (!(c.cognitive_power_Pc > 0.0))
        flag("cognitive_power_Pc", "power must be positive");
    if (!(c.primary_power_P0 > 0.0))
        flag("primary_power_P0", "power must be positive");
    if (!(c.noise_sigma2 > 0.0))
        flag("noise_sigma2", "noise power must be positive");
    if (!(c.outage_prob_beta > 0.0 && c.outage_prob_beta < 1.0))
        flag("outage_prob_beta", "beta must lie in (0,1)");
    if (c.eta_fraction && !(*c.eta_fraction >= 0.0 && *c.eta_fraction <= 1.0))
        flag("eta_fraction", "eta must lie in [0,1]");

    return report;
}

DerivedQuantities derived_quantities(const NetworkConfig& c) {
    DerivedQuantities d{};
    const double inner = c.per_radius_R0 + c.guard_band_eps_p;
    d.expected_n =
        c.density_lambda * M_PI * (c.network_radius_R * c.network_radius_R - inner * inner);
    d.capacity_C = std::log2(1.0 + c.primary_power_P0 / c.noise_sigma2);
    d.outage_C0 = c.eta_fraction ? *c.eta_fraction * d.capacity_C : c.outage_rate_C0;
    return d;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': not a number: '" + value + "'");
    }
    if (pos != value.size())
        throw ConfigError("config key '" + key + "': trailing junk in '" + value + "'");
    return v;
}

} // namespace

NetworkConfig parse_config_text(const std::string& text) {
    NetworkConfig c = NetworkConfig::defaults();
    bool dmax_given = false;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "network_radius_R") c.network_radius_R = parse_number(key, value);
        else if (key == "per_radius_R0") c.per_radius_R0 = parse_number(key, value);
        else if (key == "guard_band_eps_p") c.guard_band_eps_p = parse_number(key, value);
        else if (key == "rx_protect_eps_c") c.rx_protect_eps_c = parse_number(key, value);
        else if (key == "density_lambda") c.density_lambda = parse_number(key, value);
        else if (key == "path_loss_alpha") c.path_loss_alpha = parse_number(key, value);
        else if (key == "cognitive_power_P") c.cognitive_power_P = parse_number(key, value);
        else if (key == "cognitive_power_Pc") c.cognitive_power_Pc = parse_number(key, value);
        else if (key == "power_exponent_gamma") c.power_exponent_gamma = parse_number(key, value);
        else if (key == "primary_power_P0") c.primary_power_P0 = parse_number(key, value);
        else if (key == "noise_sigma2") c.noise_sigma2 = parse_number(key, value);
        else if (key == "outage_rate_C0") c.outage_rate_C0 = parse_number(key, value);
        else if (key == "outage_prob_beta") c.outage_prob_beta = parse_number(key, value);
        else if (key == "eta_fraction") c.eta_fraction = parse_number(key, value);
        else if (key == "dmax") { c.dmax = parse_number(key, value); dmax_given = true; }
        else if (key == "pair_min_distance") c.pair_min_distance = parse_number(key, value);
        else if (key == "mode") {
            if (value == "constant") c.mode = PowerMode::ConstantPower;
            else if (value == "scaled") c.mode = PowerMode::DistanceScaledPower;
            else throw ConfigError("config key 'mode': expected constant|scaled, got '" + value + "'");
        } else if (key == "rate_log_base") {
            if (value == "2") c.rate_log2 = true;
            else if (value == "e") c.rate_log2 = false;
            else throw ConfigError("config key 'rate_log_base': expected 2|e, got '" + value + "'");
        } else if (key == "edge_policy") {
            if (value == "clip") c.edge_policy = EdgePolicy::Clip;
            else if (value == "wrap_none") c.edge_policy = EdgePolicy::WrapNone;
            else throw ConfigError("config key 'edge_policy': expected clip|wrap_none, got '" + value + "'");
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }

    // Mode-dependent defaults when no explicit dmax: 5*eps_c pairing radius in
    // constant mode, K_d = 1 in scaled mode.
    if (!dmax_given) {
        c.dmax = c.mode == PowerMode::ConstantPower ? 5.0 * c.rx_protect_eps_c : 1.0;
    }
    return c;
}

NetworkConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::vector<std::pair<std::string, std::string>> config_to_pairs(const NetworkConfig& c) {
    auto num = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("network_radius_R", num(c.network_radius_R));
    kv.emplace_back("per_radius_R0", num(c.per_radius_R0));
    kv.emplace_back("guard_band_eps_p", num(c.guard_band_eps_p));
    kv.emplace_back("rx_protect_eps_c", num(c.rx_protect_eps_c));
    kv.emplace_back("density_lambda", num(c.density_lambda));
    kv.emplace_back("path_loss_alpha", num(c.path_loss_alpha));
    kv.emplace_back("cognitive_power_P", num(c.cognitive_power_P));
    kv.emplace_back("cognitive_power_Pc", num(c.cognitive_power_Pc));
    kv.emplace_back("power_exponent_gamma", num(c.power_exponent_gamma));
    kv.emplace_back("primary_power_P0", num(c.primary_power_P0));
    kv.emplace_back("noise_sigma2", num(c.noise_sigma2));
    kv.emplace_back("outage_rate_C0", num(c.outage_rate_C0));
    kv.emplace_back("outage_prob_beta", num(c.outage_prob_beta));
    if (c.eta_fraction) kv.emplace_back("eta_fraction", num(*c.eta_fraction));
    kv.emplace_back("dmax", num(c.dmax));
    kv.emplace_back("mode", c.mode == PowerMode::ConstantPower ? "constant" : "scaled");
    kv.emplace_back("pair_min_distance", num(c.pair_min_distance));
    kv.emplace_back("rate_log_base", c.rate_log2 ? "2" : "e");
    kv.emplace_back("edge_policy", c.edge_policy == EdgePolicy::Clip ? "clip" : "wrap_none");
    return kv;
}

NetworkConfig config_from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::ostringstream os;
    for (const auto& [k, v] : pairs) os << k << " = " << v << "\n";
    return parse_config_text(os.str());
}

} // namespace cognet
