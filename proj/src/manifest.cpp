#include "cognet/manifest.hpp"

#include <fstream>

#include <json.hpp>

#include "cognet/errors.hpp"
#include "cognet/version.hpp"

namespace cognet {

void write_manifest(const std::string& path, const RunManifest& m) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["subcommand"] = m.subcommand;
    j["seed"] = m.seed;
    j["workers"] = m.workers;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m.config_values) cfg[k] = v;
    j["config"] = cfg;
    nlohmann::ordered_json args = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m.args) args[k] = v;
    j["args"] = args;
    j["outputs"] = m.outputs;
    j["duration_seconds"] = m.duration_seconds;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write manifest: " + path);
    out << j.dump(2) << "\n";
}

RunManifest read_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open manifest: " + path);
    nlohmann::ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("manifest parse error: ") + e.what());
    }
    RunManifest m;
    m.subcommand = j.at("subcommand").get<std::vector<std::string>>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.workers = j.at("workers").get<int>();
    for (const auto& [k, v] : j.at("config").items())
        m.config_values.emplace_back(k, v.get<std::string>());
    for (const auto& [k, v] : j.at("args").items())
        m.args.emplace_back(k, v.get<std::string>());
    if (j.contains("outputs"))
        m.outputs = j.at("outputs").get<std::vector<std::string>>();
    if (j.contains("duration_seconds"))
        m.duration_seconds = j.at("duration_seconds").get<double>();
    return m;
}

} // namespace cognet
