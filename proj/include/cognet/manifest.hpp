#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cognet/config.hpp"

namespace cognet {

// Reproducibility record written next to every CLI output. Re-running the
// tool from a manifest (the `replay` subcommand) reproduces identical CSV
// bytes; only the duration field differs between runs.
struct RunManifest {
    std::vector<std::string> subcommand;
    std::uint64_t seed = 0;
    int workers = 1;
    std::vector<std::pair<std::string, std::string>> config_values;
    std::vector<std::pair<std::string, std::string>> args;
    std::vector<std::string> outputs;
    double duration_seconds = 0.0;
};

void write_manifest(const std::string& path, const RunManifest& manifest);
RunManifest read_manifest(const std::string& path);

} // namespace cognet
