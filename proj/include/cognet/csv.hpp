#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "cognet/errors.hpp"

namespace cognet {

// CSV dialect: comma separator, '.' decimal point, LF newlines, header row
// always present. Numbers are printed with printf %g so identical runs give
// identical bytes.

inline std::string csv_num(double v, int precision = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

inline std::string csv_int(long long v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", v);
    return buf;
}

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header)
        : out_(path, std::ios::binary) {
        if (!out_) throw ConfigError("cannot open output file: " + path);
        row(header);
    }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

private:
    std::ofstream out_;
};

} // namespace cognet
