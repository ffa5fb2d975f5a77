#include "lhtl/sweep/csv.hpp"

#include "lhtl/errors.hpp"

#include <cstdio>
#include <fstream>

namespace lhtl::sweep {

std::string to_csv(const SweepTable& table) {
    std::string out;
    for (const std::string& m : table.meta_lines) {
        out += "# ";
        out += m;
        out += '\n';
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i)
            out += ',';
        out += table.columns[i];
    }
    out += '\n';

    char buf[40];
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            std::snprintf(buf, sizeof buf, "%.11e", row[i]);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

std::size_t write_csv(const SweepTable& table, const std::filesystem::path& dest) {
    const std::string payload = to_csv(table);
    std::ofstream f(dest, std::ios::binary);
    if (!f)
        throw io_error("write_csv: cannot open " + dest.string());
    f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    f.flush();
    if (!f)
        throw io_error("write_csv: write failed for " + dest.string());
    return payload.size();
}

} // namespace lhtl::sweep
