#pragma once

#include "lhtl/errors.hpp"
#include "lhtl/sweep/sweep.hpp"

#include <cstddef>
#include <filesystem>
#include <string>

namespace lhtl::sweep {

/// '#'-prefixed metadata comments, a header line, then one row per line with
/// every number in scientific notation at 12 significant digits. LF endings;
/// byte-identical across runs on identical input.
std::string to_csv(const SweepTable& table);

/// Writes to_csv(table) to dest; returns the byte count. Throws io_error.
std::size_t write_csv(const SweepTable& table, const std::filesystem::path& dest);

} // namespace lhtl::sweep
