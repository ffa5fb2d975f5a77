#pragma once

#include <stdexcept>
#include <string>

namespace lhtl {

/// Thrown when a file or directory cannot be created or written.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an adaptive computation cannot reach its tolerance
/// within its resource cap.
struct convergence_error : std::runtime_error {
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace lhtl
