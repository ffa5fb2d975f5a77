#pragma once

#include "lhtl/fock/complex_matrix.hpp"

namespace lhtl::fock {

/// exp(m) by scaling-and-squaring with a truncated Taylor series.
/// The series is cut once the term falls below tol relative to the sum.
ComplexMatrix matrix_exponential(const ComplexMatrix& m, double tol = 1e-13);

} // namespace lhtl::fock
