#pragma once

#include "lhtl/fock/complex_matrix.hpp"
#include "lhtl/units.hpp"

#include <utility>

namespace lhtl::fock {

/// Bookkeeping for the truncated two-mode product space.
/// Basis index k = n_a * dim + n_tilde (row-major, physical mode slowest);
/// this ordering is fixed so serialized matrices are reproducible.
struct TruncatedTwoModeSpace {
    int dim = 0;       // per-mode truncation D
    int total_dim = 0; // D^2

    static TruncatedTwoModeSpace make(int dim);
    int index(int n_a, int n_tilde) const { return n_a * dim + n_tilde; }
};

enum class ModeSlot { AMode, TildeMode };

/// a[k-1, k] = sqrt(k), k = 1..dim-1.
ComplexMatrix annihilation_matrix(int dim);
ComplexMatrix creation_matrix(int dim);

/// op (x) I for the physical slot, I (x) op for the tilde slot.
ComplexMatrix embed(const ComplexMatrix& op, ModeSlot slot, int dim);

/// q = sqrt(hbar/(2 omega)) (a + a+), p = i sqrt(hbar omega/2) (a+ - a).
std::pair<ComplexMatrix, ComplexMatrix>
quadrature_matrices(int dim, double omega, const UnitSystem& units);

/// Anti-Hermitian generator K = theta (a+ (x) a+ - a (x) a) in the two-mode
/// space; exp(K) is the thermal unitary. flip_sign negates the exponent for
/// sensitivity checks.
ComplexMatrix thermal_generator(double theta, int dim, bool flip_sign = false);

} // namespace lhtl::fock
