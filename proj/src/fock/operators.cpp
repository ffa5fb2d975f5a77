#include "lhtl/fock/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace lhtl::fock {

TruncatedTwoModeSpace TruncatedTwoModeSpace::make(int dim) {
    if (dim < 2)
        throw std::domain_error("TruncatedTwoModeSpace: dim must be >= 2");
    return TruncatedTwoModeSpace{dim, dim * dim};
}

ComplexMatrix annihilation_matrix(int dim) {
    if (dim < 2)
        throw std::domain_error("annihilation_matrix: dim must be >= 2");
    ComplexMatrix a(dim, dim);
    for (int k = 1; k < dim; ++k)
        a(k - 1, k) = std::sqrt(static_cast<double>(k));
    return a;
}

ComplexMatrix creation_matrix(int dim) {
    return annihilation_matrix(dim).adjoint();
}

ComplexMatrix embed(const ComplexMatrix& op, ModeSlot slot, int dim) {
    if (op.rows() != dim || op.cols() != dim)
        throw std::domain_error("embed: operator must be dim x dim");
    const ComplexMatrix eye = ComplexMatrix::identity(dim);
    return slot == ModeSlot::AMode ? kron(op, eye) : kron(eye, op);
}

std::pair<ComplexMatrix, ComplexMatrix>
quadrature_matrices(int dim, double omega, const UnitSystem& units) {
    if (!(std::isfinite(omega) && omega > 0.0))
        throw std::domain_error("quadrature_matrices: omega must be finite and > 0");
    const ComplexMatrix a = annihilation_matrix(dim);
    const ComplexMatrix ad = a.adjoint();

    ComplexMatrix q = a;
    q += ad;
    q *= cplx(std::sqrt(units.hbar / (2.0 * omega)), 0.0);

    ComplexMatrix p = ad;
    p -= a;
    p *= cplx(0.0, std::sqrt(units.hbar * omega / 2.0));
    return {q, p};
}

ComplexMatrix thermal_generator(double theta, int dim, bool flip_sign) {
    if (dim < 2)
        throw std::domain_error("thermal_generator: dim must be >= 2");
    if (!(std::isfinite(theta) && theta >= 0.0))
        throw std::domain_error("thermal_generator: theta must be finite and >= 0");

    const double s = flip_sign ? -theta : theta;
    const TruncatedTwoModeSpace space = TruncatedTwoModeSpace::make(dim);
    ComplexMatrix k(space.total_dim, space.total_dim);
    for (int na = 0; na + 1 < dim; ++na) {
        for (int nt = 0; nt + 1 < dim; ++nt) {
            const double amp = s * std::sqrt(static_cast<double>(na + 1) * (nt + 1));
            const int lo = space.index(na, nt);
            const int hi = space.index(na + 1, nt + 1);
            k(hi, lo) += amp; // a+ (x) a+ raises both occupations
            k(lo, hi) -= amp; // -a (x) a lowers both
        }
    }
    return k;
}

} // namespace lhtl::fock
