#include "lhtl/fock/matrix_exponential.hpp"

#include "lhtl/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace lhtl::fock {

ComplexMatrix matrix_exponential(const ComplexMatrix& m, double tol) {
    if (!m.square())
        throw std::domain_error("matrix_exponential: matrix must be square");
    if (!(tol > 0.0))
        throw std::domain_error("matrix_exponential: tol must be > 0");
    const double norm = m.one_norm();
    if (!std::isfinite(norm))
        throw std::domain_error("matrix_exponential: non-finite entries");

    int squarings = 0;
    if (norm > 1.0)
        squarings = static_cast<int>(std::ceil(std::log2(norm)));
    if (squarings > 40)
        throw convergence_error("matrix_exponential: norm too large to scale");

    ComplexMatrix scaled = m;
    scaled *= cplx(std::ldexp(1.0, -squarings), 0.0);

    const int n = m.rows();
    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 64; ++k) {
        term = term * scaled;
        term *= cplx(1.0 / k, 0.0);
        sum += term;
        if (k >= 3 && term.one_norm() <= tol * sum.one_norm())
            break;
    }
    for (int s = 0; s < squarings; ++s)
        sum = sum * sum;
    return sum;
}

} // namespace lhtl::fock
