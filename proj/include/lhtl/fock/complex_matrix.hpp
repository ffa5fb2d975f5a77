#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace lhtl::fock {

using cplx = std::complex<double>;

/// Dense row-major complex matrix, sized for truncated Fock spaces
/// (total dimension <= 4096). No sparse storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);
    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ > 0 && rows_ == cols_; }

    cplx& operator()(int r, int c) {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const cplx& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }
    const std::vector<cplx>& entries() const { return data_; }

    ComplexMatrix adjoint() const;
    double one_norm() const; // max column sum of moduli
    double max_abs() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);

    std::vector<cplx> apply(const std::vector<cplx>& v) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scalar, ComplexMatrix a);

/// Kronecker product with `a` as the slow (row-major outer) factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Debug dump as JSON (row-major [re, im] pairs). Not a stable format.
std::string to_debug_json(const ComplexMatrix& m);

} // namespace lhtl::fock
