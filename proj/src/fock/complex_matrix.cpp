#include "lhtl/fock/complex_matrix.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace lhtl::fock {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1)
        throw std::domain_error("ComplexMatrix: dimensions must be positive");
    data_.assign(static_cast<std::size_t>(rows) * cols, cplx{});
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            m(c, r) = std::conj((*this)(r, c));
    return m;
}

double ComplexMatrix::one_norm() const {
    double best = 0.0;
    for (int c = 0; c < cols_; ++c) {
        double sum = 0.0;
        for (int r = 0; r < rows_; ++r)
            sum += std::abs((*this)(r, c));
        best = std::max(best, sum);
    }
    return best;
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const cplx& v : data_)
        best = std::max(best, std::abs(v));
    return best;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::domain_error("ComplexMatrix: shape mismatch in +=");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::domain_error("ComplexMatrix: shape mismatch in -=");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (cplx& v : data_)
        v *= scalar;
    return *this;
}

std::vector<cplx> ComplexMatrix::apply(const std::vector<cplx>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::domain_error("ComplexMatrix: vector length mismatch in apply");
    std::vector<cplx> out(rows_, cplx{});
    for (int r = 0; r < rows_; ++r) {
        cplx acc{};
        const cplx* row = &data_[static_cast<std::size_t>(r) * cols_];
        for (int c = 0; c < cols_; ++c)
            acc += row[c] * v[c];
        out[r] = acc;
    }
    return out;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::domain_error("ComplexMatrix: shape mismatch in *");
    ComplexMatrix out(a.rows(), b.cols());
    // i-k-j order keeps the inner loop contiguous in both b and out.
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{})
                continue;
            for (int j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(cplx scalar, ComplexMatrix a) {
    a *= scalar;
    return a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ar = 0; ar < a.rows(); ++ar)
        for (int ac = 0; ac < a.cols(); ++ac) {
            const cplx v = a(ar, ac);
            if (v == cplx{})
                continue;
            for (int br = 0; br < b.rows(); ++br)
                for (int bc = 0; bc < b.cols(); ++bc)
                    out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
        }
    return out;
}

std::string to_debug_json(const ComplexMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const cplx& v : m.entries())
        entries.push_back({v.real(), v.imag()});
    nlohmann::json j{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
    return j.dump();
}

} // namespace lhtl::fock
