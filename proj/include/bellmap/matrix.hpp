#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bellmap/errors.hpp"

namespace bellmap {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage, value semantics.
/// All arithmetic lives in free functions that return new values.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw dimension_error("ComplexMatrix: entry count " + std::to_string(entries_.size()) +
                                  " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }

    bool all_finite() const {
        for (const Complex& z : entries_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

inline void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_error(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()));
}

inline void require_square(const ComplexMatrix& a, const char* op) {
    if (!a.is_square())
        throw dimension_error(std::string(op) + ": matrix is " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + ", expected square");
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator+");
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator-");
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

inline ComplexMatrix operator*(const Complex& s, const ComplexMatrix& a) {
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

inline ComplexMatrix operator*(double s, const ComplexMatrix& a) { return Complex(s, 0.0) * a; }

inline ComplexMatrix operator-(const ComplexMatrix& a) { return Complex(-1.0, 0.0) * a; }

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw dimension_error("operator*: inner dimensions " + std::to_string(a.cols()) + " vs " +
                              std::to_string(b.rows()));
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = a(i, j);
    return c;
}

inline ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = std::conj(a(i, j));
    return c;
}

/// Conjugate transpose.
inline ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = std::conj(a(i, j));
    return c;
}

/// Kronecker product: block structure a(i,j) * b.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

inline Complex trace(const ComplexMatrix& a) {
    require_square(a, "trace");
    Complex t(0.0, 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

/// Frobenius norm, the canonical matrix distance throughout the library.
inline double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Complex& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "frobenius_distance");
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - b(i, j));
    return std::sqrt(s);
}

inline double max_abs_imag(const ComplexMatrix& a) {
    double m = 0.0;
    for (const Complex& z : a.entries()) m = std::max(m, std::abs(z.imag()));
    return m;
}

inline double max_abs_entry(const ComplexMatrix& a) {
    double m = 0.0;
    for (const Complex& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

inline ComplexMatrix real_part(const ComplexMatrix& a) {
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = Complex(a(i, j).real(), 0.0);
    return c;
}

inline ComplexMatrix imag_part(const ComplexMatrix& a) {
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = Complex(a(i, j).imag(), 0.0);
    return c;
}

// Pauli matrices and friends. These appear everywhere downstream.
inline ComplexMatrix pauli1() {
    return ComplexMatrix(2, 2, {Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)});
}

inline ComplexMatrix pauli2() {
    return ComplexMatrix(2, 2, {Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)});
}

inline ComplexMatrix pauli3() {
    return ComplexMatrix(2, 2, {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0)});
}

inline ComplexMatrix pauli(int j) {
    switch (j) {
        case 1: return pauli1();
        case 2: return pauli2();
        case 3: return pauli3();
        default: throw bounds_error("pauli: index " + std::to_string(j) + " not in {1,2,3}");
    }
}

/// Walsh-Hadamard matrix, W sigma3 W = sigma1.
inline ComplexMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return ComplexMatrix(2, 2, {Complex(s, 0), Complex(s, 0), Complex(s, 0), Complex(-s, 0)});
}

/// n-fold Kronecker power.
inline ComplexMatrix kron_power(const ComplexMatrix& a, std::size_t n) {
    if (n == 0) return ComplexMatrix::identity(1);
    ComplexMatrix c = a;
    for (std::size_t i = 1; i < n; ++i) c = kron(c, a);
    return c;
}

/// Pauli sigma_j acting on one slot of an n-fold tensor product (slots 0-based).
inline ComplexMatrix pauli_on_slot(int j, std::size_t slot, std::size_t n_slots) {
    if (slot >= n_slots) throw bounds_error("pauli_on_slot: slot out of range");
    ComplexMatrix m = ComplexMatrix::identity(1);
    for (std::size_t s = 0; s < n_slots; ++s)
        m = kron(m, s == slot ? pauli(j) : ComplexMatrix::identity(2));
    return m;
}

}  // namespace bellmap
