#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "bellmap/matrix.hpp"

namespace bellmap {

/// Absolute/relative tolerance pair for closeness checks.
struct Tolerance {
    double absolute = 1e-9;
    double relative = 0.0;

    Tolerance() = default;
    Tolerance(double abs_tol, double rel_tol) : absolute(abs_tol), relative(rel_tol) {
        if (!(std::isfinite(absolute) && std::isfinite(relative)) || absolute <= 0.0 || relative < 0.0)
            throw domain_error("Tolerance: absolute must be positive and both parts finite");
    }

    bool close(double a, double b) const {
        return std::abs(a - b) <= absolute + relative * std::max(std::abs(a), std::abs(b));
    }

    bool close(const ComplexMatrix& a, const ComplexMatrix& b) const {
        return frobenius_distance(a, b) <= absolute + relative * std::max(frobenius_norm(a), frobenius_norm(b));
    }
};

// Default tolerances: 1e-9 for acceptance-style predicates, 1e-12 for
// algebraic round trips on these matrix sizes.
inline constexpr double kPredicateTol = 1e-9;
inline constexpr double kRoundTripTol = 1e-12;

namespace detail {

/// LU decomposition with partial pivoting, in place. Returns the permutation
/// sign, or 0 if the matrix is numerically singular (pivot below cutoff).
inline int lu_factor(ComplexMatrix& a, std::vector<std::size_t>& perm, double pivot_cutoff = 0.0) {
    const std::size_t n = a.rows();
    perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) { best = v; p = i; }
        }
        if (best <= pivot_cutoff) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            std::swap(perm[k], perm[p]);
            sign = -sign;
        }
        const Complex piv = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex m = a(i, k) / piv;
            a(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
        }
    }
    return sign;
}

}  // namespace detail

inline Complex determinant(const ComplexMatrix& a) {
    require_square(a, "determinant");
    ComplexMatrix lu = a;
    std::vector<std::size_t> perm;
    const int sign = detail::lu_factor(lu, perm);
    if (sign == 0) return Complex(0.0, 0.0);
    Complex d(static_cast<double>(sign), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) d *= lu(i, i);
    return d;
}

/// Solve A X = B by LU with partial pivoting.
namespace detail {

inline ComplexMatrix lu_apply(const ComplexMatrix& lu, const std::vector<std::size_t>& perm,
                              const ComplexMatrix& b) {
    const std::size_t n = lu.rows();
    ComplexMatrix x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = b(perm[i], j);
    // forward substitution (unit lower factor)
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = k + 1; i < n; ++i) {
            const Complex m = lu(i, k);
            if (m == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) -= m * x(k, j);
        }
    // back substitution
    for (std::size_t k = n; k-- > 0;) {
        const Complex piv = lu(k, k);
        for (std::size_t j = 0; j < b.cols(); ++j) x(k, j) /= piv;
        for (std::size_t i = 0; i < k; ++i) {
            const Complex m = lu(i, k);
            if (m == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) -= m * x(k, j);
        }
    }
    return x;
}

}  // namespace detail

inline ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "solve");
    if (a.rows() != b.rows()) throw dimension_error("solve: right-hand side row count mismatch");
    const std::size_t n = a.rows();
    ComplexMatrix lu = a;
    std::vector<std::size_t> perm;
    if (detail::lu_factor(lu, perm) == 0) throw numerical_error("solve: matrix is numerically singular");
    ComplexMatrix x = detail::lu_apply(lu, perm, b);
    // One residual-correction pass with the residual accumulated in extended
    // precision. Tightens the forward error on ill-conditioned systems.
    ComplexMatrix residual(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::complex<long double> acc(b(i, j).real(), b(i, j).imag());
            for (std::size_t k = 0; k < n; ++k)
                acc -= std::complex<long double>(a(i, k).real(), a(i, k).imag()) *
                       std::complex<long double>(x(k, j).real(), x(k, j).imag());
            residual(i, j) = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
        }
    const ComplexMatrix delta = detail::lu_apply(lu, perm, residual);
    return x + delta;
}

inline ComplexMatrix inverse(const ComplexMatrix& a) {
    return solve(a, ComplexMatrix::identity(a.rows()));
}

/// Householder QR. Returns {Q, R} with Q unitary, R upper triangular, A = Q R.
inline std::pair<ComplexMatrix, ComplexMatrix> qr_decompose(const ComplexMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    ComplexMatrix r = a;
    ComplexMatrix q = ComplexMatrix::identity(m);
    for (std::size_t k = 0; k < std::min(m == 0 ? 0 : m - 1, n); ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k; i < m; ++i) xnorm += std::norm(r(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        // Householder vector v = x + e^{i arg(x_k)} |x| e_k
        const Complex xk = r(k, k);
        const Complex phase = (std::abs(xk) == 0.0) ? Complex(1.0, 0.0) : xk / std::abs(xk);
        std::vector<Complex> v(m - k);
        for (std::size_t i = k; i < m; ++i) v[i - k] = r(i, k);
        v[0] += phase * xnorm;
        double vnorm2 = 0.0;
        for (const Complex& z : v) vnorm2 += std::norm(z);
        if (vnorm2 == 0.0) continue;
        // apply H = I - 2 v v^dag / |v|^2 to R (left) and accumulate into Q
        for (std::size_t j = k; j < n; ++j) {
            Complex dot(0.0, 0.0);
            for (std::size_t i = k; i < m; ++i) dot += std::conj(v[i - k]) * r(i, j);
            const Complex f = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < m; ++i) r(i, j) -= f * v[i - k];
        }
        for (std::size_t j = 0; j < m; ++j) {
            Complex dot(0.0, 0.0);
            for (std::size_t i = k; i < m; ++i) dot += v[i - k] * q(j, i);
            const Complex f = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < m; ++i) q(j, i) -= f * std::conj(v[i - k]);
        }
    }
    return {q, r};
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi sweeps, ascending.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
    require_square(a, "hermitian_eigenvalues");
    const std::size_t n = a.rows();
    ComplexMatrix h = a;
    const double scale = std::max(frobenius_norm(h), 1.0);
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(h(p, q));
        if (std::sqrt(off) <= 1e-15 * scale) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex hpq = h(p, q);
                const double apq = std::abs(hpq);
                if (apq <= 1e-18 * scale) continue;
                const Complex phase = hpq / apq;
                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                const double tau = (aqq - app) / (2.0 * apq);
                // small-magnitude root of t^2 - 2 tau t - 1 = 0, which zeroes
                // the rotated (p,q) entry for this rotation convention
                const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // G has columns (p,q): [c, -s*phase; s*conj(phase), c]; update H = G^dag H G
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex hip = h(i, p), hiq = h(i, q);
                    h(i, p) = c * hip + s * std::conj(phase) * hiq;
                    h(i, q) = -s * phase * hip + c * hiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex hpj = h(p, j), hqj = h(q, j);
                    h(p, j) = c * hpj + s * phase * hqj;
                    h(q, j) = -s * std::conj(phase) * hpj + c * hqj;
                }
            }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = h(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

/// Singular values of a general matrix, ascending (via eigenvalues of A^dag A).
inline std::vector<double> singular_values(const ComplexMatrix& a) {
    const ComplexMatrix h = dagger(a) * a;
    std::vector<double> eig = hermitian_eigenvalues(h);
    for (double& v : eig) v = std::sqrt(std::max(v, 0.0));
    return eig;
}

inline double smallest_singular_value(const ComplexMatrix& a) { return singular_values(a).front(); }

// ---------------------------------------------------------------------------
// Membership predicates
// ---------------------------------------------------------------------------

inline bool is_unitary(const ComplexMatrix& a, double tol = kPredicateTol) {
    require_square(a, "is_unitary");
    return frobenius_distance(dagger(a) * a, ComplexMatrix::identity(a.rows())) <= tol;
}

inline bool is_real_orthogonal(const ComplexMatrix& a, double tol = kPredicateTol) {
    require_square(a, "is_real_orthogonal");
    if (max_abs_imag(a) > tol) return false;
    return frobenius_distance(transpose(a) * a, ComplexMatrix::identity(a.rows())) <= tol;
}

inline bool is_special(const ComplexMatrix& a, double tol = kPredicateTol) {
    require_square(a, "is_special");
    return std::abs(determinant(a) - Complex(1.0, 0.0)) <= tol;
}

inline bool is_real_antisymmetric(const ComplexMatrix& a, double tol = kPredicateTol) {
    require_square(a, "is_real_antisymmetric");
    if (max_abs_imag(a) > tol) return false;
    return frobenius_norm(transpose(a) + a) <= tol;
}

// ---------------------------------------------------------------------------
// Matrix exponentials
// ---------------------------------------------------------------------------

/// exp(i (x sigma1 + y sigma2 + z sigma3)) in closed form:
/// cos(r) 1 + i sin(r)/r (x sigma1 + y sigma2 + z sigma3), r = |(x,y,z)|.
inline ComplexMatrix expm_su2(double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    const double c = std::cos(r);
    const double sinc = (r == 0.0) ? 1.0 : std::sin(r) / r;
    ComplexMatrix m(2, 2);
    m(0, 0) = Complex(c, sinc * z);
    m(0, 1) = Complex(sinc * y, sinc * x);
    m(1, 0) = Complex(-sinc * y, sinc * x);
    m(1, 1) = Complex(c, -sinc * z);
    return m;
}

/// Matrix exponential by scaling-and-squaring with a Taylor kernel.
/// The input is halved until its Frobenius norm is at most 0.5.
inline ComplexMatrix expm(const ComplexMatrix& a) {
    require_square(a, "expm");
    const std::size_t n = a.rows();
    const double norm = frobenius_norm(a);
    int squarings = 0;
    double scaled = norm;
    while (scaled > 0.5 && squarings < 64) {
        scaled *= 0.5;
        ++squarings;
    }
    ComplexMatrix x = std::ldexp(1.0, -squarings) * a;
    // Taylor series; with norm <= 0.5 the k=24 tail is below 1e-32.
    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 24; ++k) {
        term = (1.0 / static_cast<double>(k)) * (term * x);
        sum = sum + term;
    }
    for (int k = 0; k < squarings; ++k) sum = sum * sum;
    return sum;
}

}  // namespace bellmap
