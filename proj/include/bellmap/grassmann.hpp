#pragma once

#include <cmath>
#include <utility>

#include "bellmap/errors.hpp"
#include "bellmap/linalg.hpp"
#include "bellmap/matrix.hpp"
#include "bellmap/rng.hpp"

namespace bellmap {

/// Point of the space {R in U(n) | R^T = R}, the image of A |-> A^T A.
struct SymmetricUnitary {
    std::size_t n;
    ComplexMatrix matrix;

    explicit SymmetricUnitary(ComplexMatrix m) : n(m.rows()), matrix(std::move(m)) {
        require_square(matrix, "SymmetricUnitary");
        if (!is_unitary(matrix, 1e-10)) throw domain_error("SymmetricUnitary: matrix is not unitary");
        if (frobenius_distance(transpose(matrix), matrix) > 1e-10)
            throw domain_error("SymmetricUnitary: matrix is not symmetric");
    }
};

/// Chart data: a unitary A; the chart is centered at R0 = A^T A.
struct Chart {
    std::size_t n;
    ComplexMatrix base;

    explicit Chart(ComplexMatrix a) : n(a.rows()), base(std::move(a)) {
        require_square(base, "Chart");
        if (!is_unitary(base, 1e-10)) throw domain_error("Chart: base is not unitary");
    }

    ComplexMatrix center() const { return transpose(base) * base; }
};

/// Real symmetric coordinate matrix. Entries are stored with exactly zero
/// imaginary part; construction tolerates (and strips) residue up to 1e-12.
struct RealSymmetric {
    std::size_t n;
    ComplexMatrix matrix;

    explicit RealSymmetric(const ComplexMatrix& m) : n(m.rows()), matrix(project(m, 1e-12)) {}

    /// Symmetrize and drop imaginary parts after gating the discarded residue.
    static ComplexMatrix project(const ComplexMatrix& m, double gate) {
        require_square(m, "RealSymmetric");
        if (max_abs_imag(m) > gate)
            throw domain_error("RealSymmetric: imaginary residue exceeds the gate");
        if (frobenius_distance(transpose(m), m) > gate)
            throw domain_error("RealSymmetric: asymmetry exceeds the gate");
        const std::size_t n = m.rows();
        ComplexMatrix out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const double v = 0.5 * (m(i, j).real() + m(j, i).real());
                out(i, j) = v;
                out(j, i) = v;
            }
        return out;
    }
};

inline SymmetricUnitary make_point(const ComplexMatrix& a) {
    require_square(a, "make_point");
    if (!is_unitary(a, 1e-10)) throw domain_error("make_point: input is not unitary");
    return SymmetricUnitary(transpose(a) * a);
}

inline bool in_chart(const SymmetricUnitary& r, const Chart& chart) {
    if (r.n != chart.n) throw dimension_error("in_chart: dimension mismatch");
    return smallest_singular_value(r.matrix + chart.center()) > 1e-8;
}

namespace detail {

/// conj(A) R conj(A)^T, the unitary change of frame that sends the chart
/// center to the identity.
inline ComplexMatrix center_frame(const SymmetricUnitary& r, const Chart& chart) {
    const ComplexMatrix a_bar = conjugate(chart.base);
    return a_bar * r.matrix * transpose(a_bar);
}

}  // namespace detail

/// Cayley-type coordinates: 2i (E + conj(A) R conj(A)^T)^{-1} (E - conj(A) R conj(A)^T).
/// The exact image is real symmetric; imaginary residue up to 1e-9 is
/// projected away, anything larger is reported instead of dropped.
inline RealSymmetric chart_forward(const SymmetricUnitary& r, const Chart& chart) {
    if (!in_chart(r, chart)) throw out_of_chart_error("chart_forward: point is outside the chart");
    const std::size_t n = r.n;
    const ComplexMatrix s = detail::center_frame(r, chart);
    const ComplexMatrix e = ComplexMatrix::identity(n);
    const ComplexMatrix x = Complex(0, 2) * solve(e + s, e - s);
    try {
        return RealSymmetric(RealSymmetric::project(x, 1e-9));
    } catch (const domain_error&) {
        throw numerical_error("chart_forward: image failed the real-symmetry gate");
    }
}

/// Inverse chart map A^T (E + iX/2)(E - iX/2)^{-1} A; total on real symmetric X.
inline SymmetricUnitary chart_inverse(const RealSymmetric& x, const Chart& chart) {
    if (x.n != chart.n) throw dimension_error("chart_inverse: dimension mismatch");
    const std::size_t n = x.n;
    const ComplexMatrix e = ComplexMatrix::identity(n);
    const ComplexMatrix num = e + Complex(0, 0.5) * x.matrix;
    const ComplexMatrix den = e - Complex(0, 0.5) * x.matrix;
    // solve den^T y^T = num^T gives y = num den^{-1}
    const ComplexMatrix frac = transpose(solve(transpose(den), transpose(num)));
    return SymmetricUnitary(transpose(chart.base) * frac * chart.base);
}

/// Closed-form chart transition Y = 2 (alpha - X beta / 2)^{-1} (beta + X alpha / 2)
/// where A B^dag = alpha + i beta splits into real and imaginary parts,
/// A = from.base and B = to.base.
inline RealSymmetric transition(const RealSymmetric& x, const Chart& from, const Chart& to) {
    if (x.n != from.n || from.n != to.n) throw dimension_error("transition: dimension mismatch");
    const SymmetricUnitary r = chart_inverse(x, from);
    if (!in_chart(r, to)) throw out_of_chart_error("transition: point is outside the target chart");
    const ComplexMatrix ab = from.base * dagger(to.base);
    const ComplexMatrix alpha = real_part(ab);
    const ComplexMatrix beta = imag_part(ab);
    const ComplexMatrix lhs = alpha - 0.5 * (x.matrix * beta);
    if (smallest_singular_value(lhs) <= 1e-12)
        throw transition_domain_error("transition: singular coefficient matrix");
    const ComplexMatrix y = 2.0 * solve(lhs, beta + 0.5 * (x.matrix * alpha));
    try {
        return RealSymmetric(RealSymmetric::project(y, 1e-8));
    } catch (const domain_error&) {
        throw numerical_error("transition: image failed the real-symmetry gate");
    }
}

/// Haar-distributed unitary: QR of a complex Ginibre sample with the R-factor
/// diagonal phases folded into Q.
inline ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw bounds_error("haar_unitary: dimension must be positive");
    Rng rng(seed);
    const auto [q, r] = qr_decompose(ginibre_matrix(n, rng));
    ComplexMatrix out = q;
    for (std::size_t j = 0; j < n; ++j) {
        const Complex diag = r(j, j);
        const double mag = std::abs(diag);
        const Complex phase = mag > 0 ? diag / mag : Complex(1, 0);
        for (std::size_t i = 0; i < n; ++i) out(i, j) *= phase;
    }
    return out;
}

struct PhaseFactor {
    Complex phase;
    SymmetricUnitary reduced;
};

/// Split R = e^{i theta} reduced with det(reduced) = 1, taking the principal
/// branch of arg(det R)/n for theta.
inline PhaseFactor factor_phase(const SymmetricUnitary& r) {
    const double theta = std::arg(determinant(r.matrix)) / static_cast<double>(r.n);
    const Complex phase = std::polar(1.0, theta);
    SymmetricUnitary reduced(std::polar(1.0, -theta) * r.matrix);
    if (std::abs(determinant(reduced.matrix) - Complex(1, 0)) > 1e-10)
        throw numerical_error("factor_phase: reduced determinant strayed from one");
    return PhaseFactor{phase, std::move(reduced)};
}

}  // namespace bellmap
