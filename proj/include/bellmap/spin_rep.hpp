#pragma once

#include <cmath>

#include "bellmap/bell.hpp"
#include "bellmap/linalg.hpp"
#include "bellmap/matrix.hpp"
#include "bellmap/rng.hpp"

namespace bellmap {

/// Unit quaternion view of SU(2): (a,b,c,d) with a^2+b^2+c^2+d^2 = 1
/// materializes to [[a+ib, c+id], [-c+id, a-ib]].
struct SU2Element {
    double a, b, c, d;

    SU2Element(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
        const double norm2 = a * a + b * b + c * c + d * d;
        if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > 1e-9)
            throw domain_error("SU2Element: coefficients too far from the unit sphere");
        const double scale = 1.0 / std::sqrt(norm2);
        a *= scale;
        b *= scale;
        c *= scale;
        d *= scale;
    }

    ComplexMatrix materialize() const {
        ComplexMatrix m(2, 2);
        m(0, 0) = Complex(a, b);
        m(0, 1) = Complex(c, d);
        m(1, 0) = Complex(-c, d);
        m(1, 1) = Complex(a, -b);
        return m;
    }

    SU2Element negated() const {
        SU2Element g = *this;  // negation is exact, skip the renormalizing ctor
        g.a = -g.a;
        g.b = -g.b;
        g.c = -g.c;
        g.d = -g.d;
        return g;
    }

    friend SU2Element operator*(const SU2Element& lhs, const SU2Element& rhs) {
        const ComplexMatrix m = lhs.materialize() * rhs.materialize();
        return SU2Element(m(0, 0).real(), m(0, 0).imag(), m(0, 1).real(), m(0, 1).imag());
    }

    /// Haar sample: normalized 4-vector of standard Gaussians.
    static SU2Element haar(Rng& rng) {
        for (;;) {
            const double a = rng.normal(), b = rng.normal(), c = rng.normal(), d = rng.normal();
            const double norm = std::sqrt(a * a + b * b + c * c + d * d);
            if (norm < 1e-6) continue;
            return SU2Element(a / norm, b / norm, c / norm, d / norm);
        }
    }
};

/// The 3x3 rotation matrix of the adjoint action: g tau_j g^{-1} = sum_k rho_kj tau_k.
inline ComplexMatrix rho(const SU2Element& g) {
    const double a = g.a, b = g.b, c = g.c, d = g.d;
    ComplexMatrix m(3, 3);
    m(0, 0) = 1.0 - 2.0 * (b * b + c * c);
    m(0, 1) = 2.0 * (a * b + c * d);
    m(0, 2) = -2.0 * (a * c - b * d);
    m(1, 0) = -2.0 * (a * b - c * d);
    m(1, 1) = 1.0 - 2.0 * (b * b + d * d);
    m(1, 2) = 2.0 * (a * d + b * c);
    m(2, 0) = 2.0 * (a * c + b * d);
    m(2, 1) = -2.0 * (a * d - b * c);
    m(2, 2) = 1.0 - 2.0 * (c * c + d * d);
    return m;
}

/// Corner embedding SO(3) -> SO(4), O |-> 1 (+) O.
inline ComplexMatrix iota(const ComplexMatrix& o) {
    if (o.rows() != 3 || o.cols() != 3) throw dimension_error("iota: expected a 3x3 matrix");
    if (!is_real_orthogonal(o, kPredicateTol)) throw domain_error("iota: input is not real orthogonal");
    ComplexMatrix m = ComplexMatrix::identity(4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i + 1, j + 1) = o(i, j);
    return m;
}

/// R (1 (+) rho(g)) R^dag with the canonical two-qubit intertwiner.
inline ComplexMatrix iota_tilde(const SU2Element& g) {
    const ComplexMatrix r = r_canonical2().matrix;
    return r * iota(rho(g)) * dagger(r);
}

/// The same map evaluated without R: (1 (x) sigma_2)(g (x) g)(1 (x) sigma_2)^dag.
inline ComplexMatrix iota_tilde_tensor(const SU2Element& g) {
    const ComplexMatrix u = kron(ComplexMatrix::identity(2), pauli2());
    const ComplexMatrix gm = g.materialize();
    return u * kron(gm, gm) * dagger(u);
}

/// Frobenius distance between 1 (+) rho(g) and its tensor-product realization
/// [R^dag (1 (x) sigma_2)] (g (x) g) [..]^dag. Zero means the 4x4 tensor square
/// splits into the singlet and the rotation block.
inline double clebsch_check(const SU2Element& g) {
    const ComplexMatrix u = dagger(r_canonical2().matrix) * kron(ComplexMatrix::identity(2), pauli2());
    const ComplexMatrix gm = g.materialize();
    const ComplexMatrix lhs = iota(rho(g));
    const ComplexMatrix rhs = u * kron(gm, gm) * dagger(u);
    return frobenius_distance(lhs, rhs);
}

}  // namespace bellmap
