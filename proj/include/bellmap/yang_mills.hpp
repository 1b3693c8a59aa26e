#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "bellmap/bell.hpp"
#include "bellmap/linalg.hpp"
#include "bellmap/matrix.hpp"

namespace bellmap {

/// Abelian field strength on four dimensions: the six independent components
/// of the antisymmetric matrix, plus the coupling.
struct CurvatureConfig {
    double f12, f13, f14, f23, f24, f34;
    double g;

    CurvatureConfig(double f12_, double f13_, double f14_, double f23_, double f24_, double f34_,
                    double g_)
        : f12(f12_), f13(f13_), f14(f14_), f23(f23_), f24(f24_), f34(f34_), g(g_) {
        for (double v : {f12, f13, f14, f23, f24, f34, g})
            if (!std::isfinite(v)) throw domain_error("CurvatureConfig: non-finite component");
    }

    std::array<double, 6> components() const { return {f12, f13, f14, f23, f24, f34}; }
};

struct SdAsdInvariants {
    double x_sd;
    double x_asd;
};

inline ComplexMatrix curvature_matrix(const CurvatureConfig& c) {
    ComplexMatrix m(4, 4);
    m(0, 1) = c.f12;
    m(0, 2) = c.f13;
    m(0, 3) = c.f14;
    m(1, 2) = c.f23;
    m(1, 3) = c.f24;
    m(2, 3) = c.f34;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < i; ++j) m(i, j) = -m(j, i);
    return m;
}

inline double action_ym(const CurvatureConfig& c) {
    double sum = 0.0;
    for (double f : c.components()) sum += f * f;
    return -c.g * c.g * sum;
}

/// Trace route for the same quantity, (1/2) tr (g F)^2; kept separate as the
/// cross-check oracle.
inline double action_ym_trace(const CurvatureConfig& c) {
    const ComplexMatrix gf = c.g * curvature_matrix(c);
    return 0.5 * trace(gf * gf).real();
}

inline double action_bi(const CurvatureConfig& c) {
    const ComplexMatrix m = ComplexMatrix::identity(4) + c.g * curvature_matrix(c);
    const double det = determinant(m).real();
    if (det < -1e-12) throw numerical_error("action_bi: negative determinant");
    return std::sqrt(std::max(det, 0.0));
}

/// Norms of the anti-self-dual and self-dual parts of the field strength.
/// x_sd vanishes exactly on self-dual configurations (f12=f34, f13=-f24,
/// f14=f23) and x_asd on anti-self-dual ones.
inline SdAsdInvariants sd_asd_invariants(const CurvatureConfig& c) {
    const double dm1 = c.f12 - c.f34, dp1 = c.f12 + c.f34;
    const double sp2 = c.f13 + c.f24, sm2 = c.f13 - c.f24;
    const double dm3 = c.f14 - c.f23, dp3 = c.f14 + c.f23;
    return SdAsdInvariants{0.5 * std::sqrt(dm1 * dm1 + sp2 * sp2 + dm3 * dm3),
                           0.5 * std::sqrt(dp1 * dp1 + sm2 * sm2 + dp3 * dp3)};
}

inline bool is_self_dual(const CurvatureConfig& c) { return sd_asd_invariants(c).x_sd <= 1e-12; }

inline bool is_anti_self_dual(const CurvatureConfig& c) {
    return sd_asd_invariants(c).x_asd <= 1e-12;
}

/// Closed form of tr e^{gF}: the trace splits into a self-dual and an
/// anti-self-dual cosine factor.
inline double action_fos(const CurvatureConfig& c) {
    const SdAsdInvariants inv = sd_asd_invariants(c);
    return 4.0 * std::cos(c.g * inv.x_asd) * std::cos(c.g * inv.x_sd);
}

inline double action_fos_direct(const CurvatureConfig& c) {
    const Complex t = trace(expm(c.g * curvature_matrix(c)));
    if (std::abs(t.imag()) > 1e-10)
        throw numerical_error("action_fos_direct: imaginary residue in the trace");
    return t.real();
}

/// Split g F = i R^dag (a (x) 1 + 1 (x) b) R ... inverted: the two 2x2
/// traceless Hermitian halves of the curvature under the canonical
/// intertwiner, with |a| = x_asd and |b| = x_sd.
inline std::pair<TracelessHermitian2, TracelessHermitian2> decompose(const CurvatureConfig& c) {
    const auto [a, b] =
        inverse_algebra_map(So4Element{c.f12, c.f13, c.f14, c.f23, c.f24, c.f34});
    return {a, b};
}

/// Hermitian variant: field strength i G with real antisymmetric G, so the
/// cosines become hyperbolic.
inline double action_fos_hermitian(const std::array<double, 6>& g_components, double g) {
    const CurvatureConfig c(g_components[0], g_components[1], g_components[2], g_components[3],
                            g_components[4], g_components[5], g);
    const SdAsdInvariants inv = sd_asd_invariants(c);
    return 4.0 * std::cosh(g * inv.x_asd) * std::cosh(g * inv.x_sd);
}

/// Sampled abelian potential on a four dimensional grid. Values are stored
/// mu-major: values[mu * volume + site] with sites linearized row-major over
/// (x1, x2, x3, x4).
struct LatticePotential {
    std::array<std::size_t, 4> extent;
    double spacing;
    std::vector<double> values;
    bool periodic;

    LatticePotential(std::array<std::size_t, 4> extent_, double spacing_,
                     std::vector<double> values_, bool periodic_ = false)
        : extent(extent_), spacing(spacing_), values(std::move(values_)), periodic(periodic_) {
        for (std::size_t e : extent)
            if (e == 0) throw domain_error("LatticePotential: zero extent");
        if (!(spacing > 0.0) || !std::isfinite(spacing))
            throw domain_error("LatticePotential: spacing must be positive");
        if (values.size() != 4 * volume())
            throw dimension_error("LatticePotential: value array length mismatch");
        for (double v : values)
            if (!std::isfinite(v)) throw domain_error("LatticePotential: non-finite value");
    }

    std::size_t volume() const { return extent[0] * extent[1] * extent[2] * extent[3]; }

    std::size_t site_index(const std::array<std::size_t, 4>& x) const {
        for (int d = 0; d < 4; ++d)
            if (x[d] >= extent[d]) throw bounds_error("LatticePotential: site outside the grid");
        return ((x[0] * extent[1] + x[1]) * extent[2] + x[2]) * extent[3] + x[3];
    }

    double value(int mu, const std::array<std::size_t, 4>& x) const {
        if (mu < 0 || mu > 3) throw bounds_error("LatticePotential: direction out of range");
        return values[static_cast<std::size_t>(mu) * volume() + site_index(x)];
    }

    /// Neighbor in direction mu, step +1 or -1. Non-periodic grids reject
    /// steps that leave the grid.
    std::array<std::size_t, 4> neighbor(const std::array<std::size_t, 4>& x, int mu,
                                        int step) const {
        std::array<std::size_t, 4> out = x;
        const std::size_t n = extent[static_cast<std::size_t>(mu)];
        if (periodic) {
            const std::size_t shift = step > 0 ? 1 : n - 1;
            out[static_cast<std::size_t>(mu)] = (x[static_cast<std::size_t>(mu)] + shift) % n;
        } else {
            if ((step < 0 && x[static_cast<std::size_t>(mu)] == 0) ||
                (step > 0 && x[static_cast<std::size_t>(mu)] + 1 >= n))
                throw bounds_error("LatticePotential: central difference crosses the boundary");
            out[static_cast<std::size_t>(mu)] =
                x[static_cast<std::size_t>(mu)] + static_cast<std::size_t>(step > 0 ? 1 : -1);
        }
        return out;
    }
};

/// Central-difference field strength F_mu_nu = D_mu A_nu - D_nu A_mu at one
/// site. Non-periodic grids require the site to sit at least one cell off
/// every boundary.
inline CurvatureConfig curvature_from_potential(const LatticePotential& p,
                                                const std::array<std::size_t, 4>& site, double g) {
    p.site_index(site);  // bounds check
    const double denom = 2.0 * p.spacing;
    auto diff = [&](int mu, int nu) {
        const double d_mu_a_nu =
            (p.value(nu, p.neighbor(site, mu, +1)) - p.value(nu, p.neighbor(site, mu, -1))) / denom;
        const double d_nu_a_mu =
            (p.value(mu, p.neighbor(site, nu, +1)) - p.value(mu, p.neighbor(site, nu, -1))) / denom;
        return d_mu_a_nu - d_nu_a_mu;
    };
    return CurvatureConfig(diff(0, 1), diff(0, 2), diff(0, 3), diff(1, 2), diff(1, 3), diff(2, 3),
                           g);
}

}  // namespace bellmap
