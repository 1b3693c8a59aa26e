// Evaluates the abelian action family on hand-picked and lattice curvatures.

#include <array>
#include <cstdio>
#include <vector>

#include "bellmap/bellmap.hpp"

using namespace bellmap;

namespace {

void report(const char* label, const CurvatureConfig& c) {
    const SdAsdInvariants inv = sd_asd_invariants(c);
    std::printf("%s\n", label);
    std::printf("  x_sd=%.4f x_asd=%.4f%s%s\n", inv.x_sd, inv.x_asd,
                is_self_dual(c) ? "  [self-dual]" : "",
                is_anti_self_dual(c) ? "  [anti-self-dual]" : "");
    std::printf("  yang-mills    %+.6f\n", action_ym(c));
    std::printf("  born-infeld   %+.6f\n", action_bi(c));
    std::printf("  trace-exp     %+.6f (closed form)\n", action_fos(c));
    std::printf("  trace-exp     %+.6f (matrix exponential)\n", action_fos_direct(c));
}

}  // namespace

int main() {
    std::printf("== flat curvature ==\n");
    report("F = 0, g = 1", CurvatureConfig(0, 0, 0, 0, 0, 0, 1));

    std::printf("\n== single component ==\n");
    report("F12 = 1, g = 1", CurvatureConfig(1, 0, 0, 0, 0, 0, 1));

    std::printf("\n== self-dual configuration ==\n");
    report("F = (1, 0, 0, 0, 0, 1), g = 0.5", CurvatureConfig(1, 0, 0, 0, 0, 1, 0.5));

    std::printf("\n== the trace factorizes through the split ==\n");
    Rng rng(34);
    const CurvatureConfig c(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                            rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), 1.3);
    const auto split = decompose(c);
    const Complex ta = trace(expm_su2(c.g * split.first.a1, c.g * split.first.a2,
                                      c.g * split.first.a3));
    const Complex tb = trace(expm_su2(c.g * split.second.a1, c.g * split.second.a2,
                                      c.g * split.second.a3));
    std::printf("tr exp(gF)          = %+.10f\n", action_fos_direct(c));
    std::printf("product of factors  = %+.10f\n", (ta * tb).real());
    std::printf("closed form         = %+.10f\n", action_fos(c));

    std::printf("\n== curvature from a lattice potential ==\n");
    const std::size_t n = 5;
    const double h = 0.5;
    const std::size_t volume = n * n * n * n;
    std::vector<double> vals(4 * volume, 0.0);
    std::size_t idx = 0;
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t x0 = 0; x0 < n; ++x0)
            for (std::size_t x1 = 0; x1 < n; ++x1)
                for (std::size_t x2 = 0; x2 < n; ++x2)
                    for (std::size_t x3 = 0; x3 < n; ++x3, ++idx)
                        if (mu == 1) vals[idx] = h * static_cast<double>(x0);
    const LatticePotential ramp({n, n, n, n}, h, std::move(vals));
    const std::array<std::size_t, 4> site{2, 2, 2, 2};
    report("A_1(x) = h x_0 ramp, interior site", curvature_from_potential(ramp, site, 1.0));
    return 0;
}
