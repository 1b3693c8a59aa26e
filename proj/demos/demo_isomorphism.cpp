// Walks through the SU(2)xSU(2) -> SO(4) correspondence end to end.

#include <cstdio>

#include "bellmap/bellmap.hpp"

using namespace bellmap;

namespace {

void print_matrix(const char* label, const ComplexMatrix& m) {
    std::printf("%s (%zux%zu):\n", label, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Complex v = m(i, j);
            std::printf("  (%+.3f%+.3fi)", v.real(), v.imag());
        }
        std::printf("\n");
    }
}

}  // namespace

int main() {
    std::printf("== canonical intertwiner ==\n");
    const IntertwinerMatrix r = r_canonical2();
    print_matrix("R", r.matrix);

    std::printf("\n== conjugating a random pair into a rotation ==\n");
    Rng rng(12);
    const ComplexMatrix a = SU2Element::haar(rng).materialize();
    const ComplexMatrix b = SU2Element::haar(rng).materialize();
    const ComplexMatrix o = group_map(a, b);
    print_matrix("R^dag (A x B) R", o);
    std::printf("orthogonality defect: %.2e\n",
                frobenius_distance(transpose(o) * o, ComplexMatrix::identity(4)));
    std::printf("largest imaginary part: %.2e\n", max_abs_imag(o));

    const auto recovered = inverse_group_map(o);
    std::printf("pair recovery defect:  %.2e\n",
                frobenius_distance(kron(recovered.first, recovered.second), kron(a, b)));

    std::printf("\n== two-qubit phases admit an exact solution ==\n");
    SearchParams two;
    two.n = 2;
    two.grid_resolution = 4;
    const SearchReport found = search(two);
    std::printf("best residual over quarter-turn grid: %.2e\n", found.best_residual);
    std::printf("canonical phases residual:            %.2e\n",
                residual(canonical_phases2()));

    std::printf("\n== three qubits do not ==\n");
    const SearchReport floor = search(SearchParams{});
    std::printf("best residual (grid 8 + refinement):  %.6f\n", floor.best_residual);
    std::printf("samples evaluated:                    %zu\n", floor.samples_evaluated);

    std::printf("\n== structure survives at higher qubit counts ==\n");
    for (std::size_t n = 1; n <= 4; ++n) {
        const double sigma = sigma3_characterization(PhaseVector::zeros(n));
        const ComplexMatrix v = copy_operator(static_cast<int>(n));
        const double copy = frobenius_distance(v * pauli_on_slot(1, 0, n) * dagger(v),
                                               kron_power(pauli1(), n));
        std::printf("n=%zu: sigma3 defect %.2e, copy defect %.2e\n", n, sigma, copy);
    }
    return 0;
}
