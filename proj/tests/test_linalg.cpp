#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "bellmap/linalg.hpp"
#include "bellmap/matrix.hpp"
#include "bellmap/rng.hpp"

using namespace bellmap;

namespace {

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
    return m;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
    const ComplexMatrix a = random_matrix(n, n, rng);
    return 0.5 * (a + dagger(a));
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    auto [q, r] = qr_decompose(random_matrix(n, n, rng));
    return q;
}

// Straight quadruple-loop Kronecker product, kept independent of the library
// implementation on purpose.
ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

// Plain Taylor series, no scaling tricks; adequate for small norms.
ComplexMatrix expm_taylor(const ComplexMatrix& a, int terms) {
    ComplexMatrix sum = ComplexMatrix::identity(a.rows());
    ComplexMatrix term = ComplexMatrix::identity(a.rows());
    for (int k = 1; k <= terms; ++k) {
        term = (1.0 / static_cast<double>(k)) * (term * a);
        sum = sum + term;
    }
    return sum;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
    Rng rng(11);
    const ComplexMatrix a = random_matrix(3, 4, rng);
    const ComplexMatrix b = random_matrix(4, 2, rng);

    SECTION("product shape and associativity with scalars") {
        const ComplexMatrix ab = a * b;
        REQUIRE(ab.rows() == 3);
        REQUIRE(ab.cols() == 2);
        REQUIRE(frobenius_distance(2.0 * ab, (2.0 * a) * b) < 1e-14);
    }

    SECTION("shape mismatches are rejected") {
        REQUIRE_THROWS_AS(a + b, dimension_error);
        REQUIRE_THROWS_AS(b * a * a, dimension_error);
        REQUIRE_THROWS_AS(require_square(a, "test"), dimension_error);
    }

    SECTION("dagger reverses products") {
        REQUIRE(frobenius_distance(dagger(a * b), dagger(b) * dagger(a)) < 1e-13);
        REQUIRE(frobenius_distance(transpose(a * b), transpose(b) * transpose(a)) < 1e-13);
        REQUIRE(frobenius_distance(conjugate(dagger(a)), transpose(a)) == 0.0);
    }

    SECTION("trace is linear and cyclic") {
        const ComplexMatrix sq = random_matrix(4, 4, rng);
        const ComplexMatrix sr = random_matrix(4, 4, rng);
        REQUIRE(std::abs(trace(sq + sr) - trace(sq) - trace(sr)) < 1e-13);
        REQUIRE(std::abs(trace(sq * sr) - trace(sr * sq)) < 1e-12);
    }

    SECTION("trace is invariant under unitary conjugation") {
        const ComplexMatrix sq = random_matrix(5, 5, rng);
        const ComplexMatrix u = random_unitary(5, rng);
        REQUIRE(std::abs(trace(u * sq * dagger(u)) - trace(sq)) < 1e-10);
    }
}

TEST_CASE("kronecker product") {
    Rng rng(12);

    SECTION("matches the quadruple-loop oracle") {
        const ComplexMatrix a = random_matrix(2, 3, rng);
        const ComplexMatrix b = random_matrix(3, 2, rng);
        REQUIRE(frobenius_distance(kron(a, b), kron_oracle(a, b)) == 0.0);
    }

    SECTION("mixed product identity") {
        const ComplexMatrix a = random_matrix(2, 2, rng);
        const ComplexMatrix b = random_matrix(3, 3, rng);
        const ComplexMatrix c = random_matrix(2, 2, rng);
        const ComplexMatrix d = random_matrix(3, 3, rng);
        REQUIRE(frobenius_distance(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
    }

    SECTION("pauli_on_slot places the factor at the right position") {
        REQUIRE(frobenius_distance(pauli_on_slot(3, 0, 2), kron(pauli3(), ComplexMatrix::identity(2))) == 0.0);
        REQUIRE(frobenius_distance(pauli_on_slot(1, 2, 3),
                                   kron(ComplexMatrix::identity(4), pauli1())) == 0.0);
        REQUIRE(frobenius_distance(kron_power(pauli1(), 2), kron(pauli1(), pauli1())) == 0.0);
    }
}

TEST_CASE("determinant and linear solves") {
    Rng rng(13);

    SECTION("2x2 analytic determinant") {
        const ComplexMatrix a = random_matrix(2, 2, rng);
        const Complex expected = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
        REQUIRE(std::abs(determinant(a) - expected) < 1e-13);
    }

    SECTION("determinant is multiplicative") {
        const ComplexMatrix a = random_matrix(3, 3, rng);
        const ComplexMatrix b = random_matrix(3, 3, rng);
        REQUIRE(std::abs(determinant(a * b) - determinant(a) * determinant(b)) < 1e-11);
    }

    SECTION("identity and diagonal determinants") {
        REQUIRE(determinant(ComplexMatrix::identity(5)) == Complex(1.0, 0.0));
        ComplexMatrix d(3, 3);
        d(0, 0) = Complex(2, 0);
        d(1, 1) = Complex(0, 1);
        d(2, 2) = Complex(-1, 0);
        REQUIRE(std::abs(determinant(d) - Complex(0, -2)) < 1e-15);
    }

    SECTION("solve satisfies the equation") {
        const ComplexMatrix a = random_matrix(5, 5, rng);
        const ComplexMatrix b = random_matrix(5, 2, rng);
        const ComplexMatrix x = solve(a, b);
        REQUIRE(frobenius_distance(a * x, b) < 1e-11);
    }

    SECTION("inverse multiplies to identity") {
        const ComplexMatrix a = random_matrix(4, 4, rng);
        REQUIRE(frobenius_distance(a * inverse(a), ComplexMatrix::identity(4)) < 1e-11);
        REQUIRE(frobenius_distance(inverse(a) * a, ComplexMatrix::identity(4)) < 1e-11);
    }

    SECTION("exactly singular matrices are rejected") {
        ComplexMatrix s(2, 2);
        s(0, 0) = Complex(1, 0);
        s(0, 1) = Complex(2, 0);
        s(1, 0) = Complex(2, 0);
        s(1, 1) = Complex(4, 0);
        REQUIRE_THROWS_AS(solve(s, ComplexMatrix::identity(2)), numerical_error);
        REQUIRE(std::abs(determinant(s)) < 1e-14);
    }
}

TEST_CASE("QR decomposition") {
    Rng rng(14);
    const ComplexMatrix a = random_matrix(5, 5, rng);
    const auto [q, r] = qr_decompose(a);

    REQUIRE(is_unitary(q, 1e-12));
    REQUIRE(frobenius_distance(q * r, a) < 1e-12);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < i; ++j) REQUIRE(std::abs(r(i, j)) < 1e-13);
}

TEST_CASE("hermitian eigenvalues") {
    Rng rng(15);

    SECTION("pauli matrices have eigenvalues -1 and 1") {
        for (int j = 1; j <= 3; ++j) {
            const std::vector<double> eig = hermitian_eigenvalues(pauli(j));
            REQUIRE(eig.size() == 2);
            REQUIRE(std::abs(eig[0] + 1.0) < 1e-14);
            REQUIRE(std::abs(eig[1] - 1.0) < 1e-14);
        }
    }

    SECTION("known real symmetric 2x2") {
        ComplexMatrix m(2, 2);
        m(0, 0) = 2.0;
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        m(1, 1) = 2.0;
        const std::vector<double> eig = hermitian_eigenvalues(m);
        REQUIRE(std::abs(eig[0] - 1.0) < 1e-13);
        REQUIRE(std::abs(eig[1] - 3.0) < 1e-13);
    }

    SECTION("trace and determinant recovered from the spectrum") {
        const ComplexMatrix h = random_hermitian(6, rng);
        const std::vector<double> eig = hermitian_eigenvalues(h);
        double sum = 0.0, prod = 1.0;
        for (double v : eig) {
            sum += v;
            prod *= v;
        }
        REQUIRE(std::abs(sum - trace(h).real()) < 1e-10);
        REQUIRE(std::abs(prod - determinant(h).real()) < 1e-9);
    }

    SECTION("eigenvalues are invariant under unitary conjugation") {
        const ComplexMatrix h = random_hermitian(5, rng);
        const ComplexMatrix u = random_unitary(5, rng);
        const std::vector<double> e1 = hermitian_eigenvalues(h);
        const std::vector<double> e2 = hermitian_eigenvalues(u * h * dagger(u));
        for (std::size_t i = 0; i < e1.size(); ++i) REQUIRE(std::abs(e1[i] - e2[i]) < 1e-10);
    }
}

TEST_CASE("singular values") {
    Rng rng(16);

    SECTION("diagonal matrix with complex entries") {
        ComplexMatrix d(2, 2);
        d(0, 0) = Complex(3, 0);
        d(1, 1) = Complex(0, 4);
        const std::vector<double> sv = singular_values(d);
        REQUIRE(std::abs(sv[0] - 3.0) < 1e-12);
        REQUIRE(std::abs(sv[1] - 4.0) < 1e-12);
    }

    SECTION("singular matrix has a vanishing smallest singular value") {
        ComplexMatrix s(2, 2);
        s(0, 0) = Complex(1, 0);
        s(0, 1) = Complex(1, 0);
        s(1, 0) = Complex(1, 0);
        s(1, 1) = Complex(1, 0);
        REQUIRE(smallest_singular_value(s) < 1e-12);
    }

    SECTION("unitary matrices have unit singular values") {
        const ComplexMatrix u = random_unitary(4, rng);
        for (double v : singular_values(u)) REQUIRE(std::abs(v - 1.0) < 1e-12);
    }
}

TEST_CASE("membership predicates") {
    SECTION("pauli1 is orthogonal but not special") {
        REQUIRE(is_unitary(pauli1()));
        REQUIRE(is_real_orthogonal(pauli1()));
        REQUIRE_FALSE(is_special(pauli1()));
    }

    SECTION("pauli2 is unitary but not real") {
        REQUIRE(is_unitary(pauli2()));
        REQUIRE_FALSE(is_real_orthogonal(pauli2()));
    }

    SECTION("the real rotation i*pauli2 is special orthogonal and antisymmetric") {
        const ComplexMatrix rot = Complex(0, 1) * pauli2();
        REQUIRE(is_real_orthogonal(rot));
        REQUIRE(is_special(rot));
        REQUIRE(is_real_antisymmetric(rot));
    }

    SECTION("identity is not antisymmetric") {
        REQUIRE_FALSE(is_real_antisymmetric(ComplexMatrix::identity(3)));
    }
}

TEST_CASE("closed-form 2x2 exponential") {
    Rng rng(17);

    SECTION("fixed points") {
        REQUIRE(frobenius_distance(expm_su2(0, 0, 0), ComplexMatrix::identity(2)) == 0.0);
        REQUIRE(frobenius_distance(expm_su2(std::acos(-1.0), 0, 0), -ComplexMatrix::identity(2)) <
                1e-15);
        ComplexMatrix quarter(2, 2);
        quarter(0, 0) = Complex(0, 1);
        quarter(1, 1) = Complex(0, -1);
        REQUIRE(frobenius_distance(expm_su2(0, 0, std::acos(-1.0) / 2.0), quarter) < 1e-15);
    }

    SECTION("agrees with the generic exponential of the Hermitian combination") {
        for (int trial = 0; trial < 50; ++trial) {
            const double x = rng.uniform(-2.0, 2.0);
            const double y = rng.uniform(-2.0, 2.0);
            const double z = rng.uniform(-2.0, 2.0);
            const ComplexMatrix h =
                Complex(0, 1) * (x * pauli1() + y * pauli2() + z * pauli3());
            REQUIRE(frobenius_distance(expm_su2(x, y, z), expm(h)) < 1e-13);
        }
    }

    SECTION("output is special unitary") {
        for (int trial = 0; trial < 20; ++trial) {
            const ComplexMatrix u =
                expm_su2(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3));
            REQUIRE(is_unitary(u, 1e-13));
            REQUIRE(is_special(u, 1e-13));
        }
    }
}

TEST_CASE("matrix exponential") {
    Rng rng(18);

    SECTION("zero matrix") {
        REQUIRE(frobenius_distance(expm(ComplexMatrix::zero(3, 3)), ComplexMatrix::identity(3)) ==
                0.0);
    }

    SECTION("diagonal matrices exponentiate entrywise") {
        ComplexMatrix d(2, 2);
        d(0, 0) = Complex(1.0, 0.5);
        d(1, 1) = Complex(-0.3, 2.0);
        const ComplexMatrix e = expm(d);
        REQUIRE(std::abs(e(0, 0) - std::exp(Complex(1.0, 0.5))) < 1e-13);
        REQUIRE(std::abs(e(1, 1) - std::exp(Complex(-0.3, 2.0))) < 1e-13);
        REQUIRE(std::abs(e(0, 1)) == 0.0);
    }

    SECTION("agrees with a long plain Taylor sum at moderate norm") {
        for (int trial = 0; trial < 20; ++trial) {
            ComplexMatrix a = random_matrix(4, 4, rng);
            a = (1.0 / std::max(frobenius_norm(a), 1.0)) * a;  // norm <= 1
            REQUIRE(frobenius_distance(expm(a), expm_taylor(a, 30)) < 1e-10);
        }
    }

    SECTION("exponential of a sum of commuting matrices factorizes") {
        const ComplexMatrix a = random_matrix(3, 3, rng);
        REQUIRE(frobenius_distance(expm(a) * expm(-a), ComplexMatrix::identity(3)) < 1e-12);
    }

    SECTION("antisymmetric real input gives exactly real orthogonal output") {
        ComplexMatrix f(3, 3);
        f(0, 1) = 1.3;
        f(1, 0) = -1.3;
        f(1, 2) = -0.4;
        f(2, 1) = 0.4;
        const ComplexMatrix e = expm(f);
        REQUIRE(max_abs_imag(e) == 0.0);
        REQUIRE(is_real_orthogonal(e, 1e-12));
    }
}

TEST_CASE("tolerance struct") {
    REQUIRE(Tolerance(1e-6, 0.0).close(1.0, 1.0 + 5e-7));
    REQUIRE_FALSE(Tolerance(1e-6, 0.0).close(1.0, 1.0 + 5e-6));
    REQUIRE(Tolerance(1e-12, 1e-6).close(1e6, 1e6 + 0.5));
    REQUIRE_THROWS_AS(Tolerance(0.0, 0.0), domain_error);
    REQUIRE_THROWS_AS(Tolerance(1e-9, -1.0), domain_error);
}

TEST_CASE("random number generator") {
    SECTION("deterministic under a fixed seed") {
        Rng a(42), b(42);
        for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());
        Rng c(42), d(43);
        REQUIRE(c.next_u64() != d.next_u64());
    }

    SECTION("uniform stays inside its interval") {
        Rng rng(7);
        for (int i = 0; i < 1000; ++i) {
            const double u = rng.uniform(-2.0, 3.0);
            REQUIRE(u >= -2.0);
            REQUIRE(u < 3.0);
        }
    }

    SECTION("normal samples have plausible first moments") {
        Rng rng(8);
        double sum = 0.0, sum2 = 0.0;
        const int count = 20000;
        for (int i = 0; i < count; ++i) {
            const double x = rng.normal();
            sum += x;
            sum2 += x * x;
        }
        REQUIRE(std::abs(sum / count) < 0.05);
        REQUIRE(std::abs(sum2 / count - 1.0) < 0.05);
    }

    SECTION("ginibre matrices have the requested shape") {
        Rng rng(9);
        const ComplexMatrix g = ginibre_matrix(3, rng);
        REQUIRE(g.rows() == 3);
        REQUIRE(g.cols() == 3);
        REQUIRE(g.all_finite());
    }
}
