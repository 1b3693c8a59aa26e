#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bellmap/linalg.hpp"
#include "bellmap/matrix.hpp"

namespace bellmap {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

inline std::size_t qubit_dim(int n) { return std::size_t(1) << n; }

inline void require_qubit_count(int n, int lo = 1, int hi = 10) {
    if (n < lo || n > hi)
        throw bounds_error("qubit count " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
}

/// Ordered list of 2^n column phases, reduced to [0, 2pi).
struct PhaseVector {
    int n = 1;
    std::vector<double> theta;

    PhaseVector(int qubits, std::vector<double> angles) : n(qubits), theta(std::move(angles)) {
        require_qubit_count(n);
        if (theta.size() != qubit_dim(n))
            throw dimension_error("PhaseVector: expected " + std::to_string(qubit_dim(n)) + " angles, got " +
                                  std::to_string(theta.size()));
        for (double& t : theta) {
            if (!std::isfinite(t)) throw domain_error("PhaseVector: non-finite angle");
            t = std::fmod(t, kTwoPi);
            if (t < 0.0) t += kTwoPi;
        }
    }

    static PhaseVector zeros(int qubits) {
        require_qubit_count(qubits);
        return PhaseVector(qubits, std::vector<double>(qubit_dim(qubits), 0.0));
    }
};

/// The phase choice that solves the two-qubit realness conditions:
/// e^{i theta} = (1, -i, -1, -i).
inline PhaseVector canonical_phases2() {
    return PhaseVector(2, {0.0, -M_PI / 2.0, M_PI, -M_PI / 2.0});
}

/// Generalized Bell basis of the n-qubit space. For 0 <= k <= 2^{n-1}-1 the
/// pair of states (|0 a0..a_{n-2}> +- |1 complement>)/sqrt(2) lands at list
/// positions k and 2^n-1-k. Big-endian qubit labels: |0..0> is entry 0.
inline std::vector<ComplexMatrix> bell_basis(int n) {
    require_qubit_count(n);
    const std::size_t dim = qubit_dim(n);
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<ComplexMatrix> basis(dim, ComplexMatrix(dim, 1));
    for (std::size_t k = 0; k < dim / 2; ++k) {
        const std::size_t lo = k;            // |0 a0 ... a_{n-2}>
        const std::size_t hi = dim - 1 - k;  // |1 complement>
        basis[k](lo, 0) = s;
        basis[k](hi, 0) = s;
        basis[dim - 1 - k](lo, 0) = s;
        basis[dim - 1 - k](hi, 0) = -s;
    }
    return basis;
}

/// Unitary whose j-th column is e^{i theta_j} |Psi_j>; two nonzero entries
/// of modulus 1/sqrt(2) per column by construction.
struct IntertwinerMatrix {
    int n = 1;
    ComplexMatrix matrix;

    IntertwinerMatrix(int qubits, ComplexMatrix m) : n(qubits), matrix(std::move(m)) {
        const std::size_t dim = qubit_dim(n);
        if (matrix.rows() != dim || matrix.cols() != dim)
            throw dimension_error("IntertwinerMatrix: matrix size does not match qubit count");
        verify_structure();
    }

    // Structural unitarity proof: every column holds exactly two entries of
    // modulus 1/sqrt(2) on the mirror pair of rows {k, 2^n-1-k}, and the two
    // columns sharing that support are orthogonal. Columns with disjoint
    // support are orthogonal for free, so no O(dim^3) check is needed.
    void verify_structure() const {
        const std::size_t dim = qubit_dim(n);
        const double s = 1.0 / std::sqrt(2.0);
        for (std::size_t j = 0; j < dim; ++j) {
            std::vector<std::size_t> support;
            for (std::size_t i = 0; i < dim; ++i)
                if (matrix(i, j) != Complex(0.0, 0.0)) support.push_back(i);
            if (support.size() != 2)
                throw domain_error("IntertwinerMatrix: column lacks the two-entry Bell structure");
            if (support[1] != dim - 1 - support[0])
                throw domain_error("IntertwinerMatrix: column support is not a mirror pair");
            for (std::size_t i : support)
                if (std::abs(std::abs(matrix(i, j)) - s) > 1e-12)
                    throw domain_error("IntertwinerMatrix: entry modulus differs from 1/sqrt(2)");
        }
        for (std::size_t k = 0; k < dim / 2; ++k) {
            Complex dot(0.0, 0.0);
            for (std::size_t i : {k, dim - 1 - k}) dot += std::conj(matrix(i, k)) * matrix(i, dim - 1 - k);
            if (std::abs(dot) > 1e-12)
                throw domain_error("IntertwinerMatrix: mirror columns are not orthogonal");
        }
    }
};

inline IntertwinerMatrix r_matrix(const PhaseVector& phases) {
    const std::size_t dim = qubit_dim(phases.n);
    ComplexMatrix m(dim, dim);
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t j = 0; j < dim; ++j) {
        const Complex col_phase = std::polar(s, phases.theta[j]);
        // Column j holds |Psi_{j+1}>: a "+" state for j < dim/2 (pair index
        // k = j), a "-" state otherwise (pair index k = dim-1-j).
        const std::size_t k = (j < dim / 2) ? j : dim - 1 - j;
        m(k, j) = col_phase;
        m(dim - 1 - k, j) = (j < dim / 2) ? col_phase : -col_phase;
    }
    return IntertwinerMatrix(phases.n, std::move(m));
}

/// The fixed two-qubit intertwiner with exact entries in {+-1/sqrt2, +-i/sqrt2, 0}.
inline IntertwinerMatrix r_canonical2() {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex z(0, 0), p(s, 0), mi(0, -s), pi(0, s), mn(-s, 0);
    ComplexMatrix m(4, 4, {p,  z,  z,  mi,   //
                           z,  mi, mn, z,    //
                           z,  mi, p,  z,    //
                           p,  z,  z,  pi});
    return IntertwinerMatrix(2, std::move(m));
}

/// Traceless Hermitian 2x2 element a1 s1 + a2 s2 + a3 s3.
struct TracelessHermitian2 {
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;

    TracelessHermitian2() = default;
    TracelessHermitian2(double c1, double c2, double c3) : a1(c1), a2(c2), a3(c3) {}

    ComplexMatrix materialize() const {
        return ComplexMatrix(2, 2,
                             {Complex(a3, 0), Complex(a1, -a2),  //
                              Complex(a1, a2), Complex(-a3, 0)});
    }

    double norm() const { return std::sqrt(a1 * a1 + a2 * a2 + a3 * a3); }
};

inline ComplexMatrix expm_su2(const TracelessHermitian2& a) { return expm_su2(a.a1, a.a2, a.a3); }

/// so(4) element stored as its six upper-triangle components.
struct So4Element {
    double f12 = 0.0, f13 = 0.0, f14 = 0.0, f23 = 0.0, f24 = 0.0, f34 = 0.0;

    ComplexMatrix materialize() const {
        ComplexMatrix m(4, 4);
        m(0, 1) = f12; m(0, 2) = f13; m(0, 3) = f14;
        m(1, 2) = f23; m(1, 3) = f24; m(2, 3) = f34;
        m(1, 0) = -f12; m(2, 0) = -f13; m(3, 0) = -f14;
        m(2, 1) = -f23; m(3, 1) = -f24; m(3, 2) = -f34;
        return m;
    }
};

/// Group-level map SU(2) x SU(2) -> SO(4): A (x) B |-> R^dag (A (x) B) R.
inline ComplexMatrix group_map(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2)
        throw dimension_error("group_map: factors must be 2x2");
    if (!is_unitary(a, kPredicateTol) || !is_special(a, kPredicateTol))
        throw domain_error("group_map: left factor is not special unitary");
    if (!is_unitary(b, kPredicateTol) || !is_special(b, kPredicateTol))
        throw domain_error("group_map: right factor is not special unitary");
    const ComplexMatrix r = r_canonical2().matrix;
    return dagger(r) * kron(a, b) * r;
}

/// Algebra-level map: i R^dag (a (x) 1 + 1 (x) b) R, read off in closed form.
inline So4Element algebra_map(const TracelessHermitian2& a, const TracelessHermitian2& b) {
    So4Element f;
    f.f12 = a.a1 + b.a1;
    f.f13 = a.a2 - b.a2;
    f.f14 = a.a3 + b.a3;
    f.f23 = a.a3 - b.a3;
    f.f24 = -(a.a2 + b.a2);
    f.f34 = a.a1 - b.a1;
    return f;
}

/// Exact two-sided inverse of algebra_map.
inline std::pair<TracelessHermitian2, TracelessHermitian2> inverse_algebra_map(const So4Element& f) {
    TracelessHermitian2 a((f.f12 + f.f34) / 2.0, (f.f13 - f.f24) / 2.0, (f.f14 + f.f23) / 2.0);
    TracelessHermitian2 b((f.f12 - f.f34) / 2.0, -(f.f13 + f.f24) / 2.0, (f.f14 - f.f23) / 2.0);
    return {a, b};
}

/// Recover the SU(2) pair behind O in SO(4). The pair is fixed only up to
/// (A,B) -> (-A,-B); the returned A has its first significant entry with
/// nonnegative real part (nonnegative imaginary part on a real-part tie).
inline std::pair<ComplexMatrix, ComplexMatrix> inverse_group_map(const ComplexMatrix& o) {
    if (o.rows() != 4 || o.cols() != 4) throw dimension_error("inverse_group_map: input must be 4x4");
    if (!is_real_orthogonal(o, kPredicateTol) || !is_special(o, kPredicateTol))
        throw domain_error("inverse_group_map: input is not real special orthogonal");
    const ComplexMatrix r = r_canonical2().matrix;
    const ComplexMatrix m = r * o * dagger(r);  // = A (x) B for some SU(2) pair

    auto block = [&m](std::size_t p, std::size_t q) {
        ComplexMatrix blk(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) blk(i, j) = m(2 * p + i, 2 * q + j);
        return blk;
    };

    std::size_t p0 = 0, q0 = 0;
    double best = -1.0;
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) {
            const double nrm = frobenius_norm(block(p, q));
            if (nrm > best) { best = nrm; p0 = p; q0 = q; }
        }

    // The dominant block is A(p0,q0) * B with det = A(p0,q0)^2, so its
    // square root recovers the scalar up to the shared sign ambiguity.
    const ComplexMatrix b0 = block(p0, q0);
    const Complex scalar = std::sqrt(determinant(b0));
    if (std::abs(scalar) < 1e-8) throw reconstruction_error("inverse_group_map: degenerate dominant block");
    const ComplexMatrix b = (Complex(1.0, 0.0) / scalar) * b0;

    ComplexMatrix a(2, 2);
    const ComplexMatrix b_dag = dagger(b);
    for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) a(p, q) = 0.5 * trace(block(p, q) * b_dag);

    bool flip = false;
    for (std::size_t i = 0; i < 4; ++i) {
        const Complex e = a(i / 2, i % 2);
        if (std::abs(e) <= 1e-9) continue;
        if (std::abs(e.real()) > 1e-12)
            flip = e.real() < 0.0;
        else
            flip = e.imag() < 0.0;
        break;
    }
    ComplexMatrix a_fixed = flip ? -a : a;
    ComplexMatrix b_fixed = flip ? -b : b;

    const double residual = frobenius_distance(kron(a_fixed, b_fixed), m);
    if (residual > 1e-6)
        throw reconstruction_error("inverse_group_map: Kronecker residual " + std::to_string(residual));
    return {std::move(a_fixed), std::move(b_fixed)};
}

/// Frobenius distance between R (sigma3 (x) 1 ...) R^dag and sigma1^{(x) n}.
/// Zero for every phase choice; diagonal phases commute with the diagonal
/// sigma3 insertion.
inline double sigma3_characterization(const PhaseVector& phases) {
    const IntertwinerMatrix r = r_matrix(phases);
    const ComplexMatrix lhs = r.matrix * pauli_on_slot(3, 0, phases.n) * dagger(r.matrix);
    return frobenius_distance(lhs, kron_power(pauli1(), phases.n));
}

/// R W~ with W~ = W (x) 1 (x) ... (x) 1: conjugation by it copies sigma1 on
/// the first slot to sigma1 on every slot. Built from all-zero phases.
inline ComplexMatrix copy_operator(int n) {
    require_qubit_count(n);
    const IntertwinerMatrix r = r_matrix(PhaseVector::zeros(n));
    ComplexMatrix w_tilde = hadamard();
    for (int s = 1; s < n; ++s) w_tilde = kron(w_tilde, ComplexMatrix::identity(2));
    return r.matrix * w_tilde;
}

}  // namespace bellmap
