#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>
#include <utility>
#include <vector>

#include "bellmap/bell.hpp"
#include "bellmap/matrix.hpp"
#include "bellmap/rng.hpp"

namespace bellmap {

/// Realness defect of the Bell-phase ansatz at a given phase vector.
///
/// For each generator insertion (sigma_j in one tensor slot, identity in the
/// others) the image i R^dag X R is anti-Hermitian automatically, so it lies
/// in the real special-orthogonal algebra iff it is real. The residual sums
/// the squared Frobenius norms of the imaginary parts over all 3n insertions.
///
/// With R = Psi diag(e^{i theta}) the image entries are
/// i e^{i(theta_c - theta_r)} C_rc with C = Psi^dag X Psi independent of the
/// phases, so evaluation reduces to a fixed sparse list of terms.
class PhaseResidual {
public:
    struct Term {
        int row;
        int col;
        Complex weight;  // i * C_rc
    };

    explicit PhaseResidual(int n) : n_(n) {
        if (n != 2 && n != 3) throw bounds_error("PhaseResidual: only 2 and 3 qubits are supported");
        const std::size_t dim = qubit_dim(n);
        const ComplexMatrix psi = r_matrix(PhaseVector::zeros(n)).matrix;
        const ComplexMatrix psi_dag = dagger(psi);
        for (int slot = 0; slot < n; ++slot)
            for (int j = 1; j <= 3; ++j) {
                const ComplexMatrix c = psi_dag * pauli_on_slot(j, slot, n) * psi;
                std::vector<Term> terms;
                for (std::size_t r = 0; r < dim; ++r)
                    for (std::size_t cc = 0; cc < dim; ++cc) {
                        const Complex w = Complex(0, 1) * c(r, cc);
                        if (std::abs(w) > 1e-14)
                            terms.push_back({static_cast<int>(r), static_cast<int>(cc), w});
                    }
                cases_.push_back(std::move(terms));
            }
    }

    int qubits() const { return n_; }
    std::size_t dim() const { return qubit_dim(n_); }
    const std::vector<std::vector<Term>>& cases() const { return cases_; }

    double operator()(const std::vector<double>& theta) const {
        double total = 0.0;
        for (const auto& terms : cases_)
            for (const Term& t : terms) {
                const double phi = theta[t.col] - theta[t.row];
                total += square(imag_of_rotated(t.weight, phi));
            }
        return total;
    }

    /// Gradient with respect to every theta (including the first).
    std::vector<double> gradient(const std::vector<double>& theta) const {
        std::vector<double> g(theta.size(), 0.0);
        for (const auto& terms : cases_)
            for (const Term& t : terms) {
                const double phi = theta[t.col] - theta[t.row];
                const double s = std::sin(phi), c = std::cos(phi);
                const double im = t.weight.imag() * c + t.weight.real() * s;
                const double d_im = -t.weight.imag() * s + t.weight.real() * c;
                g[t.col] += 2.0 * im * d_im;
                g[t.row] -= 2.0 * im * d_im;
            }
        return g;
    }

    /// Reference evaluation through explicit matrices, used to cross-check
    /// the sparse path and to restamp reported minima.
    double dense(const std::vector<double>& theta) const {
        const PhaseVector phases(n_, theta);
        const ComplexMatrix r = r_matrix(phases).matrix;
        const ComplexMatrix r_dag = dagger(r);
        double total = 0.0;
        for (int slot = 0; slot < n_; ++slot)
            for (int j = 1; j <= 3; ++j) {
                const ComplexMatrix m = Complex(0, 1) * (r_dag * pauli_on_slot(j, slot, n_) * r);
                const double im = frobenius_norm(imag_part(m));
                total += im * im;
            }
        return total;
    }

    static double square(double x) { return x * x; }

    static double imag_of_rotated(const Complex& w, double phi) {
        return w.imag() * std::cos(phi) + w.real() * std::sin(phi);
    }

private:
    int n_;
    std::vector<std::vector<Term>> cases_;
};

inline double residual(const PhaseVector& phases) {
    return PhaseResidual(phases.n)(phases.theta);
}

inline std::vector<double> residual_gradient(const PhaseVector& phases) {
    return PhaseResidual(phases.n).gradient(phases.theta);
}

struct SearchParams {
    int n = 3;
    std::size_t grid_resolution = 8;
    std::size_t refinement_steps = 64;  // coordinate-descent sweeps per start
    std::size_t top_k = 32;             // grid candidates carried into refinement
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct SearchReport {
    int n;
    PhaseVector best_theta;
    double best_residual;
    std::size_t grid_resolution;
    std::size_t refinement_iterations;
    std::size_t samples_evaluated;
};

namespace detail {

struct GridCandidate {
    double residual;
    std::uint64_t index;

    bool operator<(const GridCandidate& other) const {
        return residual != other.residual ? residual < other.residual : index < other.index;
    }
};

/// Keep the k smallest candidates seen, ties broken by lower grid index.
class TopK {
public:
    explicit TopK(std::size_t k) : k_(k) {}

    double threshold() const { return full() ? worst_ : std::numeric_limits<double>::infinity(); }
    bool full() const { return items_.size() >= k_; }

    void offer(double residual, std::uint64_t index) {
        if (full() && residual >= worst_) return;
        items_.push_back({residual, index});
        std::sort(items_.begin(), items_.end());
        if (items_.size() > k_) items_.pop_back();
        worst_ = items_.back().residual;
    }

    const std::vector<GridCandidate>& items() const { return items_; }

private:
    std::size_t k_;
    double worst_ = std::numeric_limits<double>::infinity();
    std::vector<GridCandidate> items_;
};

inline std::vector<double> theta_from_grid_index(std::uint64_t index, std::size_t dim, std::size_t grid) {
    std::vector<double> theta(dim, 0.0);
    for (std::size_t d = dim - 1; d >= 1; --d) {
        theta[d] = kTwoPi * static_cast<double>(index % grid) / static_cast<double>(grid);
        index /= grid;
    }
    return theta;
}

}  // namespace detail

/// Exhaustive grid scan over the 2^n - 1 free phase differences (the first
/// phase is pinned to zero) followed by closed-form coordinate descent from
/// the best grid points. Deterministic: threads scan disjoint index ranges
/// and candidates merge by (residual, index).
inline SearchReport search(const SearchParams& params) {
    if (params.grid_resolution < 2) throw bounds_error("search: grid_resolution must be at least 2");
    if (params.top_k < 1) throw bounds_error("search: top_k must be at least 1");
    const PhaseResidual res(params.n);
    const std::size_t dim = res.dim();
    const std::size_t free_dims = dim - 1;
    const std::size_t grid = params.grid_resolution;

    std::uint64_t total_points = 1;
    for (std::size_t d = 0; d < free_dims; ++d) total_points *= grid;

    // Grid phases take only `grid` distinct values, so e^{i phi} comes from a
    // table indexed by the digit difference mod grid.
    std::vector<Complex> table(grid);
    for (std::size_t t = 0; t < grid; ++t)
        table[t] = std::polar(1.0, kTwoPi * static_cast<double>(t) / static_cast<double>(grid));

    const unsigned thread_count =
        std::max(1u, std::min<unsigned>(params.threads, static_cast<unsigned>(total_points)));
    std::vector<detail::TopK> partials(thread_count, detail::TopK(params.top_k));

    auto scan_range = [&](std::uint64_t lo, std::uint64_t hi, detail::TopK& out) {
        const int g = static_cast<int>(grid);
        std::vector<int> digits(dim, 0);  // digits[0] is the pinned phase
        {
            std::uint64_t rest = lo;
            for (std::size_t d = dim - 1; d >= 1; --d) {
                digits[d] = static_cast<int>(rest % grid);
                rest /= grid;
            }
        }
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            double total = 0.0;
            const double cutoff = out.threshold();
            for (const auto& terms : res.cases()) {
                for (const auto& t : terms) {
                    int diff = digits[t.col] - digits[t.row];
                    if (diff < 0) diff += g;
                    total += PhaseResidual::square(
                        table[static_cast<std::size_t>(diff)].real() * t.weight.imag() +
                        table[static_cast<std::size_t>(diff)].imag() * t.weight.real());
                }
                if (total >= cutoff) break;
            }
            out.offer(total, idx);
            // odometer step on the free digits
            for (std::size_t d = dim - 1; d >= 1; --d) {
                if (++digits[d] < g) break;
                digits[d] = 0;
            }
        }
    };

    if (thread_count == 1) {
        scan_range(0, total_points, partials[0]);
    } else {
        std::vector<std::thread> workers;
        const std::uint64_t chunk = (total_points + thread_count - 1) / thread_count;
        for (unsigned t = 0; t < thread_count; ++t) {
            const std::uint64_t lo = std::min<std::uint64_t>(t * chunk, total_points);
            const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total_points);
            workers.emplace_back(scan_range, lo, hi, std::ref(partials[t]));
        }
        for (auto& w : workers) w.join();
    }

    detail::TopK merged(params.top_k);
    for (const auto& part : partials)
        for (const auto& cand : part.items()) merged.offer(cand.residual, cand.index);

    std::size_t samples = total_points;
    std::size_t sweeps = 0;

    // Refinement: exact minimization along one coordinate at a time. The
    // residual restricted to a single phase is a0 + a1 cos 2t + b1 sin 2t,
    // so each coordinate update is closed-form.
    Rng rng(params.seed);
    std::vector<double> best_theta = detail::theta_from_grid_index(merged.items().front().index, dim, grid);
    double best_value = merged.items().front().residual;

    std::vector<std::size_t> order(free_dims);
    for (const auto& cand : merged.items()) {
        std::vector<double> theta = detail::theta_from_grid_index(cand.index, dim, grid);
        double value = cand.residual;
        for (std::size_t sweep = 0; sweep < params.refinement_steps; ++sweep) {
            for (std::size_t d = 0; d < free_dims; ++d) order[d] = d + 1;
            for (std::size_t d = free_dims; d > 1; --d)
                std::swap(order[d - 1], order[rng.next_u64() % d]);
            for (std::size_t coord : order) {
                double a1 = 0.0, b1 = 0.0;
                for (const auto& terms : res.cases())
                    for (const auto& t : terms) {
                        const bool at_col = static_cast<std::size_t>(t.col) == coord;
                        const bool at_row = static_cast<std::size_t>(t.row) == coord;
                        if (at_col == at_row) continue;  // constant along this coordinate
                        const double other = at_col ? -theta[t.row] : theta[t.col];
                        const double sign = at_col ? 1.0 : -1.0;
                        // Im(e^{i sign t} u) with u = e^{i other} w
                        const Complex u = std::polar(1.0, other) * t.weight;
                        a1 += 0.5 * (u.imag() * u.imag() - u.real() * u.real());
                        b1 += sign * u.imag() * u.real();
                    }
                theta[coord] = 0.5 * std::atan2(b1, a1) + 0.25 * kTwoPi;
            }
            const double new_value = res(theta);
            ++samples;
            ++sweeps;
            if (value - new_value <= 1e-18 * (1.0 + value)) {
                value = new_value;
                break;
            }
            value = new_value;
        }
        if (value < best_value) {
            best_value = value;
            best_theta = theta;
        }
    }

    PhaseVector best(params.n, best_theta);
    // restamp through the explicit-matrix route
    const double certified = res.dense(best.theta);
    return SearchReport{params.n, best, certified, grid, sweeps, samples};
}

}  // namespace bellmap
