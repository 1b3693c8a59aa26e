// bellmap command line tool.
//
// Every invocation prints a single JSON envelope on stdout:
//   {"status": "...", "payload": {...}, "elapsed_ms": ...}
// and exits 0 on success, 2 on input/domain problems, 3 on numerical
// verification failures.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "bellmap/bellmap.hpp"

namespace {

using bellmap::Chart;
using bellmap::Complex;
using bellmap::ComplexMatrix;
using bellmap::CurvatureConfig;
using bellmap::Json;
using bellmap::PhaseVector;
using bellmap::Rng;
using bellmap::SU2Element;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitNumerical = 3;

struct Outcome {
    std::string status = "ok";
    Json payload = Json::object();

    int exit_code() const {
        if (status == "ok") return kExitOk;
        if (status == "numerical-error") return kExitNumerical;
        return kExitDomain;
    }
};

unsigned default_threads() {
    if (const char* env = std::getenv("BELLMAP_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && v <= 4096) return static_cast<unsigned>(v);
    }
    return 1;
}

// Accepts a file path, "-" for stdin, or inline JSON text.
Json read_input_json(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw bellmap::domain_error("cannot open input: " + arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw bellmap::domain_error(std::string("invalid JSON input: ") + e.what());
    }
}

// --- gen-r ------------------------------------------------------------

Outcome run_gen_r(int qubits, const std::vector<double>& phases, bool canonical) {
    if (qubits < 1 || qubits > 10) throw bellmap::bounds_error("gen-r: qubits must be in [1, 10]");
    const std::size_t n = static_cast<std::size_t>(qubits);
    if (canonical && n != 2) throw bellmap::domain_error("gen-r: --canonical requires --qubits 2");
    if (canonical && !phases.empty())
        throw bellmap::domain_error("gen-r: --canonical and --phases are mutually exclusive");

    const bool use_canonical = canonical || (n == 2 && phases.empty());
    PhaseVector theta = [&] {
        if (use_canonical) return bellmap::canonical_phases2();
        if (!phases.empty()) return PhaseVector(n, phases);
        return PhaseVector::zeros(n);
    }();

    const bellmap::IntertwinerMatrix r =
        use_canonical ? bellmap::r_canonical2() : bellmap::r_matrix(theta);
    Outcome out;
    out.payload = Json{{"n", n},
                       {"theta", theta.theta},
                       {"matrix", bellmap::matrix_to_json(r.matrix)}};
    return out;
}

// --- verify-iso -------------------------------------------------------

Outcome run_verify_iso(std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw bellmap::bounds_error("verify-iso: samples must be positive");
    constexpr double tol = 1e-9;
    const ComplexMatrix eye4 = ComplexMatrix::identity(4);

    Rng rng(seed);
    double max_ortho = 0, max_imag = 0, max_det = 0, max_homo = 0, max_rt = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const ComplexMatrix a1 = SU2Element::haar(rng).materialize();
        const ComplexMatrix b1 = SU2Element::haar(rng).materialize();
        const ComplexMatrix a2 = SU2Element::haar(rng).materialize();
        const ComplexMatrix b2 = SU2Element::haar(rng).materialize();
        const ComplexMatrix o1 = bellmap::group_map(a1, b1);
        const ComplexMatrix o2 = bellmap::group_map(a2, b2);

        max_ortho = std::max(max_ortho, bellmap::frobenius_distance(transpose(o1) * o1, eye4));
        max_imag = std::max(max_imag, bellmap::max_abs_imag(o1));
        max_det = std::max(max_det, std::abs(bellmap::determinant(o1) - Complex(1, 0)));
        max_homo = std::max(
            max_homo, bellmap::frobenius_distance(bellmap::group_map(a1 * a2, b1 * b2), o1 * o2));
        const auto pair = bellmap::inverse_group_map(o1);
        max_rt = std::max(max_rt, bellmap::frobenius_distance(
                                      bellmap::kron(pair.first, pair.second),
                                      bellmap::kron(a1, b1)));
    }

    const double worst = std::max({max_ortho, max_imag, max_det, max_homo, max_rt});
    Outcome out;
    out.payload = Json{{"samples", samples},
                       {"seed", seed},
                       {"max_orthogonality", max_ortho},
                       {"max_imaginary_part", max_imag},
                       {"max_determinant_defect", max_det},
                       {"max_homomorphism", max_homo},
                       {"max_roundtrip", max_rt},
                       {"tolerance", tol},
                       {"ok", worst <= tol}};
    if (worst > tol) out.status = "numerical-error";
    return out;
}

// --- search3 ----------------------------------------------------------

Outcome run_search3(std::size_t grid, std::uint64_t seed, std::size_t refine, std::size_t top_k,
                    bool two_qubit_sanity, unsigned threads) {
    if (grid < 4) throw bellmap::bounds_error("search3: grid must be at least 4");

    bellmap::SearchParams params;
    params.n = 3;
    params.grid_resolution = grid;
    params.refinement_steps = refine;
    params.top_k = top_k;
    params.seed = seed;
    params.threads = threads;
    const bellmap::SearchReport report = bellmap::search(params);

    Outcome out;
    out.payload = Json{{"search", bellmap::report_to_json(report)}};
    if (two_qubit_sanity) {
        bellmap::SearchParams sanity = params;
        sanity.n = 2;
        const bellmap::SearchReport check = bellmap::search(sanity);
        out.payload["two_qubit"] = bellmap::report_to_json(check);
        if (!(check.best_residual <= 1e-12)) out.status = "numerical-error";
    }
    return out;
}

// --- yangmills --------------------------------------------------------

Json record_with_residual(const CurvatureConfig& config, double& max_residual) {
    Json record = bellmap::curvature_record_to_json(config);
    const double residual =
        std::abs(record["a_fos"].get<double>() - record["a_fos_direct"].get<double>());
    max_residual = std::max(max_residual, residual);
    return record;
}

Outcome run_yangmills(const std::string& input) {
    const Json doc = read_input_json(input);
    constexpr double tol = 1e-9;
    Outcome out;

    if (doc.is_object() && doc.contains("configs")) {
        if (!doc["configs"].is_array())
            throw bellmap::domain_error("yangmills: configs must be an array");
        Json results = Json::array();
        double max_residual = 0;
        for (const Json& entry : doc["configs"]) {
            results.push_back(record_with_residual(bellmap::curvature_from_json(entry),
                                                   max_residual));
        }
        out.payload = Json{{"mode", "batch"},
                           {"count", results.size()},
                           {"results", std::move(results)},
                           {"max_fos_residual", max_residual},
                           {"tolerance", tol}};
        if (max_residual > tol) out.status = "numerical-error";
        return out;
    }

    if (doc.is_object() && doc.contains("extent")) {
        const bellmap::LatticePotential lattice = bellmap::lattice_from_json(doc);
        double coupling = 1.0;
        if (doc.contains("g")) {
            if (!doc["g"].is_number()) throw bellmap::domain_error("yangmills: g must be a number");
            coupling = doc["g"].get<double>();
            if (!std::isfinite(coupling))
                throw bellmap::domain_error("yangmills: g must be finite");
        }

        // Central differences need both neighbors; without wraparound only
        // interior sites qualify.
        std::array<std::size_t, 4> lo{}, hi{};
        for (std::size_t mu = 0; mu < 4; ++mu) {
            if (lattice.periodic) {
                lo[mu] = 0;
                hi[mu] = lattice.extent[mu];
            } else {
                lo[mu] = 1;
                hi[mu] = lattice.extent[mu] > 1 ? lattice.extent[mu] - 1 : 1;
            }
        }

        Json sites = Json::array();
        double max_residual = 0;
        for (std::size_t x0 = lo[0]; x0 < hi[0]; ++x0)
            for (std::size_t x1 = lo[1]; x1 < hi[1]; ++x1)
                for (std::size_t x2 = lo[2]; x2 < hi[2]; ++x2)
                    for (std::size_t x3 = lo[3]; x3 < hi[3]; ++x3) {
                        const std::array<std::size_t, 4> site{x0, x1, x2, x3};
                        const CurvatureConfig config =
                            bellmap::curvature_from_potential(lattice, site, coupling);
                        Json entry{{"site", site}, {"f", config.components()}};
                        entry["record"] = record_with_residual(config, max_residual);
                        sites.push_back(std::move(entry));
                    }
        out.payload = Json{{"mode", "lattice"},
                           {"extent", lattice.extent},
                           {"spacing", lattice.spacing},
                           {"periodic", lattice.periodic},
                           {"g", coupling},
                           {"count", sites.size()},
                           {"sites", std::move(sites)},
                           {"max_fos_residual", max_residual},
                           {"tolerance", tol}};
        if (max_residual > tol) out.status = "numerical-error";
        return out;
    }

    throw bellmap::domain_error("yangmills: input must contain \"configs\" or \"extent\"");
}

// --- grassmann --------------------------------------------------------

ComplexMatrix random_real_symmetric(std::size_t n, Rng& rng, double scale) {
    ComplexMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double v = scale * (2.0 * rng.uniform() - 1.0);
            x(i, j) = Complex(v, 0);
            x(j, i) = Complex(v, 0);
        }
    return x;
}

double chart_margin(const bellmap::SymmetricUnitary& r, const Chart& chart) {
    return bellmap::smallest_singular_value(r.matrix + chart.center());
}

Outcome run_grassmann(const std::string& action, int size, std::uint64_t samples,
                      std::uint64_t seed) {
    if (size < 1) throw bellmap::bounds_error("grassmann: size must be positive");
    if (samples < 1) throw bellmap::bounds_error("grassmann: samples must be positive");
    const std::size_t n = static_cast<std::size_t>(size);
    // Finite-precision inputs pin the achievable accuracy near the chart
    // boundary, so sweeps only score points with a healthy margin.
    constexpr double margin_floor = 1e-2;

    Outcome out;
    if (action == "roundtrip") {
        constexpr double tol = 1e-9;
        Rng coords(seed);
        std::uint64_t skipped = 0, tested = 0;
        double max_point = 0, max_coord = 0;
        for (std::uint64_t trial = 0; trial < samples; ++trial) {
            const std::uint64_t base = seed * 1000003ull + 2ull * trial;
            const Chart chart(bellmap::haar_unitary(n, base + 1));
            const bellmap::SymmetricUnitary point =
                bellmap::make_point(bellmap::haar_unitary(n, base));
            if (chart_margin(point, chart) <= margin_floor) {
                ++skipped;
                continue;
            }
            ++tested;
            const bellmap::RealSymmetric x = bellmap::chart_forward(point, chart);
            max_point = std::max(max_point, bellmap::frobenius_distance(
                                                bellmap::chart_inverse(x, chart).matrix,
                                                point.matrix));
            const ComplexMatrix y = random_real_symmetric(n, coords, 3.0);
            const bellmap::SymmetricUnitary back =
                bellmap::chart_inverse(bellmap::RealSymmetric(y), chart);
            max_coord = std::max(
                max_coord,
                bellmap::frobenius_distance(bellmap::chart_forward(back, chart).matrix, y));
        }
        const double worst = std::max(max_point, max_coord);
        out.payload = Json{{"action", action},
                           {"n", n},
                           {"samples", samples},
                           {"seed", seed},
                           {"tested", tested},
                           {"skipped", skipped},
                           {"max_point_roundtrip", max_point},
                           {"max_coordinate_roundtrip", max_coord},
                           {"tolerance", tol},
                           {"ok", worst <= tol}};
        if (worst > tol) out.status = "numerical-error";
        return out;
    }

    if (action == "transition") {
        constexpr double tol = 1e-8;
        Rng coords(seed);
        std::uint64_t skipped = 0, tested = 0;
        double max_disagreement = 0;
        for (std::uint64_t trial = 0; trial < samples; ++trial) {
            const std::uint64_t base = seed * 1000003ull + 2ull * trial;
            const Chart from(bellmap::haar_unitary(n, base));
            const Chart to(bellmap::haar_unitary(n, base + 1));
            const ComplexMatrix x = random_real_symmetric(n, coords, 2.0);
            const bellmap::SymmetricUnitary point =
                bellmap::chart_inverse(bellmap::RealSymmetric(x), from);
            if (chart_margin(point, to) <= margin_floor) {
                ++skipped;
                continue;
            }
            ++tested;
            const bellmap::RealSymmetric direct =
                bellmap::transition(bellmap::RealSymmetric(x), from, to);
            const bellmap::RealSymmetric composed = bellmap::chart_forward(point, to);
            max_disagreement = std::max(
                max_disagreement, bellmap::frobenius_distance(direct.matrix, composed.matrix));
        }
        out.payload = Json{{"action", action},
                           {"n", n},
                           {"samples", samples},
                           {"seed", seed},
                           {"tested", tested},
                           {"skipped", skipped},
                           {"max_disagreement", max_disagreement},
                           {"tolerance", tol},
                           {"ok", max_disagreement <= tol}};
        if (max_disagreement > tol) out.status = "numerical-error";
        return out;
    }

    throw bellmap::domain_error("grassmann: action must be roundtrip or transition");
}

// --- spinrep ----------------------------------------------------------

Outcome run_spinrep(std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw bellmap::bounds_error("spinrep: samples must be positive");
    constexpr double tol = 1e-10;

    Rng rng(seed);
    double max_homo = 0, max_tensor = 0, max_clebsch = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const SU2Element g = SU2Element::haar(rng);
        const SU2Element h = SU2Element::haar(rng);
        max_homo = std::max(max_homo, bellmap::frobenius_distance(bellmap::rho(g * h),
                                                                  bellmap::rho(g) * bellmap::rho(h)));
        max_tensor = std::max(max_tensor,
                              bellmap::frobenius_distance(bellmap::iota_tilde(g),
                                                          bellmap::iota_tilde_tensor(g)));
        max_clebsch = std::max(max_clebsch, bellmap::clebsch_check(g));
    }

    const double worst = std::max({max_homo, max_tensor, max_clebsch});
    Outcome out;
    out.payload = Json{{"samples", samples},
                       {"seed", seed},
                       {"max_homomorphism", max_homo},
                       {"max_tensor_equality", max_tensor},
                       {"max_clebsch", max_clebsch},
                       {"tolerance", tol},
                       {"ok", worst <= tol}};
    if (worst > tol) out.status = "numerical-error";
    return out;
}

int emit(const Outcome& out, bool pretty, double elapsed_ms) {
    Json envelope{{"status", out.status}, {"payload", out.payload}, {"elapsed_ms", elapsed_ms}};
    std::cout << (pretty ? envelope.dump(2) : envelope.dump()) << "\n";
    return out.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bell-basis intertwiner toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output style: json (compact) or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    unsigned threads = default_threads();
    app.add_option("--threads", threads, "Worker threads for searches")
        ->check(CLI::Range(1u, 4096u));

    int gen_qubits = 2;
    std::vector<double> gen_phases;
    bool gen_canonical = false;
    CLI::App* gen = app.add_subcommand("gen-r", "Emit an intertwiner matrix as JSON");
    gen->fallthrough();
    gen->add_option("--qubits", gen_qubits, "Number of qubits (1..10)");
    gen->add_option("--phases", gen_phases, "Bell phases in radians, one per basis vector");
    gen->add_flag("--canonical", gen_canonical, "Use the canonical two-qubit phases");

    std::uint64_t iso_samples = 1000, iso_seed = 0;
    CLI::App* iso = app.add_subcommand("verify-iso",
                                       "Check the SU(2)xSU(2) to SO(4) map on random samples");
    iso->fallthrough();
    iso->add_option("--samples", iso_samples, "Number of random pairs");
    iso->add_option("--seed", iso_seed, "Sampling seed");

    std::size_t search_grid = 8, search_refine = 64, search_top_k = 32;
    std::uint64_t search_seed = 0;
    bool search_sanity = false;
    CLI::App* srch = app.add_subcommand("search3",
                                        "Search three-qubit Bell phases for an intertwiner");
    srch->fallthrough();
    srch->add_option("--grid", search_grid, "Grid points per phase (at least 4)");
    srch->add_option("--seed", search_seed, "Refinement sweep seed");
    srch->add_option("--refine", search_refine, "Refinement sweeps per candidate");
    srch->add_option("--top-k", search_top_k, "Grid candidates kept for refinement");
    srch->add_flag("--two-qubit-sanity", search_sanity,
                   "Also run the two-qubit search, which must reach zero");

    std::string ym_input;
    CLI::App* ym = app.add_subcommand("yangmills",
                                      "Evaluate abelian actions for curvature configs");
    ym->fallthrough();
    ym->add_option("input", ym_input, "JSON file, inline JSON, or - for stdin")->required();

    std::string gr_action;
    int gr_size = 2;
    std::uint64_t gr_samples = 100, gr_seed = 0;
    CLI::App* gr = app.add_subcommand("grassmann", "Exercise chart maps on symmetric unitaries");
    gr->fallthrough();
    gr->add_option("action", gr_action, "roundtrip or transition")
        ->required()
        ->check(CLI::IsMember({"roundtrip", "transition"}));
    gr->add_option("--size", gr_size, "Matrix dimension");
    gr->add_option("--samples", gr_samples, "Number of random trials");
    gr->add_option("--seed", gr_seed, "Sampling seed");

    std::uint64_t sr_samples = 1000, sr_seed = 0;
    CLI::App* sr = app.add_subcommand("spinrep", "Check the spin-1 representation identities");
    sr->fallthrough();
    sr->add_option("--samples", sr_samples, "Number of random elements");
    sr->add_option("--seed", sr_seed, "Sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        Outcome out;
        out.status = "domain-error";
        out.payload = Json{{"message", e.what()}};
        return emit(out, format == "pretty", 0.0);
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        if (gen->parsed()) {
            out = run_gen_r(gen_qubits, gen_phases, gen_canonical);
        } else if (iso->parsed()) {
            out = run_verify_iso(iso_samples, iso_seed);
        } else if (srch->parsed()) {
            out = run_search3(search_grid, search_seed, search_refine, search_top_k,
                              search_sanity, threads);
        } else if (ym->parsed()) {
            out = run_yangmills(ym_input);
        } else if (gr->parsed()) {
            out = run_grassmann(gr_action, gr_size, gr_samples, gr_seed);
        } else if (sr->parsed()) {
            out = run_spinrep(sr_samples, sr_seed);
        }
    } catch (const bellmap::bounds_error& e) {
        out.status = "bounds-error";
        out.payload = Json{{"message", e.what()}};
    } catch (const bellmap::numerical_error& e) {
        out.status = "numerical-error";
        out.payload = Json{{"message", e.what()}};
    } catch (const bellmap::domain_error& e) {
        out.status = "domain-error";
        out.payload = Json{{"message", e.what()}};
    } catch (const bellmap::dimension_error& e) {
        out.status = "domain-error";
        out.payload = Json{{"message", e.what()}};
    } catch (const Json::exception& e) {
        out.status = "domain-error";
        out.payload = Json{{"message", e.what()}};
    }
    const auto stop = std::chrono::steady_clock::now();
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();

    return emit(out, format == "pretty", elapsed_ms);
}
