#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "bellmap/matrix.hpp"
#include "bellmap/phase_search.hpp"
#include "bellmap/yang_mills.hpp"

namespace bellmap {

using Json = nlohmann::json;

inline Json matrix_to_json(const ComplexMatrix& m) {
    std::vector<double> re, im;
    re.reserve(m.rows() * m.cols());
    im.reserve(m.rows() * m.cols());
    for (const Complex& z : m.entries()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

namespace detail {

inline double finite_number(const Json& j, const char* what) {
    if (!j.is_number()) throw domain_error(std::string(what) + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw domain_error(std::string(what) + ": non-finite number");
    return v;
}

inline std::vector<double> finite_array(const Json& j, const char* what) {
    if (!j.is_array()) throw domain_error(std::string(what) + ": expected an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const Json& item : j) out.push_back(finite_number(item, what));
    return out;
}

}  // namespace detail

inline ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("re") ||
        !j.contains("im"))
        throw domain_error("matrix: expected {rows, cols, re, im}");
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer() ||
        j["rows"].get<long long>() < 0 || j["cols"].get<long long>() < 0)
        throw domain_error("matrix: rows and cols must be nonnegative integers");
    const std::size_t rows = j["rows"].get<std::size_t>();
    const std::size_t cols = j["cols"].get<std::size_t>();
    const std::vector<double> re = detail::finite_array(j["re"], "matrix re");
    const std::vector<double> im = detail::finite_array(j["im"], "matrix im");
    if (re.size() != rows * cols || im.size() != rows * cols)
        throw domain_error("matrix: entry arrays must hold rows*cols numbers");
    std::vector<Complex> entries(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) entries[i] = Complex(re[i], im[i]);
    return ComplexMatrix(rows, cols, std::move(entries));
}

inline Json report_to_json(const SearchReport& report) {
    return Json{{"n", report.n},
                {"best_theta", report.best_theta.theta},
                {"best_residual", report.best_residual},
                {"grid_resolution", report.grid_resolution},
                {"refinement_iterations", report.refinement_iterations},
                {"samples_evaluated", report.samples_evaluated},
                {"ansatz", "bell-phase"}};
}

inline CurvatureConfig curvature_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("f") || !j.contains("g"))
        throw domain_error("config: expected {f, g}");
    const std::vector<double> f = detail::finite_array(j["f"], "config f");
    if (f.size() != 6) throw domain_error("config: f must hold the six components");
    const double g = detail::finite_number(j["g"], "config g");
    return CurvatureConfig(f[0], f[1], f[2], f[3], f[4], f[5], g);
}

inline Json curvature_record_to_json(const CurvatureConfig& c) {
    const SdAsdInvariants inv = sd_asd_invariants(c);
    return Json{{"a_ym", action_ym(c)},
                {"a_bi", action_bi(c)},
                {"a_fos", action_fos(c)},
                {"a_fos_direct", action_fos_direct(c)},
                {"x_sd", inv.x_sd},
                {"x_asd", inv.x_asd},
                {"self_dual", inv.x_sd <= 1e-12},
                {"anti_self_dual", inv.x_asd <= 1e-12}};
}

inline LatticePotential lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("extent") || !j.contains("spacing") ||
        !j.contains("potential") || !j.contains("order"))
        throw domain_error("lattice: expected {extent, spacing, potential, order}");
    if (!j["order"].is_string() || j["order"].get<std::string>() != "mu-major")
        throw domain_error("lattice: only mu-major ordering is supported");
    if (!j["extent"].is_array() || j["extent"].size() != 4)
        throw domain_error("lattice: extent must hold four counts");
    std::array<std::size_t, 4> extent{};
    for (std::size_t d = 0; d < 4; ++d) {
        if (!j["extent"][d].is_number_integer() || j["extent"][d].get<long long>() <= 0)
            throw domain_error("lattice: extents must be positive integers");
        extent[d] = j["extent"][d].get<std::size_t>();
    }
    const double spacing = detail::finite_number(j["spacing"], "lattice spacing");
    std::vector<double> potential = detail::finite_array(j["potential"], "lattice potential");
    bool periodic = false;
    if (j.contains("periodic")) {
        if (!j["periodic"].is_boolean()) throw domain_error("lattice: periodic must be a boolean");
        periodic = j["periodic"].get<bool>();
    }
    try {
        return LatticePotential(extent, spacing, std::move(potential), periodic);
    } catch (const dimension_error& e) {
        throw domain_error(e.what());
    }
}

}  // namespace bellmap
