#pragma once

#include <stdexcept>
#include <string>

namespace bellmap {

// Structural problems: shape mismatches, malformed input data.
struct dimension_error : std::invalid_argument {
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

// Argument outside the supported range (qubit counts, grid sizes, lattice sites).
struct bounds_error : std::out_of_range {
    explicit bounds_error(const std::string& what) : std::out_of_range(what) {}
};

// Value fails a mathematical precondition (non-unitary input, norm violation).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A numerical contract was violated at run time (residual too large,
// imaginary residue beyond the projection gate).
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Point lies outside the requested coordinate chart.
struct out_of_chart_error : domain_error {
    explicit out_of_chart_error(const std::string& what) : domain_error(what) {}
};

// The closed-form transition map hit a singular pivot.
struct transition_domain_error : domain_error {
    explicit transition_domain_error(const std::string& what) : domain_error(what) {}
};

// Kronecker-factor reconstruction left a residual beyond tolerance.
struct reconstruction_error : numerical_error {
    explicit reconstruction_error(const std::string& what) : numerical_error(what) {}
};

}  // namespace bellmap
