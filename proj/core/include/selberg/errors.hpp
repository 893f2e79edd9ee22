#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace selberg {

// Base for all library errors. The CLI maps subclasses onto exit codes:
// domain-type errors -> 2, convergence-type errors -> 3.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct domain_error : error {
    using error::error;
};

struct convergence_error : error {
    using error::error;
};

// A Gamma-type pole was hit. `where` is the offending argument.
struct pole_error : domain_error {
    std::complex<double> where;
    explicit pole_error(std::complex<double> w, const std::string& what)
        : domain_error(what), where(w) {}
};

struct out_of_domain : domain_error {
    using domain_error::domain_error;
};

struct invalid_face : domain_error {
    using domain_error::domain_error;
};

struct unsupported : domain_error {
    using domain_error::domain_error;
};

struct unconverged : convergence_error {
    using convergence_error::convergence_error;
};

struct divergent_series : convergence_error {
    using convergence_error::convergence_error;
};

struct nonconvergent : convergence_error {
    using convergence_error::convergence_error;
};

struct decay_violation : domain_error {
    using domain_error::domain_error;
};

struct branch_cut_hit : domain_error {
    using domain_error::domain_error;
};

struct chart_not_covered : domain_error {
    using domain_error::domain_error;
};

struct limit_disagreement : convergence_error {
    using convergence_error::convergence_error;
};

struct sine_too_small : domain_error {
    using domain_error::domain_error;
};

struct laurent_input : domain_error {
    using domain_error::domain_error;
};

struct empty_set : domain_error {
    using domain_error::domain_error;
};

// Parser error carrying the byte offset of the first bad character.
struct syntax_error : error {
    std::size_t offset;
    syntax_error(std::size_t off, const std::string& what) : error(what), offset(off) {}
};

struct variable_out_of_range : syntax_error {
    using syntax_error::syntax_error;
};

} // namespace selberg
