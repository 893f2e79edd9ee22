#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "selberg/identities.hpp"

namespace selberg {

struct SuiteOptions {
    std::uint64_t seed = 1;
    double tol_scale = 1.0; // multiplies each check's default tolerance
    bool quick = false;     // reduced point counts for unit-test use
};

struct SuiteReport {
    std::string suite;
    std::vector<IdentityReport> checks;
    int failures() const {
        int f = 0;
        for (const auto& c : checks)
            if (!c.skipped && !c.passed) ++f;
        return f;
    }
};

SuiteReport run_suite_combinatorics(const SuiteOptions&);
SuiteReport run_suite_special(const SuiteOptions&);
SuiteReport run_suite_quadrature(const SuiteOptions&);
SuiteReport run_suite_continuation(const SuiteOptions&);
SuiteReport run_suite_aomoto(const SuiteOptions&);
SuiteReport run_suite_symmetrization(const SuiteOptions&);
SuiteReport run_suite_df(const SuiteOptions&);

std::vector<SuiteReport> run_suites(const std::string& which, const SuiteOptions&);

// Deterministic xorshift generator for reproducible random points.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        std::uint64_t x = state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        return state = x;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
    }
};

} // namespace selberg
