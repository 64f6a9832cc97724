#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bjorth/algebra.hpp"
#include "bjorth/geometry.hpp"
#include "bjorth/maps.hpp"

namespace bjorth {

struct SuiteRecord {
    std::string id;
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::size_t borderline = 0;
    std::uint64_t seed = 0;
};

struct SuiteReport {
    std::vector<SuiteRecord> records;

    bool pass() const;
    /// Deterministic rendering: identical inputs give identical bytes.
    std::string render() const;
};

const std::vector<std::string>& suite_names(); // includes "all"

/// Runs one named suite (or every suite for "all"). trials = 0 picks the
/// suite's default budget.
SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed);

/// min over complex c of the algebra norm of Y - cX (pattern search; the
/// objective is convex in c).
double scalar_fit_residual(const AlgebraElement& Y, const AlgebraElement& X);

} // namespace bjorth
