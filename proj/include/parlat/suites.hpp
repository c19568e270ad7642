// Verification batteries: randomized and exhaustive checks wiring the
// symbolic lattice, the closure engine, the numerics and the operator
// model together. Shared by the CLI `verify` command and the acceptance
// runner.
#pragma once

#include "parlat/galois.hpp"
#include "parlat/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace parlat {

struct CheckLine {
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckLine> lines;
    bool pass = true;

    void add(CheckLine line) {
        pass = pass && line.pass;
        lines.push_back(std::move(line));
    }
    void merge(const SuiteResult& other) {
        for (const auto& l : other.lines) add(l);
    }
};

struct SuiteConfig {
    int trials = 0;      // 0 = per-suite default
    int resolution = 0;  // 0 = per-suite default
    std::uint64_t seed = kDefaultSeed;

    static constexpr std::uint64_t kDefaultSeed = 1729;
};

// name in {galois, lattice, holder, young, amalgam, lhs, counterexample, all};
// throws std::invalid_argument otherwise.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config = {});
std::vector<std::string> suite_names();

// Uniformly random valid relation algebra: random involution with a fixed
// unit, random compatibility closed under the involution axiom.
FiniteRelationAlgebra random_algebra(Rng& rng, int n);

// Individual batteries (the acceptance runner maps criteria onto these).
SuiteResult suite_galois(const SuiteConfig& config);
SuiteResult suite_lattice(const SuiteConfig& config);
SuiteResult suite_holder(const SuiteConfig& config);
SuiteResult suite_young(const SuiteConfig& config);
SuiteResult suite_amalgam(const SuiteConfig& config);
SuiteResult suite_lhs(const SuiteConfig& config);
SuiteResult suite_counterexample(const SuiteConfig& config);

}  // namespace parlat
