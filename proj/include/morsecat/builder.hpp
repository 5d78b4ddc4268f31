#pragma once

#include "morsecat/morse.hpp"
#include "morsecat/strong.hpp"

#include <cstdint>
#include <vector>

namespace morsecat {

// Flat function from an acyclic matching: unit i of a linear extension gets
// value i, pair members sharing one value. Deterministic extension by default.
MorseFunction dmf_from_matching(const SimplicialComplex& K, const Matching& M);
MorseFunction dmf_from_matching(const SimplicialComplex& K, const Matching& M,
                                const BuildOrder& order);

// Deconstructs K by elementary strong collapses (each one emitted as an
// uninterrupted run of matched pairs), falling back to free-pair collapses
// and critical facets when stuck; values replay the construction in reverse.
MorseFunction greedy_strong_dmf(const SimplicialComplex& K,
                                std::uint64_t seed);

// Random free-pair deconstruction (random facet declared critical when none
// is free), then a random linear extension for the values.
MorseFunction random_dmf(const SimplicialComplex& K, std::uint64_t seed);

struct OptimizerConfig {
    long long budget = 200; // total iterations across all trials
    std::uint64_t seed = 0;
    enum class Strategy { Greedy, Anneal };
    Strategy strategy = Strategy::Anneal;
    Rat t0 = Rat(3);     // initial temperature, cools linearly to 0
    int trials = 8;      // independent restarts; parallelized by jobs
    int jobs = 0;        // 0 = hardware default
    StrongOptions strong{.restrict_to_st = false,
                         .strict_l_below_m = false,
                         .exec = Exec::Serial};
};

struct OptimizerResult {
    MorseFunction best;
    std::size_t best_count;
    // best-so-far across trials after each per-trial iteration
    std::vector<std::size_t> history;
};

// Minimizes #scrit over matchings and linear extensions. Deterministic for a
// fixed config regardless of jobs.
OptimizerResult optimize_scrit(const SimplicialComplex& K,
                               const OptimizerConfig& config = {});

} // namespace morsecat
