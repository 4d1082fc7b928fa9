#pragma once

#include "lll/matching.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lll {

// Find an injection [m] -> [n] extending none of the forbidden matchings.
// The checks and builders prove such injections exist under their conditions;
// this is the constructive side, with every output re-verified.
struct AvoidanceProblem {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<Matching> forbidden; // each over (m, n)

    AvoidanceProblem(std::size_t domain_size, std::size_t codomain_size,
                     std::vector<Matching> forbidden_matchings);
};

struct SolveStats {
    std::uint64_t restarts = 0;          // restart rounds begun
    std::uint64_t resample_steps = 0;    // violated-matching resamples, summed over restarts
    std::uint64_t outcomes_examined = 0; // exhaustive path only
};

struct Certificate {
    std::vector<std::size_t> witness; // 1-based images, length m
    bool checked = false;             // set by the independent verifier
    SolveStats stats;
};

struct SolveResult {
    std::optional<Certificate> certificate;
    SolveStats stats; // populated on failure too

    bool found() const { return certificate.has_value(); }
};

// The independent check: true iff the witness extends no forbidden matching.
bool witness_avoids_all(const AvoidanceProblem& problem,
                        const std::vector<std::size_t>& witness);

// Lexicographically first avoiding injection, or nothing if none exists.
// Throws SizeLimitError when C(n,m)·m! exceeds the cap.
SolveResult solve_exhaustive(const AvoidanceProblem& problem, std::uint64_t cap = 10'000'000);

struct RandomizedOptions {
    std::uint64_t seed = 0;
    std::uint64_t max_restarts = 100;  // independent attempts, each from a fresh derived seed
    std::uint64_t max_steps = 100'000; // resample budget per attempt
    // Off by default: pick the violated matching to resample uniformly at
    // random instead of first-in-order.
    bool random_violation_choice = false;
};

// Restart + resample search: start from a seeded uniform random injection;
// while some forbidden matching is extended, resample the images of its
// domain points (random transposition when m = n, random unused value when
// m < n). Deterministic for fixed (problem, options). Exhausting the budget
// returns no certificate — it never claims nonexistence.
SolveResult solve_randomized(const AvoidanceProblem& problem,
                             const RandomizedOptions& options = {});

} // namespace lll
