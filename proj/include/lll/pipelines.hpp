#pragma once

#include "lll/hypergraph.hpp"
#include "lll/io.hpp"
#include "lll/latin.hpp"
#include "lll/report.hpp"
#include "lll/solver.hpp"

#include <cstdint>
#include <string>

namespace lll {

// One task = one report + one exit code. The command-line tool is a thin
// wrapper over these so tests can drive the exact same logic in-process.
struct SolveOptions {
    enum class Mode { check_only, randomized, exhaustive };

    Mode mode = Mode::check_only;
    std::uint64_t seed = 0;
    std::uint64_t max_restarts = 100;
    std::uint64_t max_steps = 100'000;
    bool with_float = false;
    bool with_timing = false;
    std::size_t threads = 1;
};

// Exit codes: 0 verdict delivered / witness found, 2 input error, 3 negative
// search outcome, 4 resource cap exceeded. (2 and 4 surface as exceptions
// from the library and are mapped by the caller.)
struct TaskOutcome {
    std::string report;
    int exit_code = 0;
};

// Condition check, event family, conflict degree vs 4nk-1, optional
// transversal search.
TaskOutcome run_latin_task(const IntMatrix& a, const SolveOptions& options);

// Packing condition, instance construction, conflict degree vs
// r!((d1+1)m2+(d2+1)m1)-1, optional embedding search.
TaskOutcome run_pack_task(const Hypergraph& h1, const Hypergraph& h2, std::size_t n,
                          const SolveOptions& options);

// Reduction to a two-hypergraph packing, slack/threshold condition, the
// perfect-matching degree thresholds when G is a single edge, optional search
// with partition reconstruction.
TaskOutcome run_perfect_packing_task(const Hypergraph& g, const Hypergraph& h,
                                     const SolveOptions& options);

// Exhaustive negative-dependency verification of an event family (conflict
// graph by default, explicit graph when the input file carries one).
TaskOutcome run_verify_ndg_task(const EventsSpec& spec, const SolveOptions& options);

// Weighted condition check / weight search plus the symmetric condition.
TaskOutcome run_weighted_system_task(const WeightedSystemSpec& spec, const SolveOptions& options);

} // namespace lll
