#pragma once

#include "lll/graph.hpp"
#include "lll/hypergraph.hpp"
#include "lll/latin.hpp"
#include "lll/matching.hpp"
#include "lll/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lll {

// All readers share one line-oriented dialect: '#' starts a comment running
// to end of line, blank lines are skipped, and tokens are whitespace-
// separated. Malformed input raises ParseError with 1-based line/column.

// First token n, then n*n integer symbols in row-major order.
IntMatrix read_matrix_file(const std::string& path);
IntMatrix read_matrix(std::istream& in, const std::string& name);

// First tokens `n r`, then edges as groups of r vertex indices (1-based).
Hypergraph read_hypergraph_file(const std::string& path);
Hypergraph read_hypergraph(std::istream& in, const std::string& name);

// First tokens `m n`; one matching per group `r i1 j1 ... ir jr`; an optional
// trailing section introduced by the bare token GRAPH lists explicit edges of
// the event graph as index pairs (1-based into the matching list).
struct EventsSpec {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<Matching> matchings;
    std::optional<Graph> graph;
};

EventsSpec read_events_spec_file(const std::string& path);
EventsSpec read_events_spec(std::istream& in, const std::string& name);

// Keyword lines: `p <rational>` (one per event, in order), `edge <u> <v>`,
// and optional `x <rational>` weight lines (count must match the p count).
struct WeightedSystemSpec {
    std::vector<Rational> p;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::optional<std::vector<Rational>> x;
};

WeightedSystemSpec read_weighted_system_file(const std::string& path);
WeightedSystemSpec read_weighted_system(std::istream& in, const std::string& name);

} // namespace lll
