#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace lll {

// Simple undirected graph on vertices 1..n (1-based throughout, matching the
// event indexing used by the dependency-graph checkers). Immutable after
// construction; adjacency lists are kept sorted.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    static Graph complete(std::size_t vertex_count);
    static Graph empty(std::size_t vertex_count) { return Graph(vertex_count, {}); }

    std::size_t vertex_count() const { return adjacency_.size(); }
    const std::vector<std::size_t>& neighbors(std::size_t v) const; // sorted
    std::size_t degree(std::size_t v) const { return neighbors(v).size(); }
    std::size_t max_degree() const;
    bool has_edge(std::size_t u, std::size_t v) const;

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    std::size_t edge_count() const;

private:
    void check_vertex(std::size_t v) const;

    std::vector<std::vector<std::size_t>> adjacency_; // adjacency_[v-1]
};

} // namespace lll
