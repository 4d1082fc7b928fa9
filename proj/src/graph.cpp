#include "lll/graph.hpp"

#include "lll/errors.hpp"

#include <algorithm>

namespace lll {

Graph::Graph(std::size_t vertex_count,
             const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : adjacency_(vertex_count) {
    for (auto [u, v] : edges) {
        if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
            throw DomainError("graph edge endpoint out of range");
        if (u == v) throw DomainError("graph may not contain self-loops");
        adjacency_[u - 1].push_back(v);
        adjacency_[v - 1].push_back(u);
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
}

Graph Graph::complete(std::size_t vertex_count) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 1; u <= vertex_count; ++u)
        for (std::size_t v = u + 1; v <= vertex_count; ++v) edges.emplace_back(u, v);
    return Graph(vertex_count, edges);
}

void Graph::check_vertex(std::size_t v) const {
    if (v < 1 || v > adjacency_.size()) throw DomainError("graph vertex out of range");
}

const std::vector<std::size_t>& Graph::neighbors(std::size_t v) const {
    check_vertex(v);
    return adjacency_[v - 1];
}

std::size_t Graph::max_degree() const {
    std::size_t result = 0;
    for (const auto& adj : adjacency_) result = std::max(result, adj.size());
    return result;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& adj = adjacency_[u - 1];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for (std::size_t u = 1; u <= adjacency_.size(); ++u) {
        for (std::size_t v : adjacency_[u - 1]) {
            if (u < v) result.emplace_back(u, v);
        }
    }
    return result;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& adj : adjacency_) twice += adj.size();
    return twice / 2;
}

} // namespace lll
