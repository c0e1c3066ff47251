#pragma once

// Simple undirected graphs and the exact clique machinery feeding the graph
// cubic constructions.

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hypercert {

using Edge = std::pair<int, int>; // normalized u < v

class Graph {
public:
    Graph() = default;
    Graph(int nverts, std::vector<Edge> edges);

    int nverts() const { return nverts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int nedges() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    bool connected() const;
    int diameter() const; // -1 when disconnected
    std::vector<std::array<int, 3>> triangles() const;

    // Parses "u v" per line (0-indexed); '#' starts a comment.
    static Graph from_edge_list_text(const std::string& text);
    std::string to_edge_list_text() const;

private:
    int nverts_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_; // bitmask adjacency, nverts <= 64
};

struct CliqueResult {
    int omega = 0;
    std::vector<int> witness; // one maximum clique, sorted
};

// Exact maximum clique via branch and bound with a greedy-coloring bound.
// Budget: nverts <= 64.
CliqueResult clique_number(const Graph& g);

// All maximum cliques (used for the icosahedral clique vectors).
std::vector<std::vector<int>> maximum_cliques(const Graph& g);

// The icosahedral graph: 12 vertices, 30 edges, 5-regular, 20 triangles.
Graph icosahedral_graph();

} // namespace hypercert
