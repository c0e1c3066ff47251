#include "hypercert/graphs.hpp"

#include "hypercert/errors.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace hypercert {

Graph::Graph(int nverts, std::vector<Edge> edges) : nverts_(nverts) {
    if (nverts < 0 || nverts > 64) throw budget_error("Graph: supports 0 <= nverts <= 64");
    std::set<Edge> seen;
    adj_.assign(nverts, 0);
    for (auto [u, v] : edges) {
        if (u == v) throw contract_error("Graph: loops are not allowed");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= nverts) throw contract_error("Graph: vertex out of range");
        if (!seen.insert({u, v}).second) throw contract_error("Graph: duplicate edge");
        adj_[u] |= (1ULL << v);
        adj_[v] |= (1ULL << u);
    }
    edges_.assign(seen.begin(), seen.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= nverts_ || v >= nverts_ || u == v) return false;
    return (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const { return __builtin_popcountll(adj_[v]); }

bool Graph::connected() const {
    if (nverts_ <= 1) return true;
    std::vector<bool> seen(nverts_, false);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = true;
    int count = 1;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int v = 0; v < nverts_; ++v) {
            if (!seen[v] && has_edge(u, v)) {
                seen[v] = true;
                ++count;
                bfs.push(v);
            }
        }
    }
    return count == nverts_;
}

int Graph::diameter() const {
    int best = 0;
    for (int s = 0; s < nverts_; ++s) {
        std::vector<int> dist(nverts_, -1);
        std::queue<int> bfs;
        bfs.push(s);
        dist[s] = 0;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int v = 0; v < nverts_; ++v) {
                if (dist[v] < 0 && has_edge(u, v)) {
                    dist[v] = dist[u] + 1;
                    bfs.push(v);
                }
            }
        }
        for (int v = 0; v < nverts_; ++v) {
            if (dist[v] < 0) return -1;
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

std::vector<std::array<int, 3>> Graph::triangles() const {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < nverts_; ++a)
        for (int b = a + 1; b < nverts_; ++b) {
            if (!has_edge(a, b)) continue;
            for (int c = b + 1; c < nverts_; ++c)
                if (has_edge(a, c) && has_edge(b, c)) out.push_back({a, b, c});
        }
    return out;
}

Graph Graph::from_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Edge> edges;
    int maxv = -1;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        int u, v;
        if (ls >> u >> v) {
            edges.push_back({u, v});
            maxv = std::max(maxv, std::max(u, v));
        }
    }
    return Graph(maxv + 1, std::move(edges));
}

std::string Graph::to_edge_list_text() const {
    std::ostringstream os;
    for (const auto& [u, v] : edges_) os << u << " " << v << "\n";
    return os.str();
}

namespace {

using Mask = std::uint64_t;

struct CliqueSearch {
    const std::vector<Mask>& adj;
    int n;
    int best = 0;
    std::vector<int> best_set;
    std::vector<int> current;

    // Greedy coloring bound: candidates are partitioned into color classes;
    // a clique can take at most one vertex per class.
    int color_bound(Mask cand) const {
        int colors = 0;
        while (cand) {
            Mask cls = 0;
            Mask rest = cand;
            while (rest) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                if ((adj[v] & cls) == 0) {
                    cls |= (1ULL << v);
                }
            }
            cand &= ~cls;
            ++colors;
        }
        return colors;
    }

    void expand(Mask cand) {
        if (!cand) {
            if (static_cast<int>(current.size()) > best) {
                best = static_cast<int>(current.size());
                best_set = current;
            }
            return;
        }
        if (static_cast<int>(current.size()) + color_bound(cand) <= best) return;
        int v = __builtin_ctzll(cand);
        // Branch on v included, then excluded.
        current.push_back(v);
        expand(cand & adj[v]);
        current.pop_back();
        expand(cand & ~(1ULL << v));
    }
};

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.nverts(), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= (1ULL << v);
        adj[v] |= (1ULL << u);
    }
    return adj;
}

} // namespace

CliqueResult clique_number(const Graph& g) {
    if (g.nverts() > 64) throw budget_error("clique_number: exact enumeration budget is 64 vertices");
    if (g.nverts() == 0) return {0, {}};
    auto adj = adjacency_masks(g);
    CliqueSearch search{adj, g.nverts()};
    Mask all = g.nverts() == 64 ? ~0ULL : ((1ULL << g.nverts()) - 1);
    search.expand(all);
    std::sort(search.best_set.begin(), search.best_set.end());
    return {search.best, search.best_set};
}

std::vector<std::vector<int>> maximum_cliques(const Graph& g) {
    int omega = clique_number(g).omega;
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    // Exhaustive enumeration of omega-subsets with pruning; budget-bounded by
    // clique_number's precondition.
    auto adj = adjacency_masks(g);
    std::function<void(int, Mask)> rec = [&](int start, Mask allowed) {
        if (static_cast<int>(pick.size()) == omega) {
            out.push_back(pick);
            return;
        }
        for (int v = start; v < g.nverts(); ++v) {
            if (!((allowed >> v) & 1)) continue;
            pick.push_back(v);
            rec(v + 1, allowed & adj[v]);
            pick.pop_back();
        }
    };
    Mask all = g.nverts() == 64 ? ~0ULL : ((1ULL << g.nverts()) - 1);
    rec(0, all);
    return out;
}

Graph icosahedral_graph() {
    // Gyroelongated-bipyramid presentation: apex 0 over pentagon 1..5,
    // antiprism band to pentagon 6..10, apex 11 below.
    std::vector<Edge> edges;
    for (int i = 1; i <= 5; ++i) edges.push_back({0, i});
    for (int i = 1; i <= 5; ++i) edges.push_back({i, i % 5 + 1});
    for (int i = 1; i <= 5; ++i) {
        edges.push_back({i, i + 5});
        edges.push_back({i, i % 5 + 6});
    }
    for (int i = 6; i <= 10; ++i) edges.push_back({i, (i - 5) % 5 + 6});
    for (int i = 6; i <= 10; ++i) edges.push_back({11, i});
    return Graph(12, std::move(edges));
}

} // namespace hypercert
