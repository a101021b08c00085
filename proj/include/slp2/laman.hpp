#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slp2/coloring.hpp"
#include "slp2/complex.hpp"

namespace slp2 {

/// Undirected simple graph on arbitrary vertex ids. No loops, no multi-edges.
class SimpleGraph {
public:
    SimpleGraph(std::vector<VertexId> vertices, std::vector<std::pair<VertexId, VertexId>> edges) {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        vertices_ = std::move(vertices);
        for (auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("SimpleGraph: loop at " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (!has_vertex(u) || !has_vertex(v))
                throw std::invalid_argument("SimpleGraph: edge endpoint not a vertex");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
    }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    bool has_vertex(VertexId v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    int index_of(VertexId v) const {
        return static_cast<int>(std::lower_bound(vertices_.begin(), vertices_.end(), v) -
                                vertices_.begin());
    }

    /// Edges spanned by the vertex set W.
    int edges_within(const std::vector<VertexId>& W) const {
        std::vector<VertexId> w(W);
        std::sort(w.begin(), w.end());
        int count = 0;
        for (const auto& [u, v] : edges_)
            if (std::binary_search(w.begin(), w.end(), u) &&
                std::binary_search(w.begin(), w.end(), v))
                ++count;
        return count;
    }

private:
    std::vector<VertexId> vertices_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

/// Verdict of a (2,3)-sparsity test. When not sparse, `violation` is a vertex
/// set spanning more than 2|W| - 3 edges, re-counted before being returned.
struct LamanVerdict {
    bool sparse = true;
    std::vector<VertexId> violation;       // empty iff sparse
    int violation_edges = 0;

    friend bool operator==(const LamanVerdict&, const LamanVerdict&) = default;
};

/**
 * (2,3)-pebble game sparsity test. Every vertex carries two pebbles; an edge
 * may be inserted once four pebbles sit on its endpoints, consuming one.
 * Pebbles are fetched by reversing directed paths. If a fetch fails, the set
 * of vertices reachable from the endpoints spans at least 2|W| - 2 edges of
 * the input graph and certifies the violation. Edges are inserted in
 * ascending lexicographic order so verdicts are deterministic.
 */
inline LamanVerdict is_23_sparse(const SimpleGraph& g) {
    const int n = static_cast<int>(g.vertices().size());
    std::vector<int> pebbles(n, 2);
    std::vector<std::vector<int>> out(n);

    // Move one pebble to `root` by path reversal; `other` may not donate.
    auto fetch_pebble = [&](int root, int other, std::vector<bool>& seen) -> bool {
        std::vector<int> parent(n, -1);
        std::vector<int> stack{root};
        seen[root] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : out[x]) {
                if (seen[y]) continue;
                seen[y] = true;
                parent[y] = x;
                if (pebbles[y] > 0 && y != other && y != root) {
                    --pebbles[y];
                    ++pebbles[root];
                    // reverse the path root -> ... -> y
                    int cur = y;
                    while (parent[cur] != -1) {
                        int pr = parent[cur];
                        out[pr].erase(std::find(out[pr].begin(), out[pr].end(), cur));
                        out[cur].push_back(pr);
                        cur = pr;
                    }
                    return true;
                }
                stack.push_back(y);
            }
        }
        return false;
    };

    for (const auto& [uv, vv] : g.edges()) {
        const int u = g.index_of(uv), v = g.index_of(vv);
        bool stuck = false;
        std::vector<bool> region;
        while (pebbles[u] + pebbles[v] < 4) {
            std::vector<bool> seen(n, false);
            bool moved = fetch_pebble(u, v, seen);
            if (!moved) {
                std::vector<bool> seen2(n, false);
                moved = fetch_pebble(v, u, seen2);
                if (!moved) {
                    // union of both failed search regions
                    region.assign(n, false);
                    for (int i = 0; i < n; ++i) region[i] = seen[i] || seen2[i];
                    stuck = true;
                    break;
                }
            }
        }
        if (stuck) {
            LamanVerdict verdict;
            verdict.sparse = false;
            for (int i = 0; i < n; ++i)
                if (region[i]) verdict.violation.push_back(g.vertices()[i]);
            verdict.violation_edges = g.edges_within(verdict.violation);
            const int w = static_cast<int>(verdict.violation.size());
            if (verdict.violation_edges <= 2 * w - 3)
                throw Contradiction("pebble game produced a non-violating region");
            return verdict;
        }
        out[u].push_back(v);
        --pebbles[u];
    }
    return LamanVerdict{};
}

/// Direct subset enumeration oracle; |V| must be at most 16.
inline LamanVerdict brute_force_23_sparse(const SimpleGraph& g) {
    const int n = static_cast<int>(g.vertices().size());
    if (n > 16)
        throw std::invalid_argument("brute_force_23_sparse: too many vertices");
    const auto& vs = g.vertices();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<VertexId> W;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) W.push_back(vs[i]);
        if (W.size() < 2) continue;
        const int e = g.edges_within(W);
        if (e > 2 * static_cast<int>(W.size()) - 3)
            return LamanVerdict{false, W, e};
    }
    return LamanVerdict{};
}

/// Graph induced on the blue vertices: all blue vertices, plus the edges of
/// the complex with both endpoints blue.
inline SimpleGraph blue_graph(const Complex2& c, const BiColoring& pi) {
    require_total(c, pi);
    std::vector<VertexId> blues;
    for (VertexId v : c.vertices())
        if (pi.at(v) == BiColor::blue) blues.push_back(v);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const Face& e : c.edges())
        if (pi.at(e[0]) == BiColor::blue && pi.at(e[1]) == BiColor::blue)
            edges.emplace_back(e[0], e[1]);
    return SimpleGraph(std::move(blues), std::move(edges));
}

} // namespace slp2
