#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "slp2/complex.hpp"

namespace slp2 {

/// Proper 3-coloring: vertex -> {1,2,3}, endpoints of every edge distinct.
using Coloring = std::map<VertexId, int>;

enum class BiColor : std::uint8_t { blue, red };

/// Bi-coloring: vertex -> {blue, red}, total on the vertex set.
using BiColoring = std::map<VertexId, BiColor>;

inline bool is_proper_coloring(const Complex2& c, const Coloring& kappa) {
    for (VertexId v : c.vertices()) {
        auto it = kappa.find(v);
        if (it == kappa.end() || it->second < 1 || it->second > 3) return false;
    }
    for (const Face& e : c.edges())
        if (kappa.at(e[0]) == kappa.at(e[1])) return false;
    return true;
}

inline void require_total(const Complex2& c, const BiColoring& pi) {
    for (VertexId v : c.vertices())
        if (!pi.count(v))
            throw std::invalid_argument("bi-coloring does not cover vertex " + std::to_string(v));
}

/**
 * Proper 3-coloring of a simplicial 2-sphere, if one exists. A 2-sphere is
 * 3-colorable exactly when every vertex has even degree; the coloring is then
 * found by fixing the colors on one facet and propagating across facet
 * adjacencies, and is unique up to permuting the colors.
 *
 * Deterministic: BFS over the facet-adjacency graph starting from the
 * lexicographically smallest facet, whose vertices receive colors 1,2,3 in
 * ascending vertex order.
 */
inline std::optional<Coloring> proper_3_coloring(const Complex2& c) {
    if (!c.is_sphere())
        throw std::invalid_argument("proper_3_coloring: input is not a 2-sphere");
    for (VertexId v : c.vertices())
        if (c.degree(v) % 2 != 0) return std::nullopt;

    Coloring kappa;
    const auto& facets = c.facets();
    const Face& first = facets[0];
    for (int i = 0; i < 3; ++i) kappa[first[i]] = i + 1;

    std::vector<bool> visited(facets.size(), false);
    std::vector<int> queue{0};
    visited[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Face& f = facets[queue[head]];
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                for (int gi : c.facets_at_edge(Face{f[a], f[b]})) {
                    if (visited[gi]) continue;
                    visited[gi] = true;
                    const Face& g = facets[gi];
                    VertexId third = g[0] + g[1] + g[2] - f[a] - f[b];
                    int color = 6 - kappa.at(f[a]) - kappa.at(f[b]);
                    auto [it, inserted] = kappa.emplace(third, color);
                    if (!inserted && it->second != color) return std::nullopt;
                    queue.push_back(gi);
                }
    }
    if (!is_proper_coloring(c, kappa)) return std::nullopt;
    return kappa;
}

/// True iff kappa2 equals kappa1 composed with some permutation of {1,2,3}.
inline bool colorings_equivalent(const Coloring& k1, const Coloring& k2) {
    if (k1.size() != k2.size()) return false;
    static const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                    {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (const auto& tau : perms) {
        bool ok = true;
        for (const auto& [v, col] : k1) {
            auto it = k2.find(v);
            if (it == k2.end() || it->second != tau[col - 1]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

/// Every face has at most two blue and at most one red vertex. Checking the
/// facets suffices: the condition is inherited by subsets.
inline bool is_21_coloring(const Complex2& c, const BiColoring& pi) {
    require_total(c, pi);
    for (const Face& f : c.facets()) {
        int blue = 0, red = 0;
        for (VertexId v : f.vertices())
            (pi.at(v) == BiColor::blue ? blue : red)++;
        if (blue > 2 || red > 1) return false;
    }
    return true;
}

/// No edge has both endpoints red. Any (2,1)-coloring is semi-proper.
inline bool is_semi_proper(const Complex2& c, const BiColoring& pi) {
    require_total(c, pi);
    for (const Face& e : c.edges())
        if (pi.at(e[0]) == BiColor::red && pi.at(e[1]) == BiColor::red) return false;
    return true;
}

/// Turn a proper 3-coloring into a bi-coloring by painting one class red.
/// Each facet of a balanced complex meets every class once, so the result is
/// a (2,1)-coloring.
inline BiColoring bicolor_from_3coloring(const Coloring& kappa, int red_class) {
    if (red_class < 1 || red_class > 3)
        throw std::invalid_argument("bicolor_from_3coloring: red class must be 1, 2 or 3");
    BiColoring pi;
    for (const auto& [v, col] : kappa)
        pi[v] = (col == red_class) ? BiColor::red : BiColor::blue;
    return pi;
}

inline std::vector<VertexId> blue_vertices(const BiColoring& pi) {
    std::vector<VertexId> out;
    for (const auto& [v, col] : pi)
        if (col == BiColor::blue) out.push_back(v);
    return out;
}

inline std::vector<VertexId> red_vertices(const BiColoring& pi) {
    std::vector<VertexId> out;
    for (const auto& [v, col] : pi)
        if (col == BiColor::red) out.push_back(v);
    return out;
}

/**
 * Backtracking search for a (2,1)-coloring of an arbitrary complex, used by
 * the CLI when no coloring file is given. Vertices are tried in ascending id
 * order, blue before red, so the result is deterministic. Intended for small
 * instances only.
 */
inline std::optional<BiColoring> find_21_coloring(const Complex2& c) {
    const auto& vs = c.vertices();
    const auto& facets = c.facets();
    std::vector<int> blue_count(facets.size(), 0), red_count(facets.size(), 0),
        assigned(facets.size(), 0);
    std::map<VertexId, std::vector<int>> at;
    for (VertexId v : vs) at[v] = c.facets_at(v);

    BiColoring pi;
    auto feasible = [&](int fi) {
        // a fully assigned facet must end with exactly 2 blue and 1 red
        if (blue_count[fi] > 2 || red_count[fi] > 1) return false;
        int free = 3 - assigned[fi];
        return blue_count[fi] + free >= 2 && red_count[fi] + free >= 1;
    };
    std::vector<VertexId> order(vs.begin(), vs.end());

    std::function<bool(std::size_t)> go = [&](std::size_t idx) -> bool {
        if (idx == order.size()) return true;
        VertexId v = order[idx];
        for (BiColor col : {BiColor::blue, BiColor::red}) {
            pi[v] = col;
            bool ok = true;
            for (int fi : at[v]) {
                (col == BiColor::blue ? blue_count[fi] : red_count[fi])++;
                assigned[fi]++;
                if (!feasible(fi)) ok = false;
            }
            if (ok && go(idx + 1)) return true;
            for (int fi : at[v]) {
                (col == BiColor::blue ? blue_count[fi] : red_count[fi])--;
                assigned[fi]--;
            }
            pi.erase(v);
        }
        return false;
    };
    if (go(0)) return pi;
    return std::nullopt;
}

} // namespace slp2
