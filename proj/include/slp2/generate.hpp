#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "slp2/coloring.hpp"
#include "slp2/complex.hpp"
#include "slp2/ops.hpp"
#include "slp2/rng.hpp"

namespace slp2 {

/// The boundary of the 3-crosspolytope on vertices 1..6 (antipodal pairs
/// {1,2}, {3,4}, {5,6}) with its proper 3-coloring by pairs.
inline std::pair<Complex2, Coloring> octahedron() {
    Complex2 c = Complex2::from_facets({{1, 3, 5},
                                        {1, 3, 6},
                                        {1, 4, 5},
                                        {1, 4, 6},
                                        {2, 3, 5},
                                        {2, 3, 6},
                                        {2, 4, 5},
                                        {2, 4, 6}});
    Coloring kappa{{1, 1}, {2, 1}, {3, 2}, {4, 2}, {5, 3}, {6, 3}};
    return {std::move(c), std::move(kappa)};
}

/// The boundary of the 3-simplex on vertices 1..4.
inline Complex2 tetrahedron() {
    return Complex2::from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

namespace detail {

inline VertexId next_free_id(const Complex2& c) { return c.vertices().back() + 1; }

/// Neighbors of v in the order they appear along its link cycle, starting at
/// the smallest neighbor and moving first toward its smaller link-neighbor.
inline std::vector<VertexId> link_cycle(const Complex2& c, VertexId v) {
    std::map<VertexId, std::vector<VertexId>> link;
    for (int fi : c.facets_at(v)) {
        const Face opp = c.facets()[fi].without(v);
        link[opp[0]].push_back(opp[1]);
        link[opp[1]].push_back(opp[0]);
    }
    for (auto& [u, ns] : link) {
        if (ns.size() != 2)
            throw std::invalid_argument("link_cycle: link of vertex is not a cycle");
        std::sort(ns.begin(), ns.end());
    }
    std::vector<VertexId> cycle{link.begin()->first};
    cycle.push_back(link.at(cycle[0])[0]);
    while (true) {
        const auto& ns = link.at(cycle.back());
        const VertexId prev = cycle[cycle.size() - 2];
        const VertexId nxt = (ns[0] == prev) ? ns[1] : ns[0];
        if (nxt == cycle.front()) break;
        cycle.push_back(nxt);
    }
    return cycle;
}

} // namespace detail

/**
 * Subdivide every facet of a 2-sphere with one new vertex. The result is a
 * (2,1)-balanced sphere whose unique (2,1)-coloring paints the original
 * vertices blue and the subdivision vertices red. New vertex ids are assigned
 * consecutively in the lexicographic order of the subdivided facets.
 */
inline std::pair<Complex2, BiColoring> subdivide_all_facets(const Complex2& base) {
    if (!base.is_sphere())
        throw std::invalid_argument("subdivide_all_facets: base is not a 2-sphere");
    VertexId next = detail::next_free_id(base);
    std::vector<Face> facets;
    BiColoring pi;
    for (VertexId v : base.vertices()) pi[v] = BiColor::blue;
    for (const Face& f : base.facets()) {
        const VertexId u = next++;
        pi[u] = BiColor::red;
        facets.push_back(Face{f[0], f[1], u});
        facets.push_back(Face{f[0], f[2], u});
        facets.push_back(Face{f[1], f[2], u});
    }
    return {Complex2::from_facets(std::move(facets)), std::move(pi)};
}

/// k random facet stackings onto a tetrahedron; f-vector (4+k, 6+3k, 4+2k).
inline Complex2 stacked_sphere(int k, std::uint64_t seed) {
    if (k < 0) throw std::invalid_argument("stacked_sphere: k must be >= 0");
    Rng rng(seed);
    std::vector<Face> facets = tetrahedron().facets();
    VertexId next = 5;
    for (int i = 0; i < k; ++i) {
        const std::size_t pick = rng.below(facets.size());
        const Face f = facets[pick];
        facets.erase(facets.begin() + static_cast<std::ptrdiff_t>(pick));
        const VertexId u = next++;
        facets.push_back(Face{f[0], f[1], u});
        facets.push_back(Face{f[0], f[2], u});
        facets.push_back(Face{f[1], f[2], u});
    }
    return Complex2::from_facets(std::move(facets));
}

/**
 * Inverse balanced contraction at a random vertex: replace q by the
 * configuration of a contractible pair (two new vertices appear). The
 * inverse is validated by contracting back and comparing facet sets.
 */
inline Complex2 inverse_balanced_contraction(const Complex2& c, Rng& rng) {
    const auto& vs = c.vertices();
    const VertexId q = vs[rng.below(vs.size())];
    const std::vector<VertexId> cycle = detail::link_cycle(c, q);
    const int m = static_cast<int>(cycle.size());
    if (m % 2 != 0 || m < 4)
        throw std::invalid_argument("inverse_balanced_contraction: vertex degree must be even");

    // split the link cycle at positions i and i+j+1 with j odd, so that both
    // arcs have an odd number of interior vertices and degrees stay even
    const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    const int j = 1 + 2 * static_cast<int>(rng.below(static_cast<std::uint64_t>((m - 2) / 2)));
    const VertexId p = detail::next_free_id(c);
    const VertexId mid = p + 1;
    auto at = [&](int r) { return cycle[static_cast<std::size_t>(((i + r) % m + m) % m)]; };
    const VertexId s = at(0), t = at(j + 1);

    std::vector<Face> facets;
    for (const Face& f : c.facets())
        if (!f.contains(q)) facets.push_back(f);
    for (int r = 0; r < j + 1; ++r) facets.push_back(Face{p, at(r), at(r + 1)});
    for (int r = j + 1; r < m; ++r) facets.push_back(Face{q, at(r), at(r + 1)});
    facets.push_back(Face{p, mid, s});
    facets.push_back(Face{p, mid, t});
    facets.push_back(Face{q, mid, s});
    facets.push_back(Face{q, mid, t});

    Complex2 out = Complex2::from_facets(std::move(facets));
    if (!(balanced_contract(out, p, q) == c))
        throw Contradiction("inverse_balanced_contraction: contracting back does not restore input");
    return out;
}

/**
 * Connected sum with a fresh octahedron along a random facet. The octahedron
 * is built directly on the facet's vertices plus three fresh antipodes, so
 * the gluing respects any proper coloring and balance is preserved.
 */
inline Complex2 sum_with_octahedron(const Complex2& c, Rng& rng) {
    const Face sigma = c.facets()[rng.below(c.facets().size())];
    const VertexId base = detail::next_free_id(c);
    const VertexId a0 = base, a1 = base + 1, a2 = base + 2;
    std::vector<Face> octa;
    for (VertexId x : {sigma[0], a0})
        for (VertexId y : {sigma[1], a1})
            for (VertexId z : {sigma[2], a2}) octa.push_back(Face{x, y, z});
    const Complex2 g2 = Complex2::from_facets(std::move(octa));
    const std::map<VertexId, VertexId> identity{
        {sigma[0], sigma[0]}, {sigma[1], sigma[1]}, {sigma[2], sigma[2]}};
    return connected_sum(c, g2, sigma, sigma, identity);
}

/**
 * Random balanced 2-sphere with exactly n_target vertices, grown from the
 * octahedron by inverse balanced contractions (+2 vertices) and connected
 * sums with octahedra (+3 vertices). Balanced spheres exist exactly for
 * n = 6 and n >= 8.
 */
inline std::pair<Complex2, Coloring> random_balanced_sphere(int n_target, std::uint64_t seed) {
    if (n_target != 6 && n_target < 8)
        throw std::invalid_argument(
            "random_balanced_sphere: balanced 2-spheres exist only for n = 6 or n >= 8");
    Rng rng(seed);
    Complex2 c = octahedron().first;
    while (static_cast<int>(c.vertices().size()) < n_target) {
        const int rem = n_target - static_cast<int>(c.vertices().size());
        bool do_sum;
        if (rem == 2 || rem == 4)
            do_sum = false;
        else if (rem == 3)
            do_sum = true;
        else
            do_sum = rng.coin();
        c = do_sum ? sum_with_octahedron(c, rng) : inverse_balanced_contraction(c, rng);
    }
    auto kappa = proper_3_coloring(c);
    if (!kappa) throw Contradiction("random_balanced_sphere: output is not balanced");
    return {std::move(c), std::move(*kappa)};
}

/**
 * Random (2,1)-balanced sphere: usually a random balanced sphere bi-colored
 * by painting a random color class red; every fourth draw instead subdivides
 * a stacked sphere, which yields instances whose blue graph is never
 * (2,3)-sparse.
 */
inline std::pair<Complex2, BiColoring> random_21_sphere(int n_target, std::uint64_t seed) {
    Rng rng(seed);
    if (rng.below(4) == 0) {
        const int k = std::max(0, (n_target - 8 + 1) / 3);
        auto [c, pi] = subdivide_all_facets(stacked_sphere(k, rng.next_u64()));
        return {std::move(c), std::move(pi)};
    }
    int n = n_target;
    if (n != 6 && n < 8) n = 8;
    auto [c, kappa] = random_balanced_sphere(n, rng.next_u64());
    const int red_class = 1 + static_cast<int>(rng.below(3));
    BiColoring pi = bicolor_from_3coloring(kappa, red_class);
    if (!is_21_coloring(c, pi))
        throw Contradiction("random_21_sphere: output is not (2,1)-colored");
    return {std::move(c), std::move(pi)};
}

/// A vertex split that is inverse to an admissible edge contraction in the
/// (2,1)-colored setting: p is new and blue, {p,q} is an edge, and the stars
/// of p and q meet in the two facets through {p,q} whose third vertices s, t
/// are red.
struct VertexSplit21 {
    Complex2 complex;
    BiColoring pi;
    VertexId p, q, s, t;
};

/**
 * Try to split a blue vertex of a (2,1)-sphere as above. Candidate choices
 * are scanned from a random starting rotation; the contraction back to the
 * input is verified. Returns nullopt when no vertex admits a valid split.
 */
inline std::optional<VertexSplit21> split_blue_vertex(const Complex2& c, const BiColoring& pi,
                                                      Rng& rng) {
    require_total(c, pi);
    const auto& vs = c.vertices();
    const std::size_t offset = rng.below(vs.size());
    for (std::size_t step = 0; step < vs.size(); ++step) {
        const VertexId q = vs[(offset + step) % vs.size()];
        if (pi.at(q) != BiColor::blue) continue;
        const std::vector<VertexId> cycle = detail::link_cycle(c, q);
        const int m = static_cast<int>(cycle.size());
        for (int a = 0; a < m; ++a) {
            if (pi.at(cycle[a]) != BiColor::red) continue;
            for (int d = 2; d <= m - 2; ++d) {
                const VertexId s = cycle[a];
                const VertexId t = cycle[(a + d) % m];
                if (pi.at(t) != BiColor::red) continue;
                if (c.has_edge(s, t)) continue;

                const VertexId p = detail::next_free_id(c);
                std::vector<Face> facets;
                for (const Face& f : c.facets())
                    if (!f.contains(q)) facets.push_back(f);
                auto at = [&](int r) { return cycle[static_cast<std::size_t>((a + r) % m)]; };
                for (int r = 0; r < d; ++r) facets.push_back(Face{p, at(r), at(r + 1)});
                for (int r = d; r < m; ++r) facets.push_back(Face{q, at(r), at(r + 1)});
                facets.push_back(Face{p, q, s});
                facets.push_back(Face{p, q, t});

                Complex2 out = Complex2::from_facets(std::move(facets));
                BiColoring pi2 = pi;
                pi2[p] = BiColor::blue;
                if (!out.is_sphere() || !is_21_coloring(out, pi2)) continue;
                if (!(contract(out, p, q) == c))
                    throw Contradiction("split_blue_vertex: contracting back does not restore input");
                return VertexSplit21{std::move(out), std::move(pi2), p, q, s, t};
            }
        }
    }
    return std::nullopt;
}

/// Parameters of a generator run (CLI `gen` subcommand).
struct GenSpec {
    enum class Kind { octahedron, tetrahedron, stacked, subdivision, random_balanced, random_21 };
    Kind kind = Kind::octahedron;
    int n = 0;             // target vertex count for the random kinds
    int k = 0;             // stackings (stacked / subdivision base)
    std::uint64_t seed = 0;
};

struct GenResult {
    Complex2 complex;
    std::optional<Coloring> coloring;
    std::optional<BiColoring> bicoloring;
};

inline GenResult generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenSpec::Kind::octahedron: {
            auto [c, kappa] = octahedron();
            return {std::move(c), std::move(kappa), std::nullopt};
        }
        case GenSpec::Kind::tetrahedron:
            return {tetrahedron(), std::nullopt, std::nullopt};
        case GenSpec::Kind::stacked:
            return {stacked_sphere(spec.k, spec.seed), std::nullopt, std::nullopt};
        case GenSpec::Kind::subdivision: {
            auto [c, pi] = subdivide_all_facets(stacked_sphere(spec.k, spec.seed));
            return {std::move(c), std::nullopt, std::move(pi)};
        }
        case GenSpec::Kind::random_balanced: {
            auto [c, kappa] = random_balanced_sphere(spec.n, spec.seed);
            return {std::move(c), std::move(kappa), std::nullopt};
        }
        case GenSpec::Kind::random_21: {
            auto [c, pi] = random_21_sphere(spec.n, spec.seed);
            return {std::move(c), std::nullopt, std::move(pi)};
        }
    }
    throw std::invalid_argument("generate: unknown kind");
}

} // namespace slp2
