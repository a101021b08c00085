#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slp2/coloring.hpp"
#include "slp2/complex.hpp"

namespace slp2 {

/// One move of the reduction engine.
struct ReductionStep {
    enum class Kind { split, balanced_contract };
    Kind kind;
    Face sigma;                                // split: the missing triangle
    VertexId p = -1, q = -1;                   // contraction pair
    std::uint64_t input_hash = 0;
    std::vector<std::uint64_t> output_hashes;  // two for split, one for contraction
};

/// A full reduction record; every terminal component is an octahedron.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::vector<Complex2> terminal;
};

/**
 * Connected sum g1 #_sigma g2: identify the facet s2 of g2 with the facet s1
 * of g1 via `matching` (a bijection from the vertices of s2 onto those of
 * s1), then drop the shared facet. The glued complexes must intersect in
 * exactly that facet and its faces, which with relabelled inputs amounts to
 * the renamed vertex set of g2 meeting g1 only in s1.
 */
inline Complex2 connected_sum(const Complex2& g1, const Complex2& g2, const Face& s1,
                              const Face& s2, const std::map<VertexId, VertexId>& matching) {
    if (s1.size() != 3 || !g1.has_facet(s1))
        throw std::invalid_argument("connected_sum: s1 is not a facet of the first summand");
    if (s2.size() != 3 || !g2.has_facet(s2))
        throw std::invalid_argument("connected_sum: s2 is not a facet of the second summand");
    if (matching.size() != 3)
        throw std::invalid_argument("connected_sum: matching must pair the three facet vertices");
    std::set<VertexId> image;
    for (VertexId v : s2.vertices()) {
        auto it = matching.find(v);
        if (it == matching.end())
            throw std::invalid_argument("connected_sum: matching misses a vertex of s2");
        if (!s1.contains(it->second))
            throw std::invalid_argument("connected_sum: matching image outside s1");
        image.insert(it->second);
    }
    if (image.size() != 3)
        throw std::invalid_argument("connected_sum: matching is not a bijection");

    auto rename = [&](VertexId v) {
        auto it = matching.find(v);
        return it == matching.end() ? v : it->second;
    };
    for (VertexId v : g2.vertices())
        if (!s2.contains(v) && g1.has_vertex(v))
            throw std::invalid_argument(
                "connected_sum: summands share faces beyond the glued facet (vertex " +
                std::to_string(v) + ")");

    std::vector<Face> facets;
    for (const Face& f : g1.facets())
        if (!(f == s1)) facets.push_back(f);
    for (const Face& f : g2.facets()) {
        if (f == s2) continue;
        facets.push_back(Face{rename(f[0]), rename(f[1]), rename(f[2])});
    }
    return Complex2::from_facets(std::move(facets));
}

/**
 * Split a 2-sphere at a missing triangle sigma into the unique pair of
 * spheres whose connected sum along sigma it is. The three vertices of sigma
 * keep their ids in both pieces; all other ids are preserved. The piece
 * containing the lexicographically smallest facet comes first.
 */
inline std::pair<Complex2, Complex2> split_at_missing_triangle(const Complex2& c,
                                                               const Face& sigma) {
    const auto& mts = c.missing_triangles();
    if (!std::binary_search(mts.begin(), mts.end(), sigma))
        throw std::invalid_argument("split_at_missing_triangle: " + sigma.str() +
                                    " is not a missing triangle");

    // facet components when adjacency across the three edges of sigma is cut
    std::vector<Face> cut{Face{sigma[0], sigma[1]}, Face{sigma[0], sigma[2]},
                          Face{sigma[1], sigma[2]}};
    const auto& facets = c.facets();
    std::vector<int> comp(facets.size(), -1);
    int ncomp = 0;
    for (std::size_t start = 0; start < facets.size(); ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> stack{static_cast<int>(start)};
        comp[start] = ncomp;
        while (!stack.empty()) {
            int fi = stack.back();
            stack.pop_back();
            const Face& f = facets[fi];
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    Face e{f[a], f[b]};
                    if (std::find(cut.begin(), cut.end(), e) != cut.end()) continue;
                    for (int gi : c.facets_at_edge(e))
                        if (comp[gi] < 0) {
                            comp[gi] = ncomp;
                            stack.push_back(gi);
                        }
                }
        }
        ++ncomp;
    }
    if (ncomp != 2)
        throw std::invalid_argument("split_at_missing_triangle: cutting " + sigma.str() +
                                    " does not separate the complex into two parts");

    std::vector<Face> side0{sigma}, side1{sigma};
    for (std::size_t i = 0; i < facets.size(); ++i)
        (comp[i] == comp[0] ? side0 : side1).push_back(facets[i]);
    return {Complex2::from_facets(std::move(side0)), Complex2::from_facets(std::move(side1))};
}

/**
 * Edge contraction: every face keeps p replaced by q; p disappears, q keeps
 * its id. The result must again be representable as a pure 2-complex, i.e.
 * the degenerate images of facets through the edge {p,q} must be covered by
 * surviving facets (always the case for admissible contractions of spheres).
 */
inline Complex2 contract(const Complex2& c, VertexId p, VertexId q) {
    if (!c.has_edge(p, q))
        throw std::invalid_argument("contract: {" + std::to_string(p) + "," + std::to_string(q) +
                                    "} is not an edge");
    std::vector<Face> facets;
    std::vector<Face> degenerate;
    for (const Face& f : c.facets()) {
        if (!f.contains(p)) {
            facets.push_back(f);
        } else if (f.contains(q)) {
            degenerate.push_back(f.without(p));
        } else {
            facets.push_back(f.without(p).with(q));
        }
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    Complex2 out = Complex2::from_facets(std::move(facets));
    for (const Face& e : degenerate)
        if (!out.has_face(e))
            throw std::invalid_argument("contract: result is not a pure 2-complex");
    return out;
}

/**
 * An edge contraction of a 2-sphere (other than the boundary of a 3-simplex)
 * is admissible when no missing triangle contains the edge; equivalently the
 * stars of p and q intersect in exactly two triangles through {p,q}. Both
 * formulations are computed and must agree.
 */
inline bool is_admissible(const Complex2& c, VertexId p, VertexId q) {
    if (!c.has_edge(p, q))
        throw std::invalid_argument("is_admissible: {" + std::to_string(p) + "," +
                                    std::to_string(q) + "} is not an edge");
    if (c.facets().size() == 4 && c.vertices().size() == 4)
        throw std::invalid_argument("is_admissible: the boundary of a 3-simplex is excluded");

    bool no_missing = true;
    for (const Face& t : c.missing_triangles())
        if (t.contains(p) && t.contains(q)) {
            no_missing = false;
            break;
        }

    const Subcomplex inter = intersection(c.star(p), c.star(q));
    bool two_triangles = false;
    const std::vector<Face> tris = inter.of_dim(2);
    if (tris.size() == 2 && tris[0].contains(p) && tris[0].contains(q) && tris[1].contains(p) &&
        tris[1].contains(q)) {
        two_triangles = (inter == closure({tris[0], tris[1]}));
    }

    if (no_missing != two_triangles)
        throw Contradiction("is_admissible: the two formulations disagree");
    return no_missing;
}

/// A contractible pair (p,q) with the two shared star edges {s,mid},{mid,t}.
struct ContractiblePair {
    VertexId p, q, s, t, mid;
};

namespace detail {

/// Check condition (ii) of a contractible pair: st(p) and st(q) meet in two
/// edges sharing a middle vertex. Returns (s, t, mid) on success.
inline std::optional<std::array<VertexId, 3>> star_intersection_two_edges(const Complex2& c,
                                                                          VertexId p, VertexId q) {
    const Subcomplex inter = intersection(c.star(p), c.star(q));
    if (!inter.of_dim(2).empty()) return std::nullopt;
    const std::vector<Face> es = inter.of_dim(1);
    const std::vector<Face> vs = inter.of_dim(0);
    if (es.size() != 2 || vs.size() != 3) return std::nullopt;
    // the two edges must share exactly one vertex
    VertexId mid = -1;
    for (VertexId v : es[0].vertices())
        if (es[1].contains(v)) {
            if (mid != -1) return std::nullopt;
            mid = v;
        }
    if (mid == -1) return std::nullopt;
    const VertexId a = es[0][0] == mid ? es[0][1] : es[0][0];
    const VertexId b = es[1][0] == mid ? es[1][1] : es[1][0];
    const VertexId s = std::min(a, b), t = std::max(a, b);
    return std::array<VertexId, 3>{s, t, mid};
}

} // namespace detail

/// Test a single pair for contractibility (same color and the two-edge star
/// intersection); on success returns the full certificate.
inline std::optional<ContractiblePair> contractible_pair(const Complex2& c, const Coloring& kappa,
                                                         VertexId p, VertexId q) {
    if (!is_proper_coloring(c, kappa))
        throw std::invalid_argument("contractible_pair: improper coloring");
    if (p == q || !c.has_vertex(p) || !c.has_vertex(q)) return std::nullopt;
    if (kappa.at(p) != kappa.at(q)) return std::nullopt;
    auto st = detail::star_intersection_two_edges(c, p, q);
    if (!st) return std::nullopt;
    return ContractiblePair{p, q, (*st)[0], (*st)[1], (*st)[2]};
}

/// Lexicographically smallest contractible pair of a balanced sphere, if any.
inline std::optional<ContractiblePair> find_contractible_pair(const Complex2& c,
                                                              const Coloring& kappa) {
    if (!is_proper_coloring(c, kappa))
        throw std::invalid_argument("find_contractible_pair: improper coloring");
    for (VertexId p : c.vertices())
        for (VertexId q : c.vertices()) {
            if (p == q || kappa.at(p) != kappa.at(q)) continue;
            auto st = detail::star_intersection_two_edges(c, p, q);
            if (st) return ContractiblePair{p, q, (*st)[0], (*st)[1], (*st)[2]};
        }
    return std::nullopt;
}

/**
 * Balanced contraction of a contractible pair: remove the interior of
 * st(p) u st(q) (a 2-ball) and cone q over its boundary. The vertex p and
 * the middle vertex of the star intersection disappear; the result is again
 * a balanced 2-sphere with two fewer vertices.
 */
inline Complex2 balanced_contract(const Complex2& c, VertexId p, VertexId q) {
    auto kappa = proper_3_coloring(c);
    if (!kappa)
        throw std::invalid_argument("balanced_contract: complex is not a balanced sphere");
    if (!contractible_pair(c, *kappa, p, q))
        throw std::invalid_argument("balanced_contract: (" + std::to_string(p) + "," +
                                    std::to_string(q) + ") is not a contractible pair");

    // facets of the ball st(p) u st(q)
    std::set<int> ball;
    for (int fi : c.facets_at(p)) ball.insert(fi);
    for (int fi : c.facets_at(q)) ball.insert(fi);

    // boundary edges: edges of the ball lying in exactly one ball facet
    std::map<Face, int> edge_count;
    for (int fi : ball) {
        const Face& f = c.facets()[fi];
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) edge_count[Face{f[a], f[b]}]++;
    }

    std::vector<Face> facets;
    for (std::size_t i = 0; i < c.facets().size(); ++i)
        if (!ball.count(static_cast<int>(i))) facets.push_back(c.facets()[i]);
    for (const auto& [e, cnt] : edge_count)
        if (cnt == 1) facets.push_back(e.with(q));
    return Complex2::from_facets(std::move(facets));
}

/// Octahedron recognition: a 2-sphere on six vertices, all of degree four.
inline bool is_octahedron(const Complex2& c) {
    if (!c.is_sphere() || c.vertices().size() != 6) return false;
    for (VertexId v : c.vertices())
        if (c.degree(v) != 4) return false;
    return true;
}

/**
 * Reduction engine: repeatedly split at the lexicographically smallest
 * missing triangle, otherwise contract the smallest contractible pair, until
 * every component is an octahedron. Each intermediate is checked to be a
 * balanced 2-sphere. A non-octahedron component admitting neither move would
 * contradict the reduction theorem for balanced spheres and raises
 * Contradiction.
 */
inline ReductionTrace batagelj_reduce(const Complex2& c, const Coloring& kappa) {
    if (!c.is_sphere())
        throw std::invalid_argument("batagelj_reduce: input is not a 2-sphere");
    if (!is_proper_coloring(c, kappa))
        throw std::invalid_argument("batagelj_reduce: improper coloring");

    ReductionTrace trace;
    std::vector<Complex2> work{c};
    while (!work.empty()) {
        Complex2 cur = std::move(work.back());
        work.pop_back();

        if (!cur.is_sphere())
            throw Contradiction("batagelj_reduce: intermediate is not a sphere");
        auto kap = proper_3_coloring(cur);
        if (!kap)
            throw Contradiction("batagelj_reduce: intermediate is not balanced");

        if (is_octahedron(cur)) {
            trace.terminal.push_back(std::move(cur));
            continue;
        }

        if (!cur.missing_triangles().empty()) {
            const Face sigma = cur.missing_triangles().front();
            auto [g, s] = split_at_missing_triangle(cur, sigma);
            ReductionStep step;
            step.kind = ReductionStep::Kind::split;
            step.sigma = sigma;
            step.input_hash = cur.hash();
            step.output_hashes = {g.hash(), s.hash()};
            trace.steps.push_back(std::move(step));
            work.push_back(std::move(s));
            work.push_back(std::move(g));
            continue;
        }

        auto pair = find_contractible_pair(cur, *kap);
        if (!pair)
            throw Contradiction(
                "batagelj_reduce: non-octahedron component with no missing triangle and no "
                "contractible pair");
        Complex2 next = balanced_contract(cur, pair->p, pair->q);
        ReductionStep step;
        step.kind = ReductionStep::Kind::balanced_contract;
        step.p = pair->p;
        step.q = pair->q;
        step.input_hash = cur.hash();
        step.output_hashes = {next.hash()};
        trace.steps.push_back(std::move(step));
        work.push_back(std::move(next));
    }
    return trace;
}

} // namespace slp2
