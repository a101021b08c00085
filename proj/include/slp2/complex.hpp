#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace slp2 {

/// Vertex labels are small non-negative integers. They are stable: operations
/// that delete vertices never renumber the survivors, so certificates stay
/// comparable across reductions.
using VertexId = int;

/// Thrown when an internal invariant that is guaranteed by a theorem fails to
/// hold. Seeing this exception means a bug, not a bad input.
struct Contradiction : std::logic_error {
    explicit Contradiction(const std::string& what) : std::logic_error(what) {}
};

/**
 * A face of a simplicial complex: 1 to 3 distinct vertices, stored sorted
 * ascending. Comparison is lexicographic on the vertex sequence.
 */
class Face {
public:
    Face() = default;

    Face(std::initializer_list<VertexId> vs) : Face(std::vector<VertexId>(vs)) {}

    explicit Face(std::vector<VertexId> vs) {
        if (vs.empty() || vs.size() > 3)
            throw std::invalid_argument("Face: must have 1 to 3 vertices");
        std::sort(vs.begin(), vs.end());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (vs[i] < 0)
                throw std::invalid_argument("Face: vertex ids must be non-negative");
            if (i > 0 && vs[i] == vs[i - 1])
                throw std::invalid_argument("Face: repeated vertex");
        }
        size_ = static_cast<int>(vs.size());
        for (int i = 0; i < size_; ++i) v_[i] = vs[i];
    }

    int size() const { return size_; }
    int dim() const { return size_ - 1; }
    std::span<const VertexId> vertices() const { return {v_.data(), static_cast<std::size_t>(size_)}; }
    VertexId operator[](int i) const { return v_[i]; }

    bool contains(VertexId v) const {
        for (int i = 0; i < size_; ++i)
            if (v_[i] == v) return true;
        return false;
    }

    bool subset_of(const Face& other) const {
        for (int i = 0; i < size_; ++i)
            if (!other.contains(v_[i])) return false;
        return true;
    }

    /// Face with vertex v removed; v must be present and the face must not be a vertex.
    Face without(VertexId v) const {
        std::vector<VertexId> out;
        for (int i = 0; i < size_; ++i)
            if (v_[i] != v) out.push_back(v_[i]);
        if (static_cast<int>(out.size()) != size_ - 1)
            throw std::invalid_argument("Face::without: vertex not present");
        return Face(std::move(out));
    }

    /// Face with vertex v added; v must not already be present.
    Face with(VertexId v) const {
        std::vector<VertexId> out(v_.begin(), v_.begin() + size_);
        out.push_back(v);
        return Face(std::move(out));
    }

    friend bool operator==(const Face& a, const Face& b) {
        return a.size_ == b.size_ &&
               std::equal(a.v_.begin(), a.v_.begin() + a.size_, b.v_.begin());
    }

    friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
        return std::lexicographical_compare_three_way(
            a.v_.begin(), a.v_.begin() + a.size_, b.v_.begin(), b.v_.begin() + b.size_);
    }

    std::string str() const {
        std::string s = "{";
        for (int i = 0; i < size_; ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i]);
        }
        return s + "}";
    }

private:
    std::array<VertexId, 3> v_{};
    int size_ = 0;
};

/**
 * A finite set of faces, sorted and deduplicated. Used for stars, induced
 * subcomplexes and generated complexes; not necessarily pure.
 */
class Subcomplex {
public:
    Subcomplex() = default;

    explicit Subcomplex(std::vector<Face> faces) : faces_(std::move(faces)) {
        std::sort(faces_.begin(), faces_.end());
        faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
    }

    const std::vector<Face>& faces() const { return faces_; }
    bool empty() const { return faces_.empty(); }

    bool contains(const Face& f) const {
        return std::binary_search(faces_.begin(), faces_.end(), f);
    }

    std::vector<Face> of_dim(int d) const {
        std::vector<Face> out;
        for (const Face& f : faces_)
            if (f.dim() == d) out.push_back(f);
        return out;
    }

    friend bool operator==(const Subcomplex&, const Subcomplex&) = default;

private:
    std::vector<Face> faces_;
};

/// All subfaces of the given generators (the complex they generate, minus the
/// empty face).
inline Subcomplex closure(std::span<const Face> generators) {
    std::vector<Face> out;
    for (const Face& g : generators) {
        auto vs = g.vertices();
        const int n = g.size();
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<VertexId> sub;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) sub.push_back(vs[i]);
            out.emplace_back(std::move(sub));
        }
    }
    return Subcomplex(std::move(out));
}

inline Subcomplex closure(std::initializer_list<Face> generators) {
    return closure(std::span<const Face>(generators.begin(), generators.size()));
}

inline Subcomplex intersection(const Subcomplex& a, const Subcomplex& b) {
    std::vector<Face> out;
    std::set_intersection(a.faces().begin(), a.faces().end(),
                          b.faces().begin(), b.faces().end(), std::back_inserter(out));
    return Subcomplex(std::move(out));
}

/**
 * A pure 2-dimensional simplicial complex stored by its facet set; vertices
 * and edges are derived at construction and cached. Instances are immutable,
 * so values can be shared freely across threads.
 *
 * The sphere test is combinatorial: every edge lies in exactly two facets,
 * every vertex link is a single cycle, the facet-adjacency graph is
 * connected, and the Euler characteristic is 2. For pure 2-complexes these
 * conditions together characterise triangulated 2-spheres.
 */
class Complex2 {
public:
    static Complex2 from_facets(const std::vector<std::vector<VertexId>>& triples) {
        std::vector<Face> fs;
        fs.reserve(triples.size());
        for (const auto& t : triples) {
            if (t.size() != 3)
                throw std::invalid_argument("Complex2: each facet needs exactly 3 vertices");
            fs.emplace_back(t);
        }
        return from_facets(std::move(fs));
    }

    static Complex2 from_facets(std::vector<Face> facets) {
        if (facets.empty())
            throw std::invalid_argument("Complex2: facet list is empty");
        for (const Face& f : facets)
            if (f.size() != 3)
                throw std::invalid_argument("Complex2: each facet needs exactly 3 vertices");
        std::sort(facets.begin(), facets.end());
        for (std::size_t i = 1; i < facets.size(); ++i)
            if (facets[i] == facets[i - 1])
                throw std::invalid_argument("Complex2: duplicate facet " + facets[i].str());
        Complex2 c;
        c.facets_ = std::move(facets);
        c.build();
        return c;
    }

    const std::vector<Face>& facets() const { return facets_; }
    const std::vector<Face>& edges() const { return edges_; }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Face>& missing_triangles() const { return missing_triangles_; }

    bool has_vertex(VertexId v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }
    bool has_edge(VertexId u, VertexId v) const {
        return std::binary_search(edges_.begin(), edges_.end(), Face{u, v});
    }
    bool has_facet(const Face& f) const {
        return std::binary_search(facets_.begin(), facets_.end(), f);
    }
    bool has_face(const Face& f) const {
        switch (f.size()) {
            case 1: return has_vertex(f[0]);
            case 2: return std::binary_search(edges_.begin(), edges_.end(), f);
            default: return has_facet(f);
        }
    }

    /// (|V|, number of edges, number of facets).
    std::array<int, 3> f_vector() const {
        return {static_cast<int>(vertices_.size()), static_cast<int>(edges_.size()),
                static_cast<int>(facets_.size())};
    }

    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    const std::vector<VertexId>& neighbors(VertexId v) const {
        auto it = adjacency_.find(v);
        if (it == adjacency_.end())
            throw std::invalid_argument("Complex2: vertex " + std::to_string(v) + " not present");
        return it->second;
    }

    bool is_sphere() const { return is_sphere_; }

    /// First failed sphere condition, empty when is_sphere().
    const std::string& sphere_defect() const { return sphere_defect_; }

    /// Star of v: all faces whose union with v is again a face; equivalently
    /// the closure of the facets containing v.
    Subcomplex star(VertexId v) const {
        auto it = vertex_facets_.find(v);
        if (it == vertex_facets_.end())
            throw std::invalid_argument("Complex2::star: vertex " + std::to_string(v) + " not present");
        std::vector<Face> gens;
        for (int fi : it->second) gens.push_back(facets_[fi]);
        return closure(gens);
    }

    struct Induced {
        Subcomplex faces;
        int edge_count = 0;
    };

    /// Induced subcomplex on the vertex set W (members of W that are not
    /// vertices of the complex are ignored), together with its edge count.
    Induced induced_subcomplex(const std::vector<VertexId>& W) const {
        std::vector<VertexId> w(W);
        std::sort(w.begin(), w.end());
        auto in = [&](VertexId v) { return std::binary_search(w.begin(), w.end(), v); };
        std::vector<Face> faces;
        for (VertexId v : vertices_)
            if (in(v)) faces.push_back(Face{v});
        int ecount = 0;
        for (const Face& e : edges_)
            if (in(e[0]) && in(e[1])) {
                faces.push_back(e);
                ++ecount;
            }
        for (const Face& f : facets_)
            if (in(f[0]) && in(f[1]) && in(f[2])) faces.push_back(f);
        return Induced{Subcomplex(std::move(faces)), ecount};
    }

    /// Facet indices incident to each vertex.
    const std::vector<int>& facets_at(VertexId v) const {
        auto it = vertex_facets_.find(v);
        if (it == vertex_facets_.end())
            throw std::invalid_argument("Complex2: vertex " + std::to_string(v) + " not present");
        return it->second;
    }

    /// Facet indices containing the given edge (usually two on a sphere).
    const std::vector<int>& facets_at_edge(const Face& e) const {
        auto it = edge_facets_.find(e);
        if (it == edge_facets_.end())
            throw std::invalid_argument("Complex2: edge " + e.str() + " not present");
        return it->second;
    }

    /// Order-independent digest of the facet set (FNV-1a over the sorted list).
    std::uint64_t hash() const { return hash_; }

    std::string hash_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s(16, '0');
        std::uint64_t h = hash_;
        for (int i = 15; i >= 0; --i) {
            s[i] = digits[h & 0xf];
            h >>= 4;
        }
        return s;
    }

    friend bool operator==(const Complex2& a, const Complex2& b) {
        return a.facets_ == b.facets_;
    }

private:
    Complex2() = default;

    void build() {
        std::map<Face, std::vector<int>> edge_map;
        std::map<VertexId, std::vector<int>> vert_map;
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            const Face& f = facets_[i];
            for (int a = 0; a < 3; ++a) {
                vert_map[f[a]].push_back(static_cast<int>(i));
                for (int b = a + 1; b < 3; ++b)
                    edge_map[Face{f[a], f[b]}].push_back(static_cast<int>(i));
            }
        }
        for (auto& [v, fs] : vert_map) vertices_.push_back(v);
        for (auto& [e, fs] : edge_map) edges_.push_back(e);
        vertex_facets_ = std::move(vert_map);
        edge_facets_ = std::move(edge_map);

        for (const Face& e : edges_) {
            adjacency_[e[0]].push_back(e[1]);
            adjacency_[e[1]].push_back(e[0]);
        }
        for (auto& [v, ns] : adjacency_) std::sort(ns.begin(), ns.end());

        compute_hash();
        compute_missing_triangles();
        is_sphere_ = compute_is_sphere();
    }

    void compute_hash() {
        std::uint64_t h = 0xcbf29ce484222325ull;
        auto feed = [&h](std::uint64_t x) {
            for (int i = 0; i < 8; ++i) {
                h ^= (x >> (8 * i)) & 0xff;
                h *= 0x100000001b3ull;
            }
        };
        for (const Face& f : facets_) {
            for (VertexId v : f.vertices()) feed(static_cast<std::uint64_t>(v));
            feed(0xffffffffffffffffull);
        }
        hash_ = h;
    }

    void compute_missing_triangles() {
        // Triangles of the 1-skeleton that are not facets.
        for (const Face& e : edges_) {
            const auto& na = adjacency_.at(e[0]);
            const auto& nb = adjacency_.at(e[1]);
            std::vector<VertexId> common;
            std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                                  std::back_inserter(common));
            for (VertexId c : common)
                if (c > e[1] && !has_facet(Face{e[0], e[1], c}))
                    missing_triangles_.push_back(Face{e[0], e[1], c});
        }
        std::sort(missing_triangles_.begin(), missing_triangles_.end());
    }

    bool compute_is_sphere() {
        // (a) every edge in exactly two facets
        for (const auto& [e, fs] : edge_facets_)
            if (fs.size() != 2) {
                sphere_defect_ = "edge " + e.str() + " lies in " + std::to_string(fs.size()) +
                                 " facets instead of 2";
                return false;
            }

        // (b) the link of every vertex is a single cycle; given (a) links are
        // 2-regular, so connectivity is the remaining condition
        for (VertexId v : vertices_) {
            const auto& inc = vertex_facets_.at(v);
            std::map<VertexId, std::vector<VertexId>> link;
            for (int fi : inc) {
                const Face opp = facets_[fi].without(v);
                link[opp[0]].push_back(opp[1]);
                link[opp[1]].push_back(opp[0]);
            }
            bool single_cycle = link.size() >= 3;
            for (const auto& [u, ns] : link)
                if (ns.size() != 2) single_cycle = false;
            if (single_cycle) {
                std::vector<VertexId> stack{link.begin()->first};
                std::map<VertexId, bool> seen{{stack[0], true}};
                while (!stack.empty()) {
                    VertexId u = stack.back();
                    stack.pop_back();
                    for (VertexId w : link.at(u))
                        if (!seen[w]) {
                            seen[w] = true;
                            stack.push_back(w);
                        }
                }
                for (const auto& [u, ns] : link)
                    if (!seen[u]) single_cycle = false;
            }
            if (!single_cycle) {
                sphere_defect_ =
                    "link of vertex " + std::to_string(v) + " is not a single cycle";
                return false;
            }
        }

        // (c) facet-adjacency graph connected
        std::vector<bool> visited(facets_.size(), false);
        std::vector<int> stack{0};
        visited[0] = true;
        while (!stack.empty()) {
            int fi = stack.back();
            stack.pop_back();
            const Face& f = facets_[fi];
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    for (int gi : edge_facets_.at(Face{f[a], f[b]}))
                        if (!visited[gi]) {
                            visited[gi] = true;
                            stack.push_back(gi);
                        }
        }
        for (bool b : visited)
            if (!b) {
                sphere_defect_ = "facet-adjacency graph is disconnected";
                return false;
            }

        // (d) Euler characteristic
        const auto [nv, ne, nf] = f_vector();
        if (nv - ne + nf != 2) {
            sphere_defect_ = "Euler characteristic is " + std::to_string(nv - ne + nf);
            return false;
        }
        return true;
    }

    std::vector<Face> facets_;
    std::vector<Face> edges_;
    std::vector<VertexId> vertices_;
    std::vector<Face> missing_triangles_;
    std::map<VertexId, std::vector<int>> vertex_facets_;
    std::map<Face, std::vector<int>> edge_facets_;
    std::map<VertexId, std::vector<VertexId>> adjacency_;
    std::uint64_t hash_ = 0;
    bool is_sphere_ = false;
    std::string sphere_defect_;
};

} // namespace slp2
