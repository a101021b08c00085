#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "slp2/coloring.hpp"
#include "slp2/complex.hpp"
#include "slp2/field.hpp"
#include "slp2/rng.hpp"

namespace slp2 {

/// A linear form sum alpha_v x_v, stored sparsely (nonzero coefficients only).
struct LinearForm {
    std::map<VertexId, std::uint64_t> coeff;

    std::uint64_t at(VertexId v) const {
        auto it = coeff.find(v);
        return it == coeff.end() ? 0 : it->second;
    }

    std::vector<VertexId> support() const {
        std::vector<VertexId> out;
        for (const auto& [v, a] : coeff)
            if (a != 0) out.push_back(v);
        return out;
    }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

enum class SequenceKind { colored_sop, seq_21, semi_proper_generic };

/// Three linear forms (theta1, theta2, theta3). For a colored s.o.p. each
/// theta_i is the sum of the variables in color class i; for a (2,1)-sequence
/// theta1, theta2 are supported on blue vertices and theta3 on red ones; the
/// semi-proper-generic kind lets theta3 range over all vertices.
struct ColoredSequence {
    std::array<LinearForm, 3> theta;
    SequenceKind kind = SequenceKind::colored_sop;

    std::span<const LinearForm> forms() const { return {theta.data(), 3}; }
};

/// Monomial as a sorted multiset of vertex ids (x_1^2 x_3 is [1,1,3]).
using Monomial = std::vector<VertexId>;

inline Monomial monomial_mul(Monomial m, VertexId v) {
    m.insert(std::upper_bound(m.begin(), m.end(), v), v);
    return m;
}

/**
 * The monomial basis of S_d for S = F[x_v : v in V], ordered lexicographically
 * on the sorted exponent support sequences. Column indices of every graded
 * matrix refer to such a basis.
 */
class MonomialBasis {
public:
    MonomialBasis(std::vector<VertexId> vertices, int degree)
        : vertices_(std::move(vertices)), degree_(degree) {
        if (degree < 1 || degree > 4)
            throw std::invalid_argument("MonomialBasis: degree must be in {1,2,3,4}");
        Monomial cur;
        emit(0, cur);
    }

    int size() const { return static_cast<int>(monomials_.size()); }
    int degree() const { return degree_; }
    const Monomial& at(int i) const { return monomials_[i]; }
    const std::vector<VertexId>& vertices() const { return vertices_; }

    int index_of(const Monomial& m) const {
        auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m);
        if (it == monomials_.end() || *it != m)
            throw std::invalid_argument("MonomialBasis: monomial outside basis");
        return static_cast<int>(it - monomials_.begin());
    }

    friend bool operator==(const MonomialBasis&, const MonomialBasis&) = default;

private:
    void emit(std::size_t from, Monomial& cur) {
        if (static_cast<int>(cur.size()) == degree_) {
            monomials_.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < vertices_.size(); ++i) {
            cur.push_back(vertices_[i]);
            emit(i, cur);
            cur.pop_back();
        }
    }

    std::vector<VertexId> vertices_;
    int degree_;
    std::vector<Monomial> monomials_;
};

/// Sparse matrix row: (column, coefficient) pairs sorted by column, all
/// coefficients nonzero.
using SparseRow = std::vector<std::pair<int, std::uint64_t>>;

/**
 * Incremental row echelon form over F_p. Rows are reduced on insertion by
 * eliminating leading entries against stored pivots (Gaussian elimination
 * with pivoting by first nonzero column); the rank is the pivot count.
 */
class RowEchelon {
public:
    RowEchelon(const PrimeField& F, int ncols) : F_(&F), pivot_of_col_(ncols, -1) {}

    /// r := r - c * pivot, where the pivot row has leading coefficient 1.
    static SparseRow axpy(const PrimeField& F, const SparseRow& r, std::uint64_t c,
                          const SparseRow& pivot) {
        SparseRow out;
        out.reserve(r.size() + pivot.size());
        std::size_t i = 0, j = 0;
        while (i < r.size() || j < pivot.size()) {
            if (j == pivot.size() || (i < r.size() && r[i].first < pivot[j].first)) {
                out.push_back(r[i++]);
            } else if (i == r.size() || pivot[j].first < r[i].first) {
                out.emplace_back(pivot[j].first, F.neg(F.mul(c, pivot[j].second)));
                ++j;
            } else {
                std::uint64_t v = F.sub(r[i].second, F.mul(c, pivot[j].second));
                if (v != 0) out.emplace_back(r[i].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    }

    /// Residual of r after eliminating leading entries; empty iff r lies in
    /// the current row space. Does not modify the echelon.
    SparseRow residual(SparseRow r) const {
        while (!r.empty()) {
            int pivot = pivot_of_col_[r.front().first];
            if (pivot < 0) break;
            r = axpy(*F_, r, r.front().second, rows_[pivot]);
        }
        return r;
    }

    /// Insert a row; returns true if the rank grew.
    bool insert(SparseRow r) {
        r = residual(std::move(r));
        if (r.empty()) return false;
        const std::uint64_t inv = F_->inv(r.front().second);
        for (auto& e : r) e.second = F_->mul(e.second, inv);
        pivot_of_col_[r.front().first] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return static_cast<int>(pivot_of_col_.size()); }

private:
    const PrimeField* F_;
    std::vector<int> pivot_of_col_;
    std::vector<SparseRow> rows_;
};

/**
 * Coefficient rows of a spanning set of a graded ideal component, in the
 * monomial basis of S_d.
 */
struct GradedMatrix {
    MonomialBasis basis;
    std::vector<SparseRow> rows;

    int rank(const PrimeField& F) const {
        RowEchelon ech(F, basis.size());
        for (const SparseRow& r : rows) ech.insert(r);
        return ech.rank();
    }
};

/// Rowspace(a) contains every row of b. Bases must coincide.
inline bool row_space_contains(const PrimeField& F, const GradedMatrix& a, const GradedMatrix& b) {
    if (!(a.basis == b.basis))
        throw std::invalid_argument("row_space_contains: bases differ");
    RowEchelon ech(F, a.basis.size());
    for (const SparseRow& r : a.rows) ech.insert(r);
    for (const SparseRow& r : b.rows)
        if (!ech.residual(r).empty()) return false;
    return true;
}

/// Degree-2 generators of the Stanley-Reisner ideal: x_u x_v over non-edges.
inline std::vector<Monomial> quadric_set(const Complex2& c) {
    std::vector<Monomial> out;
    const auto& vs = c.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!c.has_edge(vs[i], vs[j])) out.push_back({vs[i], vs[j]});
    return out;
}

/// Four-element minimal non-faces: vertex quadruples all of whose triples are
/// facets (only the boundary of a 3-simplex inside the complex produces one).
inline std::vector<std::array<VertexId, 4>> minimal_nonface_quartics(const Complex2& c) {
    std::set<std::array<VertexId, 4>> found;
    for (const Face& f : c.facets()) {
        const auto& n0 = c.neighbors(f[0]);
        for (VertexId v : n0) {
            if (f.contains(v)) continue;
            if (c.has_facet(Face{f[0], f[1], v}) && c.has_facet(Face{f[0], f[2], v}) &&
                c.has_facet(Face{f[1], f[2], v})) {
                std::array<VertexId, 4> q{f[0], f[1], f[2], v};
                std::sort(q.begin(), q.end());
                found.insert(q);
            }
        }
    }
    return {found.begin(), found.end()};
}

namespace detail {

inline void append_monomial_multiples(const MonomialBasis& basis, const Monomial& generator,
                                      int cofactor_degree, std::vector<SparseRow>& rows) {
    if (cofactor_degree == 0) {
        rows.push_back({{basis.index_of(generator), 1}});
        return;
    }
    MonomialBasis cof(basis.vertices(), cofactor_degree);
    for (int i = 0; i < cof.size(); ++i) {
        Monomial m = cof.at(i);
        for (VertexId v : generator) m = monomial_mul(std::move(m), v);
        rows.push_back({{basis.index_of(m), 1}});
    }
}

} // namespace detail

/**
 * Rows spanning (I_Delta + (forms))_d in the monomial basis of S_d: all
 * degree-d monomial multiples of the ideal generators (non-edge quadrics,
 * missing-triangle cubics for d >= 3, minimal non-face quartics for d = 4)
 * plus all degree-(d-1) monomial multiples of each linear form.
 */
inline GradedMatrix ideal_matrix(const Complex2& c, const PrimeField& F,
                                 std::span<const LinearForm> forms, int d) {
    if (d < 2 || d > 4)
        throw std::invalid_argument("ideal_matrix: degree must be in {2,3,4}");
    MonomialBasis basis(c.vertices(), d);
    std::vector<SparseRow> rows;

    for (const Monomial& g : quadric_set(c))
        detail::append_monomial_multiples(basis, g, d - 2, rows);
    if (d >= 3)
        for (const Face& t : c.missing_triangles())
            detail::append_monomial_multiples(
                basis, Monomial(t.vertices().begin(), t.vertices().end()), d - 3, rows);
    if (d == 4)
        for (const auto& q : minimal_nonface_quartics(c))
            detail::append_monomial_multiples(basis, Monomial(q.begin(), q.end()), 0, rows);

    MonomialBasis cof(c.vertices(), d - 1);
    for (const LinearForm& f : forms) {
        for (int i = 0; i < cof.size(); ++i) {
            SparseRow row;
            for (const auto& [v, a] : f.coeff) {
                const std::uint64_t am = a % F.modulus();
                if (am == 0) continue;
                row.emplace_back(basis.index_of(monomial_mul(cof.at(i), v)), am);
            }
            std::sort(row.begin(), row.end());
            if (!row.empty()) rows.push_back(std::move(row));
        }
    }
    return GradedMatrix{std::move(basis), std::move(rows)};
}

/**
 * dim_F (S / (I_Delta + (Theta) + (W)))_d for d in {2,3,4}: the dimension of
 * S_d minus the rank of the spanning rows of the ideal component.
 */
inline int ideal_component_dim(const Complex2& c, const PrimeField& F,
                               const std::optional<ColoredSequence>& theta,
                               const std::vector<LinearForm>& extra, int d) {
    if (d < 2 || d > 4)
        throw std::invalid_argument("ideal_component_dim: degree must be in {2,3,4}");
    std::vector<LinearForm> forms;
    if (theta)
        forms.insert(forms.end(), theta->theta.begin(), theta->theta.end());
    forms.insert(forms.end(), extra.begin(), extra.end());
    GradedMatrix m = ideal_matrix(c, F, forms, d);
    return m.basis.size() - m.rank(F);
}

/// Coefficient row of w^3 in the degree-3 monomial basis.
inline SparseRow cube_row(const LinearForm& w, const MonomialBasis& basis, const PrimeField& F) {
    std::vector<std::pair<VertexId, std::uint64_t>> supp;
    for (const auto& [v, a] : w.coeff)
        if (a % F.modulus() != 0) supp.emplace_back(v, a % F.modulus());
    SparseRow row;
    for (std::size_t i = 0; i < supp.size(); ++i)
        for (std::size_t j = i; j < supp.size(); ++j)
            for (std::size_t k = j; k < supp.size(); ++k) {
                std::uint64_t multi = (i == k) ? 1 : (i == j || j == k) ? 3 : 6;
                std::uint64_t coef = F.mul(F.reduce(static_cast<std::int64_t>(multi)),
                                           F.mul(supp[i].second, F.mul(supp[j].second, supp[k].second)));
                if (coef == 0) continue;
                row.emplace_back(basis.index_of({supp[i].first, supp[j].first, supp[k].first}), coef);
            }
    std::sort(row.begin(), row.end());
    return row;
}

/**
 * Prebuilt echelon of the degree-3 component of I_Delta + (Theta), for
 * testing many candidate cubes against the same complex cheaply.
 */
class CubeTester {
public:
    CubeTester(const Complex2& c, const PrimeField& F, const ColoredSequence& theta)
        : F_(F), basis_(c.vertices(), 3), ech_(F, basis_.size()) {
        GradedMatrix m = ideal_matrix(c, F, theta.forms(), 3);
        basis_ = m.basis;
        for (SparseRow& r : m.rows) ech_.insert(std::move(r));
    }

    /// True iff the row of w^3 strictly increases the rank.
    bool cube_nonzero(const LinearForm& w) const {
        return !ech_.residual(cube_row(w, basis_, F_)).empty();
    }

private:
    PrimeField F_;
    MonomialBasis basis_;
    RowEchelon ech_;
};

inline bool cube_nonzero(const Complex2& c, const PrimeField& F, const ColoredSequence& theta,
                         const LinearForm& w) {
    return CubeTester(c, F, theta).cube_nonzero(w);
}

/// The colored system of parameters: theta_i = sum of x_v over color class i.
inline ColoredSequence colored_sop(const Complex2& c, const Coloring& kappa) {
    if (!is_proper_coloring(c, kappa))
        throw std::invalid_argument("colored_sop: coloring is not a proper 3-coloring");
    ColoredSequence seq;
    seq.kind = SequenceKind::colored_sop;
    for (VertexId v : c.vertices()) seq.theta[kappa.at(v) - 1].coeff[v] = 1;
    return seq;
}

inline LinearForm random_linear_form(std::span<const VertexId> support, const PrimeField& F,
                                     Rng& rng) {
    LinearForm f;
    for (VertexId v : support) {
        std::uint64_t a = rng.below(F.modulus());
        if (a != 0) f.coeff[v] = a;
    }
    return f;
}

/**
 * Random sequence with coefficients i.i.d. uniform in F_p on the allowed
 * support: theta1, theta2 on blue vertices; theta3 on red vertices for the
 * (2,1) kind, on all vertices for the semi-proper-generic kind.
 */
inline ColoredSequence random_colored_sequence(const Complex2& c, const BiColoring& pi,
                                               const PrimeField& F, Rng& rng, SequenceKind kind) {
    if (kind == SequenceKind::colored_sop)
        throw std::invalid_argument("random_colored_sequence: use colored_sop for that kind");
    require_total(c, pi);
    std::vector<VertexId> blue = blue_vertices(pi), red = red_vertices(pi);
    if (blue.empty())
        throw std::invalid_argument("random_colored_sequence: no blue vertices");
    ColoredSequence seq;
    seq.kind = kind;
    seq.theta[0] = random_linear_form(blue, F, rng);
    seq.theta[1] = random_linear_form(blue, F, rng);
    if (kind == SequenceKind::seq_21)
        seq.theta[2] = random_linear_form(red, F, rng);
    else
        seq.theta[2] = random_linear_form(c.vertices(), F, rng);
    return seq;
}

/**
 * Kind-Kleinschmidt criterion: the three forms are a linear system of
 * parameters iff for every face the 3 x |face| coefficient submatrix has
 * rank equal to the face cardinality.
 */
inline bool kk_is_lsop(const Complex2& c, const PrimeField& F, const ColoredSequence& theta) {
    auto full_rank_on = [&](std::span<const VertexId> sigma) {
        const int k = static_cast<int>(sigma.size());
        std::array<std::array<std::uint64_t, 3>, 3> m{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = theta.theta[i].at(sigma[j]) % F.modulus();
        int rank = 0;
        for (int col = 0; col < k; ++col) {
            int pivot = -1;
            for (int r = rank; r < 3; ++r)
                if (m[r][col] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return false; // column dependent: rank < k
            std::swap(m[pivot], m[rank]);
            const std::uint64_t inv = F.inv(m[rank][col]);
            for (int r = rank + 1; r < 3; ++r) {
                if (m[r][col] == 0) continue;
                const std::uint64_t factor = F.mul(m[r][col], inv);
                for (int cc = col; cc < k; ++cc)
                    m[r][cc] = F.sub(m[r][cc], F.mul(factor, m[rank][cc]));
            }
            ++rank;
        }
        return true;
    };

    for (VertexId v : c.vertices()) {
        const VertexId sigma[1] = {v};
        if (!full_rank_on(sigma)) return false;
    }
    for (const Face& e : c.edges())
        if (!full_rank_on(e.vertices())) return false;
    for (const Face& f : c.facets())
        if (!full_rank_on(f.vertices())) return false;
    return true;
}

/**
 * The deformed quadric rows Phi_t applied to every non-edge quadric, as a
 * degree-2 graded matrix: for m = x_q * x_v with x_p * x_v a face monomial not
 * of the form x_p^2, the row is x_p * x_v + t * m; every other quadric is
 * left unchanged.
 */
inline GradedMatrix deformed_quadrics(const Complex2& c, const PrimeField& F, VertexId p_vtx,
                                      VertexId q_vtx, std::uint64_t t) {
    if (p_vtx == q_vtx)
        throw std::invalid_argument("deformed_quadrics: p and q must differ");
    if (!c.has_vertex(p_vtx) || !c.has_vertex(q_vtx))
        throw std::invalid_argument("deformed_quadrics: p and q must be vertices");
    t %= F.modulus();
    MonomialBasis basis(c.vertices(), 2);
    std::vector<SparseRow> rows;
    for (const Monomial& m : quadric_set(c)) {
        const bool has_q = (m[0] == q_vtx || m[1] == q_vtx);
        if (has_q) {
            const VertexId other = (m[0] == q_vtx) ? m[1] : m[0];
            // swapped monomial lies outside the extended generator set iff it
            // is a face monomial x_p x_other with other != p
            if (other != p_vtx && c.has_edge(p_vtx, other)) {
                SparseRow row{{basis.index_of(Monomial{std::min(p_vtx, other), std::max(p_vtx, other)}), 1}};
                if (t != 0) {
                    row.emplace_back(basis.index_of(m), t);
                    std::sort(row.begin(), row.end());
                }
                rows.push_back(std::move(row));
                continue;
            }
        }
        rows.push_back({{basis.index_of(m), 1}});
    }
    return GradedMatrix{std::move(basis), std::move(rows)};
}

} // namespace slp2
