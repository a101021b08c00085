#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "slp2/algebra.hpp"
#include "slp2/coloring.hpp"
#include "slp2/complex.hpp"
#include "slp2/laman.hpp"

namespace slp2 {

/**
 * Outcome of a randomized SLP search. `holds` is certified by the stored
 * witness (Theta, w): the degree-2 component of the quotient by (Theta, w)
 * vanishes and w^3 is nonzero in the Artinian reduction. A missing witness is
 * never reported as a disproof; the negative side is one-sided.
 */
struct SLPReport {
    enum class Verdict { holds, no_witness_found };
    Verdict verdict = Verdict::no_witness_found;
    std::optional<std::pair<ColoredSequence, LinearForm>> witness;
    int trials = 0;
    std::uint64_t p = 0;
    /// Per-trial degree-2 dimensions; -1 marks a trial whose sampled sequence
    /// failed the l.s.o.p. filter.
    std::vector<int> dims;
};

/// Lower-bound certificate against the SLP: a blue vertex set W whose induced
/// edge count forces dim (F[Delta]/(Theta,w))_2 >= e(Delta_W) - 2|W| + 3 >= 1
/// for every (2,1)-colored sequence Theta and every w.
struct NonSLPCertificate {
    std::vector<VertexId> W;
    int edges = 0;
    int bound = 0;
};

/// e(Delta_W) - 2|W| + 3 for a blue vertex set W, |W| >= 2.
inline int laman_lower_bound(const Complex2& c, const BiColoring& pi,
                             const std::vector<VertexId>& W) {
    require_total(c, pi);
    if (W.size() < 2)
        throw std::invalid_argument("laman_lower_bound: need at least two vertices");
    for (VertexId v : W) {
        auto it = pi.find(v);
        if (it == pi.end() || it->second != BiColor::blue)
            throw std::invalid_argument("laman_lower_bound: W must consist of blue vertices");
    }
    const int e = c.induced_subcomplex(W).edge_count;
    return e - 2 * static_cast<int>(W.size()) + 3;
}

/// Violating blue set from the pebble game, packaged as a certificate;
/// nullopt iff the blue graph is (2,3)-sparse.
inline std::optional<NonSLPCertificate> find_non_slp_certificate(const Complex2& c,
                                                                 const BiColoring& pi) {
    const LamanVerdict verdict = is_23_sparse(blue_graph(c, pi));
    if (verdict.sparse) return std::nullopt;
    NonSLPCertificate cert;
    cert.W = verdict.violation;
    cert.edges = verdict.violation_edges;
    cert.bound = cert.edges - 2 * static_cast<int>(cert.W.size()) + 3;
    if (cert.bound < 1)
        throw Contradiction("find_non_slp_certificate: certificate bound below 1");
    return cert;
}

/**
 * Randomized test for the colored SLP: Theta is the colored s.o.p.; each
 * trial samples a generic linear form w and accepts when the degree-2
 * quotient vanishes and w^3 stays nonzero. In characteristic 2 or 3 every
 * cube vanishes, so those moduli are rejected.
 */
inline SLPReport check_colored_slp(const Complex2& c, const Coloring& kappa, int trials,
                                   const PrimeField& F, Rng& rng) {
    if (F.modulus() == 2 || F.modulus() == 3)
        throw std::invalid_argument("check_colored_slp: the colored SLP fails identically in "
                                    "characteristic 2 and 3");
    if (!c.is_sphere())
        throw std::invalid_argument("check_colored_slp: input is not a 2-sphere");
    if (trials < 1) throw std::invalid_argument("check_colored_slp: trials must be >= 1");
    const ColoredSequence theta = colored_sop(c, kappa);

    SLPReport report;
    report.trials = trials;
    report.p = F.modulus();
    const CubeTester cubes(c, F, theta);
    for (int trial = 0; trial < trials; ++trial) {
        const LinearForm w = random_linear_form(c.vertices(), F, rng);
        const int dim2 = ideal_component_dim(c, F, theta, {w}, 2);
        report.dims.push_back(dim2);
        if (dim2 == 0 && cubes.cube_nonzero(w)) {
            report.verdict = SLPReport::Verdict::holds;
            report.witness = {theta, w};
            break;
        }
    }
    return report;
}

/**
 * Randomized test for the SLP with respect to (2,1)-colored sequences, for a
 * semi-proper bi-coloring pi. Each trial samples a sequence with theta1,
 * theta2 blue and theta3 red plus a generic w. When pi is a genuine
 * (2,1)-coloring the sampled sequence must pass the Kind-Kleinschmidt
 * l.s.o.p. test before it counts; for merely semi-proper colorings (where a
 * facet may be all blue, so no (2,1)-sequence is an l.s.o.p.) that filter is
 * skipped and the verdict is about the degree-2 vanishing itself.
 */
inline SLPReport check_21_slp(const Complex2& c, const BiColoring& pi, int trials,
                              const PrimeField& F, Rng& rng) {
    if (F.modulus() == 2 || F.modulus() == 3)
        throw std::invalid_argument("check_21_slp: characteristic 2 and 3 are excluded");
    if (!c.is_sphere())
        throw std::invalid_argument("check_21_slp: input is not a 2-sphere");
    if (!is_semi_proper(c, pi))
        throw std::invalid_argument("check_21_slp: bi-coloring is not semi-proper");
    if (trials < 1) throw std::invalid_argument("check_21_slp: trials must be >= 1");
    const bool require_lsop = is_21_coloring(c, pi);

    SLPReport report;
    report.trials = trials;
    report.p = F.modulus();
    for (int trial = 0; trial < trials; ++trial) {
        const ColoredSequence theta =
            random_colored_sequence(c, pi, F, rng, SequenceKind::seq_21);
        const LinearForm w = random_linear_form(c.vertices(), F, rng);
        if (require_lsop && !kk_is_lsop(c, F, theta)) {
            report.dims.push_back(-1);
            continue;
        }
        const int dim2 = ideal_component_dim(c, F, theta, {w}, 2);
        report.dims.push_back(dim2);
        if (dim2 == 0 && cube_nonzero(c, F, theta, w)) {
            report.verdict = SLPReport::Verdict::holds;
            report.witness = {theta, w};
            break;
        }
    }
    return report;
}

enum class Consistency { consistent, inconsistent, inconclusive };

/// Both sides of the SLP/Laman equivalence, with the comparison outcome.
struct Theorem2Report {
    Consistency consistency = Consistency::consistent;
    SLPReport slp;
    LamanVerdict laman;
    std::optional<NonSLPCertificate> certificate;
};

/**
 * Run the algebraic SLP search and the combinatorial sparsity test side by
 * side. `consistent` when both agree (positive or negative), `inconsistent`
 * when a witness was found although the blue graph is not sparse (impossible
 * unless there is a bug), `inconclusive` when the sparsity test predicts a
 * witness but sampling missed it.
 */
inline Theorem2Report check_theorem2(const Complex2& c, const BiColoring& pi, int trials,
                                     const PrimeField& F, Rng& rng) {
    Theorem2Report report;
    report.slp = check_21_slp(c, pi, trials, F, rng);
    report.laman = is_23_sparse(blue_graph(c, pi));
    if (!report.laman.sparse) {
        report.certificate = find_non_slp_certificate(c, pi);
    }
    const bool holds = report.slp.verdict == SLPReport::Verdict::holds;
    if (holds && report.laman.sparse)
        report.consistency = Consistency::consistent;
    else if (!holds && !report.laman.sparse)
        report.consistency = Consistency::consistent;
    else if (holds && !report.laman.sparse)
        report.consistency = Consistency::inconsistent;
    else
        report.consistency = Consistency::inconclusive;
    return report;
}

} // namespace slp2
