#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "slp2/generate.hpp"
#include "slp2/io.hpp"
#include "slp2/lefschetz.hpp"
#include "slp2/ops.hpp"

namespace slp2::cli {

using Json = nlohmann::ordered_json;

/// Exit codes: 0 verdict computed, 1 input error, 2 internal contradiction.
struct CmdResult {
    int exit_code = 0;
    Json json;
    std::string human;   // goes to standard error
};

namespace detail {

inline Json face_json(const Face& f) {
    Json a = Json::array();
    for (VertexId v : f.vertices()) a.push_back(v);
    return a;
}

inline Json vertex_list_json(const std::vector<VertexId>& vs) {
    Json a = Json::array();
    for (VertexId v : vs) a.push_back(v);
    return a;
}

inline Json coloring_json(const Coloring& kappa) {
    Json o = Json::object();
    for (const auto& [v, col] : kappa) o[std::to_string(v)] = col;
    return o;
}

inline Json coloring_json(const BiColoring& pi) {
    Json o = Json::object();
    for (const auto& [v, col] : pi) o[std::to_string(v)] = (col == BiColor::blue ? "b" : "r");
    return o;
}

inline Json linear_form_json(const LinearForm& f) {
    Json o = Json::object();
    for (const auto& [v, a] : f.coeff)
        if (a != 0) o[std::to_string(v)] = a;
    return o;
}

inline Json f_vector_json(const Complex2& c) {
    const auto [nv, ne, nf] = c.f_vector();
    return Json::array({nv, ne, nf});
}

inline Json certificate_json(const NonSLPCertificate& cert) {
    Json o;
    o["W"] = vertex_list_json(cert.W);
    o["edges"] = cert.edges;
    o["bound"] = cert.bound;
    return o;
}

inline Json laman_json(const LamanVerdict& verdict) {
    Json o;
    o["sparse"] = verdict.sparse;
    if (!verdict.sparse) {
        o["violation"] = vertex_list_json(verdict.violation);
        o["edges"] = verdict.violation_edges;
        o["bound"] = verdict.violation_edges - 2 * static_cast<int>(verdict.violation.size()) + 3;
    }
    return o;
}

inline Json slp_report_json(const Complex2& c, const std::string& mode, const Json& coloring,
                            const SLPReport& report, std::uint64_t seed,
                            const std::optional<NonSLPCertificate>& cert) {
    Json o;
    o["complex_hash"] = c.hash_hex();
    o["mode"] = mode;
    o["coloring"] = coloring;
    o["p"] = report.p;
    o["trials"] = report.trials;
    o["seed"] = seed;
    o["verdict"] =
        report.verdict == SLPReport::Verdict::holds ? "holds" : "no-witness-found";
    if (report.witness) {
        Json w;
        w["theta"] = Json::array({linear_form_json(report.witness->first.theta[0]),
                                  linear_form_json(report.witness->first.theta[1]),
                                  linear_form_json(report.witness->first.theta[2])});
        w["w"] = linear_form_json(report.witness->second);
        o["witness"] = std::move(w);
    }
    if (cert) o["certificate"] = certificate_json(*cert);
    o["dims"] = report.dims;
    return o;
}

inline CmdResult input_error(const std::string& msg) {
    CmdResult res;
    res.exit_code = 1;
    res.json = Json{{"error", msg}};
    res.human = "error: " + msg;
    return res;
}

inline CmdResult contradiction_error(const std::string& msg) {
    CmdResult res;
    res.exit_code = 2;
    res.json = Json{{"error", msg}, {"internal_contradiction", true}};
    res.human = "internal contradiction: " + msg;
    return res;
}

/// Resolve a 3-coloring from `spec` ("auto" or a file path).
inline Coloring resolve_3coloring(const Complex2& c, const std::string& spec) {
    if (spec == "auto") {
        auto kappa = proper_3_coloring(c);
        if (!kappa)
            throw std::invalid_argument(
                "complex is not balanced (a vertex has odd degree); no proper 3-coloring exists");
        return *kappa;
    }
    ParsedColoring parsed = read_coloring_file(spec);
    if (!parsed.three)
        throw std::invalid_argument("coloring file '" + spec + "' does not hold colors 1/2/3");
    if (!is_proper_coloring(c, *parsed.three))
        throw std::invalid_argument("coloring file '" + spec + "' is not a proper 3-coloring");
    return *parsed.three;
}

/// Resolve a bi-coloring from `spec` ("auto" or a file path).
inline BiColoring resolve_bicoloring(const Complex2& c, const std::string& spec) {
    if (spec == "auto") {
        auto pi = find_21_coloring(c);
        if (!pi)
            throw std::invalid_argument("complex admits no (2,1)-coloring");
        return *pi;
    }
    ParsedColoring parsed = read_coloring_file(spec);
    if (!parsed.two)
        throw std::invalid_argument("coloring file '" + spec + "' does not hold colors b/r");
    require_total(c, *parsed.two);
    return *parsed.two;
}

} // namespace detail

inline CmdResult cmd_validate(const std::string& path) {
    try {
        const Complex2 c = read_complex_file(path);
        Json o;
        o["complex_hash"] = c.hash_hex();
        o["sphere"] = c.is_sphere();
        if (!c.is_sphere()) o["reason"] = c.sphere_defect();
        o["f"] = detail::f_vector_json(c);
        Json mts = Json::array();
        for (const Face& t : c.missing_triangles()) mts.push_back(detail::face_json(t));
        o["missing_triangles"] = std::move(mts);
        Json degs = Json::object();
        for (VertexId v : c.vertices()) degs[std::to_string(v)] = c.degree(v);
        o["degrees"] = std::move(degs);

        CmdResult res;
        res.json = std::move(o);
        std::ostringstream human;
        human << path << ": " << (c.is_sphere() ? "2-sphere" : "not a 2-sphere") << ", f = ("
              << c.vertices().size() << ", " << c.edges().size() << ", " << c.facets().size()
              << ")";
        res.human = human.str();
        return res;
    } catch (const std::exception& e) {
        return detail::input_error(e.what());
    }
}

inline CmdResult cmd_slp(const std::string& path, const std::string& coloring_spec,
                         const std::string& mode, std::uint64_t p, int trials,
                         std::uint64_t seed) {
    try {
        const Complex2 c = read_complex_file(path);
        const PrimeField F(p);
        Rng rng(seed);
        if (mode == "colored") {
            const Coloring kappa = detail::resolve_3coloring(c, coloring_spec);
            const SLPReport report = check_colored_slp(c, kappa, trials, F, rng);
            CmdResult res;
            res.json = detail::slp_report_json(c, mode, detail::coloring_json(kappa), report,
                                               seed, std::nullopt);
            res.human = report.verdict == SLPReport::Verdict::holds
                            ? "colored SLP holds (witness found)"
                            : "no witness in " + std::to_string(trials) + " trials";
            return res;
        }
        if (mode == "21") {
            const BiColoring pi = detail::resolve_bicoloring(c, coloring_spec);
            const SLPReport report = check_21_slp(c, pi, trials, F, rng);
            std::optional<NonSLPCertificate> cert;
            if (report.verdict == SLPReport::Verdict::no_witness_found)
                cert = find_non_slp_certificate(c, pi);
            CmdResult res;
            res.json =
                detail::slp_report_json(c, mode, detail::coloring_json(pi), report, seed, cert);
            res.human = report.verdict == SLPReport::Verdict::holds
                            ? "SLP holds for a (2,1)-colored sequence (witness found)"
                            : "no witness in " + std::to_string(trials) + " trials" +
                                  (cert ? "; Laman certificate attached" : "");
            return res;
        }
        return detail::input_error("unknown mode '" + mode + "' (use colored or 21)");
    } catch (const Contradiction& e) {
        return detail::contradiction_error(e.what());
    } catch (const std::exception& e) {
        return detail::input_error(e.what());
    }
}

inline CmdResult cmd_laman(const std::optional<std::string>& complex_path,
                           const std::string& coloring_spec,
                           const std::optional<std::string>& graph_path) {
    try {
        if (graph_path) {
            const SimpleGraph g = read_edge_list_file(*graph_path);
            const LamanVerdict verdict = is_23_sparse(g);
            CmdResult res;
            res.json = detail::laman_json(verdict);
            res.human = verdict.sparse ? "(2,3)-sparse" : "not (2,3)-sparse";
            return res;
        }
        if (!complex_path)
            return detail::input_error("laman needs a complex file or --graph");
        const Complex2 c = read_complex_file(*complex_path);
        const BiColoring pi = detail::resolve_bicoloring(c, coloring_spec);
        if (!is_21_coloring(c, pi))
            return detail::input_error("coloring is not a (2,1)-coloring");
        const LamanVerdict verdict = is_23_sparse(blue_graph(c, pi));
        CmdResult res;
        res.json = detail::laman_json(verdict);
        res.json["complex_hash"] = c.hash_hex();
        res.human = verdict.sparse ? "blue graph is (2,3)-sparse" : "blue graph is not (2,3)-sparse";
        return res;
    } catch (const Contradiction& e) {
        return detail::contradiction_error(e.what());
    } catch (const std::exception& e) {
        return detail::input_error(e.what());
    }
}

inline CmdResult cmd_reduce(const std::string& path) {
    try {
        const Complex2 c = read_complex_file(path);
        if (!c.is_sphere())
            return detail::input_error("input is not a 2-sphere: " + c.sphere_defect());
        auto kappa = proper_3_coloring(c);
        if (!kappa)
            return detail::input_error("complex is not balanced; reduction needs a balanced sphere");
        const ReductionTrace trace = batagelj_reduce(c, *kappa);
        Json steps = Json::array();
        for (const ReductionStep& step : trace.steps) {
            Json s;
            if (step.kind == ReductionStep::Kind::split) {
                s["kind"] = "split";
                s["sigma"] = detail::face_json(step.sigma);
            } else {
                s["kind"] = "balanced_contract";
                s["pair"] = Json::array({step.p, step.q});
            }
            char buf[17];
            std::snprintf(buf, sizeof buf, "%016llx",
                          static_cast<unsigned long long>(step.input_hash));
            s["input"] = buf;
            Json outs = Json::array();
            for (std::uint64_t h : step.output_hashes) {
                std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
                outs.push_back(buf);
            }
            s["outputs"] = std::move(outs);
            steps.push_back(std::move(s));
        }
        Json terminal = Json::array();
        for (const Complex2& t : trace.terminal) {
            Json o;
            o["hash"] = t.hash_hex();
            o["f"] = detail::f_vector_json(t);
            terminal.push_back(std::move(o));
        }
        CmdResult res;
        res.json = Json{{"complex_hash", c.hash_hex()},
                        {"steps", std::move(steps)},
                        {"terminal", std::move(terminal)}};
        res.human = "reduced to " + std::to_string(trace.terminal.size()) + " octahedra in " +
                    std::to_string(trace.steps.size()) + " steps";
        return res;
    } catch (const Contradiction& e) {
        return detail::contradiction_error(e.what());
    } catch (const std::exception& e) {
        return detail::input_error(e.what());
    }
}

namespace detail {

inline Json theorem2_json(const Complex2& c, const BiColoring& pi, const Theorem2Report& report,
                          std::uint64_t seed) {
    Json o;
    o["complex_hash"] = c.hash_hex();
    switch (report.consistency) {
        case Consistency::consistent: o["consistency"] = "consistent"; break;
        case Consistency::inconsistent: o["consistency"] = "inconsistent"; break;
        case Consistency::inconclusive: o["consistency"] = "inconclusive"; break;
    }
    o["slp"] = slp_report_json(c, "21", coloring_json(pi), report.slp, seed, report.certificate);
    o["laman"] = laman_json(report.laman);
    return o;
}

} // namespace detail

inline CmdResult cmd_check_thm2(const std::optional<std::string>& path,
                                const std::string& coloring_spec,
                                const std::optional<std::string>& gen_kind, int n, int count,
                                std::uint64_t p, int trials, std::uint64_t seed) {
    try {
        const PrimeField F(p);
        std::vector<std::pair<Complex2, BiColoring>> instances;
        if (path) {
            Complex2 c = read_complex_file(*path);
            BiColoring pi = detail::resolve_bicoloring(c, coloring_spec);
            instances.emplace_back(std::move(c), std::move(pi));
        } else if (gen_kind) {
            Rng master(seed);
            for (int i = 0; i < count; ++i) {
                const std::uint64_t s = master.next_u64();
                if (*gen_kind == "random21") {
                    instances.push_back(random_21_sphere(n, s));
                } else if (*gen_kind == "subdivision") {
                    instances.push_back(subdivide_all_facets(stacked_sphere(n - 4, s)));
                } else {
                    return detail::input_error("unknown --gen kind '" + *gen_kind +
                                               "' (use random21 or subdivision)");
                }
            }
        } else {
            return detail::input_error("check-thm2 needs a complex file or --gen");
        }

        Rng rng(seed);
        Json results = Json::array();
        bool all_consistent = true;
        int positives = 0, negatives = 0;
        for (const auto& [c, pi] : instances) {
            const Theorem2Report report = check_theorem2(c, pi, trials, F, rng);
            if (report.consistency != Consistency::consistent) all_consistent = false;
            if (report.laman.sparse)
                ++positives;
            else
                ++negatives;
            results.push_back(detail::theorem2_json(c, pi, report, seed));
        }

        CmdResult res;
        if (instances.size() == 1) {
            res.json = results[0];
        } else {
            res.json = Json{{"instances", std::move(results)},
                            {"all_consistent", all_consistent},
                            {"positive", positives},
                            {"negative", negatives}};
        }
        std::ostringstream human;
        human << instances.size() << " instance(s): " << positives << " sparse, " << negatives
              << " not sparse, " << (all_consistent ? "all consistent" : "INCONSISTENT");
        res.human = human.str();
        if (!all_consistent) res.exit_code = 2;
        return res;
    } catch (const Contradiction& e) {
        return detail::contradiction_error(e.what());
    } catch (const std::exception& e) {
        return detail::input_error(e.what());
    }
}

inline CmdResult cmd_gen(const GenSpec& spec, const std::optional<std::string>& out_path,
                         const std::optional<std::string>& coloring_out) {
    try {
        const GenResult gen = generate(spec);
        const Complex2& c = gen.complex;

        if (out_path) {
            std::ofstream out(*out_path);
            if (!out) return detail::input_error("cannot write '" + *out_path + "'");
            write_facet_list(out, c);
        }
        if (coloring_out) {
            std::ofstream out(*coloring_out);
            if (!out) return detail::input_error("cannot write '" + *coloring_out + "'");
            if (gen.coloring)
                write_coloring(out, *gen.coloring);
            else if (gen.bicoloring)
                write_coloring(out, *gen.bicoloring);
            else
                return detail::input_error("this generator kind produces no coloring");
        }

        Json o;
        o["complex_hash"] = c.hash_hex();
        o["f"] = detail::f_vector_json(c);
        Json facets = Json::array();
        for (const Face& f : c.facets()) facets.push_back(detail::face_json(f));
        o["facets"] = std::move(facets);
        if (gen.coloring) o["coloring"] = detail::coloring_json(*gen.coloring);
        if (gen.bicoloring) o["coloring"] = detail::coloring_json(*gen.bicoloring);

        CmdResult res;
        res.json = std::move(o);
        std::ostringstream human;
        human << "generated complex with f = (" << c.vertices().size() << ", "
              << c.edges().size() << ", " << c.facets().size() << ")";
        res.human = human.str();
        return res;
    } catch (const Contradiction& e) {
        return detail::contradiction_error(e.what());
    } catch (const std::exception& e) {
        return detail::input_error(e.what());
    }
}

} // namespace slp2::cli
