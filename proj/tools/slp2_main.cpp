#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "slp2/cli.hpp"

namespace {

int emit(const slp2::cli::CmdResult& res, const std::optional<std::string>& out_path) {
    const std::string text = res.json.dump(2);
    if (out_path) {
        std::ofstream out(*out_path);
        if (!out) {
            std::cerr << "error: cannot write '" << *out_path << "'\n";
            return 1;
        }
        out << text << '\n';
    } else {
        std::cout << text << std::endl;
    }
    if (!res.human.empty()) std::cerr << res.human << std::endl;
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strong Lefschetz checks for simplicial 2-spheres"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format (json)")->check(CLI::IsMember({"json"}));

    std::uint64_t p = slp2::kDefaultModulus;
    int trials = 5;
    std::uint64_t seed = 0;
    std::string coloring = "auto";
    std::string mode = "colored";
    std::optional<std::string> out_path;

    // validate
    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "sphere check, f-vector, missing triangles");
    validate->add_option("complex", validate_path, "facet-list or JSON file")->required();
    validate->add_option("--out", out_path, "write the JSON report to a file");

    // slp
    std::string slp_path;
    CLI::App* slp = app.add_subcommand("slp", "randomized strong Lefschetz test");
    slp->add_option("complex", slp_path, "facet-list or JSON file")->required();
    slp->add_option("--coloring", coloring, "coloring file or 'auto'");
    slp->add_option("--mode", mode, "colored | 21")->check(CLI::IsMember({"colored", "21"}));
    slp->add_option("--p", p, "prime modulus");
    slp->add_option("--trials", trials, "number of random trials");
    slp->add_option("--seed", seed, "RNG seed");
    slp->add_option("--out", out_path, "write the JSON report to a file");

    // laman
    std::optional<std::string> laman_path;
    std::optional<std::string> graph_path;
    CLI::App* laman = app.add_subcommand("laman", "(2,3)-sparsity of the blue graph");
    laman->add_option("complex", laman_path, "facet-list or JSON file");
    laman->add_option("--coloring", coloring, "coloring file or 'auto'");
    laman->add_option("--graph", graph_path, "standalone edge-list file");
    laman->add_option("--out", out_path, "write the JSON report to a file");

    // reduce
    std::string reduce_path;
    CLI::App* reduce = app.add_subcommand("reduce", "reduce a balanced sphere to octahedra");
    reduce->add_option("complex", reduce_path, "facet-list or JSON file")->required();
    reduce->add_option("--out", out_path, "write the JSON report to a file");

    // check-thm2
    std::optional<std::string> thm2_path;
    std::optional<std::string> gen_kind;
    int gen_n = 12;
    int gen_count = 1;
    CLI::App* thm2 = app.add_subcommand(
        "check-thm2", "compare the SLP search against the Laman criterion");
    thm2->add_option("complex", thm2_path, "facet-list or JSON file");
    thm2->add_option("--coloring", coloring, "coloring file or 'auto'");
    thm2->add_option("--gen", gen_kind, "generate instances: random21 | subdivision");
    thm2->add_option("--n", gen_n, "target vertex count (random21) or base size (subdivision)");
    thm2->add_option("--count", gen_count, "number of generated instances");
    thm2->add_option("--p", p, "prime modulus");
    thm2->add_option("--trials", trials, "number of random trials");
    thm2->add_option("--seed", seed, "RNG seed");
    thm2->add_option("--out", out_path, "write the JSON report to a file");

    // gen
    std::string gen_kind_pos;
    int k = 0;
    std::optional<std::string> gen_out;
    std::optional<std::string> gen_coloring_out;
    CLI::App* gen = app.add_subcommand("gen", "emit a generated complex");
    gen->add_option("kind", gen_kind_pos,
                    "octahedron | tetrahedron | stacked | subdivision | random-balanced | random-21")
        ->required();
    gen->add_option("--n", gen_n, "target vertex count for the random kinds");
    gen->add_option("--k", k, "stackings for stacked / subdivision");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--out", gen_out, "write the facet list to a file");
    gen->add_option("--coloring-out", gen_coloring_out, "write the coloring to a file");

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) return emit(slp2::cli::cmd_validate(validate_path), out_path);
    if (slp->parsed())
        return emit(slp2::cli::cmd_slp(slp_path, coloring, mode, p, trials, seed), out_path);
    if (laman->parsed())
        return emit(slp2::cli::cmd_laman(laman_path, coloring, graph_path), out_path);
    if (reduce->parsed()) return emit(slp2::cli::cmd_reduce(reduce_path), out_path);
    if (thm2->parsed())
        return emit(slp2::cli::cmd_check_thm2(thm2_path, coloring, gen_kind, gen_n, gen_count, p,
                                              trials, seed),
                    out_path);
    if (gen->parsed()) {
        slp2::GenSpec spec;
        if (gen_kind_pos == "octahedron") spec.kind = slp2::GenSpec::Kind::octahedron;
        else if (gen_kind_pos == "tetrahedron") spec.kind = slp2::GenSpec::Kind::tetrahedron;
        else if (gen_kind_pos == "stacked") spec.kind = slp2::GenSpec::Kind::stacked;
        else if (gen_kind_pos == "subdivision") spec.kind = slp2::GenSpec::Kind::subdivision;
        else if (gen_kind_pos == "random-balanced") spec.kind = slp2::GenSpec::Kind::random_balanced;
        else if (gen_kind_pos == "random-21") spec.kind = slp2::GenSpec::Kind::random_21;
        else {
            std::cerr << "error: unknown generator kind '" << gen_kind_pos << "'\n";
            return 1;
        }
        spec.n = gen_n;
        spec.k = k;
        spec.seed = seed;
        return emit(slp2::cli::cmd_gen(spec, gen_out, gen_coloring_out), std::nullopt);
    }
    return 1;
}
