// curv: clique-complex invariants of finite simple graphs — f-vectors, Euler
// characteristic, inductive dimension, curvature forms and the Gauss-Bonnet
// verdict, all in exact rational arithmetic.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "curv/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact clique-complex curvature toolkit"};
    app.require_subcommand(1);

    std::string gen_spec, gen_out;
    auto* gen = app.add_subcommand("gen", "generate a named graph as an edge-list file");
    gen->add_option("spec", gen_spec,
                    "generator spec, e.g. cross:4, stellated-cube:5, er:12:0.5:42")
        ->required();
    gen->add_option("-o,--output", gen_out, "output path")->required();

    std::string analyze_in, analyze_method = "general", analyze_format = "json";
    int analyze_dim = -1;
    auto* analyze = app.add_subcommand("analyze", "per-vertex curvature report");
    analyze->add_option("input", analyze_in, "graph file (edge list or JSON)")->required();
    analyze->add_option("--method", analyze_method, "general | euler-form")
        ->check(CLI::IsMember({"general", "euler-form"}));
    analyze->add_option("--dim", analyze_dim, "dimension for euler-form");
    analyze->add_option("--format", analyze_format, "json | tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    std::string dim_in;
    bool dim_per_vertex = false;
    auto* dim = app.add_subcommand("dim", "inductive graph dimension (exact rational)");
    dim->add_option("input", dim_in, "graph file")->required();
    dim->add_flag("--per-vertex", dim_per_vertex, "one line per vertex");

    std::string validate_in;
    int validate_dim = -1, validate_max = 10;
    bool validate_detect = false;
    auto* validate = app.add_subcommand("validate", "check the d-graph axioms");
    validate->add_option("input", validate_in, "graph file")->required();
    validate->add_option("--dim", validate_dim, "claimed dimension");
    validate->add_flag("--detect", validate_detect, "search for the valid dimension");
    validate->add_option("--max", validate_max, "search bound for --detect");

    std::string gbc_in;
    auto* gbc = app.add_subcommand("check-gbc", "Gauss-Bonnet verdict only");
    gbc->add_option("input", gbc_in, "graph file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (gen->parsed()) return curv::cmd_gen(gen_spec, gen_out, std::cerr);

    if (analyze->parsed()) {
        curv::AnalyzeOptions options;
        options.method = analyze_method == "general" ? curv::CurvatureMethod::general
                                                     : curv::CurvatureMethod::euler_form;
        if (analyze->count("--dim") > 0) options.dim = analyze_dim;
        options.format =
            analyze_format == "json" ? curv::ReportFormat::json : curv::ReportFormat::tsv;
        return curv::cmd_analyze(analyze_in, options, std::cout, std::cerr);
    }

    if (dim->parsed()) return curv::cmd_dim(dim_in, dim_per_vertex, std::cout, std::cerr);

    if (validate->parsed()) {
        curv::ValidateOptions options;
        if (validate->count("--dim") > 0) options.dim = validate_dim;
        options.detect = validate_detect;
        options.max_d = validate_max;
        return curv::cmd_validate(validate_in, options, std::cout, std::cerr);
    }

    if (gbc->parsed()) return curv::cmd_check_gbc(gbc_in, std::cout, std::cerr);

    return 2;
}
