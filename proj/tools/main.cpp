// pencilq -- construct, classify and verify pencils of plane curves
// over small finite fields.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pencils/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"pencils of plane curves over F_q: constructions and blocking classification"};
    app.require_subcommand(1);

    pencils::cli::RunConfig cfg;

    auto add_field_opts = [&](CLI::App* cmd, bool required) {
        auto* p = cmd->add_option("--p", cfg.p, "field characteristic (prime)");
        cmd->add_option("--n", cfg.n, "extension degree, q = p^n");
        if (required) p->required();
    };

    auto* construct = app.add_subcommand(
        "construct", "build a pencil or partition (realize, cover, example31, baer, extremal)");
    construct->add_option("name", cfg.name, "construction name")->required();
    add_field_opts(construct, true);
    construct->add_option("--in", cfg.in_path, "input partition/cover JSON (realize, cover)");
    construct->add_option("--out", cfg.out_path, "output file (stdout if omitted)");
    construct->add_flag("--verify", cfg.verify, "re-run full classification on the output");

    auto* classify = app.add_subcommand("classify", "classify every F_q-member of a pencil");
    classify->add_option("--in", cfg.in_path, "pencil JSON file")->required();
    add_field_opts(classify, false);
    classify->add_option("--out", cfg.out_path, "report JSON file");
    classify->add_option("--emit-sparse", cfg.emit_sparse_path, "write expanded sparse forms here");
    classify->add_option("--term-guard", cfg.term_guard, "max monomials for --emit-sparse expansion");

    auto* verify = app.add_subcommand(
        "verify", "run a theorem check (prop32, thm12, prime-bound, lemma41-identities)");
    verify->add_option("check", cfg.name, "check name")->required();
    add_field_opts(verify, false);
    verify->add_option("--in", cfg.in_path, "pencil JSON file (pencil checks)");
    verify->add_option("--samples", cfg.samples, "sample count for randomized suites");
    verify->add_option("--seed", cfg.seed, "RNG seed for randomized suites");
    verify->add_option("--out", cfg.out_path, "report JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : pencils::cli::kExitInput;
    }

    if (construct->parsed()) {
        cfg.command = "construct";
        return pencils::cli::cmd_construct(cfg);
    }
    if (classify->parsed()) {
        cfg.command = "classify";
        return pencils::cli::cmd_classify(cfg);
    }
    cfg.command = "verify";
    if ((cfg.name == "lemma41-identities") && cfg.p == 0) {
        std::cerr << "error: --p is required for randomized suites\n";
        return pencils::cli::kExitInput;
    }
    return pencils::cli::cmd_verify(cfg);
}
