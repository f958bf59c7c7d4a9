// Command line front end: barcodes | labelled | verify.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "algpers/pipeline.hpp"

int main(int argc, char** argv)
{
    using namespace algpers;

    CLI::App app{"Persistent ideal barcodes and labelled chain complexes"};
    app.require_subcommand(1, 1);

    RunConfig cfg;
    std::string field = "f2";
    std::string alpha;
    std::string point;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "input file")->required();
        sub->add_option("--format", cfg.format, "input format")
            ->check(CLI::IsMember({"dist-csv", "complex-json", "labelled-json", "points-json"}));
        sub->add_option("--field", field, "coefficient field: f2, fp:<p> or q");
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--seed", cfg.seed, "random seed");
    };

    auto* barcodes = app.add_subcommand("barcodes", "SR, edge and PH barcodes of a filtration");
    add_common(barcodes);
    barcodes->add_option("--max-dim", cfg.max_dim, "highest homology dimension (default: all)");
    barcodes->add_flag("--svg", cfg.svg, "also write barcodes.svg");

    auto* labelled = app.add_subcommand("labelled", "analyse a labelled complex");
    add_common(labelled);
    labelled->add_option("--alpha", alpha, "degree of the graded slice, e.g. 0,1,1,1");
    labelled->add_option("--point", point, "evaluation point, e.g. 1,-1/2");

    auto* verify = app.add_subcommand("verify", "run the randomized property suites");
    verify->add_option("--field", field, "coefficient field: f2, fp:<p> or q");
    verify->add_option("--out", cfg.out_dir, "output directory");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--trials", cfg.trials, "instances per suite");
    verify->add_option("--n-max", cfg.n_max, "largest vertex count");
    verify->add_flag("--inject-fault", cfg.inject_fault, "break the barcode computation on purpose");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : static_cast<int>(ExitCode::usage);
    }

    try {
        cfg.field = FieldChoice::parse(field);
        if (!alpha.empty()) {
            cfg.alpha = pipeline::parse_alpha(alpha);
        }
        if (!point.empty()) {
            cfg.point = pipeline::parse_point(point);
        }
        if (labelled->parsed() && cfg.format == "dist-csv" && !labelled->count("--format")) {
            cfg.format = "labelled-json";
        }
        ExitCode rc = ExitCode::ok;
        if (barcodes->parsed()) {
            rc = pipeline::run_barcodes(cfg, std::cout);
        } else if (labelled->parsed()) {
            rc = pipeline::run_labelled(cfg, std::cout);
        } else {
            rc = pipeline::run_verify(cfg, std::cout);
        }
        return static_cast<int>(rc);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    }
}
