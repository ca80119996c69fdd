// Command-line front end: family, sweep, verify, render.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "poncelet/io/commands.hpp"

namespace {

void add_config_options(CLI::App* cmd, poncelet::io::RunConfig& rc)
{
    cmd->add_option("--f", rc.f, "first caustic focus, complex literal such as 0.2+0.6i");
    cmd->add_option("--g", rc.g, "second caustic focus");
}

} // namespace

int main(int argc, char** argv)
{
    using namespace poncelet::io;
    RunConfig rc;
    rc.tol = tolerances_from_env();

    CLI::App app{"Circle-inscribed Poncelet triangle families: construction, sweeps and claim verification"};
    app.require_subcommand(1);
    app.add_option("--kernel-tol", rc.tol.kernel, "degeneracy tolerance on normalized determinants and areas")
        ->check(CLI::PositiveNumber);

    auto* family = app.add_subcommand("family", "print a member, the caustic and the equilateral data");
    add_config_options(family, rc);
    family->add_option("--lambda", rc.lambda, "family parameter on the unit circle")->capture_default_str();
    family->add_option("--format", rc.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* sweep = app.add_subcommand("sweep", "sample the family and tabulate centers");
    add_config_options(sweep, rc);
    sweep->add_option("--N", rc.samples, "number of lambda samples (>= 16)")->capture_default_str();
    sweep->add_option("--centers", rc.centers, "center indices, e.g. X110,X3233")->delimiter(',');
    sweep->add_option("--family", rc.family, "reference or tangential")->capture_default_str();
    sweep->add_option("--out", rc.out_format, "csv or json")->capture_default_str();
    sweep->add_option("--output,-o", rc.output, "output path, - for stdout")->capture_default_str();
    sweep->add_option("--workers", rc.workers, "parallel sample workers")->capture_default_str();

    std::string verify_id;
    auto* verify = app.add_subcommand("verify", "verify one claim (or 'all') and print a JSON report");
    verify->add_option("id", verify_id, "x110-stationary, x3233-circle, double-inv-1, l35, l35-vertex, feuerbach, "
                                        "x65-circle, polar-equilateral, tangential-envelope, or all")
        ->required();
    add_config_options(verify, rc);
    verify->add_option("--lambda", rc.lambda, "member used as T_o when --f/--g are given")->capture_default_str();
    verify->add_option("--N", rc.samples, "lambda samples per sweep")->capture_default_str();
    verify->add_option("--seed", rc.seed, "seed for randomized corpora")->capture_default_str();
    verify->add_option("--K", rc.k, "target point on the unit circle (double-inv-1)")->capture_default_str();
    verify->add_option("--aeq", rc.a_eq, "equilateral vertex on the unit circle (double-inv-1)")
        ->capture_default_str();
    verify->add_option("--M", rc.m, "caustic-center samples along the line")->capture_default_str();
    verify->add_option("--output,-o", rc.output, "also write the report to this path");

    std::string render_lambda = "i";
    auto* render = app.add_subcommand("render", "write an SVG figure of the family");
    add_config_options(render, rc);
    render->add_option("--lambda", render_lambda, "member to draw")->capture_default_str();
    render->add_option("--svg", rc.svg_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code::usage;
    }

    if (family->parsed())
        return cmd_family(rc, std::cout, std::cerr);
    if (sweep->parsed())
        return cmd_sweep(rc, std::cout, std::cerr);
    if (verify->parsed())
        return cmd_verify(verify_id, rc, std::cout, std::cerr);
    rc.lambda = render_lambda;
    return cmd_render(rc, std::cout, std::cerr);
}
