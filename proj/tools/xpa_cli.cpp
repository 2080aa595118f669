#include <iostream>

#include "CLI11.hpp"
#include "xpa/commands.hpp"

namespace {

void add_common(CLI::App* sub, xpa::RunConfig& c) {
    sub->add_option("--graph", c.graph, "graph JSON file or expression such as cycle:8");
    sub->add_option("--family", c.family, "family JSON file or generator:first..last[:degree]");
    sub->add_option("--control", c.control, "control family for the contrast table");
    sub->add_option("--kernel", c.kernel, "kernel JSON file");
    sub->add_option("--recipe", c.recipe, "ball_average | lazy_walk | symmetrised | propa_symmetric");
    sub->add_option("--R", c.R, "pair radius");
    sub->add_option("--S", c.S, "support radius");
    sub->add_option("--S-cut", c.s_cut, "truncation radius (default 2S)");
    sub->add_option("--S-div", c.s_divisor, "family: S = n / divisor");
    sub->add_option("--control-S", c.control_S, "control family support radius");
    sub->add_option("--control-S-div", c.control_s_divisor, "control family: S = n / divisor");
    sub->add_option("--tol", c.tol, "certificate tolerance");
    sub->add_option("--rowsum-dev", c.rowsum_dev, "row-sum deviation budget");
    sub->add_option("--threshold", c.threshold, "margin threshold for the expander verdict");
    sub->add_option("--lb-floor", c.lb_floor, "family: smallest inf LB counted as obstructed");
    sub->add_option("--seed", c.seed, "seed for random generators");
    sub->add_option("--format", c.format, "json | csv");
    sub->add_option("--exact-cap", c.exact_cap, "largest n for exact Cheeger enumeration");
    sub->add_flag("--symmetric", c.symmetric, "restrict the optimizer to symmetric kernels");
    sub->add_flag("--timing", c.timing, "embed wall-clock duration (reports stop being reproducible)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expansion, l1 cohomology and property-A diagnostics for finite graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", xpa::kVersion);
    xpa::RunConfig config;
    const std::pair<const char*, const char*> commands[] = {
        {"analyze", "Cheeger constant, l1 gap and witness cut"},
        {"propa", "optimal kernel variation with certificate"},
        {"symmetrize", "symmetrisation pipeline report"},
        {"witness", "witness function and incompatibility inequalities"},
        {"family", "family verdicts and the contrast table"},
        {"gen", "emit a generated graph as JSON"},
    };
    for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        xpa::Json err{{"tool", "xpa"},
                      {"version", xpa::kVersion},
                      {"error", {{"type", "usage"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 2;
    }
    config.command = app.get_subcommands().front()->get_name();
    const auto out = xpa::run_command(config);
    std::cout << out.text;
    return out.exit_code;
}
