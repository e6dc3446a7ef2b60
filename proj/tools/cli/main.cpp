#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

struct SubOptions {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string output;
    bool split = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tensile-domain: plane-stress tensile-domain analysis of "
                 "voltage-actuated elastomer membranes"};
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"classify", "classify a stretch state and report raw and relaxed stresses (JSON)"},
        {"boundary", "sample the tensile-domain boundary curve(s) (CSV)"},
        {"critical", "critical activation, closed form vs generic path, optimal prestretch (JSON)"},
        {"sweep", "factorial sweep over stretches, activations and moduli (CSV)"},
        {"scenario", "free or prestretched actuation equilibria (JSON)"},
    };

    std::map<std::string, SubOptions> options;
    for (const auto& [name, description] : commands) {
        auto* sub = app.add_subcommand(name, description);
        auto& opts = options[name];
        sub->add_option("-c,--config", opts.config_path,
                        "config file: key = value lines under [section] headers");
        sub->add_option("--set", opts.overrides, "override a config entry: section.key=value");
        sub->add_option("-o,--output", opts.output, "output path (default: stdout)");
        if (name == "boundary") {
            sub->add_flag("--split", opts.split, "write one CSV file per k_v value");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    const auto& opts = options[name];

    try {
        eap::cli::Config config = opts.config_path.empty()
                                      ? eap::cli::Config()
                                      : eap::cli::Config::parse_file(opts.config_path);
        for (const auto& assignment : opts.overrides) config.apply_override(assignment);
        if (!opts.output.empty()) config.set(name, "output", opts.output);
        if (opts.split) config.set("boundary", "split", "true");
        return eap::cli::run_command(name, config, {std::cout, std::cerr});
    } catch (const eap::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const eap::DegenerateMaterial& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const eap::InvalidLoad& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const eap::InvalidStretch& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const eap::InvalidArgument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const eap::SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 3;
    } catch (const eap::MaterialEvaluationError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
