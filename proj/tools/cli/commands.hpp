#pragma once

#include <iosfwd>
#include <string>

#include "cli/config.hpp"

namespace eap::cli {

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

int cmd_classify(const Config& config, Streams io);
int cmd_boundary(const Config& config, Streams io);
int cmd_critical(const Config& config, Streams io);
int cmd_sweep(const Config& config, Streams io);
int cmd_scenario(const Config& config, Streams io);

/// Runs the named subcommand; throws ConfigError for unknown names.
int run_command(const std::string& name, const Config& config, Streams io);

/// Worker count for sweep evaluation: TENSILE_DOMAIN_THREADS when set to a
/// positive value, hardware concurrency otherwise.
unsigned worker_count();

}  // namespace eap::cli
