#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "fplab/cli/config.hpp"

namespace fplab::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kConfigError = 2,
    kNumericFailure = 3,
    kIoError = 4,
};

struct Streams {
    std::ostream& out;
    std::ostream& err;
};

/// Mann column of the published comparison table (x_1 = 0.9, a_n = 0.85) at
/// its printed precision; the three-step column is 0.9 then zeros.
extern const std::array<double, 20> kPublishedMann;

int cmd_table1(const RunConfig& cfg, Streams io);
int cmd_race(const RunConfig& cfg, Streams io);
int cmd_properties(const RunConfig& cfg, Streams io);
int cmd_space_check(const RunConfig& cfg, Streams io);
int cmd_integral(const RunConfig& cfg, Streams io);

/// Parses arguments (argv[0] excluded), runs the command and maps failures
/// to exit codes.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace fplab::cli
