// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "varix/crossings.hpp"
#include "varix/path.hpp"

namespace varix::cli {

/// Parsed invocation. Flags not meaningful for the chosen action are ignored.
struct Command {
    enum class Action { Compute, Profile, Approx, Verify, Mc, Tail };

    Action action = Action::Compute;
    std::string input;                  // CSV path; "-" reads standard input
    double c = -1.0;                    // truncation level
    std::vector<double> c_list;         // compute: one triple per level
    CrossingKind kind = CrossingKind::Both;
    std::string format = "json";        // json | tsv
    double mu = 0.0;
    double v = 1.0;
    double dt = 1e-4;
    double y = 0.0;
    std::int64_t paths = 10000;
    std::uint64_t seed = 1;
    int n_max = 5;
    std::string config_file;            // mc/tail: flat key=value experiment file
    std::set<std::string> explicit_keys;  // keys given as flags, which win over the file
};

/// Flat experiment file: one `key=value` per line, `#` comments. Recognized
/// keys: mu, v, c, dt, n_paths, seed, y, n_max.
std::map<std::string, std::string> parse_flat_config(std::string_view text);

/// Loads `command.config_file` (when set) into the fields whose keys were
/// not passed as flags.
void apply_config_file(Command& command);

/// CSV ingestion: one column `value` or two columns `t,value`, optional
/// single header line, `.` decimal. Reports the first offending line.
DiscretePath parse_path_csv(std::string_view text);

/// Dispatches a command, writing the report to `out` and diagnostics to
/// `err`. Returns the process exit status: 0 on success, 1 when a
/// verification suite or z-threshold fails, 2 on usage errors.
int run(const Command& command, std::ostream& out, std::ostream& err);

}  // namespace varix::cli
