// SPDX-License-Identifier: MIT
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "varix/cli.hpp"

namespace {

varix::CrossingKind kind_from(const std::string& name) {
    if (name == "up") return varix::CrossingKind::Up;
    if (name == "down") return varix::CrossingKind::Down;
    return varix::CrossingKind::Both;
}

}  // namespace

int main(int argc, char** argv) {
    using varix::cli::Command;

    CLI::App app{"truncated variations, segment crossings, and killed-Brownian-motion experiments"};
    app.require_subcommand(1);

    Command cmd;
    std::string kind = "both";

    auto* compute = app.add_subcommand("compute", "truncated variations of a CSV path");
    compute->add_option("--input", cmd.input, "CSV file, or - for stdin")->required();
    compute->add_option("--c", cmd.c, "truncation level (>= 0)");
    compute->add_option("--c-list", cmd.c_list, "comma-separated truncation levels")
        ->delimiter(',');
    compute->add_option("--format", cmd.format, "json|tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    auto* profile = app.add_subcommand("profile", "crossing profile as TSV");
    profile->add_option("--input", cmd.input)->required();
    profile->add_option("--c", cmd.c)->required();
    profile->add_option("--kind", kind, "up|down|both")
        ->check(CLI::IsMember({"up", "down", "both"}));
    profile->add_option("--format", cmd.format, "tsv|json")
        ->check(CLI::IsMember({"json", "tsv"}));

    auto* approx = app.add_subcommand("approx", "minimal-TV c/2-approximation as CSV");
    approx->add_option("--input", cmd.input)->required();
    approx->add_option("--c", cmd.c)->required();

    auto* verify = app.add_subcommand("verify", "randomized identity suites");
    verify->add_option("--paths", cmd.paths, "number of random paths");
    verify->add_option("--seed", cmd.seed, "generator seed");

    auto* mc = app.add_subcommand("mc", "Monte Carlo E[UTV] vs closed form");
    auto* tail = app.add_subcommand("tail", "empirical upcrossing tail vs geometric law");
    for (auto* sub : {mc, tail}) {
        sub->add_option("--mu", cmd.mu, "drift");
        sub->add_option("--v", cmd.v, "killing rate (> 0)");
        sub->add_option("--c", cmd.c, "truncation level (> 0)");
        sub->add_option("--dt", cmd.dt, "grid step");
        sub->add_option("--paths,--n_paths", cmd.paths, "number of paths");
        sub->add_option("--seed", cmd.seed, "stream seed");
        sub->add_option("--config", cmd.config_file, "flat key=value experiment file");
    }
    tail->add_option("--y", cmd.y, "level");
    tail->add_option("--n-max,--n_max", cmd.n_max, "tail depth (>= 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (compute->parsed()) {
        cmd.action = Command::Action::Compute;
        if (cmd.c_list.empty() && cmd.c < 0.0) {
            std::cerr << "error: compute needs --c or --c-list\n";
            return 2;
        }
    } else if (profile->parsed()) {
        cmd.action = Command::Action::Profile;
        cmd.format = profile->count("--format") ? cmd.format : "tsv";
        cmd.kind = kind_from(kind);
    } else if (approx->parsed()) {
        cmd.action = Command::Action::Approx;
    } else if (verify->parsed()) {
        cmd.action = Command::Action::Verify;
    } else {
        cmd.action = mc->parsed() ? Command::Action::Mc : Command::Action::Tail;
        auto* sub = mc->parsed() ? mc : tail;
        const std::pair<const char*, const char*> keys[] = {
            {"--mu", "mu"}, {"--v", "v"},     {"--c", "c"},       {"--dt", "dt"},
            {"--paths", "n_paths"}, {"--seed", "seed"},
        };
        for (const auto& [flag, key] : keys) {
            if (sub->count(flag) > 0) cmd.explicit_keys.insert(key);
        }
        if (sub == tail) {
            if (tail->count("--y") > 0) cmd.explicit_keys.insert("y");
            if (tail->count("--n-max") > 0) cmd.explicit_keys.insert("n_max");
        }
    }
    return varix::cli::run(cmd, std::cout, std::cerr);
}
