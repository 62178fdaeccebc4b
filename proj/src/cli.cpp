// SPDX-License-Identifier: MIT
#include "varix/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "varix/format.hpp"
#include "varix/rng.hpp"
#include "varix/stochastic.hpp"
#include "varix/variation.hpp"

namespace varix::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_number(std::string_view token, double& out) {
    token = trim(token);
    if (token.empty()) return false;
    const std::string buf(token);
    char* end = nullptr;
    out = std::strtod(buf.c_str(), &end);
    return end == buf.c_str() + buf.size();
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

}  // namespace

DiscretePath parse_path_csv(std::string_view text) {
    std::vector<double> values;
    std::vector<double> times;
    std::size_t line_no = 0;
    std::size_t n_cols = 0;
    bool saw_data = false;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;

        const auto fields = split(line, ',');
        std::vector<double> parsed(fields.size());
        bool numeric = fields.size() <= 2;
        for (std::size_t i = 0; numeric && i < fields.size(); ++i) {
            numeric = parse_number(fields[i], parsed[i]);
        }
        if (!numeric) {
            if (!saw_data && fields.size() <= 2) continue;  // header line
            throw ParseError(line_no, "expected 1 or 2 numeric columns");
        }
        if (!saw_data) {
            n_cols = fields.size();
            saw_data = true;
        } else if (fields.size() != n_cols) {
            throw ParseError(line_no, "inconsistent column count");
        }
        if (n_cols == 1) {
            values.push_back(parsed[0]);
        } else {
            times.push_back(parsed[0]);
            values.push_back(parsed[1]);
        }
    }
    if (n_cols == 2) {
        return from_samples(std::move(values), std::move(times));
    }
    return from_samples(std::move(values));
}

std::map<std::string, std::string> parse_flat_config(std::string_view text) {
    std::map<std::string, std::string> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(line_no, "expected key=value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ParseError(line_no, "expected key=value");
        }
        out[std::string(key)] = std::string(value);
    }
    return out;
}

void apply_config_file(Command& command) {
    if (command.config_file.empty()) return;
    std::ifstream file(command.config_file, std::ios::binary);
    if (!file) {
        throw Error("cannot open config file: " + command.config_file);
    }
    const std::string text(std::istreambuf_iterator<char>(file), {});
    const auto entries = parse_flat_config(text);

    auto number = [](const std::string& key, const std::string& value) {
        double parsed = 0.0;
        char* end = nullptr;
        parsed = std::strtod(value.c_str(), &end);
        if (end != value.c_str() + value.size()) {
            throw DomainError("config key " + key + " has a non-numeric value");
        }
        return parsed;
    };
    for (const auto& [key, value] : entries) {
        if (command.explicit_keys.contains(key)) continue;
        if (key == "mu") {
            command.mu = number(key, value);
        } else if (key == "v") {
            command.v = number(key, value);
        } else if (key == "c") {
            command.c = number(key, value);
        } else if (key == "dt") {
            command.dt = number(key, value);
        } else if (key == "y") {
            command.y = number(key, value);
        } else if (key == "n_paths") {
            command.paths = static_cast<std::int64_t>(number(key, value));
        } else if (key == "seed") {
            command.seed = static_cast<std::uint64_t>(std::strtoull(value.c_str(), nullptr, 10));
        } else if (key == "n_max") {
            command.n_max = static_cast<int>(number(key, value));
        } else {
            throw DomainError("unknown config key: " + key);
        }
    }
}

namespace {

std::string read_input(const std::string& source) {
    if (source == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream file(source, std::ios::binary);
    if (!file) {
        throw Error("cannot open input file: " + source);
    }
    return std::string(std::istreambuf_iterator<char>(file), {});
}

std::string triple_json(const VariationTriple& t) {
    std::string out = "{\"ttv\": " + format_double(t.ttv);
    out += ", \"utv\": " + format_double(t.utv);
    out += ", \"dtv\": " + format_double(t.dtv);
    out += ", \"c\": " + format_double(t.c) + "}";
    return out;
}

int run_compute(const Command& cmd, std::ostream& out) {
    const auto path = parse_path_csv(read_input(cmd.input));
    std::vector<double> levels = cmd.c_list;
    if (levels.empty()) {
        levels.push_back(cmd.c);
    }
    std::vector<VariationTriple> triples;
    triples.reserve(levels.size());
    for (double c : levels) {
        triples.push_back(truncated_variations(path, TruncationLevel(c)));
    }
    if (cmd.format == "tsv") {
        out << "c\tttv\tutv\tdtv\n";
        for (const auto& t : triples) {
            out << format_double(t.c) << '\t' << format_double(t.ttv) << '\t'
                << format_double(t.utv) << '\t' << format_double(t.dtv) << '\n';
        }
    } else if (triples.size() == 1) {
        out << triple_json(triples.front()) << '\n';
    } else {
        out << '[';
        for (std::size_t i = 0; i < triples.size(); ++i) {
            if (i) out << ", ";
            out << triple_json(triples[i]);
        }
        out << "]\n";
    }
    return 0;
}

int run_profile(const Command& cmd, std::ostream& out) {
    const auto path = parse_path_csv(read_input(cmd.input));
    const auto profile = crossing_profile(path, TruncationLevel(cmd.c), cmd.kind);
    if (cmd.format == "json") {
        const auto bp = profile.breakpoints();
        const auto counts = profile.counts();
        out << '[';
        bool first = true;
        for (std::size_t i = 1; i < bp.size(); ++i) {
            if (counts[i] == 0) continue;
            if (!first) out << ", ";
            first = false;
            out << "{\"y_lo\": " << format_double(bp[i - 1])
                << ", \"y_hi\": " << format_double(bp[i])
                << ", \"count\": " << counts[i] << "}";
        }
        out << "]\n";
    } else {
        out << to_tsv(profile);
    }
    return 0;
}

int run_approx(const Command& cmd, std::ostream& out) {
    const auto path = parse_path_csv(read_input(cmd.input));
    const auto approx = optimal_approximation(path, TruncationLevel(cmd.c));
    if (approx.times()) {
        out << "t,value\n";
        for (std::size_t i = 0; i < approx.size(); ++i) {
            out << format_double((*approx.times())[i]) << ',' << format_double(approx[i])
                << '\n';
        }
    } else {
        out << "value\n";
        for (std::size_t i = 0; i < approx.size(); ++i) {
            out << format_double(approx[i]) << '\n';
        }
    }
    return 0;
}

// Path generator for `verify`: length 2 + min(G, 398) with G geometric of
// mean 50, values iid U[0,1]. Stream keyed by (seed, case index) so any
// failure is replayable from the seed alone.
DiscretePath random_step_path(std::uint64_t seed, std::uint64_t index) {
    PathStream stream(seed, index);
    const double u = stream.next_uniform();
    const auto geo = static_cast<long>(std::floor(std::log(u) / std::log(1.0 - 0.02)));
    const std::size_t length = 2 + static_cast<std::size_t>(std::min(geo, 398L));
    std::vector<double> values(length);
    for (double& x : values) x = stream.next_uniform();
    return DiscretePath(std::move(values));
}

struct Suite {
    const char* name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed() const { return max_residual <= tolerance; }
};

int run_verify(const Command& cmd, std::ostream& out) {
    static constexpr double kLevels[] = {0.01, 0.05, 0.25, 0.5, 1.0};
    const auto n_paths = static_cast<std::uint64_t>(std::max<std::int64_t>(cmd.paths, 1));

    Suite theorem1{"theorem1", 0.0, 1e-9};
    Suite jordan{"jordan", 0.0, 1e-9};
    Suite oracle{"oracle", 0.0, 1e-9};
    Suite approx{"approx", 0.0, 1e-9};

    for (std::uint64_t k = 0; k < n_paths; ++k) {
        const auto path = random_step_path(cmd.seed, k);
        for (double level : kLevels) {
            const TruncationLevel c(level);
            const auto sweep = truncated_variations(path, c);

            const double up = profile_integral(crossing_profile(path, c, CrossingKind::Up));
            const double down = profile_integral(crossing_profile(path, c, CrossingKind::Down));
            const double both = profile_integral(crossing_profile(path, c, CrossingKind::Both));
            theorem1.max_residual = std::max({theorem1.max_residual,
                                              std::abs(up - sweep.utv) / (1.0 + sweep.utv),
                                              std::abs(down - sweep.dtv) / (1.0 + sweep.dtv),
                                              std::abs(both - sweep.ttv) / (1.0 + sweep.ttv)});

            const auto chain = brute_force_variations(path, c, OracleMode::ChainRecursion);
            jordan.max_residual = std::max(jordan.max_residual,
                                           std::abs(chain.ttv - chain.utv - chain.dtv));
            oracle.max_residual = std::max({oracle.max_residual,
                                            std::abs(chain.ttv - sweep.ttv),
                                            std::abs(chain.utv - sweep.utv),
                                            std::abs(chain.dtv - sweep.dtv)});
            if (path.size() <= 12) {
                const auto exact = brute_force_variations(path, c, OracleMode::Exhaustive);
                oracle.max_residual = std::max({oracle.max_residual,
                                                std::abs(exact.ttv - chain.ttv),
                                                std::abs(exact.utv - chain.utv),
                                                std::abs(exact.dtv - chain.dtv)});
            }

            const auto pc = optimal_approximation(path, c);
            const auto pc_var = truncated_variations(pc, TruncationLevel(0.0));
            const double gap = uniform_distance(path, pc) - level / 2.0;
            approx.max_residual = std::max({approx.max_residual, gap,
                                            std::abs(pc_var.ttv - sweep.ttv),
                                            std::abs(pc_var.utv - sweep.utv),
                                            std::abs(pc_var.dtv - sweep.dtv)});
        }
    }

    const Suite suites[] = {theorem1, jordan, oracle, approx};
    bool all_pass = true;
    double worst = 0.0;
    for (const Suite& s : suites) {
        all_pass = all_pass && s.passed();
        worst = std::max(worst, s.max_residual);
        out << s.name << ": paths=" << n_paths << " levels=5 max_residual="
            << format_double(s.max_residual) << (s.passed() ? " PASS" : " FAIL") << '\n';
    }
    out << "summary: max identity residual " << (all_pass ? "<= " : "> ")
        << format_double(1e-9) << " (worst " << format_double(worst) << ") "
        << (all_pass ? "PASS" : "FAIL") << '\n';
    return all_pass ? 0 : 1;
}

KilledBMConfig config_from(const Command& cmd) {
    KilledBMConfig cfg;
    cfg.mu = cmd.mu;
    cfg.v = cmd.v;
    cfg.c = cmd.c;
    cfg.dt = cmd.dt;
    cfg.n_paths = cmd.paths;
    cfg.seed = cmd.seed;
    return cfg;
}

int run_mc(const Command& cmd, std::ostream& out) {
    const auto cfg = config_from(cmd);
    const auto est = mc_expected_utv(cfg);
    const double target = *est.target;
    const double z = est.std_error > 0.0 ? (est.mean - target) / est.std_error : 0.0;
    out << "{\"mean\": " << format_double(est.mean)
        << ", \"std_error\": " << format_double(est.std_error)
        << ", \"n\": " << est.n
        << ", \"target\": " << format_double(target)
        << ", \"z_score\": " << format_double(z) << "}\n";
    const double allowance = std::max(4.0 * est.std_error, 0.03 * std::abs(target));
    return std::abs(est.mean - target) <= allowance ? 0 : 1;
}

int run_tail(const Command& cmd, std::ostream& out) {
    const auto cfg = config_from(cmd);
    const auto tail = mc_crossing_tail(cfg, cmd.y, cmd.n_max);
    const auto law = upcrossing_law(cfg.mu, cfg.v, cfg.c, cmd.y);
    const double p1 = tail[0];
    const double ratio = p1 > 0.0 ? tail[1] / p1 : 0.0;
    out << "{\"tail\": [";
    for (std::size_t i = 0; i < tail.size(); ++i) {
        if (i) out << ", ";
        out << format_double(tail[i]);
    }
    out << "], \"ratio\": " << format_double(ratio)
        << ", \"ratio_target\": " << format_double(law.ratio)
        << ", \"p_once_target\": " << format_double(law.p_once)
        << ", \"n\": " << cfg.n_paths << "}\n";

    const double n = static_cast<double>(cfg.n_paths);
    const double se1 = std::sqrt(std::max(p1 * (1.0 - p1), 0.0) / n);
    bool ok = std::abs(p1 - law.p_once) <= std::max(4.0 * se1, 0.015);
    if (p1 > 0.0) {
        const double se_ratio = std::sqrt(std::max(ratio * (1.0 - ratio), 0.0) / (n * p1));
        ok = ok && std::abs(ratio - law.ratio) <= std::max(4.0 * se_ratio, 0.02);
    }
    return ok ? 0 : 1;
}

}  // namespace

int run(const Command& command, std::ostream& out, std::ostream& err) {
    try {
        switch (command.action) {
            case Command::Action::Compute:
                return run_compute(command, out);
            case Command::Action::Profile:
                return run_profile(command, out);
            case Command::Action::Approx:
                return run_approx(command, out);
            case Command::Action::Verify:
                return run_verify(command, out);
            case Command::Action::Mc:
            case Command::Action::Tail: {
                Command merged = command;
                apply_config_file(merged);
                return command.action == Command::Action::Mc ? run_mc(merged, out)
                                                             : run_tail(merged, out);
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace varix::cli
