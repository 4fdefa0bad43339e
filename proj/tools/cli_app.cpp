#include "cli_app.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "redcheck/builtins.hpp"
#include "redcheck/coloring.hpp"
#include "redcheck/rank.hpp"

namespace redcheck {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotReducible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitMixed = 3;

struct CommonOptions {
    std::vector<std::string> builtins;
    std::vector<std::string> files;
    std::string format = "text";
    std::string out_path;
    bool oracle_check = false;
    bool stage_trace = false;
    int verbosity = 0;
};

void add_pattern_options(CLI::App* cmd, CommonOptions& opts, bool with_report) {
    cmd->add_option("--builtin", opts.builtins,
                    "built-in pattern name, or 'all' (repeatable)")
        ->type_size(1);
    cmd->add_option("files", opts.files, "pattern files");
    if (with_report) {
        cmd->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", opts.out_path, "write the report to a file");
        cmd->add_flag("--oracle-check", opts.oracle_check,
                      "cross-check every matching decision against the brute-force oracle");
        cmd->add_flag("--stage-trace", opts.stage_trace,
                      "print newly ranked class counts per stage (text format)");
    }
    cmd->add_flag("-v,--verbose", opts.verbosity, "more diagnostics on stderr");
}

struct LoadedPattern {
    std::string source;  // builtin name or file path
    Pattern pattern;
};

// Resolves builtin names and files in the order given; failures go to err.
bool load_patterns(const CommonOptions& opts, std::vector<LoadedPattern>& loaded,
                   int& failed, std::ostream& err) {
    failed = 0;
    for (const auto& name : opts.builtins) {
        if (name == "all") {
            for (const auto& p : all_builtins()) loaded.push_back({p.name, p});
            continue;
        }
        try {
            loaded.push_back({name, builtin(name)});
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            ++failed;
        }
    }
    for (const auto& path : opts.files) {
        std::ifstream in(path);
        if (!in) {
            err << path << ": error: cannot open file\n";
            ++failed;
            continue;
        }
        std::ostringstream text;
        text << in.rdbuf();
        try {
            loaded.push_back({path, parse_pattern(text.str())});
        } catch (const std::exception& e) {
            err << path << ": error: " << e.what() << '\n';
            ++failed;
        }
    }
    if (loaded.empty() && failed == 0) {
        err << "error: no pattern selected (use --builtin or pass files)\n";
        return false;
    }
    return true;
}

int exit_code_for(int failed, bool loaded_any, bool all_reducible) {
    if (failed > 0) return loaded_any ? kExitMixed : kExitInputError;
    return all_reducible ? kExitOk : kExitNotReducible;
}

std::string pair_to_string(const ColorPair& pair) {
    return "(" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ")";
}

std::string verdict_line(const Verdict& v) {
    std::ostringstream os;
    os << v.pattern_name << ": " << (v.reducible ? "reducible" : "NOT reducible")
       << "  classes=" << v.total_classes << "  k0=" << v.k0 << "  ranks:";
    for (std::size_t c : v.histogram) os << ' ' << c;
    if (!v.reducible) os << "  unranked=" << v.unranked.size();
    return os.str();
}

nlohmann::json report_json(const Verdict& v, const RankTable& table) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : table.classes) {
        nlohmann::json entry;
        entry["rep"] = coloring_to_string(c.representative);
        entry["orbit_size"] = c.orbit_size;
        entry["rank"] = c.rank ? nlohmann::json(*c.rank) : nlohmann::json(nullptr);
        entry["witness_pair"] =
            c.witness_pair ? nlohmann::json(pair_to_string(*c.witness_pair))
                           : nlohmann::json(nullptr);
        classes.push_back(entry);
    }
    nlohmann::json report;
    report["pattern"] = v.pattern_name;
    report["reducible"] = v.reducible;
    report["k0"] = v.k0;
    report["total_classes"] = v.total_classes;
    report["histogram"] = v.histogram;
    report["classes"] = classes;
    return report;
}

int emit(const CommonOptions& opts, const std::string& report, std::ostream& out,
         std::ostream& err) {
    if (opts.out_path.empty()) {
        out << report;
        return kExitOk;
    }
    std::ofstream file(opts.out_path);
    if (!file) {
        err << opts.out_path << ": error: cannot write file\n";
        return kExitInputError;
    }
    file << report;
    return kExitOk;
}

int cmd_check(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    std::vector<LoadedPattern> loaded;
    int failed = 0;
    if (!load_patterns(opts, loaded, failed, err)) return kExitInputError;

    RankOptions rank_opts;
    rank_opts.oracle_check = opts.oracle_check;

    std::vector<Verdict> verdicts;
    std::vector<RankTable> tables;
    for (const auto& lp : loaded) {
        tables.push_back(compute_ranks(lp.pattern, rank_opts));
        verdicts.push_back(make_verdict(lp.pattern.name, tables.back()));
        if (opts.verbosity > 0)
            err << lp.source << ": " << tables.back().stages_executed << " stages\n";
    }

    std::ostringstream report;
    if (opts.format == "csv") {
        report << rank_histogram_table_csv(verdicts);
    } else if (opts.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t i = 0; i < verdicts.size(); ++i)
            arr.push_back(report_json(verdicts[i], tables[i]));
        report << arr.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
            report << verdict_line(verdicts[i]) << '\n';
            if (opts.stage_trace) {
                const auto& t = tables[i];
                for (std::size_t k = 1; k < t.stage_counts.size(); ++k)
                    report << "  stage " << k << ": " << t.stage_counts[k]
                           << " newly ranked\n";
                report << "  stage " << t.stage_counts.size() << ": 0 newly ranked (fixpoint)\n";
            }
        }
        if (!verdicts.empty()) {
            report << '\n';
            report << rank_histogram_table_text(verdicts);
        }
    }
    int emit_rc = emit(opts, report.str(), out, err);
    if (emit_rc != kExitOk) return emit_rc;

    bool all_reducible = true;
    for (const auto& v : verdicts) all_reducible = all_reducible && v.reducible;
    return exit_code_for(failed, !verdicts.empty(), all_reducible);
}

int cmd_classes(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    std::vector<LoadedPattern> loaded;
    int failed = 0;
    if (!load_patterns(opts, loaded, failed, err)) return kExitInputError;

    RankOptions rank_opts;
    rank_opts.oracle_check = opts.oracle_check;

    std::ostringstream report;
    if (opts.format == "csv") report << "pattern,rep,orbit_size,rank,witness_pair\n";
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& lp : loaded) {
        RankTable table = compute_ranks(lp.pattern, rank_opts);
        if (opts.format == "json") {
            arr.push_back(report_json(make_verdict(lp.pattern.name, table), table));
            continue;
        }
        if (opts.format == "csv") {
            for (const auto& c : table.classes) {
                report << lp.pattern.name << ',' << coloring_to_string(c.representative)
                       << ',' << c.orbit_size << ',';
                if (c.rank) report << *c.rank;
                report << ',';
                if (c.witness_pair) report << '"' << pair_to_string(*c.witness_pair) << '"';
                report << '\n';
            }
            continue;
        }
        report << "pattern " << lp.pattern.name << ": " << table.total() << " classes\n";
        report << "rep  orbit  rank  pair\n";
        for (const auto& c : table.classes) {
            report << coloring_to_string(c.representative) << "  " << std::setw(5)
                   << c.orbit_size << "  " << std::setw(4);
            if (c.rank)
                report << *c.rank;
            else
                report << "none";
            report << "  " << (c.witness_pair ? pair_to_string(*c.witness_pair) : "-")
                   << '\n';
        }
    }
    if (opts.format == "json") report << arr.dump(2) << '\n';
    int emit_rc = emit(opts, report.str(), out, err);
    if (emit_rc != kExitOk) return emit_rc;
    return failed > 0 ? (loaded.empty() ? kExitInputError : kExitMixed) : kExitOk;
}

int cmd_validate(const CommonOptions& opts, std::ostream& out, std::ostream& err) {
    int failed = 0;
    int checked = 0;

    auto report_pattern = [&](const std::string& source, const Pattern& p) {
        LineGraphAdjacency lg = line_graph(p);
        out << source << ": ok: " << p.vertex_count << " vertices, "
            << p.internal_edges.size() << " internal edges, " << p.frontier_size()
            << " half-edges, symmetry order " << p.symmetries.size();
        if (opts.verbosity > 0) out << ", " << lg.edge_count() << " line-graph vertices";
        out << '\n';
    };

    for (const auto& name : opts.builtins) {
        if (name == "all") {
            for (const auto& p : all_builtins()) {
                report_pattern(p.name, p);
                ++checked;
            }
            continue;
        }
        ++checked;
        try {
            report_pattern(name, builtin(name));
        } catch (const std::exception& e) {
            err << "error: " << e.what() << '\n';
            ++failed;
        }
    }
    for (const auto& path : opts.files) {
        ++checked;
        std::ifstream in(path);
        if (!in) {
            err << path << ": error: cannot open file\n";
            ++failed;
            continue;
        }
        std::ostringstream text;
        text << in.rdbuf();
        try {
            report_pattern(path, parse_pattern(text.str()));
        } catch (const std::exception& e) {
            err << path << ": error: " << e.what() << '\n';
            ++failed;
        }
    }
    if (checked == 0) {
        err << "error: no pattern selected (use --builtin or pass files)\n";
        return kExitInputError;
    }
    return failed == 0 ? kExitOk : kExitInputError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"reducibility checker for plane subcubic patterns"};
    app.require_subcommand(1);

    CommonOptions check_opts, classes_opts, validate_opts;
    CLI::App* check = app.add_subcommand(
        "check", "rank all coloring classes and report reducibility");
    add_pattern_options(check, check_opts, true);
    CLI::App* classes = app.add_subcommand(
        "classes", "list class representatives with orbit size, rank and witness pair");
    add_pattern_options(classes, classes_opts, true);
    CLI::App* validate =
        app.add_subcommand("validate", "parse and validate pattern files");
    add_pattern_options(validate, validate_opts, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (check->parsed()) return cmd_check(check_opts, out, err);
        if (classes->parsed()) return cmd_classes(classes_opts, out, err);
        return cmd_validate(validate_opts, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace redcheck
