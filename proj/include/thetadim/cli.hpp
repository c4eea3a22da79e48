// cli.hpp — command-line front end: beta, verify, sweep, open-cases, cycles.
// Exit codes: 0 success / all checks pass, 1 conformance or verdict failure,
// 2 usage or parse error, 3 brute-force guard exceeded without --force.
#pragma once

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thetadim/cycles.hpp"
#include "thetadim/literals.hpp"
#include "thetadim/resolving.hpp"
#include "thetadim/sweep.hpp"
#include "thetadim/theorems.hpp"

namespace thetadim::cli {

inline std::string format_landmarks(const LandmarkSet& w, const GraphSpec& g) {
    std::string s = "{";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ", ";
        s += format_vertex(w[i], g);
    }
    return s + "}";
}

inline std::string format_distance_vector(const DistanceVector& r) {
    std::string s = "(";
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(r[i]);
    }
    return s + ")";
}

namespace detail {

inline int write_output(const std::string& content, const std::string& path,
                        std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << content;
        return 0;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot write output file '" << path << "'\n";
        return 2;
    }
    f << content;
    return f.good() ? 0 : 2;
}

inline int cmd_beta(const std::string& spec_literal, bool all_witnesses, bool force,
                    int guard_n, int witness_cap, std::ostream& out, std::ostream& err) {
    const GraphSpec g = parse_spec_literal(spec_literal);
    if (g.vertex_count() > guard_n && !force) {
        err << "guard exceeded: n=" << g.vertex_count() << " > " << guard_n
            << " (rerun with --force or raise --guard-n)\n";
        return 3;
    }
    SearchOptions opts;
    opts.witness_cap = witness_cap;
    const BetaResult result = metric_dimension(g, opts);
    const BetaPrediction pred = predict_beta(g);

    if (g.is_cycle()) {
        out << "beta=" << result.beta << " (cycle C" << g.vertex_count() << ")\n";
    } else {
        out << "beta=" << result.beta << " predicted=";
        if (pred.exact())
            out << pred.lo;
        else
            out << "[" << pred.lo << "," << pred.hi << "]";
        out << " (" << pred.theorem_id << ")\n";
    }
    if (!result.witnesses.empty() && !all_witnesses)
        out << "witness: " << format_landmarks(result.witnesses.front(), g) << "\n";
    if (all_witnesses) {
        out << "witnesses (count=" << result.witness_count
            << ", shown=" << result.witnesses.size() << "):\n";
        for (const LandmarkSet& w : result.witnesses)
            out << "  " << format_landmarks(w, g) << "\n";
    }
    return 0;
}

inline int cmd_verify(const std::string& spec_literal,
                      const std::vector<std::string>& vertex_literals, std::ostream& out,
                      std::ostream&) {
    const GraphSpec g = parse_spec_literal(spec_literal);
    LandmarkSet w;
    for (const std::string& lit : vertex_literals)
        w.push_back(parse_vertex_literal(lit, g));
    const ResolutionVerdict verdict = verify_resolving(g, w);
    if (verdict.resolved) {
        out << "resolving\n";
        return 0;
    }
    const auto& [a, b] = *verdict.collision;
    out << "NOT resolving: " << format_vertex(a, g) << " ~ " << format_vertex(b, g)
        << " both " << format_distance_vector(vector_representation(g, w, a)) << "\n";
    return 1;
}

inline int cmd_sweep(const SweepConfig& cfg, const std::string& format,
                     const std::string& out_path, std::ostream& out, std::ostream& err) {
    const SweepReport report = run_sweep(cfg);
    const std::string content =
        format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
    const int rc = write_output(content, out_path, out, err);
    if (rc != 0) return rc;
    if (!out_path.empty())
        err << (report.all_passed() ? "sweep: all rows passed\n"
                                    : "sweep: some rows FAILED\n");
    return report.all_passed() ? 0 : 1;
}

inline int cmd_open_cases(const SweepConfig& cfg, const std::string& format,
                          const std::string& out_path, std::ostream& out,
                          std::ostream& err) {
    const SweepReport report = run_sweep(cfg);
    const std::vector<OpenCaseRow> rows = open_cases(report);
    const std::string content =
        format == "csv" ? open_cases_csv(rows) : open_cases_json(rows).dump(2) + "\n";
    return write_output(content, out_path, out, err);
}

inline int cmd_cycles(int max_n, std::ostream& out, std::ostream&) {
    bool all_ok = true;
    for (int n = 3; n <= max_n; ++n) {
        const CycleSpec c(n);
        bool ok = true;

        // Resolving pairs match the MMD characterization.
        for (int w1 = 0; w1 < n && ok; ++w1) {
            for (int w2 = w1 + 1; w2 < n && ok; ++w2) {
                const bool resolves = cycle_pair_resolves(c, w1, w2);
                const auto m1 = cycle_mmd_set(c, w1);
                const auto m2 = cycle_mmd_set(c, w2);
                const bool mmd_pair = m1 == std::vector<int>{w2} && m2 == std::vector<int>{w1};
                if (resolves != !mmd_pair) ok = false;
                if (n % 2 == 1 && !resolves) ok = false;
                if (n >= 6 && cycle_double_place_criterion(c, w1, w2) == resolves)
                    ok = false;
            }
        }
        // Unique antipode and unique equidistant pairs on even cycles.
        if (n % 2 == 0) {
            for (int u = 0; u < n && ok; ++u) {
                const AntipodalStructure st = cycle_antipodal_structure(c, u);
                int at_max = 0;
                for (int v = 0; v < n; ++v)
                    if (cycle_distance(n, u, v) == n / 2) ++at_max;
                if (at_max != 1 || cycle_distance(n, u, st.antipode) != n / 2) ok = false;
                for (int i = 1; i < n / 2 && ok; ++i) {
                    int count = 0;
                    for (int v = 0; v < n; ++v)
                        if (cycle_distance(n, u, v) == i) ++count;
                    if (count != 2) ok = false;
                }
            }
        }
        // beta(C_n) = 2 through the theta-graph solver (n >= 4).
        if (n >= 4) {
            const GraphSpec g({1, n - 3});
            if (metric_dimension(g).beta != 2) ok = false;
        }
        out << "C" << n << (ok ? ": ok" : ": FAIL") << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}

}  // namespace detail

// Parses and runs one CLI invocation; args exclude the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact metric-dimension computations for generalized theta graphs"};
    app.require_subcommand(1);

    std::string spec_literal;
    std::vector<std::string> vertex_literals;
    bool all_witnesses = false;
    bool force = false;
    SweepConfig cfg;
    std::string format = "json";
    std::string out_path;
    int max_n = 24;

    CLI::App* beta = app.add_subcommand("beta", "compute beta for one spec");
    beta->add_option("spec", spec_literal, "spec literal, e.g. theta:1,2,3")->required();
    beta->add_flag("--all-witnesses", all_witnesses, "list every minimum resolving set");
    beta->add_flag("--force", force, "run brute force past the vertex guard");
    beta->add_option("--guard-n", cfg.guard_n, "vertex count guard for brute force");
    beta->add_option("--witness-cap", cfg.witness_cap, "max stored witnesses");

    CLI::App* verify = app.add_subcommand("verify", "check whether landmarks resolve a spec");
    verify->add_option("spec", spec_literal, "spec literal")->required();
    verify->add_option("vertices", vertex_literals, "landmarks: c1, c2, or v:i:j")
        ->required()
        ->expected(-1);

    auto add_sweep_options = [&](CLI::App* cmd) {
        cmd->add_option("--min-m", cfg.m_lo, "smallest multiplicity (default 3)");
        cmd->add_option("--max-m", cfg.m_hi, "largest multiplicity (default 4)");
        cmd->add_option("--max-s", cfg.max_s, "largest per-path length (default 6)");
        cmd->add_option("--guard-n", cfg.guard_n, "brute force only when n <= guard");
        cmd->add_option("--max-k", cfg.max_subset_size, "subset size ceiling before skipping");
        cmd->add_option("--witness-cap", cfg.witness_cap, "max stored witnesses per spec");
        cmd->add_option("--jobs", cfg.jobs, "worker threads");
        cmd->add_flag("--pruned", cfg.pruned, "prune path-permutation-equivalent subsets");
        cmd->add_flag("--timing", cfg.timing, "record wall times (report no longer byte-stable)");
        cmd->add_option("--format", format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", out_path, "output path (stdout when omitted)");
    };
    CLI::App* sweep = app.add_subcommand("sweep", "exhaustive conformance sweep");
    add_sweep_options(sweep);
    CLI::App* open = app.add_subcommand("open-cases",
                                        "specs whose best prediction is an interval");
    add_sweep_options(open);

    CLI::App* cycles = app.add_subcommand("cycles", "verify the cycle propositions");
    cycles->add_option("--max-n", max_n, "largest cycle order (default 24)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (beta->parsed())
            return detail::cmd_beta(spec_literal, all_witnesses, force, cfg.guard_n,
                                    cfg.witness_cap, out, err);
        if (verify->parsed()) return detail::cmd_verify(spec_literal, vertex_literals, out, err);
        if (sweep->parsed()) return detail::cmd_sweep(cfg, format, out_path, out, err);
        if (open->parsed()) return detail::cmd_open_cases(cfg, format, out_path, out, err);
        if (cycles->parsed()) return detail::cmd_cycles(max_n, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace thetadim::cli
