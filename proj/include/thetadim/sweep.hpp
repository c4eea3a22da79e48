// sweep.hpp — exhaustive conformance sweeps: for every canonical spec in a
// configured range, run the brute-force solver (within guards), every
// applicable prediction and construction, and the cross-checks between them.
// Reports are deterministic: rows are ordered by multiplicity then
// lexicographically by lengths, and timing fields stay zero (and the
// timestamp header empty) unless timing is explicitly enabled.
#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "thetadim/resolving.hpp"
#include "thetadim/theorems.hpp"
#include "thetadim/theta_graph.hpp"

namespace thetadim {

struct SweepConfig {
    int m_lo = 3;
    int m_hi = 4;
    int max_s = 6;
    int guard_n = 32;          // brute force only when n <= guard_n
    int max_subset_size = 6;   // search gives up ("skipped") above this size
    int witness_cap = 64;
    int jobs = 1;
    bool pruned = false;
    bool timing = false;
};

struct SweepRow {
    std::string spec;
    int n = 0;
    int m = 0;
    std::optional<int> beta;   // empty when skipped by a guard
    int pred_lo = 0;
    int pred_hi = 0;
    std::string theorem;
    int witness_size = 0;
    bool bounds_ok = true;         // m-3 <= beta <= m
    bool ip_ok = true;             // beta >= identical-path lower bound
    bool prediction_ok = true;     // pred_lo <= beta <= pred_hi
    bool constructions_ok = true;  // every applicable construction verifies
    bool consistency_ok = true;    // exact claims agree and sit inside all bounds
    bool ip_condition_ok = true;   // minimum witnesses hit the required paths
    bool exception = false;        // member of the multiplicity-4 beta=4 set
    std::int64_t ms = 0;

    bool passed() const {
        return bounds_ok && ip_ok && prediction_ok && constructions_ok &&
               consistency_ok && ip_condition_ok;
    }
};

struct SweepReport {
    SweepConfig config;
    std::string generated_at;  // empty unless timing was requested
    std::vector<SweepRow> rows;

    bool all_passed() const {
        for (const SweepRow& r : rows)
            if (!r.passed()) return false;
        return true;
    }
};

// Canonical specs with the given multiplicity, lengths <= max_s, in
// lexicographic order.
inline std::vector<GraphSpec> enumerate_specs(int m, int max_s) {
    std::vector<GraphSpec> out;
    std::vector<int> lengths(m, 1);
    while (true) {
        out.push_back(GraphSpec(lengths));
        int i = m - 1;
        while (i >= 0 && lengths[i] == max_s) --i;
        if (i < 0) break;
        ++lengths[i];
        for (int j = i + 1; j < m; ++j) lengths[j] = lengths[i];
    }
    return out;
}

namespace detail {

inline SweepRow evaluate_spec(const GraphSpec& g, const SweepConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepRow row;
    row.spec = g.literal();
    row.n = g.vertex_count();
    row.m = g.multiplicity();
    row.exception = pattern::beta4_exception(g);

    BetaPrediction pred;
    try {
        pred = predict_beta(g);
        row.pred_lo = pred.lo;
        row.pred_hi = pred.hi;
        row.theorem = pred.theorem_id;
        row.witness_size = pred.witness ? static_cast<int>(pred.witness->size()) : 0;
    } catch (const std::exception&) {
        row.constructions_ok = false;
    }

    std::optional<BetaResult> result;
    if (row.n <= cfg.guard_n) {
        SearchOptions opts;
        opts.witness_cap = cfg.witness_cap;
        opts.pruned = cfg.pruned;
        result = metric_dimension_bounded(g, cfg.max_subset_size, opts);
    }
    if (result) {
        row.beta = result->beta;
        row.bounds_ok = row.m - 3 <= result->beta && result->beta <= row.m;
        row.ip_ok = result->beta >= ip_lower_bound(g);
        row.prediction_ok = row.pred_lo <= result->beta && result->beta <= row.pred_hi;
        for (const LandmarkSet& w : result->witnesses)
            if (!check_ip_internal_vertex_condition(g, w)) row.ip_condition_ok = false;
        if (row.m == 4 && (result->beta == 4) != row.exception) row.consistency_ok = false;
    }

    try {
        for (const ConstructionCheck& c : all_constructions(g)) {
            if (static_cast<int>(c.landmarks.size()) != c.claimed_size ||
                !verify_resolving(g, c.landmarks).resolved) {
                row.constructions_ok = false;
                continue;
            }
            if (c.claims_exact_beta && row.beta && *row.beta != c.claimed_size)
                row.constructions_ok = false;
        }
    } catch (const std::exception&) {
        row.constructions_ok = false;
    }

    const auto exact = exact_claims(g);
    for (std::size_t i = 1; i < exact.size(); ++i)
        if (exact[i].second != exact[0].second) row.consistency_ok = false;
    for (const BoundClaim& b : bound_claims(g)) {
        for (const auto& [id, value] : exact) {
            if (value < b.lo) row.consistency_ok = false;
            if (b.hi >= 0 && value > b.hi) row.consistency_ok = false;
        }
        if (row.beta) {
            if (*row.beta < b.lo) row.consistency_ok = false;
            if (b.hi >= 0 && *row.beta > b.hi) row.consistency_ok = false;
        }
    }

    if (cfg.timing)
        row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return row;
}

inline std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace detail

inline SweepReport run_sweep(const SweepConfig& cfg) {
    SweepReport report;
    report.config = cfg;
    if (cfg.timing) report.generated_at = detail::utc_timestamp();

    std::vector<GraphSpec> specs;
    for (int m = std::max(2, cfg.m_lo); m <= cfg.m_hi; ++m)
        for (GraphSpec& g : enumerate_specs(m, cfg.max_s)) specs.push_back(std::move(g));

    report.rows.resize(specs.size());
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < specs.size(); ++i)
            report.rows[i] = detail::evaluate_spec(specs[i], cfg);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (int t = 0; t < jobs; ++t) {
            workers.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= specs.size()) break;
                    report.rows[i] = detail::evaluate_spec(specs[i], cfg);
                }
            });
        }
        for (std::thread& w : workers) w.join();
    }
    return report;
}

inline std::string flags_string(const SweepRow& r) {
    auto bit = [](bool b) { return b ? '1' : '0'; };
    std::string s;
    s += "bounds=";  s += bit(r.bounds_ok);
    s += ";ip=";     s += bit(r.ip_ok);
    s += ";pred=";   s += bit(r.prediction_ok);
    s += ";cons=";   s += bit(r.constructions_ok);
    s += ";consist="; s += bit(r.consistency_ok);
    s += ";ipcond="; s += bit(r.ip_condition_ok);
    s += ";exc=";    s += bit(r.exception);
    return s;
}

inline std::string to_csv(const SweepReport& report) {
    std::string out = "spec,n,m,beta,pred_lo,pred_hi,theorem,witness_size,flags,ms\n";
    for (const SweepRow& r : report.rows) {
        out += r.spec;
        out += ',' + std::to_string(r.n);
        out += ',' + std::to_string(r.m);
        out += ',';
        out += r.beta ? std::to_string(*r.beta) : std::string("skipped");
        out += ',' + std::to_string(r.pred_lo);
        out += ',' + std::to_string(r.pred_hi);
        out += ',' + r.theorem;
        out += ',' + std::to_string(r.witness_size);
        out += ',' + flags_string(r);
        out += ',' + std::to_string(r.ms);
        out += '\n';
    }
    return out;
}

inline nlohmann::ordered_json to_json(const SweepReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "sweep";
    j["generated_at"] = report.generated_at;
    j["config"] = {{"m_lo", report.config.m_lo},
                   {"m_hi", report.config.m_hi},
                   {"max_s", report.config.max_s},
                   {"guard_n", report.config.guard_n},
                   {"max_subset_size", report.config.max_subset_size},
                   {"witness_cap", report.config.witness_cap},
                   {"pruned", report.config.pruned}};
    j["all_passed"] = report.all_passed();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SweepRow& r : report.rows) {
        nlohmann::ordered_json row;
        row["spec"] = r.spec;
        row["n"] = r.n;
        row["m"] = r.m;
        if (r.beta)
            row["beta"] = *r.beta;
        else
            row["beta"] = "skipped";
        row["pred_lo"] = r.pred_lo;
        row["pred_hi"] = r.pred_hi;
        row["theorem"] = r.theorem;
        row["witness_size"] = r.witness_size;
        row["flags"] = {{"bounds", r.bounds_ok},       {"ip", r.ip_ok},
                        {"pred", r.prediction_ok},     {"cons", r.constructions_ok},
                        {"consist", r.consistency_ok}, {"ipcond", r.ip_condition_ok},
                        {"exc", r.exception}};
        row["ms"] = r.ms;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

// Rows whose best prediction is an interval, with the brute-forced value when
// available; supports conjecture-making, no pass/fail semantics.
struct OpenCaseRow {
    std::string spec;
    int n = 0;
    int m = 0;
    int pred_lo = 0;
    int pred_hi = 0;
    std::string theorem;
    std::optional<int> beta;
};

inline std::vector<OpenCaseRow> open_cases(const SweepReport& report) {
    std::vector<OpenCaseRow> out;
    for (const SweepRow& r : report.rows) {
        if (r.pred_lo >= r.pred_hi) continue;
        out.push_back({r.spec, r.n, r.m, r.pred_lo, r.pred_hi, r.theorem, r.beta});
    }
    return out;
}

inline std::string open_cases_csv(const std::vector<OpenCaseRow>& rows) {
    std::string out = "spec,n,m,pred_lo,pred_hi,theorem,beta\n";
    for (const OpenCaseRow& r : rows) {
        out += r.spec;
        out += ',' + std::to_string(r.n);
        out += ',' + std::to_string(r.m);
        out += ',' + std::to_string(r.pred_lo);
        out += ',' + std::to_string(r.pred_hi);
        out += ',' + r.theorem;
        out += ',';
        out += r.beta ? std::to_string(*r.beta) : std::string("skipped");
        out += '\n';
    }
    return out;
}

inline nlohmann::ordered_json open_cases_json(const std::vector<OpenCaseRow>& rows) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "open-cases";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const OpenCaseRow& r : rows) {
        nlohmann::ordered_json row;
        row["spec"] = r.spec;
        row["n"] = r.n;
        row["m"] = r.m;
        row["pred_lo"] = r.pred_lo;
        row["pred_hi"] = r.pred_hi;
        row["theorem"] = r.theorem;
        if (r.beta)
            row["beta"] = *r.beta;
        else
            row["beta"] = "skipped";
        arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    return j;
}

}  // namespace thetadim
