/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#include "dsv/verifier.hpp"

#include "dsv/errors.hpp"
#include "dsv/smt_script.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dsv {

std::string to_string(RunStatus status) {
    switch (status) {
        case RunStatus::holds: return "holds";
        case RunStatus::violated: return "violated";
        case RunStatus::inconclusive: return "inconclusive";
        case RunStatus::error: return "error";
    }
    return "error";
}

RunStatus Report::overall() const {
    bool any_unknown = false, any_error = false;
    for (const auto& entry : entries) {
        switch (entry.verdict.outcome) {
            case Outcome::violated: return RunStatus::violated;
            case Outcome::unknown: any_unknown = true; break;
            case Outcome::error: any_error = true; break;
            case Outcome::holds: break;
        }
    }
    if (any_unknown) return RunStatus::inconclusive;
    if (any_error) return RunStatus::error;
    return RunStatus::holds;
}

bool ConsistencyMatrix::admissible() const {
    return std::none_of(entries.begin(), entries.end(), [](const ConsistencyEntry& e) {
        return e.verdict.outcome == Outcome::violated;
    });
}

namespace {

Verdict guarded_check(const SmtScript& script, const SolverConfig& cfg) {
    try {
        return check_sat(script, cfg);
    } catch (const std::exception& e) {
        Verdict v;
        v.outcome = Outcome::error;
        v.message = e.what();
        return v;
    }
}

/// Runs `count` independent solver tasks, at most `parallelism` at a time.
template <typename Task>
void run_pool(std::size_t count, int parallelism, Task&& task) {
    if (parallelism <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
#ifdef _OPENMP
    int threads = std::min<std::size_t>(static_cast<std::size_t>(parallelism), count);
    const std::int64_t total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t i = 0; i < total; ++i) task(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < count; ++i) task(i);
#endif
}

} // namespace

Report verify(const Dataset& ds, const LabelSet& ls, const Specification& spec,
              const SolverConfig& cfg, const VerifyOptions& options,
              const std::string& dataset_id) {
    if (spec.properties.empty())
        throw error("specification must contain at least one property");

    SmtScript base = encode_dataset(ds, ls);  // computed once, shared by all checks

    Report report;
    report.dataset_id = dataset_id;
    report.entries.resize(spec.properties.size());
    run_pool(spec.properties.size(), options.parallelism, [&](std::size_t idx) {
        const Property& property = spec.properties[idx];
        report.entries[idx].property = property.name;
        try {
            SmtScript script = base;
            append_property(script, property);
            report.entries[idx].verdict = guarded_check(script, cfg);
        } catch (const std::exception& e) {
            report.entries[idx].verdict.outcome = Outcome::error;
            report.entries[idx].verdict.message = e.what();
        }
    });
    return report;
}

ConsistencyMatrix check_consistency(const Specification& spec, std::size_t feature_count,
                                    const SolverConfig& cfg, bool check_full_conjunction,
                                    const VerifyOptions& options) {
    if (spec.properties.empty())
        throw error("specification must contain at least one property");

    ConsistencyMatrix matrix;
    for (const auto& p : spec.properties) matrix.names.push_back(p.name);

    SmtScript env = environment_script(feature_count);
    const std::size_t k = spec.properties.size();
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = x; y < k; ++y)
            matrix.entries.push_back({x, y, {}});

    run_pool(matrix.entries.size(), options.parallelism, [&](std::size_t idx) {
        ConsistencyEntry& entry = matrix.entries[idx];
        try {
            SmtScript script = env;
            append_property(script, spec.properties[entry.x]);
            if (entry.y != entry.x)
                append_property(script, spec.properties[entry.y]);
            entry.verdict = guarded_check(script, cfg);
        } catch (const std::exception& e) {
            entry.verdict.outcome = Outcome::error;
            entry.verdict.message = e.what();
        }
    });

    if (check_full_conjunction) {
        try {
            SmtScript script = env;
            for (const auto& property : spec.properties) append_property(script, property);
            matrix.full_conjunction = guarded_check(script, cfg);
        } catch (const std::exception& e) {
            Verdict v;
            v.outcome = Outcome::error;
            v.message = e.what();
            matrix.full_conjunction = v;
        }
    }
    return matrix;
}

std::vector<IncrementalPoint> incremental_verify(const Dataset& ds, const Specification& spec,
                                                 const SolverConfig& cfg, std::size_t step,
                                                 const VerifyOptions& options) {
    if (step < 1)
        throw error("incremental step must be >= 1");
    if (spec.properties.empty())
        throw error("specification must contain at least one property");

    std::vector<std::size_t> sizes;
    for (std::size_t s = step; s < ds.m(); s += step) sizes.push_back(s);
    sizes.push_back(ds.m());

    std::vector<IncrementalPoint> series(sizes.size());
    std::vector<SmtScript> bases(sizes.size());
    for (std::size_t idx = 0; idx < sizes.size(); ++idx) {
        Dataset prefix = ds.prefix(sizes[idx]);
        bases[idx] = encode_dataset(prefix, distinct_labels(prefix));
        series[idx].m_prefix = sizes[idx];
        series[idx].report.dataset_id = "prefix:" + std::to_string(sizes[idx]);
        series[idx].report.entries.resize(spec.properties.size());
    }

    const std::size_t per_prefix = spec.properties.size();
    run_pool(sizes.size() * per_prefix, options.parallelism, [&](std::size_t task) {
        std::size_t prefix_idx = task / per_prefix;
        std::size_t prop_idx = task % per_prefix;
        const Property& property = spec.properties[prop_idx];
        ReportEntry& entry = series[prefix_idx].report.entries[prop_idx];
        entry.property = property.name;
        try {
            SmtScript script = bases[prefix_idx];
            append_property(script, property);
            entry.verdict = guarded_check(script, cfg);
        } catch (const std::exception& e) {
            entry.verdict.outcome = Outcome::error;
            entry.verdict.message = e.what();
        }
    });
    return series;
}

namespace {

std::string format_seconds(double seconds) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    out << seconds;
    return out.str();
}

std::string verdict_word(const Verdict& v) {
    if (v.outcome == Outcome::unknown && v.timed_out)
        return "Unknown(timeout)";
    return to_string(v.outcome);
}

nlohmann::json verdict_json(const Verdict& v) {
    nlohmann::json j;
    j["outcome"] = to_string(v.outcome);
    j["timed_out"] = v.timed_out;
    j["seconds"] = v.seconds;
    if (!v.message.empty()) j["message"] = v.message;
    if (!v.model.empty()) j["model"] = v.model;
    return j;
}

} // namespace

std::string to_text(const Report& report) {
    std::ostringstream out;
    if (!report.dataset_id.empty())
        out << "dataset: " << report.dataset_id << "\n";
    for (const auto& entry : report.entries) {
        out << "  " << entry.property << ": " << verdict_word(entry.verdict) << " ("
            << format_seconds(entry.verdict.seconds) << " s)";
        if (!entry.verdict.message.empty())
            out << " -- " << entry.verdict.message;
        out << "\n";
    }
    out << "overall: " << to_string(report.overall()) << "\n";
    return out.str();
}

std::string to_csv(const Report& report) {
    std::ostringstream out;
    out << "property,verdict,seconds\n";
    for (const auto& entry : report.entries)
        out << entry.property << "," << verdict_word(entry.verdict) << ","
            << format_seconds(entry.verdict.seconds) << "\n";
    return out.str();
}

std::string to_json(const Report& report) {
    nlohmann::json j;
    j["dataset"] = report.dataset_id;
    j["overall"] = to_string(report.overall());
    j["properties"] = nlohmann::json::array();
    for (const auto& entry : report.entries) {
        nlohmann::json e = verdict_json(entry.verdict);
        e["name"] = entry.property;
        j["properties"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

std::string to_text(const ConsistencyMatrix& matrix) {
    std::ostringstream out;
    for (const auto& entry : matrix.entries) {
        out << "  {" << matrix.names[entry.x];
        if (entry.y != entry.x) out << ", " << matrix.names[entry.y];
        out << "}: " << verdict_word(entry.verdict);
        if (entry.verdict.outcome == Outcome::violated) out << "  <- contradictory";
        if (!entry.verdict.message.empty()) out << " -- " << entry.verdict.message;
        out << "\n";
    }
    if (matrix.full_conjunction)
        out << "  full conjunction: " << verdict_word(*matrix.full_conjunction) << "\n";
    out << "specification: " << (matrix.admissible() ? "admissible" : "inadmissible") << "\n";
    return out.str();
}

std::string to_json(const ConsistencyMatrix& matrix) {
    nlohmann::json j;
    j["admissible"] = matrix.admissible();
    j["pairs"] = nlohmann::json::array();
    for (const auto& entry : matrix.entries) {
        nlohmann::json e = verdict_json(entry.verdict);
        e["x"] = matrix.names[entry.x];
        e["y"] = matrix.names[entry.y];
        j["pairs"].push_back(std::move(e));
    }
    if (matrix.full_conjunction)
        j["full_conjunction"] = verdict_json(*matrix.full_conjunction);
    return j.dump(2) + "\n";
}

std::string to_csv(const std::vector<IncrementalPoint>& series) {
    std::ostringstream out;
    out << "m,property,verdict,seconds\n";
    for (const auto& point : series)
        for (const auto& entry : point.report.entries)
            out << point.m_prefix << "," << entry.property << "," << verdict_word(entry.verdict)
                << "," << format_seconds(entry.verdict.seconds) << "\n";
    return out.str();
}

} // namespace dsv
