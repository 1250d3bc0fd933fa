/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#include "dsv/dataset.hpp"
#include "dsv/errors.hpp"
#include "dsv/property.hpp"
#include "dsv/smt_script.hpp"
#include "dsv/solver.hpp"
#include "dsv/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitError = 3;

struct CommonArgs {
    std::string dataset_path;
    std::string properties_dir;
    std::vector<std::string> builtins;
    std::vector<std::string> param_flags;
    std::string params_file;
    std::string solver_path;
    std::vector<std::string> solver_args;
    std::vector<std::string> solver_options;
    double timeout_seconds = 30.0;
    int parallelism = 1;
    std::string format = "text";
    std::string output_path;
    bool skip_header = false;
    bool models = false;
};

std::pair<std::string, dsv::ParamValue> parse_param(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw dsv::error("parameter must look like name=value: '" + text + "'");
    std::string name = text.substr(0, eq);
    std::string value = text.substr(eq + 1);
    bool integral = !value.empty() &&
                    value.find_first_of(".eE") == std::string::npos;
    if (integral) {
        try {
            return {name, dsv::ParamValue{static_cast<std::int64_t>(std::stoll(value))}};
        } catch (const std::exception&) {
            throw dsv::error("parameter '" + name + "' has a malformed value: '" + value + "'");
        }
    }
    return {name, dsv::ParamValue{dsv::DecimalReal::from_string(value)}};
}

std::map<std::string, dsv::ParamValue> collect_params(const CommonArgs& args) {
    std::map<std::string, dsv::ParamValue> params;
    if (!args.params_file.empty()) {
        std::ifstream in(args.params_file);
        if (!in)
            throw dsv::error("cannot open params file: " + args.params_file);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            auto a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            auto b = line.find_last_not_of(" \t\r");
            auto [name, value] = parse_param(line.substr(a, b - a + 1));
            params.insert_or_assign(name, value);
        }
    }
    for (const auto& flag : args.param_flags) {
        auto [name, value] = parse_param(flag);
        params.insert_or_assign(name, value);  // flags win over the file
    }
    return params;
}

dsv::DecimalReal real_param(const std::map<std::string, dsv::ParamValue>& params,
                            const std::string& name, const std::string& builtin) {
    auto it = params.find(name);
    if (it == params.end())
        throw dsv::error("builtin '" + builtin + "' requires parameter '" + name + "'");
    if (const auto* i = std::get_if<std::int64_t>(&it->second))
        return dsv::DecimalReal::from_int(*i);
    return std::get<dsv::DecimalReal>(it->second);
}

std::int64_t int_param(const std::map<std::string, dsv::ParamValue>& params,
                       const std::string& name, const std::string& builtin) {
    auto it = params.find(name);
    if (it == params.end())
        throw dsv::error("builtin '" + builtin + "' requires parameter '" + name + "'");
    if (const auto* i = std::get_if<std::int64_t>(&it->second))
        return *i;
    throw dsv::error("parameter '" + name + "' must be an integer");
}

dsv::Property make_builtin(const std::string& name,
                           const std::map<std::string, dsv::ParamValue>& params,
                           std::optional<std::size_t> m, std::optional<std::size_t> n) {
    auto need_n = [&]() -> std::size_t {
        if (!n)
            throw dsv::error("builtin '" + name +
                             "' needs the feature count; pass --features in check-spec mode");
        return *n;
    };
    if (name == "min_cardinality")
        return dsv::builtin_min_cardinality(int_param(params, "T", name));
    if (name == "minmax_normalized")
        return dsv::builtin_minmax_normalized(real_param(params, "min", name),
                                              real_param(params, "max", name));
    if (name == "coverage_array")
        return dsv::builtin_coverage_array(real_param(params, "delta", name),
                                           real_param(params, "min", name),
                                           real_param(params, "max", name), need_n());
    if (name == "coverage_expanded") {
        if (!m)
            throw dsv::error(
                "builtin 'coverage_expanded' is dataset-specialized and cannot be used in "
                "check-spec mode; use coverage_array there");
        dsv::CoverageExpandedOptions options;
        if (auto it = params.find("grid_step"); it != params.end())
            options.grid_step = real_param(params, "grid_step", name);
        if (auto it = params.find("expansion_limit"); it != params.end())
            options.expansion_limit =
                static_cast<std::size_t>(int_param(params, "expansion_limit", name));
        return dsv::builtin_coverage_expanded(real_param(params, "delta", name),
                                              real_param(params, "min", name),
                                              real_param(params, "max", name), *m, need_n(),
                                              options);
    }
    if (name == "balanced")
        return dsv::builtin_balanced(real_param(params, "beta", name));
    if (name == "no_contradictions")
        return dsv::builtin_no_contradictions(need_n());
    throw dsv::error(
        "unknown builtin '" + name +
        "'; available: min_cardinality, minmax_normalized, coverage_array, coverage_expanded, "
        "balanced, no_contradictions");
}

std::vector<dsv::PropertyParam> file_params(const std::map<std::string, dsv::ParamValue>& params) {
    std::vector<dsv::PropertyParam> out;
    for (const auto& [name, value] : params) {
        if (name == "grid_step" || name == "expansion_limit")
            continue;  // oracle/compile knobs, not SMT symbols
        out.push_back({name, value});
    }
    return out;
}

std::vector<std::string> property_files(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    if (!fs::is_directory(dir))
        throw dsv::error("properties directory not found: " + dir);
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".smt2")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    return files;
}

dsv::Specification build_specification(const CommonArgs& args,
                                       const std::map<std::string, dsv::ParamValue>& params,
                                       std::optional<std::size_t> m,
                                       std::optional<std::size_t> n) {
    std::vector<dsv::Property> properties;
    if (!args.properties_dir.empty()) {
        auto fparams = file_params(params);
        for (const auto& file : property_files(args.properties_dir))
            properties.push_back(dsv::load_property_file(file, fparams));
    }
    for (const auto& name : args.builtins)
        properties.push_back(make_builtin(name, params, m, n));
    if (properties.empty())
        throw dsv::error("no properties: give --properties with .smt2 files and/or --builtin");
    return dsv::make_specification(std::move(properties));
}

dsv::SolverConfig build_solver_config(const CommonArgs& args) {
    dsv::SolverConfig cfg;
    cfg.path = dsv::resolve_solver_path(args.solver_path);
    if (!args.solver_args.empty())
        cfg.args = args.solver_args;
    cfg.timeout = std::chrono::milliseconds(
        static_cast<std::int64_t>(args.timeout_seconds * 1000.0));
    cfg.produce_models = args.models;
    for (const auto& opt : args.solver_options) {
        auto eq = opt.find('=');
        if (eq == std::string::npos || eq == 0)
            throw dsv::error("--solver-option must look like key=value: '" + opt + "'");
        cfg.script_options.emplace_back(opt.substr(0, eq), opt.substr(eq + 1));
    }
    return cfg;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw dsv::error("cannot write output file: " + path);
    out << content;
}

void add_common_flags(CLI::App* cmd, CommonArgs& args, bool wants_dataset,
                      bool wants_properties) {
    if (wants_dataset) {
        cmd->add_option("--dataset,-d", args.dataset_path,
                        "CSV dataset; last column is the expected output")
            ->required();
        cmd->add_flag("--skip-header", args.skip_header, "skip one header line");
    }
    if (wants_properties) {
        cmd->add_option("--properties,-p", args.properties_dir,
                        "directory of .smt2 property files (lexicographic order)");
        cmd->add_option("--builtin,-b", args.builtins,
                        "built-in property by name (repeatable): min_cardinality, "
                        "minmax_normalized, coverage_array, coverage_expanded, balanced, "
                        "no_contradictions");
        cmd->add_option("--param", args.param_flags,
                        "property parameter name=value (repeatable)");
        cmd->add_option("--params-file", args.params_file,
                        "file of name=value parameter lines");
        cmd->add_option("--solver", args.solver_path,
                        "SMT solver executable (default: $DSV_SOLVER, z3 on PATH, or the "
                        "bundled shim)");
        cmd->add_option("--solver-arg", args.solver_args,
                        "solver argument (repeatable; replaces the default '-in -smt2')");
        cmd->add_option("--solver-option", args.solver_options,
                        "extra (set-option :key value) line, key=value (repeatable)");
        cmd->add_option("--timeout", args.timeout_seconds,
                        "per-property solver timeout, seconds")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--parallel", args.parallelism,
                        "max concurrent solver processes")
            ->check(CLI::PositiveNumber);
    }
    cmd->add_option("--output,-o", args.output_path, "write the report here instead of stdout");
}

int exit_code_for(dsv::RunStatus status) {
    switch (status) {
        case dsv::RunStatus::holds: return kExitHolds;
        case dsv::RunStatus::violated: return kExitViolated;
        case dsv::RunStatus::inconclusive: return kExitInconclusive;
        case dsv::RunStatus::error: return kExitError;
    }
    return kExitError;
}

int run_verify(const CommonArgs& args) {
    dsv::Dataset ds = dsv::load_csv_file(args.dataset_path, {args.skip_header});
    dsv::LabelSet ls = dsv::distinct_labels(ds);
    auto params = collect_params(args);
    auto spec = build_specification(args, params, ds.m(), ds.n());
    auto cfg = build_solver_config(args);
    dsv::probe_solver(cfg);

    auto report = dsv::verify(ds, ls, spec, cfg, {args.parallelism}, args.dataset_path);
    if (args.format == "csv")
        write_output(args.output_path, dsv::to_csv(report));
    else if (args.format == "json")
        write_output(args.output_path, dsv::to_json(report));
    else
        write_output(args.output_path, dsv::to_text(report));
    return exit_code_for(report.overall());
}

int run_encode(const CommonArgs& args) {
    dsv::Dataset ds = dsv::load_csv_file(args.dataset_path, {args.skip_header});
    dsv::SmtScript script = dsv::encode_dataset(ds, dsv::distinct_labels(ds));
    write_output(args.output_path, dsv::render(script));
    return kExitHolds;
}

int run_check_spec(const CommonArgs& args, std::size_t features, bool full_conjunction) {
    auto params = collect_params(args);
    auto spec = build_specification(args, params, std::nullopt,
                                    features > 0 ? std::optional<std::size_t>(features)
                                                 : std::nullopt);
    auto cfg = build_solver_config(args);
    dsv::probe_solver(cfg);

    auto matrix =
        dsv::check_consistency(spec, features, cfg, full_conjunction, {args.parallelism});
    write_output(args.output_path,
                 args.format == "json" ? dsv::to_json(matrix) : dsv::to_text(matrix));
    return matrix.admissible() ? kExitHolds : kExitViolated;
}

int run_bench(const CommonArgs& args, std::size_t step) {
    dsv::Dataset ds = dsv::load_csv_file(args.dataset_path, {args.skip_header});
    auto params = collect_params(args);
    auto spec = build_specification(args, params, ds.m(), ds.n());
    auto cfg = build_solver_config(args);
    dsv::probe_solver(cfg);

    auto series = dsv::incremental_verify(ds, spec, cfg, step, {args.parallelism});
    write_output(args.output_path, dsv::to_csv(series));
    return kExitHolds;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dsverify: formal verification of structured datasets via SMT"};
    app.require_subcommand(1);

    CommonArgs verify_args, encode_args, spec_args, bench_args;
    std::size_t features = 0;
    bool full_conjunction = false;
    std::size_t step = 10;

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check every property against a dataset");
    add_common_flags(verify_cmd, verify_args, true, true);
    verify_cmd->add_option("--format", verify_args.format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    verify_cmd->add_flag("--models", verify_args.models,
                         "ask the solver for a model when a property holds");

    CLI::App* encode_cmd =
        app.add_subcommand("encode", "emit the dataset's SMT-LIB encoding");
    add_common_flags(encode_cmd, encode_args, true, false);

    CLI::App* spec_cmd = app.add_subcommand(
        "check-spec", "check pairwise consistency of a specification (no dataset)");
    add_common_flags(spec_cmd, spec_args, false, true);
    spec_cmd->add_option("--features", features,
                         "feature count the properties assume (fixes n)");
    spec_cmd->add_flag("--full-conjunction", full_conjunction,
                       "also check the conjunction of all properties");
    spec_cmd->add_option("--format", spec_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* bench_cmd = app.add_subcommand(
        "bench", "verify growing dataset prefixes and emit a timing/verdict CSV");
    add_common_flags(bench_cmd, bench_args, true, true);
    bench_cmd->add_option("--step", step, "prefix size increment")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help/diagnostic
        return code == 0 ? kExitHolds : kExitError;
    }

    try {
        if (verify_cmd->parsed()) return run_verify(verify_args);
        if (encode_cmd->parsed()) return run_encode(encode_args);
        if (spec_cmd->parsed()) return run_check_spec(spec_args, features, full_conjunction);
        if (bench_cmd->parsed()) return run_bench(bench_args, step);
    } catch (const std::exception& e) {
        std::cerr << "dsverify: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
