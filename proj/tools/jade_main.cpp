// jade: evaluation-pipeline CLI.
//
// Subcommands:
//   validate  check a skill library, dataset, and tier table
//   eval      evaluate one report against one benchmark query
//   bench     run the full benchmark with replicates and persistence
//   report    re-render leaderboard tables from persisted results

#include "jade/backend_factory.hpp"
#include "jade/jade.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBackend = 2;
constexpr int kExitPartial = 3;

int classify_error(const std::exception& e) {
    if (dynamic_cast<const jade::BackendError*>(&e) || dynamic_cast<const jade::ToolError*>(&e) ||
        dynamic_cast<const jade::ToolBudgetExceeded*>(&e) ||
        dynamic_cast<const jade::SchemaError*>(&e) || dynamic_cast<const jade::StageError*>(&e)) {
        return kExitBackend;
    }
    return kExitValidation;
}

struct CommonFlags {
    std::string config_path;
    std::string skills;
    std::string dataset;
    std::string tier_table;
    std::string reports_dir;
    std::string output_dir;
    int replicates = 0;
    double tau = -1.0;
    int tool_budget = 0;
    std::string current_date;
};

/// Config file first, explicit flags win.
jade::RunConfig resolve_config(const CommonFlags& flags, const CLI::App& cmd) {
    jade::RunConfig cfg;
    if (!flags.config_path.empty()) cfg = jade::load_run_config_file(flags.config_path);
    if (cmd.count("--skills")) cfg.skill_library_path = flags.skills;
    if (cmd.count("--dataset")) cfg.dataset_path = flags.dataset;
    if (cmd.count("--tier-table")) cfg.tier_table_path = flags.tier_table;
    if (cmd.count("--reports")) cfg.reports_dir = flags.reports_dir;
    if (cmd.count("--out")) cfg.output_dir = flags.output_dir;
    if (cmd.count("--replicates")) cfg.replicates = flags.replicates;
    if (cmd.count("--tau")) cfg.tau = flags.tau;
    if (cmd.count("--tool-budget")) cfg.tool_budget = flags.tool_budget;
    if (cmd.count("--current-date")) cfg.current_date = flags.current_date;
    if (cfg.replicates < 1) throw jade::ConfigError("replicates must be >= 1");
    return cfg;
}

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "Run config JSON file");
    cmd->add_option("--skills", flags.skills, "Skill library file");
    cmd->add_option("--dataset", flags.dataset, "Benchmark dataset file");
    cmd->add_option("--tier-table", flags.tier_table, "Source tier table file");
    cmd->add_option("--reports", flags.reports_dir, "Reports directory (<model>/<query_id>.txt)");
    cmd->add_option("--out", flags.output_dir, "Output directory");
    cmd->add_option("--replicates", flags.replicates, "Replicates per (model, query)");
    cmd->add_option("--tau", flags.tau, "Evidence verification threshold");
    cmd->add_option("--tool-budget", flags.tool_budget, "Max tool calls per claim");
    cmd->add_option("--current-date", flags.current_date, "Date shown to the verification agent");
}

jade::TierTable load_tiers(const jade::RunConfig& cfg) {
    return cfg.tier_table_path.empty() ? jade::TierTable::standard()
                                       : jade::TierTable::load_file(cfg.tier_table_path);
}

int cmd_validate(const CommonFlags& flags, const CLI::App& cmd) {
    const jade::RunConfig cfg = resolve_config(flags, cmd);
    const auto& taxonomy = jade::Taxonomy::standard();

    if (cfg.skill_library_path.empty()) throw jade::ConfigError("--skills (or config) is required");
    const auto skills = jade::SkillLibrary::load_file(cfg.skill_library_path, taxonomy);
    std::cout << "skills: OK (" << skills.skills().size() << " skills, version "
              << skills.version() << ")\n";

    if (!cfg.dataset_path.empty()) {
        const auto queries = jade::ingest_file(cfg.dataset_path, taxonomy);
        std::cout << "dataset: OK (" << queries.size() << " queries)\n";
    }
    if (!cfg.tier_table_path.empty()) {
        const auto tiers = jade::TierTable::load_file(cfg.tier_table_path);
        std::cout << "tier table: OK (" << tiers.entries().size() << " entries)\n";
    }
    return kExitOk;
}

int cmd_eval(const CommonFlags& flags, const CLI::App& cmd, int query_id,
             const std::string& report_path, const std::string& out_path) {
    jade::RunConfig cfg = resolve_config(flags, cmd);
    jade::validate_config_paths(cfg);
    const auto& taxonomy = jade::Taxonomy::standard();
    const auto skills = jade::SkillLibrary::load_file(cfg.skill_library_path, taxonomy);
    const auto tiers = load_tiers(cfg);
    const auto queries = jade::ingest_file(cfg.dataset_path, taxonomy);

    const jade::BenchQuery* query = nullptr;
    for (const auto& q : queries) {
        if (q.id == query_id) query = &q;
    }
    if (!query) {
        throw jade::ConfigError("query id " + std::to_string(query_id) + " not in dataset");
    }
    const std::string report = jade::read_text_file(report_path);

    const auto factory = jade::make_backend_factory(cfg);
    auto generator = factory.generator();
    auto judge = factory.judge();
    auto verifier = factory.verifier();
    auto tools = factory.tools();
    jade::PipelineBackends backends{*generator, *judge, *verifier, *tools};

    const auto bundle = jade::evaluate(*query, report, cfg, skills, tiers, backends);
    const std::string rendered = jade::result_to_json(bundle.result).dump(2);
    if (out_path.empty()) {
        std::cout << rendered << "\n";
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        out << rendered << "\n";
        std::cout << "result written to " << out_path << "\n";
    }
    return kExitOk;
}

int cmd_bench(const CommonFlags& flags, const CLI::App& cmd) {
    jade::RunConfig cfg = resolve_config(flags, cmd);
    jade::validate_config_paths(cfg);
    const auto& taxonomy = jade::Taxonomy::standard();
    const auto skills = jade::SkillLibrary::load_file(cfg.skill_library_path, taxonomy);
    const auto tiers = load_tiers(cfg);
    const auto queries = jade::ingest_file(cfg.dataset_path, taxonomy);
    const auto models = jade::discover_models(cfg.reports_dir);
    if (models.empty()) throw jade::ConfigError("no model directories under " + cfg.reports_dir);

    const auto factory = jade::make_backend_factory(cfg);
    const auto outcome = jade::run_replicates(queries, models, cfg, skills, tiers, factory);

    std::cout << jade::render_leaderboard(outcome.rows);
    std::cout << "\nrun " << outcome.run_id << ": " << outcome.evaluations_run << " evaluated, "
              << outcome.evaluations_skipped << " resumed, results in " << outcome.results_path
              << "\n";
    if (!outcome.missing.empty()) {
        std::cout << "missing reports:\n";
        for (const auto& m : outcome.missing) {
            std::cout << "  " << m.model_id << "/" << m.query_id << ".txt\n";
        }
        return kExitPartial;
    }
    return kExitOk;
}

int cmd_report(const std::string& results_dir, bool as_json) {
    const auto results_path =
        (std::filesystem::path(results_dir) / "results.jsonl").string();
    if (!std::filesystem::exists(results_path)) {
        throw jade::ConfigError("no results.jsonl under " + results_dir);
    }
    const auto results = jade::detail::load_existing_results(results_path);
    if (results.empty()) throw jade::ConfigError("no result records in " + results_path);

    std::set<std::string> models;
    std::set<int> query_ids;
    int replicates = 0;
    for (const auto& [key, numbers] : results) {
        models.insert(std::get<0>(key));
        query_ids.insert(std::get<1>(key));
        replicates = std::max(replicates, std::get<2>(key) + 1);
    }
    const auto rows = jade::aggregate_rows(
        results, {models.begin(), models.end()}, {query_ids.begin(), query_ids.end()}, replicates);
    if (as_json) {
        std::cout << jade::rows_to_json(rows).dump(2) << "\n";
    } else {
        std::cout << jade::render_leaderboard(rows);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"JADE evaluation pipeline"};
    app.require_subcommand(1);

    CommonFlags flags;

    auto* validate = app.add_subcommand("validate", "Validate skills, dataset and tier table");
    add_common_flags(validate, flags);

    auto* eval = app.add_subcommand("eval", "Evaluate one report against one query");
    add_common_flags(eval, flags);
    int query_id = 0;
    std::string report_path;
    std::string out_path;
    eval->add_option("--query-id", query_id, "Query id from the dataset")->required();
    eval->add_option("--report", report_path, "Report text file")->required();
    eval->add_option("--result-out", out_path, "Write the result JSON here instead of stdout");

    auto* bench = app.add_subcommand("bench", "Run the benchmark with replicates");
    add_common_flags(bench, flags);

    auto* report = app.add_subcommand("report", "Render tables from persisted results");
    std::string results_dir;
    bool as_json = false;
    report->add_option("--results", results_dir, "Run output directory")->required();
    report->add_flag("--json", as_json, "Emit machine JSON instead of the text table");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(flags, *validate);
        if (eval->parsed()) return cmd_eval(flags, *eval, query_id, report_path, out_path);
        if (bench->parsed()) return cmd_bench(flags, *bench);
        if (report->parsed()) return cmd_report(results_dir, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_error(e);
    }
    return kExitOk;
}
