#pragma once

#include "jade/backend.hpp"
#include "jade/config.hpp"
#include "jade/dataset.hpp"
#include "jade/generation.hpp"
#include "jade/judge.hpp"
#include "jade/result.hpp"
#include "jade/scoring.hpp"
#include "jade/skills.hpp"
#include "jade/tools.hpp"
#include "jade/verify.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace jade {

namespace detail {

template <typename F>
auto run_stage(const char* stage, F&& fn) {
    try {
        return fn();
    } catch (const StageError&) {
        throw;
    } catch (const Error& e) {
        throw StageError(stage, e.what());
    }
}

} // namespace detail

inline Clock make_clock(const std::string& spec) {
    if (spec == "system") return system_clock_seconds();
    if (spec.rfind("fixed:", 0) == 0) return fixed_clock(std::stoll(spec.substr(6)));
    throw ConfigError("clock must be 'system' or 'fixed:<unix-seconds>', got '" + spec + "'");
}

/// Everything evaluate() produces: the scored result plus the audit
/// records the persistence layer appends to the run stream.
struct EvaluationBundle {
    EvaluationResult result;
    Checklist query_checklist;
    GenerationRecord query_record;
    Checklist report_checklist;
    GenerationRecord report_record;
    std::vector<Claim> claims;
};

struct PipelineBackends {
    LLMBackend& generator;
    LLMBackend& judge;
    LLMBackend& verifier;
    ToolSuite& tools;
};

/// Runs the full per-report pipeline:
/// activate -> compose -> query checklist -> report checklist ->
/// verify evidence claims -> judge -> gate -> aggregate.
/// Component errors are annotated with their stage; a verification
/// failure on a single claim floors that claim instead of aborting.
inline EvaluationBundle evaluate(const BenchQuery& query, const std::string& report,
                                 const RunConfig& cfg, const SkillLibrary& skills,
                                 const TierTable& tiers, PipelineBackends& backends) {
    if (report.empty()) throw EmptyReport();

    EvaluationBundle bundle;
    bundle.result.query_id = query.id;
    bundle.result.run_id = cfg.run_id();

    GenOptions gen_options;
    gen_options.weights = cfg.weights;
    gen_options.bounds = cfg.bounds;
    gen_options.clock = make_clock(cfg.clock);

    const auto activated = detail::run_stage(
        "activate", [&] { return activate_skills(query.labels(), skills); });
    const auto rubric = detail::run_stage("compose", [&] { return compose_rubric(activated); });

    detail::run_stage("query-checklist", [&] {
        auto generated = generate_query_checklist(query.query, rubric, backends.generator,
                                                  gen_options);
        bundle.query_checklist = std::move(generated.checklist);
        bundle.query_record = std::move(generated.record);
        return 0;
    });

    detail::run_stage("report-checklist", [&] {
        auto generated =
            generate_report_checklist(query.query, report, backends.generator, gen_options);
        bundle.report_checklist = std::move(generated.checklist);
        bundle.claims = std::move(generated.claims);
        bundle.report_record = std::move(generated.record);
        return 0;
    });

    // Verify evidence claims. A failing claim scores via the floor rather
    // than aborting the evaluation.
    VerifyOptions verify_options{cfg.tool_budget, cfg.current_date};
    for (const auto& claim : bundle.claims) {
        if (claim.kind != ItemType::evidence) continue;
        try {
            bundle.result.verified_claims.push_back(
                verify_claim(claim, backends.tools, backends.verifier, verify_options));
        } catch (const Error& e) {
            VerifiedClaim floor;
            floor.claim = claim;
            floor.verdict.conclusion = VerificationVerdict::Conclusion::no;
            floor.verdict.confidence = 100;
            floor.verdict.reason.summary = std::string("verification failed: ") + e.what();
            floor.v_score = map_verdict(floor.verdict);
            bundle.result.verified_claims.push_back(std::move(floor));
        }
    }

    // Judge all query items and the report's reasoning items, then gate.
    std::vector<ChecklistItem> judged_items = bundle.query_checklist.items;
    for (const auto& item : bundle.report_checklist.items) {
        if (item.item_type == ItemType::reasoning) judged_items.push_back(item);
    }
    bundle.result.query_item_count = bundle.query_checklist.items.size();

    detail::run_stage("judge", [&] {
        for (const auto& item : judged_items) {
            ItemJudgment judgment = judge_item(query.query, report, item,
                                               bundle.result.verified_claims, backends.judge);
            bundle.result.item_judgments.push_back(
                gate(judgment, item, bundle.result.verified_claims, cfg.tau));
        }
        return 0;
    });

    detail::run_stage("score", [&] {
        bundle.result.s_reason = reasoning_score(bundle.result.item_judgments, judged_items);
        const EvidenceScore evid = evidence_score(bundle.result.verified_claims);
        bundle.result.s_evid = evid.value;
        bundle.result.no_evidence = evid.no_evidence;
        bundle.result.token_count = count_tokens(report);
        const FinalScores finals =
            final_scores(bundle.result.s_reason, bundle.result.s_evid, bundle.result.token_count);
        bundle.result.s_final = finals.s_final;
        bundle.result.u_density = finals.u_density;

        // Credibility rates the report's own citations, in claim order.
        std::vector<std::string> cited;
        for (const auto& claim : bundle.claims) {
            if (!claim.source_url) continue;
            if (std::find(cited.begin(), cited.end(), *claim.source_url) == cited.end()) {
                cited.push_back(*claim.source_url);
            }
        }
        bundle.result.credibility = score_sources(cited, tiers);
        return 0;
    });

    return bundle;
}

// ---------------------------------------------------------------------------
// Benchmark runs: replicates, persistence, leaderboard aggregation.
// ---------------------------------------------------------------------------

/// Creates fresh backend instances; each evaluation gets clean mock state
/// so replicates replay identically.
struct BackendFactory {
    std::function<std::unique_ptr<LLMBackend>()> generator;
    std::function<std::unique_ptr<LLMBackend>()> judge;
    std::function<std::unique_ptr<LLMBackend>()> verifier;
    std::function<std::unique_ptr<ToolSuite>()> tools;
};

struct MissingReport {
    std::string model_id;
    int query_id = 0;
};

struct ReplicateStats {
    double s_final = 0.0;
    double s_reason = 0.0;
    double s_evid = 0.0;
    double credibility = 0.0;
    double density = 0.0;
    double mean_tokens = 0.0;
};

/// Per-model aggregate over replicates. All score fields are kept on the
/// [0,1] scale; percentages appear only at emission.
struct LeaderboardRow {
    std::string model_id;
    std::vector<ReplicateStats> replicates;
    double s_final = 0.0;
    double s_reason = 0.0;
    double s_evid = 0.0;
    double credibility = 0.0;
    double density = 0.0;
    double mean_tokens = 0.0;
    /// Population standard deviation of the replicate-level final scores.
    double final_std = 0.0;
};

struct BenchOutcome {
    std::vector<LeaderboardRow> rows;
    std::vector<MissingReport> missing;
    std::string run_id;
    std::string results_path;
    int evaluations_run = 0;
    int evaluations_skipped = 0;
};

namespace detail {

struct ResultNumbers {
    double s_final = 0.0;
    double s_reason = 0.0;
    double s_evid = 0.0;
    double credibility = 0.0;
    double density = 0.0;
    double tokens = 0.0;
};

using TripleKey = std::tuple<std::string, int, int>; // model, query, replicate

inline std::map<TripleKey, ResultNumbers> load_existing_results(const std::string& path) {
    std::map<TripleKey, ResultNumbers> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json record;
        try {
            record = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error&) {
            continue; // tolerate a truncated trailing line from a killed run
        }
        if (record.value("record", "") != "result") continue;
        const auto& result = record["result"];
        ResultNumbers numbers;
        numbers.s_final = result["s_final"].get<double>();
        numbers.s_reason = result["s_reason"].get<double>();
        numbers.s_evid = result["s_evid"].get<double>();
        numbers.credibility = result["credibility"]["q_score"].get<double>();
        numbers.density = result["u_density"].get<double>();
        numbers.tokens = result["token_count"].get<double>();
        out[{record["model_id"].get<std::string>(), result["query_id"].get<int>(),
             record["replicate"].get<int>()}] = numbers;
    }
    return out;
}

inline nlohmann::ordered_json generation_record_json(const std::string& model_id, int query_id,
                                                     int replicate, const char* kind,
                                                     const GenerationRecord& record,
                                                     const Checklist& checklist) {
    nlohmann::ordered_json j;
    j["record"] = "generation";
    j["model_id"] = model_id;
    j["query_id"] = query_id;
    j["replicate"] = replicate;
    j["kind"] = kind;
    j["prompt_hash"] = record.prompt_hash;
    j["backend_id"] = record.backend_id;
    j["timestamp"] = record.timestamp;
    j["raw_response"] = record.raw_response;
    j["checklist"] = checklist_to_json(checklist);
    return j;
}

} // namespace detail

/// Loads one report file, `<reports_dir>/<model_id>/<query_id>.txt`.
inline std::optional<std::string> load_report(const std::string& reports_dir,
                                              const std::string& model_id, int query_id) {
    const std::filesystem::path path =
        std::filesystem::path(reports_dir) / model_id / (std::to_string(query_id) + ".txt");
    if (!std::filesystem::exists(path)) return std::nullopt;
    return read_text_file(path.string());
}

/// Models are the subdirectories of the reports directory.
inline std::vector<std::string> discover_models(const std::string& reports_dir) {
    std::vector<std::string> models;
    for (const auto& entry : std::filesystem::directory_iterator(reports_dir)) {
        if (entry.is_directory()) models.push_back(entry.path().filename().string());
    }
    std::sort(models.begin(), models.end());
    return models;
}

/// Aggregates persisted result numbers into leaderboard rows:
/// replicate-level means over queries first, then means over replicates.
/// Rows sort by final score descending.
inline std::vector<LeaderboardRow> aggregate_rows(
    const std::map<detail::TripleKey, detail::ResultNumbers>& results,
    const std::vector<std::string>& models, const std::vector<int>& query_ids, int replicates) {
    std::vector<LeaderboardRow> rows;
    for (const auto& model : models) {
        LeaderboardRow row;
        row.model_id = model;
        for (int rep = 0; rep < replicates; ++rep) {
            ReplicateStats stats;
            int counted = 0;
            for (int query_id : query_ids) {
                auto it = results.find({model, query_id, rep});
                if (it == results.end()) continue;
                stats.s_final += it->second.s_final;
                stats.s_reason += it->second.s_reason;
                stats.s_evid += it->second.s_evid;
                stats.credibility += it->second.credibility;
                stats.density += it->second.density;
                stats.mean_tokens += it->second.tokens;
                ++counted;
            }
            if (counted == 0) continue;
            stats.s_final /= counted;
            stats.s_reason /= counted;
            stats.s_evid /= counted;
            stats.credibility /= counted;
            stats.density /= counted;
            stats.mean_tokens /= counted;
            row.replicates.push_back(stats);
        }
        if (row.replicates.empty()) continue;

        const double n = static_cast<double>(row.replicates.size());
        for (const auto& stats : row.replicates) {
            row.s_final += stats.s_final / n;
            row.s_reason += stats.s_reason / n;
            row.s_evid += stats.s_evid / n;
            row.credibility += stats.credibility / n;
            row.density += stats.density / n;
            row.mean_tokens += stats.mean_tokens / n;
        }
        double variance = 0.0;
        for (const auto& stats : row.replicates) {
            variance += (stats.s_final - row.s_final) * (stats.s_final - row.s_final) / n;
        }
        row.final_std = std::sqrt(variance);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const LeaderboardRow& a, const LeaderboardRow& b) {
        if (a.s_final != b.s_final) return a.s_final > b.s_final;
        return a.model_id < b.model_id;
    });
    return rows;
}

inline nlohmann::ordered_json rows_to_json(const std::vector<LeaderboardRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j["model_id"] = row.model_id;
        j["final"] = row.s_final;
        j["reasoning"] = row.s_reason;
        j["evidence"] = row.s_evid;
        j["credibility"] = row.credibility;
        j["density"] = row.density;
        j["mean_tokens"] = row.mean_tokens;
        j["final_std"] = row.final_std;
        nlohmann::ordered_json reps = nlohmann::ordered_json::array();
        for (const auto& stats : row.replicates) {
            reps.push_back({{"final", stats.s_final},
                            {"reasoning", stats.s_reason},
                            {"evidence", stats.s_evid},
                            {"credibility", stats.credibility},
                            {"density", stats.density},
                            {"mean_tokens", stats.mean_tokens}});
        }
        j["replicates"] = std::move(reps);
        arr.push_back(std::move(j));
    }
    return arr;
}

/// Runs the benchmark: every (model, query, replicate) triple not already
/// persisted in <output_dir>/results.jsonl is evaluated and appended.
/// Missing reports are reported, not fatal.
inline BenchOutcome run_replicates(const std::vector<BenchQuery>& queries,
                                   const std::vector<std::string>& models, const RunConfig& cfg,
                                   const SkillLibrary& skills, const TierTable& tiers,
                                   const BackendFactory& factory) {
    BenchOutcome outcome;
    outcome.run_id = cfg.run_id();

    std::filesystem::create_directories(cfg.output_dir);
    const std::string results_path =
        (std::filesystem::path(cfg.output_dir) / "results.jsonl").string();
    outcome.results_path = results_path;

    auto existing = detail::load_existing_results(results_path);

    std::ofstream out(results_path, std::ios::app);
    if (!out) throw ConfigError("cannot open " + results_path + " for append");
    if (existing.empty() && std::filesystem::file_size(results_path) == 0) {
        // Placement-independent settings only, so byte-identical runs stay
        // byte-identical regardless of where they are written.
        nlohmann::ordered_json meta;
        meta["record"] = "meta";
        meta["run_id"] = outcome.run_id;
        meta["config"] = cfg.identity_json();
        out << meta.dump() << "\n";
    }

    std::set<std::pair<std::string, int>> missing_seen;
    for (const auto& model : models) {
        for (const auto& query : queries) {
            const auto report = load_report(cfg.reports_dir, model, query.id);
            if (!report) {
                if (missing_seen.insert({model, query.id}).second) {
                    outcome.missing.push_back({model, query.id});
                }
                continue;
            }
            for (int rep = 0; rep < cfg.replicates; ++rep) {
                const detail::TripleKey key{model, query.id, rep};
                if (existing.count(key)) {
                    ++outcome.evaluations_skipped;
                    continue;
                }
                auto generator = factory.generator();
                auto judge = factory.judge();
                auto verifier = factory.verifier();
                auto tools = factory.tools();
                PipelineBackends backends{*generator, *judge, *verifier, *tools};
                EvaluationBundle bundle = evaluate(query, *report, cfg, skills, tiers, backends);

                out << detail::generation_record_json(model, query.id, rep, "query",
                                                      bundle.query_record, bundle.query_checklist)
                           .dump()
                    << "\n";
                out << detail::generation_record_json(model, query.id, rep, "report",
                                                      bundle.report_record,
                                                      bundle.report_checklist)
                           .dump()
                    << "\n";
                nlohmann::ordered_json record;
                record["record"] = "result";
                record["model_id"] = model;
                record["replicate"] = rep;
                record["result"] = result_to_json(bundle.result);
                out << record.dump() << "\n";
                out.flush();

                detail::ResultNumbers numbers;
                numbers.s_final = bundle.result.s_final;
                numbers.s_reason = bundle.result.s_reason;
                numbers.s_evid = bundle.result.s_evid;
                numbers.credibility = bundle.result.credibility.q_score;
                numbers.density = bundle.result.u_density;
                numbers.tokens = static_cast<double>(bundle.result.token_count);
                existing[key] = numbers;
                ++outcome.evaluations_run;
            }
        }
    }

    std::vector<int> query_ids;
    for (const auto& query : queries) query_ids.push_back(query.id);
    outcome.rows = aggregate_rows(existing, models, query_ids, cfg.replicates);

    nlohmann::ordered_json summary;
    summary["run_id"] = outcome.run_id;
    summary["token_counting"] = "judge-side whitespace tokens";
    summary["rows"] = rows_to_json(outcome.rows);
    nlohmann::ordered_json missing = nlohmann::ordered_json::array();
    for (const auto& m : outcome.missing) {
        missing.push_back({{"model_id", m.model_id}, {"query_id", m.query_id}});
    }
    summary["missing_reports"] = std::move(missing);
    std::ofstream summary_out((std::filesystem::path(cfg.output_dir) / "summary.json").string(),
                              std::ios::trunc);
    summary_out << summary.dump(2) << "\n";

    return outcome;
}

/// Renders the aligned leaderboard text table. Percentages are rounded to
/// one decimal here and nowhere else; the variance column shows +/-2 sigma
/// in percentage points.
inline std::string render_leaderboard(const std::vector<LeaderboardRow>& rows) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-24s %9s %13s %12s %15s %9s %14s %9s\n", "Model",
                  "Final(%)", "Reasoning(%)", "Evidence(%)", "Credibility(%)", "Density",
                  "Tokens(judge)", "+/-2s(%)");
    out << line;
    out << std::string(112, '-') << "\n";
    for (const auto& row : rows) {
        std::snprintf(line, sizeof(line), "%-24s %9.1f %13.1f %12.1f %15.1f %9.3f %14.0f %9.2f\n",
                      row.model_id.c_str(), row.s_final * 100.0, row.s_reason * 100.0,
                      row.s_evid * 100.0, row.credibility * 100.0, row.density, row.mean_tokens,
                      2.0 * row.final_std * 100.0);
        out << line;
    }
    return out.str();
}

} // namespace jade
