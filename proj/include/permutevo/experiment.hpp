#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "permutevo/distances.hpp"
#include "permutevo/ea.hpp"

namespace permutevo {

/// A batch of EA replications: every crossover id in `operators` is run
/// `runs` times, run r of every operator sharing the same fresh random
/// target and the same derived stream seed, so operator comparisons are
/// paired. Output is identical for identical spec + seed regardless of
/// worker count.
struct ExperimentSpec {
    DistanceKind landscape = DistanceKind::exact_match;
    std::vector<std::string> operators;  // crossover ids, "none" = mutation-only baseline
    std::size_t n = 100;
    std::size_t population = 100;
    std::size_t generations = 2500;
    std::size_t runs = 20;
    std::uint64_t seed = 0;
    std::optional<double> u;
    std::size_t workers = 1;
    std::string mutation = "swap";
};

struct TraceRow {
    std::string operator_id;
    std::size_t run_id;
    std::size_t generation;
    Cost best_cost;
    double mean_cost;
};

struct OperatorSummary {
    std::string operator_id;
    double mean_final_cost = 0.0;
    double stddev_final_cost = 0.0;  // sample stddev over runs
    std::vector<double> mean_cost_at_checkpoints;
    std::optional<bool> beats_baseline;  // unset when "none" is not among the operators
};

struct ExperimentResult {
    std::vector<std::size_t> checkpoints;
    std::vector<TraceRow> rows;  // ordered by (operator as listed, run, generation)
    std::vector<OperatorSummary> summaries;
};

ExperimentResult run_experiment(const ExperimentSpec& spec);

/// CSV with header operator,run_id,generation,best_cost,mean_cost and one
/// newline-terminated row per checkpoint of every (operator, run).
std::string trace_csv(const ExperimentResult& result);

/// JSON document with the spec parameters and per-operator aggregates.
std::string summary_json(const ExperimentSpec& spec, const ExperimentResult& result);

/// Writes trace.csv and summary.json under out_dir, creating it if needed.
void write_experiment_files(const ExperimentSpec& spec, const ExperimentResult& result,
                            const std::filesystem::path& out_dir);

}  // namespace permutevo
