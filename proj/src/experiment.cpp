#include "permutevo/experiment.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace permutevo {

namespace {

constexpr std::uint64_t kEaStream = 0;
constexpr std::uint64_t kTargetStream = 1;

void validate(const ExperimentSpec& spec) {
    if (spec.runs < 1) {
        throw std::invalid_argument("runs must be at least 1");
    }
    if (spec.operators.empty()) {
        throw std::invalid_argument("at least one crossover operator id is required");
    }
    for (const std::string& id : spec.operators) {
        make_crossover(id, spec.u);  // rejects unknown ids and bad parameters up front
    }
    make_mutation(spec.mutation);
}

RunRecord run_one(const ExperimentSpec& spec, const std::string& op, std::size_t run) {
    SeededSource target_rng(mix_seed(spec.seed, run, kTargetStream));
    HaystackLandscape land{random_permutation(spec.n, target_rng), spec.landscape};

    EAConfig cfg;
    cfg.n = spec.n;
    cfg.population_size = spec.population;
    cfg.generations = spec.generations;
    cfg.crossover = op;
    cfg.mutation = spec.mutation;
    cfg.u = spec.u;
    cfg.seed = mix_seed(spec.seed, run, kEaStream);
    return run_ea(cfg, land);
}

std::string format_double(double value) {
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    if (ec != std::errc{}) {
        throw std::runtime_error("double formatting failed");
    }
    return std::string(buffer, end);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    validate(spec);
    const std::size_t op_count = spec.operators.size();
    const std::size_t task_count = op_count * spec.runs;
    std::vector<RunRecord> records(task_count);

    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t t = cursor.fetch_add(1); t < task_count; t = cursor.fetch_add(1)) {
            try {
                records[t] = run_one(spec, spec.operators[t / spec.runs], t % spec.runs);
            } catch (...) {
                const std::scoped_lock lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, spec.workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(work);
    }
    work();
    for (std::thread& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    ExperimentResult result;
    result.checkpoints = log_checkpoints(spec.generations);
    result.rows.reserve(task_count * result.checkpoints.size());
    for (std::size_t t = 0; t < task_count; ++t) {
        for (const RunRecord::Row& row : records[t].rows) {
            result.rows.push_back({spec.operators[t / spec.runs], t % spec.runs, row.generation,
                                   row.best_cost, row.mean_cost});
        }
    }

    std::optional<double> baseline_mean;
    result.summaries.reserve(op_count);
    for (std::size_t o = 0; o < op_count; ++o) {
        OperatorSummary summary;
        summary.operator_id = spec.operators[o];
        summary.mean_cost_at_checkpoints.assign(result.checkpoints.size(), 0.0);
        double sum = 0.0;
        double sum_sq = 0.0;
        for (std::size_t run = 0; run < spec.runs; ++run) {
            const RunRecord& record = records[o * spec.runs + run];
            const auto final_cost = static_cast<double>(record.rows.back().best_cost);
            sum += final_cost;
            sum_sq += final_cost * final_cost;
            for (std::size_t k = 0; k < record.rows.size(); ++k) {
                summary.mean_cost_at_checkpoints[k] +=
                    static_cast<double>(record.rows[k].best_cost);
            }
        }
        const auto runs = static_cast<double>(spec.runs);
        summary.mean_final_cost = sum / runs;
        for (double& mean : summary.mean_cost_at_checkpoints) {
            mean /= runs;
        }
        if (spec.runs > 1) {
            const double variance =
                std::max(0.0, (sum_sq - sum * sum / runs) / (runs - 1.0));
            summary.stddev_final_cost = std::sqrt(variance);
        }
        if (summary.operator_id == "none") {
            baseline_mean = summary.mean_final_cost;
        }
        result.summaries.push_back(std::move(summary));
    }
    if (baseline_mean) {
        for (OperatorSummary& summary : result.summaries) {
            summary.beats_baseline = summary.mean_final_cost < *baseline_mean;
        }
    }
    return result;
}

std::string trace_csv(const ExperimentResult& result) {
    std::string csv = "operator,run_id,generation,best_cost,mean_cost\n";
    for (const TraceRow& row : result.rows) {
        csv += row.operator_id;
        csv += ',';
        csv += std::to_string(row.run_id);
        csv += ',';
        csv += std::to_string(row.generation);
        csv += ',';
        csv += std::to_string(row.best_cost);
        csv += ',';
        csv += format_double(row.mean_cost);
        csv += '\n';
    }
    return csv;
}

std::string summary_json(const ExperimentSpec& spec, const ExperimentResult& result) {
    nlohmann::json doc;
    doc["landscape"] = std::string(distance_name(spec.landscape));
    doc["n"] = spec.n;
    doc["population"] = spec.population;
    doc["generations"] = spec.generations;
    doc["runs"] = spec.runs;
    doc["seed"] = spec.seed;
    doc["mutation"] = spec.mutation;
    if (spec.u) {
        doc["u"] = *spec.u;
    }
    doc["checkpoints"] = result.checkpoints;
    nlohmann::json operators = nlohmann::json::array();
    for (const OperatorSummary& summary : result.summaries) {
        nlohmann::json entry;
        entry["operator"] = summary.operator_id;
        entry["mean_final_cost"] = summary.mean_final_cost;
        entry["stddev_final_cost"] = summary.stddev_final_cost;
        entry["mean_cost_at_checkpoints"] = summary.mean_cost_at_checkpoints;
        if (summary.beats_baseline) {
            entry["beats_baseline"] = *summary.beats_baseline;
        }
        operators.push_back(std::move(entry));
    }
    doc["operators"] = std::move(operators);
    return doc.dump(2) + "\n";
}

void write_experiment_files(const ExperimentSpec& spec, const ExperimentResult& result,
                            const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    auto write = [&out_dir](const char* name, const std::string& content) {
        const std::filesystem::path path = out_dir / name;
        std::ofstream file(path, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot write " + path.string());
        }
        file << content;
        if (!file.flush()) {
            throw std::runtime_error("write failed for " + path.string());
        }
    };
    write("trace.csv", trace_csv(result));
    write("summary.json", summary_json(spec, result));
}

}  // namespace permutevo
