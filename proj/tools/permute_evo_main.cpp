// permute-evo: batch experiment runner and demo commands for the
// permutation operator library. Exit codes: 0 success, 1 usage error,
// 2 data error.

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "permutevo/crossover.hpp"
#include "permutevo/distances.hpp"
#include "permutevo/experiment.hpp"
#include "permutevo/mutation.hpp"
#include "permutevo/registry.hpp"

namespace {

using namespace permutevo;

constexpr const char* kSeedEnv = "PERMUTE_EVO_SEED";

std::string landscape_help() {
    std::string help = "landscape kind (";
    for (std::size_t i = 0; i < all_distance_kinds.size(); ++i) {
        if (i > 0) {
            help += ", ";
        }
        help += distance_name(all_distance_kinds[i]);
    }
    return help + ")";
}

DistanceKind parse_landscape(const std::string& name) {
    if (const auto kind = parse_distance(name)) {
        return *kind;
    }
    throw std::invalid_argument("unknown landscape '" + name + "'");
}

std::vector<std::uint64_t> parse_int_list(const std::string& text) {
    std::vector<std::uint64_t> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) {
            next = text.size();
        }
        values.push_back(std::stoull(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return values;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) {
            next = text.size();
        }
        values.push_back(std::stod(text.substr(pos, next - pos)));
        pos = next + 1;
    }
    return values;
}

// --draws/--reals replay prescribed choices; otherwise draws come from the
// seed. Lets demos reproduce any fixture exactly.
std::unique_ptr<RandomSource> make_source(std::uint64_t seed, const std::string& draws,
                                          const std::string& reals) {
    if (!draws.empty() || !reals.empty()) {
        return std::make_unique<ScriptedSource>(parse_int_list(draws), parse_real_list(reals));
    }
    return std::make_unique<SeededSource>(seed);
}

struct DemoOptions {
    std::string op;
    std::string p1_text;
    std::string p2_text;
    std::uint64_t seed = 1;
    std::string draws;
    std::string reals;
};

void add_demo_source_flags(CLI::App& cmd, DemoOptions& opts) {
    cmd.add_option("--seed", opts.seed, "random seed")->envname(kSeedEnv);
    cmd.add_option("--draws", opts.draws, "comma-separated prescribed integer draws");
    cmd.add_option("--reals", opts.reals, "comma-separated prescribed unit draws");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation evolutionary operator toolkit"};
    app.require_subcommand(1);

    // run -------------------------------------------------------------
    ExperimentSpec spec;
    std::string landscape_name;
    std::string out_dir = "results";
    double u_flag = -1.0;
    auto* run_cmd = app.add_subcommand("run", "run a landscape experiment and write traces");
    run_cmd->add_option("--landscape", landscape_name, landscape_help())->required();
    run_cmd->add_option("--crossover", spec.operators,
                        "crossover operator id, repeatable; include 'none' to flag beats-baseline")
        ->required();
    run_cmd->add_option("--n", spec.n, "permutation length");
    run_cmd->add_option("--pop", spec.population, "population size");
    run_cmd->add_option("--generations", spec.generations, "generations per run");
    run_cmd->add_option("--runs", spec.runs, "replications per operator");
    run_cmd->add_option("--seed", spec.seed, "base seed")->envname(kSeedEnv);
    run_cmd->add_option("--u", u_flag, "u for bare u-parameterised crossover ids");
    run_cmd->add_option("--out", out_dir, "output directory for trace.csv and summary.json");
    run_cmd->add_option("--workers", spec.workers, "worker threads");

    // cross-demo --------------------------------------------------------
    DemoOptions cross;
    auto* cross_cmd = app.add_subcommand("cross-demo", "apply a crossover operator once");
    cross_cmd->add_option("operator", cross.op, "crossover operator id")->required();
    cross_cmd->add_option("p1", cross.p1_text, "first parent, e.g. [0,1,2]")->required();
    cross_cmd->add_option("p2", cross.p2_text, "second parent")->required();
    add_demo_source_flags(*cross_cmd, cross);

    // mutate-demo -------------------------------------------------------
    DemoOptions mutate;
    auto* mutate_cmd = app.add_subcommand("mutate-demo", "apply a mutation operator once");
    mutate_cmd->add_option("operator", mutate.op, "mutation operator id")->required();
    mutate_cmd->add_option("p", mutate.p1_text, "permutation, e.g. [0,1,2]")->required();
    add_demo_source_flags(*mutate_cmd, mutate);

    // distance ----------------------------------------------------------
    DemoOptions dist;
    auto* dist_cmd = app.add_subcommand("distance", "distance between two permutations");
    dist_cmd->add_option("kind", dist.op, landscape_help())->required();
    dist_cmd->add_option("p1", dist.p1_text, "first permutation")->required();
    dist_cmd->add_option("p2", dist.p2_text, "second permutation")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run_cmd->parsed()) {
            spec.landscape = parse_landscape(landscape_name);
            if (u_flag >= 0.0) {
                spec.u = u_flag;
            }
            const ExperimentResult result = run_experiment(spec);
            write_experiment_files(spec, result, out_dir);
            std::cout << "wrote " << out_dir << "/trace.csv and " << out_dir
                      << "/summary.json\n";
            for (const OperatorSummary& summary : result.summaries) {
                std::cout << summary.operator_id << ": mean final cost "
                          << summary.mean_final_cost;
                if (summary.beats_baseline) {
                    std::cout << (*summary.beats_baseline ? " (beats baseline)"
                                                          : " (does not beat baseline)");
                }
                std::cout << '\n';
            }
        } else if (cross_cmd->parsed()) {
            const CrossoverFn fn = make_crossover(cross.op);
            if (!fn) {
                throw std::invalid_argument("'none' performs no crossover");
            }
            Permutation p1 = parse_permutation(cross.p1_text);
            Permutation p2 = parse_permutation(cross.p2_text);
            const auto rng = make_source(cross.seed, cross.draws, cross.reals);
            fn(p1, p2, *rng);
            std::cout << "c1=" << to_string(p1) << '\n' << "c2=" << to_string(p2) << '\n';
        } else if (mutate_cmd->parsed()) {
            const MutationFn fn = make_mutation(mutate.op);
            Permutation p = parse_permutation(mutate.p1_text);
            const auto rng = make_source(mutate.seed, mutate.draws, mutate.reals);
            fn(p, *rng);
            std::cout << to_string(p) << '\n';
        } else if (dist_cmd->parsed()) {
            const DistanceKind kind = parse_landscape(dist.op);
            const Permutation p1 = parse_permutation(dist.p1_text);
            const Permutation p2 = parse_permutation(dist.p2_text);
            std::cout << distance(kind, p1, p2) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
