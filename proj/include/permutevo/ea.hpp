#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permutevo/distances.hpp"
#include "permutevo/permutation.hpp"
#include "permutevo/registry.hpp"
#include "permutevo/rng.hpp"

namespace permutevo {

/// Synthetic landscape whose cost is the distance to a hidden target
/// permutation; the chosen distance isolates one permutation feature.
struct HaystackLandscape {
    Permutation target;
    DistanceKind kind;

    /// distance(candidate, target); throws on length mismatch.
    Cost cost(const Permutation& candidate) const {
        return distance(kind, candidate, target);
    }
};

/// One population member: a genome plus its self-adapted operator rates.
struct Individual {
    Permutation genome;
    double crossover_rate;  // in [0.1, 1.0]
    double mutation_rate;   // in [0.1, 1.0]
    double step_size;       // in [0.01, 0.2]
    Cost cost;
};

struct EAConfig {
    std::size_t n = 100;
    std::size_t population_size = 100;  // >= 2; a single elite survives unaltered
    std::size_t generations = 10000;    // >= 1
    std::string crossover = "none";
    std::string mutation = "swap";
    std::optional<double> u;  // applied to bare u-parameterised crossover ids
    std::uint64_t seed = 0;
};

/// Best and mean population cost at each logged generation. Generations
/// 1, 2, 4, 8, ... plus the final one are logged; elitism makes best_cost
/// non-increasing.
struct RunRecord {
    struct Row {
        std::size_t generation;
        Cost best_cost;
        double mean_cost;
    };
    std::vector<Row> rows;
};

/// Powers of two up to `generations`, plus `generations` itself.
std::vector<std::size_t> log_checkpoints(std::size_t generations);

/// Population of uniform random genomes with rates drawn uniformly:
/// crossover and mutation rates in [0.1, 1.0), step sizes in [0.05, 0.15).
/// Draw order per member: genome shuffle, then the three rates.
std::vector<Individual> init_population(const EAConfig& cfg, const HaystackLandscape& land,
                                        RandomSource& rng);

/// Two members drawn uniformly (two draws); the cheaper one wins. A cost
/// tie between distinct members consumes one extra draw, next_below(2).
std::size_t binary_tournament(std::span<const Individual> pop, RandomSource& rng);

/// Gaussian-perturbs the rates: crossover and mutation rates by
/// next_gaussian(step_size), clamped to [0.1, 1.0]; then the step size by
/// next_gaussian(0.01), clamped to [0.01, 0.2].
void adapt_params(Individual& ind, RandomSource& rng);

/// One generational step: the single cheapest member survives unaltered;
/// the remaining slots are filled by offspring from pairs of tournament
/// winners. A pair crosses with the first winner's crossover rate, each
/// child then mutates with its own inherited rate and adapts its
/// parameters; when the offspring count is odd the last child comes from
/// one tournament winner and skips crossover. Draw order per pair:
/// tournament a, tournament b, crossover chance, crossover draws, then per
/// child: mutation chance, mutation draws, adapt_params draws. An empty
/// crossover is the mutation-only EA: offspring are produced one at a time
/// (tournament, mutation chance, mutation draws, adapt draws) with no
/// crossover chance drawn.
void step_generation(std::vector<Individual>& pop, const HaystackLandscape& land,
                     const CrossoverFn& crossover, const MutationFn& mutation,
                     RandomSource& rng);

/// Full run from cfg.seed: resolves the operator ids, initialises, steps
/// cfg.generations times and logs at the checkpoints.
RunRecord run_ea(const EAConfig& cfg, const HaystackLandscape& land);

}  // namespace permutevo
