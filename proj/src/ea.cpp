#include "permutevo/ea.hpp"

#include <algorithm>
#include <stdexcept>

namespace permutevo {

namespace {

double clamped(double value, double lo, double hi) {
    return std::clamp(value, lo, hi);
}

void validate(const EAConfig& cfg) {
    if (cfg.population_size < 2) {
        throw std::invalid_argument("population size must be at least 2");
    }
    if (cfg.generations < 1) {
        throw std::invalid_argument("generation count must be at least 1");
    }
    if (cfg.n < 1) {
        throw std::invalid_argument("permutation length must be at least 1");
    }
}

}  // namespace

std::vector<std::size_t> log_checkpoints(std::size_t generations) {
    std::vector<std::size_t> points;
    for (std::size_t g = 1; g < generations; g *= 2) {
        points.push_back(g);
    }
    points.push_back(generations);
    return points;
}

std::vector<Individual> init_population(const EAConfig& cfg, const HaystackLandscape& land,
                                        RandomSource& rng) {
    validate(cfg);
    std::vector<Individual> pop;
    pop.reserve(cfg.population_size);
    for (std::size_t i = 0; i < cfg.population_size; ++i) {
        Permutation genome = random_permutation(cfg.n, rng);
        const double c = 0.1 + 0.9 * rng.next_unit();
        const double m = 0.1 + 0.9 * rng.next_unit();
        const double sigma = 0.05 + 0.1 * rng.next_unit();
        const Cost cost = land.cost(genome);
        pop.push_back(Individual{std::move(genome), c, m, sigma, cost});
    }
    return pop;
}

std::size_t binary_tournament(std::span<const Individual> pop, RandomSource& rng) {
    const std::size_t a = rng.next_index(pop.size());
    const std::size_t b = rng.next_index(pop.size());
    if (pop[a].cost < pop[b].cost) {
        return a;
    }
    if (pop[b].cost < pop[a].cost) {
        return b;
    }
    if (a == b) {
        return a;
    }
    return rng.next_index(2) == 0 ? a : b;
}

void adapt_params(Individual& ind, RandomSource& rng) {
    ind.crossover_rate = clamped(ind.crossover_rate + rng.next_gaussian(ind.step_size), 0.1, 1.0);
    ind.mutation_rate = clamped(ind.mutation_rate + rng.next_gaussian(ind.step_size), 0.1, 1.0);
    ind.step_size = clamped(ind.step_size + rng.next_gaussian(0.01), 0.01, 0.2);
}

namespace {

std::size_t cheapest_index(const std::vector<Individual>& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i) {
        if (pop[i].cost < pop[best].cost) {
            best = i;
        }
    }
    return best;
}

void finish_offspring(Individual& child, const HaystackLandscape& land,
                      const MutationFn& mutation, RandomSource& rng) {
    if (rng.next_chance(child.mutation_rate)) {
        mutation(child.genome, rng);
    }
    adapt_params(child, rng);
    child.cost = land.cost(child.genome);
}

}  // namespace

void step_generation(std::vector<Individual>& pop, const HaystackLandscape& land,
                     const CrossoverFn& crossover, const MutationFn& mutation,
                     RandomSource& rng) {
    const std::size_t size = pop.size();
    std::vector<Individual> next;
    next.reserve(size);
    next.push_back(pop[cheapest_index(pop)]);  // elite survives unaltered

    if (!crossover) {
        // mutation-only: offspring are independent tournament winners
        while (next.size() < size) {
            Individual child = pop[binary_tournament(pop, rng)];
            finish_offspring(child, land, mutation, rng);
            next.push_back(std::move(child));
        }
        pop = std::move(next);
        return;
    }

    const std::size_t offspring = size - 1;
    for (std::size_t made = 0; made + 1 < offspring; made += 2) {
        Individual child1 = pop[binary_tournament(pop, rng)];
        Individual child2 = pop[binary_tournament(pop, rng)];
        if (rng.next_chance(child1.crossover_rate)) {
            crossover(child1.genome, child2.genome, rng);
        }
        finish_offspring(child1, land, mutation, rng);
        finish_offspring(child2, land, mutation, rng);
        next.push_back(std::move(child1));
        next.push_back(std::move(child2));
    }
    if (offspring % 2 == 1) {
        Individual child = pop[binary_tournament(pop, rng)];
        finish_offspring(child, land, mutation, rng);
        next.push_back(std::move(child));
    }
    pop = std::move(next);
}

RunRecord run_ea(const EAConfig& cfg, const HaystackLandscape& land) {
    validate(cfg);
    if (land.target.size() != cfg.n) {
        throw std::invalid_argument("landscape target length differs from cfg.n");
    }
    const CrossoverFn crossover = make_crossover(cfg.crossover, cfg.u);
    const MutationFn mutation = make_mutation(cfg.mutation);

    SeededSource rng(cfg.seed);
    std::vector<Individual> pop = init_population(cfg, land, rng);

    const std::vector<std::size_t> checkpoints = log_checkpoints(cfg.generations);
    RunRecord record;
    record.rows.reserve(checkpoints.size());
    std::size_t next_checkpoint = 0;
    for (std::size_t generation = 1; generation <= cfg.generations; ++generation) {
        step_generation(pop, land, crossover, mutation, rng);
        if (next_checkpoint < checkpoints.size() && generation == checkpoints[next_checkpoint]) {
            Cost best = pop[0].cost;
            double total = 0.0;
            for (const Individual& ind : pop) {
                best = std::min(best, ind.cost);
                total += static_cast<double>(ind.cost);
            }
            record.rows.push_back(
                {generation, best, total / static_cast<double>(pop.size())});
            ++next_checkpoint;
        }
    }
    return record;
}

}  // namespace permutevo
