#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permutevo/permutation.hpp"
#include "permutevo/rng.hpp"

namespace permutevo {

using MutationFn = std::function<void(Permutation&, RandomSource&)>;
using CrossoverFn = std::function<void(Permutation&, Permutation&, RandomSource&)>;

/// Resolves a mutation operator id:
///   swap, adjacent-swap, insertion, reversal, 2-change, 3opt, block-move,
///   block-swap, cycle-kmax:K, cycle-alpha:A, scramble, uniform-scramble:U,
///   rotation, and windowed forms swap:W, insertion:W, reversal:W,
///   block-move:W, scramble:W.
/// cycle-kmax, cycle-alpha and uniform-scramble take no default parameter
/// and must carry the suffix. Throws std::invalid_argument for unknown ids
/// or bad parameters.
MutationFn make_mutation(std::string_view id);

/// Resolves a crossover operator id:
///   cx, er, eer, ox, nwox, uobx[:U], ox2[:U], ppx, uppx[:U], pmx,
///   upmx[:U], pbx, none.
/// Defaults are u = 0.5 (uobx, ox2, uppx) and u = 0.33 (upmx);
/// u_override replaces the default for bare ids, an explicit :U suffix
/// wins over both. "none" yields an empty function (mutation-only
/// baseline). Throws std::invalid_argument for unknown ids or bad
/// parameters.
CrossoverFn make_crossover(std::string_view id, std::optional<double> u_override = {});

/// Canonical parameter-free id lists, in catalog order.
const std::vector<std::string>& crossover_ids();
const std::vector<std::string>& mutation_ids();

}  // namespace permutevo
