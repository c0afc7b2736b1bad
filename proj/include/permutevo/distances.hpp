#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "permutevo/permutation.hpp"

namespace permutevo {

using Cost = std::int64_t;

/// The five distance functions, one per permutation feature.
enum class DistanceKind {
    exact_match,   // positions
    cyclic_edge,   // undirected edges
    cyclic_rtype,  // directed edges
    kendall_tau,   // precedences
    lee,           // cyclic precedences
};

inline constexpr std::array<DistanceKind, 5> all_distance_kinds = {
    DistanceKind::exact_match, DistanceKind::cyclic_edge, DistanceKind::cyclic_rtype,
    DistanceKind::kendall_tau, DistanceKind::lee,
};

/// Feature name used on the CLI: positions, undirected-edges,
/// directed-edges, precedences, cyclic-precedences.
std::string_view distance_name(DistanceKind kind);
std::optional<DistanceKind> parse_distance(std::string_view name);

/// Number of positions holding different elements.
Cost exact_match_distance(const Permutation& a, const Permutation& b);

/// Number of undirected cyclic edges (adjacencies including the wraparound
/// from last element to first) present in a but not in b.
Cost cyclic_edge_distance(const Permutation& a, const Permutation& b);

/// Directed counterpart of cyclic_edge_distance.
Cost cyclic_rtype_distance(const Permutation& a, const Permutation& b);

/// Number of discordant element pairs; equals the minimum number of
/// adjacent swaps transforming one permutation into the other. O(n log n).
Cost kendall_tau_distance(const Permutation& a, const Permutation& b);

/// Sum over positions of the cyclic value difference
/// min(|a[i]-b[i]|, n-|a[i]-b[i]|).
Cost lee_distance(const Permutation& a, const Permutation& b);

Cost distance(DistanceKind kind, const Permutation& a, const Permutation& b);

namespace detail {
/// Raw-array form used internally where candidate arrangements are not yet
/// wrapped in Permutation.
Cost cyclic_edge_distance_raw(std::span<const int> a, std::span<const int> b);
}  // namespace detail

}  // namespace permutevo
