#include "permutevo/distances.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace permutevo {

namespace {

void require_same_length(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("permutation lengths differ");
    }
}

// Per-thread scratch so distance evaluation stays allocation-free in the
// EA inner loop.
std::vector<int>& scratch_positions(std::size_t n) {
    thread_local std::vector<int> buffer;
    buffer.resize(n);
    return buffer;
}

}  // namespace

std::string_view distance_name(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::exact_match: return "positions";
        case DistanceKind::cyclic_edge: return "undirected-edges";
        case DistanceKind::cyclic_rtype: return "directed-edges";
        case DistanceKind::kendall_tau: return "precedences";
        case DistanceKind::lee: return "cyclic-precedences";
    }
    return "";
}

std::optional<DistanceKind> parse_distance(std::string_view name) {
    for (const DistanceKind kind : all_distance_kinds) {
        if (name == distance_name(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

Cost exact_match_distance(const Permutation& a, const Permutation& b) {
    require_same_length(a, b);
    Cost mismatches = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mismatches += a[i] != b[i];
    }
    return mismatches;
}

namespace detail {

Cost cyclic_edge_distance_raw(std::span<const int> a, std::span<const int> b) {
    const std::size_t n = a.size();
    if (n < 2) {
        return 0;
    }
    std::vector<int>& pos_b = scratch_positions(n);
    for (std::size_t i = 0; i < n; ++i) {
        pos_b[b[i]] = static_cast<int>(i);
    }
    Cost missing = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int x = a[i];
        const int y = a[(i + 1) % n];
        const int gap = std::abs(pos_b[x] - pos_b[y]);
        const bool adjacent_in_b = gap == 1 || gap == static_cast<int>(n) - 1;
        missing += !adjacent_in_b;
    }
    return missing;
}

}  // namespace detail

Cost cyclic_edge_distance(const Permutation& a, const Permutation& b) {
    require_same_length(a, b);
    return detail::cyclic_edge_distance_raw(a.elements(), b.elements());
}

Cost cyclic_rtype_distance(const Permutation& a, const Permutation& b) {
    require_same_length(a, b);
    const std::size_t n = a.size();
    if (n < 2) {
        return 0;
    }
    std::vector<int>& succ_b = scratch_positions(n);
    for (std::size_t i = 0; i < n; ++i) {
        succ_b[b[i]] = b[(i + 1) % n];
    }
    Cost missing = 0;
    for (std::size_t i = 0; i < n; ++i) {
        missing += succ_b[a[i]] != a[(i + 1) % n];
    }
    return missing;
}

Cost kendall_tau_distance(const Permutation& a, const Permutation& b) {
    require_same_length(a, b);
    const std::size_t n = a.size();
    std::vector<int>& pos_b = scratch_positions(n);
    for (std::size_t i = 0; i < n; ++i) {
        pos_b[b[i]] = static_cast<int>(i);
    }
    // Inversions of the relabelled sequence i -> position in b of a[i],
    // counted with a Fenwick tree.
    thread_local std::vector<Cost> tree;
    tree.assign(n + 1, 0);
    Cost inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int value = pos_b[a[i]];
        Cost not_greater = 0;
        for (int k = value + 1; k > 0; k -= k & -k) {
            not_greater += tree[k];
        }
        inversions += static_cast<Cost>(i) - not_greater;
        for (int k = value + 1; k <= static_cast<int>(n); k += k & -k) {
            ++tree[k];
        }
    }
    return inversions;
}

Cost lee_distance(const Permutation& a, const Permutation& b) {
    require_same_length(a, b);
    const auto n = static_cast<Cost>(a.size());
    Cost total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Cost gap = std::abs(static_cast<Cost>(a[i]) - static_cast<Cost>(b[i]));
        total += std::min(gap, n - gap);
    }
    return total;
}

Cost distance(DistanceKind kind, const Permutation& a, const Permutation& b) {
    switch (kind) {
        case DistanceKind::exact_match: return exact_match_distance(a, b);
        case DistanceKind::cyclic_edge: return cyclic_edge_distance(a, b);
        case DistanceKind::cyclic_rtype: return cyclic_rtype_distance(a, b);
        case DistanceKind::kendall_tau: return kendall_tau_distance(a, b);
        case DistanceKind::lee: return lee_distance(a, b);
    }
    throw std::invalid_argument("unknown distance kind");
}

}  // namespace permutevo
