#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "permutevo/permutation.hpp"
#include "permutevo/rng.hpp"

namespace permutevo {

/// Distance bound for index pairs drawn by windowed mutation: sampled pairs
/// (i, j) satisfy |i - j| <= w. Any w >= n - 1 behaves as unlimited.
struct WindowLimit {
    std::size_t w;

    explicit WindowLimit(std::size_t width);
    static WindowLimit unlimited() {
        return WindowLimit{std::numeric_limits<std::size_t>::max()};
    }
};

/// Cycle mutation with k drawn uniformly from {2..kmax}.
struct CycleKmax {
    std::size_t kmax;
    explicit CycleKmax(std::size_t kmax);
};

/// Cycle mutation with k drawn from {2..n}, P(k) proportional to
/// alpha^(k-2), alpha in (0, 1).
struct CycleAlpha {
    double alpha;
    explicit CycleAlpha(double alpha);
};

// In-place mutation operators. Each one rejects inputs too small for a
// non-degenerate move with std::invalid_argument, and documents the order
// in which it consumes draws so fixtures can prescribe them. Unless noted,
// two-index operators draw i uniform over [0, n), then j uniform over the
// window around i excluding i itself (one draw, offset past i).

/// Exchanges the elements at two distinct indexes at most w apart. O(1).
void swap_mutation(Permutation& p, RandomSource& rng,
                   WindowLimit w = WindowLimit::unlimited());

/// swap_mutation with w = 1.
void adjacent_swap_mutation(Permutation& p, RandomSource& rng);

/// Removes the element at i and reinserts it at j; elements between shift.
void insertion_mutation(Permutation& p, RandomSource& rng,
                        WindowLimit w = WindowLimit::unlimited());

/// Reverses the sub-permutation between the two drawn indexes.
void reversal_mutation(Permutation& p, RandomSource& rng,
                       WindowLimit w = WindowLimit::unlimited());

/// Replaces exactly two undirected cyclic edges: picks a first edge
/// position e1 = next_below(n), then a second vertex-disjoint edge via
/// r = next_below(n - 3), e2 = (e1 + 2 + r) mod n, and reverses the
/// non-wrapping circular segment between them. Requires n >= 4.
void two_change_mutation(Permutation& p, RandomSource& rng);

/// One uniform move from the union of 2-changes and reconnections of three
/// removed cyclic edges. Draws: move type next_below(2) (0 delegates to
/// two_change_mutation), else three distinct edge positions (next_below(n),
/// redrawn on collision), then next_below(#candidate reconnections).
/// Changes 2 or 3 undirected cyclic edges. Requires n >= 5.
void three_opt_mutation(Permutation& p, RandomSource& rng);

/// Relocates a contiguous block, i.e. swaps two adjacent blocks. Draws one
/// index uniform over [0, n), then two more uniform over its window
/// (inclusive); the sorted triple (a, b, c) is redrawn until a < b and then
/// rotates [a..c] around b.
void block_move_mutation(Permutation& p, RandomSource& rng,
                         WindowLimit w = WindowLimit::unlimited());

/// Exchanges two non-overlapping blocks, possibly of different lengths.
/// Draws four indexes uniform over [0, n); the sorted quadruple
/// (a, b, c, d) is redrawn until b < c, then blocks [a..b] and [c..d] swap.
void block_swap_mutation(Permutation& p, RandomSource& rng);

/// Rotates k elements one step around k distinct indexes: the element at
/// the t-th drawn index moves to the (t+1)-th, wrapping around. k is drawn
/// first (uniform over {2..kmax}), then indexes via next_below(n) redrawn
/// on collision; the draw order is the cycle order.
void cycle_mutation(Permutation& p, RandomSource& rng, CycleKmax param);

/// As above with k = sample_cycle_length(alpha, n, rng) (one unit draw).
void cycle_mutation(Permutation& p, RandomSource& rng, CycleAlpha param);

/// Shuffles a contiguous segment (shuffle_values draw order; the original
/// arrangement may recur).
void scramble_mutation(Permutation& p, RandomSource& rng,
                       WindowLimit w = WindowLimit::unlimited());

/// Chooses each position with probability u (one unit draw per position,
/// ascending), then shuffles the chosen elements among the chosen
/// positions.
void uniform_scramble_mutation(Permutation& p, RandomSource& rng, double u);

/// Left circular rotation by r = 1 + next_below(n - 1) positions: the
/// element at index r moves to index 0. Never the identity.
void rotation_mutation(Permutation& p, RandomSource& rng);

/// Truncated geometric draw over {2..n} with P(k) proportional to
/// alpha^(k-2); consumes one unit draw.
std::size_t sample_cycle_length(double alpha, std::size_t n, RandomSource& rng);

// Deterministic kernels behind the operators, exposed so small-n moves can
// be enumerated exhaustively.

/// Moves the element at index from to index to.
void insertion_at(Permutation& p, std::size_t from, std::size_t to);

/// Reverses p[i..j], i <= j.
void reversal_at(Permutation& p, std::size_t i, std::size_t j);

/// 2-change removing cyclic edges e1 and e2 (edge k joins index k and
/// (k+1) mod n); the edges must be vertex-disjoint.
void two_change_at(Permutation& p, std::size_t e1, std::size_t e2);

/// Rotates [a..c] so the block starting at b comes first; requires
/// a < b <= c.
void block_move_at(Permutation& p, std::size_t a, std::size_t b, std::size_t c);

/// Swaps blocks [a..b] and [c..d]; requires a <= b < c <= d.
void block_swap_at(Permutation& p, std::size_t a, std::size_t b, std::size_t c,
                   std::size_t d);

namespace detail {
/// All arrangements reachable by removing cyclic edges e1, e2, e3 and
/// reconnecting the three paths, filtered to tours whose undirected cyclic
/// edge set differs from the original.
std::vector<std::vector<int>> three_change_tours(std::span<const int> tour, std::size_t e1,
                                                 std::size_t e2, std::size_t e3);
}  // namespace detail

}  // namespace permutevo
