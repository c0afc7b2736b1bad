#pragma once

#include <cstddef>
#include <vector>

#include "permutevo/permutation.hpp"
#include "permutevo/rng.hpp"

namespace permutevo {

/// Inclusive index interval copied verbatim from one parent. Drawn as two
/// independent uniform indexes, then ordered.
struct CrossRegion {
    std::size_t lo;
    std::size_t hi;
};

CrossRegion draw_cross_region(std::size_t n, RandomSource& rng);

// Crossover operators. Each transforms the two parents into the two
// children in place; parents must be valid permutations of equal length
// (std::invalid_argument otherwise). All run in O(n). Draw orders are
// documented per operator; the *_with_* kernels apply the same transform
// with the random choices supplied explicitly.
//
// Operators parameterised by a boolean per position (uobx, ox2, uppx,
// upmx) consume one unit draw per index, ascending; position j is selected
// when the draw is < u.

/// Exchanges one permutation cycle between the parents. Draws the cycle's
/// start index, next_below(n).
void cx(Permutation& p1, Permutation& p2, RandomSource& rng);
void cx_with_start(Permutation& p1, Permutation& p2, std::size_t start_index);

/// Edge recombination: each child is grown from its parent's first element
/// using only edges found in either parent, preferring the neighbor
/// adjacent to the fewest elements not yet in the child. Ties consume one
/// draw, next_below(#tied), over the tied candidates in ascending element
/// order. A dead end appends a uniformly random unused element instead
/// (one draw over the unused elements). Child 1 is built fully before
/// child 2.
void er(Permutation& p1, Permutation& p2, RandomSource& rng);

/// Edge recombination biased toward edges the parents share: candidates
/// reachable over a shared edge are preferred, then fewest remaining
/// neighbors, then the same tie draw as er.
void eer(Permutation& p1, Permutation& p2, RandomSource& rng);

/// Order crossover: each child keeps its parent's cross region and takes
/// the remaining elements in the other parent's order, written cyclically
/// starting just after the region. Draws the region (two indexes).
void ox(Permutation& p1, Permutation& p2, RandomSource& rng);
void ox_with_region(Permutation& p1, Permutation& p2, CrossRegion region);

/// Non-wrapping order crossover: as ox, but the reordered elements fill
/// left to right, jumping over the cross region.
void nwox(Permutation& p1, Permutation& p2, RandomSource& rng);
void nwox_with_region(Permutation& p1, Permutation& p2, CrossRegion region);

/// Uniform order based crossover: positions are fixed points with
/// probability u; each child keeps its parent's elements there and takes
/// the rest in the other parent's order.
void uobx(Permutation& p1, Permutation& p2, RandomSource& rng, double u = 0.5);
void uobx_with_mask(Permutation& p1, Permutation& p2, const std::vector<bool>& fixed);

/// Order crossover 2: the elements found at the chosen indexes of the
/// other parent are rearranged, within a copy of this parent, into the
/// other parent's relative order.
void ox2(Permutation& p1, Permutation& p2, RandomSource& rng, double u = 0.5);
void ox2_with_mask(Permutation& p1, Permutation& p2, const std::vector<bool>& chosen);

/// Precedence preservative crossover, two-point form: child takes the
/// first i elements from its parent, the next j-i+1 from the other parent
/// (skipping duplicates), and the rest from its parent. Draws two indexes,
/// lower first after ordering.
void ppx(Permutation& p1, Permutation& p2, RandomSource& rng);
void ppx_with_points(Permutation& p1, Permutation& p2, std::size_t i, std::size_t j);

/// Uniform precedence preservative crossover: one boolean per slot; true
/// appends the first unused element of the child's own parent, false the
/// other parent's. Both children reuse the same booleans with roles
/// swapped.
void uppx(Permutation& p1, Permutation& p2, RandomSource& rng, double u = 0.5);
void uppx_with_mask(Permutation& p1, Permutation& p2, const std::vector<bool>& own_first);

/// Partially matched crossover: the cross region defines a swap sequence;
/// for each region index, each child swaps the opposite parent's element
/// at that index into place, via inverse lookup tables. Each child's cross
/// region ends up equal to the opposite parent's. Draws the region.
void pmx(Permutation& p1, Permutation& p2, RandomSource& rng);
void pmx_with_region(Permutation& p1, Permutation& p2, CrossRegion region);

/// pmx on a uniformly chosen index set instead of a region; chosen indexes
/// are processed ascending.
void upmx(Permutation& p1, Permutation& p2, RandomSource& rng, double u = 0.33);
void upmx_with_mask(Permutation& p1, Permutation& p2, const std::vector<bool>& chosen);

/// Position based crossover, five steps: map each element to its index
/// pair, shuffle the element order (shuffle_values draws), flip each
/// element's index pair with probability 0.5 (one unit draw per element in
/// shuffled order), then place elements by first index, by second index,
/// and finally left to right into the open slots.
void pbx(Permutation& p1, Permutation& p2, RandomSource& rng);
void pbx_with_plan(Permutation& p1, Permutation& p2, const std::vector<int>& element_order,
                   const std::vector<bool>& flip);

namespace detail {
/// Greedy edge-map child used by er/eer, exposed with its dead-end count
/// so edge-inheritance can be checked precisely.
struct EdgeChildResult {
    std::vector<int> child;
    std::size_t fallbacks = 0;
};
EdgeChildResult build_edge_child(const Permutation& p1, const Permutation& p2,
                                 int start_element, bool prefer_shared, RandomSource& rng);
}  // namespace detail

}  // namespace permutevo
