#include "permutevo/crossover.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace permutevo {

namespace {

void require_parents(const Permutation& p1, const Permutation& p2) {
    if (p1.size() != p2.size()) {
        throw std::invalid_argument("parent lengths differ");
    }
}

void require_probability(double u) {
    if (u < 0.0 || u > 1.0) {
        throw std::invalid_argument("u must be in [0, 1]");
    }
}

void require_region(CrossRegion region, std::size_t n) {
    if (region.lo > region.hi || region.hi >= n) {
        throw std::invalid_argument("cross region out of range");
    }
}

std::vector<bool> draw_mask(std::size_t n, double u, RandomSource& rng) {
    std::vector<bool> mask(n);
    for (std::size_t i = 0; i < n; ++i) {
        mask[i] = rng.next_chance(u);
    }
    return mask;
}

std::vector<int> positions_of(const std::vector<int>& p) {
    std::vector<int> pos(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        pos[p[i]] = static_cast<int>(i);
    }
    return pos;
}

}  // namespace

CrossRegion draw_cross_region(std::size_t n, RandomSource& rng) {
    const std::size_t a = rng.next_index(n);
    const std::size_t b = rng.next_index(n);
    return {std::min(a, b), std::max(a, b)};
}

void cx_with_start(Permutation& p1, Permutation& p2, std::size_t start_index) {
    require_parents(p1, p2);
    if (start_index >= p1.size()) {
        throw std::invalid_argument("start index out of range");
    }
    thread_local std::vector<int> pos1;  // original positions in p1; never mutated below
    pos1.resize(p1.size());
    for (std::size_t i = 0; i < p1.size(); ++i) {
        pos1[p1[i]] = static_cast<int>(i);
    }
    // walk the cycle, exchanging as we go; the successor is read before the
    // swap disturbs the current index
    std::size_t index = start_index;
    do {
        const auto next = static_cast<std::size_t>(pos1[p2[index]]);
        std::swap(p1.raw()[index], p2.raw()[index]);
        index = next;
    } while (index != start_index);
}

void cx(Permutation& p1, Permutation& p2, RandomSource& rng) {
    require_parents(p1, p2);
    cx_with_start(p1, p2, rng.next_index(p1.size()));
}

// ---------------------------------------------------------------------------
// Edge recombination

namespace detail {

namespace {

// Cyclic adjacencies of both parents: at most four neighbors per element,
// flagged when the edge occurs in both parents.
struct EdgeMap {
    struct Neighbor {
        int element;
        bool shared;
    };
    std::vector<std::array<Neighbor, 4>> lists;
    std::vector<std::uint8_t> counts;

    EdgeMap(const Permutation& p1, const Permutation& p2)
        : lists(p1.size()), counts(p1.size(), 0) {
        add_parent(p1, false);
        add_parent(p2, true);
    }

    void add_parent(const Permutation& p, bool mark_shared) {
        const std::size_t n = p.size();
        for (std::size_t i = 0; i < n; ++i) {
            const int x = p[i];
            const int y = p[(i + 1) % n];
            add(x, y, mark_shared);
            add(y, x, mark_shared);
        }
    }

    void add(int x, int y, bool mark_shared) {
        auto& list = lists[x];
        for (std::uint8_t t = 0; t < counts[x]; ++t) {
            if (list[t].element == y) {
                list[t].shared = list[t].shared || mark_shared;
                return;
            }
        }
        list[counts[x]++] = {y, false};
    }
};

}  // namespace

EdgeChildResult build_edge_child(const Permutation& p1, const Permutation& p2,
                                 int start_element, bool prefer_shared, RandomSource& rng) {
    const std::size_t n = p1.size();
    const EdgeMap map(p1, p2);

    std::vector<bool> used(n, false);
    // remaining_degree[e]: how many of e's neighbors are not yet in the child
    std::vector<int> remaining_degree(n);
    for (std::size_t e = 0; e < n; ++e) {
        remaining_degree[e] = map.counts[e];
    }
    // unused elements kept swap-removable for O(1) dead-end fallback
    std::vector<int> unused(n);
    std::iota(unused.begin(), unused.end(), 0);
    std::vector<int> slot_of(n);
    std::iota(slot_of.begin(), slot_of.end(), 0);

    EdgeChildResult result;
    result.child.reserve(n);

    auto take = [&](int e) {
        result.child.push_back(e);
        used[e] = true;
        const int slot = slot_of[e];
        const int moved = unused.back();
        unused[slot] = moved;
        slot_of[moved] = slot;
        unused.pop_back();
        for (std::uint8_t t = 0; t < map.counts[e]; ++t) {
            --remaining_degree[map.lists[e][t].element];
        }
    };

    take(start_element);
    while (result.child.size() < n) {
        const int current = result.child.back();
        std::array<int, 4> candidates{};
        std::size_t count = 0;
        bool any_shared = false;
        for (std::uint8_t t = 0; t < map.counts[current]; ++t) {
            const auto [element, shared] = map.lists[current][t];
            if (!used[element]) {
                any_shared = any_shared || shared;
                candidates[count++] = element;
            }
        }
        if (count == 0) {
            ++result.fallbacks;
            take(unused[rng.next_index(unused.size())]);
            continue;
        }
        if (prefer_shared && any_shared) {
            std::size_t kept = 0;
            for (std::uint8_t t = 0; t < map.counts[current]; ++t) {
                const auto [element, shared] = map.lists[current][t];
                if (!used[element] && shared) {
                    candidates[kept++] = element;
                }
            }
            count = kept;
        }
        int best_degree = remaining_degree[candidates[0]];
        for (std::size_t t = 1; t < count; ++t) {
            best_degree = std::min(best_degree, remaining_degree[candidates[t]]);
        }
        std::array<int, 4> tied{};
        std::size_t tied_count = 0;
        for (std::size_t t = 0; t < count; ++t) {
            if (remaining_degree[candidates[t]] == best_degree) {
                tied[tied_count++] = candidates[t];
            }
        }
        std::sort(tied.begin(), tied.begin() + tied_count);
        const int pick =
            tied_count > 1 ? tied[rng.next_index(tied_count)] : tied[0];
        take(pick);
    }
    return result;
}

}  // namespace detail

namespace {

void edge_recombination(Permutation& p1, Permutation& p2, bool prefer_shared,
                        RandomSource& rng) {
    require_parents(p1, p2);
    auto c1 = detail::build_edge_child(p1, p2, p1[0], prefer_shared, rng);
    auto c2 = detail::build_edge_child(p1, p2, p2[0], prefer_shared, rng);
    p1.raw() = std::move(c1.child);
    p2.raw() = std::move(c2.child);
}

}  // namespace

void er(Permutation& p1, Permutation& p2, RandomSource& rng) {
    edge_recombination(p1, p2, false, rng);
}

void eer(Permutation& p1, Permutation& p2, RandomSource& rng) {
    edge_recombination(p1, p2, true, rng);
}

// ---------------------------------------------------------------------------
// Order crossover family

namespace {

// Collects the elements of `source` not present in keep_mask order, i.e.
// the relative order of the elements the child does not keep.
std::vector<int> ordered_fill(const std::vector<int>& source, const std::vector<bool>& kept) {
    std::vector<int> fill;
    fill.reserve(source.size());
    for (const int value : source) {
        if (!kept[value]) {
            fill.push_back(value);
        }
    }
    return fill;
}

std::vector<bool> region_value_mask(const std::vector<int>& parent, CrossRegion region) {
    std::vector<bool> kept(parent.size(), false);
    for (std::size_t i = region.lo; i <= region.hi; ++i) {
        kept[parent[i]] = true;
    }
    return kept;
}

}  // namespace

void ox_with_region(Permutation& p1, Permutation& p2, CrossRegion region) {
    require_parents(p1, p2);
    const std::size_t n = p1.size();
    require_region(region, n);
    const std::vector<int> a = p1.raw();
    const std::vector<int> b = p2.raw();

    auto make_child = [&](std::vector<int>& child, const std::vector<int>& own,
                          const std::vector<int>& other) {
        const std::vector<bool> kept = region_value_mask(own, region);
        const std::vector<int> fill = ordered_fill(other, kept);
        std::size_t write = (region.hi + 1) % n;
        for (const int value : fill) {
            child[write] = value;
            write = (write + 1) % n;
        }
    };
    make_child(p1.raw(), a, b);
    make_child(p2.raw(), b, a);
}

void ox(Permutation& p1, Permutation& p2, RandomSource& rng) {
    require_parents(p1, p2);
    ox_with_region(p1, p2, draw_cross_region(p1.size(), rng));
}

void nwox_with_region(Permutation& p1, Permutation& p2, CrossRegion region) {
    require_parents(p1, p2);
    require_region(region, p1.size());
    const std::vector<int> a = p1.raw();
    const std::vector<int> b = p2.raw();

    auto make_child = [&](std::vector<int>& child, const std::vector<int>& own,
                          const std::vector<int>& other) {
        const std::vector<bool> kept = region_value_mask(own, region);
        const std::vector<int> fill = ordered_fill(other, kept);
        std::size_t write = 0;
        for (const int value : fill) {
            if (write == region.lo) {
                write = region.hi + 1;
            }
            child[write++] = value;
        }
    };
    make_child(p1.raw(), a, b);
    make_child(p2.raw(), b, a);
}

void nwox(Permutation& p1, Permutation& p2, RandomSource& rng) {
    require_parents(p1, p2);
    nwox_with_region(p1, p2, draw_cross_region(p1.size(), rng));
}

void uobx_with_mask(Permutation& p1, Permutation& p2, const std::vector<bool>& fixed) {
    require_parents(p1, p2);
    const std::size_t n = p1.size();
    if (fixed.size() != n) {
        throw std::invalid_argument("mask length differs from parents");
    }
    const std::vector<int> a = p1.raw();
    const std::vector<int> b = p2.raw();

    auto make_child = [&](std::vector<int>& child, const std::vector<int>& own,
                          const std::vector<int>& other) {
        std::vector<bool> kept(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (fixed[i]) {
                kept[own[i]] = true;
            }
        }
        const std::vector<int> fill = ordered_fill(other, kept);
        std::size_t next = 0;
        for (std::size_t i = 0; i < n; ++i) {
            child[i] = fixed[i] ? own[i] : fill[next++];
        }
    };
    make_child(p1.raw(), a, b);
    make_child(p2.raw(), b, a);
}

void uobx(Permutation& p1, Permutation& p2, RandomSource& rng, double u) {
    require_parents(p1, p2);
    require_probability(u);
    uobx_with_mask(p1, p2, draw_mask(p1.size(), u, rng));
}

void ox2_with_mask(Permutation& p1, Permutation& p2, const std::vector<bool>& chosen) {
    require_parents(p1, p2);
    const std::size_t n = p1.size();
    if (chosen.size() != n) {
        throw std::invalid_argument("mask length differs from parents");
    }
    const std::vector<int> a = p1.raw();
    const std::vector<int> b = p2.raw();

    auto make_child = [&](std::vector<int>& child, const std::vector<int>& own,
                          const std::vector<int>& other) {
        // elements at the chosen indexes of the other parent, in its order
        std::vector<bool> moved(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (chosen[i]) {
                moved[other[i]] = true;
            }
        }
        std::size_t next = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (moved[own[i]]) {
                while (!chosen[next]) {
                    ++next;
                }
                // rewrite this slot with the next chosen element of `other`
                child[i] = other[next++];
            }
        }
    };
    make_child(p1.raw(), a, b);
    make_child(p2.raw(), b, a);
}

void ox2(Permutation& p1, Permutation& p2, RandomSource& rng, double u) {
    require_parents(p1, p2);
    require_probability(u);
    ox2_with_mask(p1, p2, draw_mask(p1.size(), u, rng));
}

// ---------------------------------------------------------------------------
// Precedence preservative crossover

void ppx_with_points(Permutation& p1, Permutation& p2, std::size_t i, std::size_t j) {
    require_parents(p1, p2);
    const std::size_t n = p1.size();
    if (i >= n || j >= n) {
        throw std::invalid_argument("cross points out of range");
    }
    const std::size_t lo = std::min(i, j);
    const std::size_t hi = std::max(i, j);
    const std::vector<int> a = p1.raw();
    const std::vector<int> b = p2.raw();

    auto make_child = [&](std::vector<int>& child, const std::vector<int>& own,
                          const std::vector<int>& other) {
        child.clear();
        std::vector<bool> used(n, false);
        auto append_first_unused = [&](const std::vector<int>& source, std::size_t& cursor) {
            while (used[source[cursor]]) {
                ++cursor;
            }
            child.push_back(source[cursor]);
            used[source[cursor]] = true;
        };
        std::size_t own_cursor = 0;
        std::size_t other_cursor = 0;
        while (child.size() < lo) {
            append_first_unused(own, own_cursor);
        }
        while (child.size() < hi + 1) {
            append_first_unused(other, other_cursor);
        }
        while (child.size() < n) {
            append_first_unused(own, own_cursor);
        }
    };
    make_child(p1.raw(), a, b);
    make_child(p2.raw(), b, a);
}

void ppx(Permutation& p1, Permutation& p2, RandomSource& rng) {
    require_parents(p1, p2);
    const std::size_t i = rng.next_index(p1.size());
    const std::size_t j = rng.next_index(p1.size());
    ppx_with_points(p1, p2, i, j);
}

void uppx_with_mask(Permutation& p1, Permutation& p2, const std::vector<bool>& own_first) {
    require_parents(p1, p2);
    const std::size_t n = p1.size();
    if (own_first.size() != n) {
        throw std::invalid_argument("mask length differs from parents");
    }
    const std::vector<int> a = p1.raw();
    const std::vector<int> b = p2.raw();

    auto make_child = [&](std::vector<int>& child, const std::vector<int>& own,
                          const std::vector<int>& other) {
        child.clear();
        std::vector<bool> used(n, false);
        std::size_t own_cursor = 0;
        std::size_t other_cursor = 0;
        for (std::size_t slot = 0; slot < n; ++slot) {
            const std::vector<int>& source = own_first[slot] ? own : other;
            std::size_t& cursor = own_first[slot] ? own_cursor : other_cursor;
            while (used[source[cursor]]) {
                ++cursor;
            }
            child.push_back(source[cursor]);
            used[source[cursor]] = true;
        }
    };
    make_child(p1.raw(), a, b);
    make_child(p2.raw(), b, a);
}

void uppx(Permutation& p1, Permutation& p2, RandomSource& rng, double u) {
    require_parents(p1, p2);
    require_probability(u);
    uppx_with_mask(p1, p2, draw_mask(p1.size(), u, rng));
}

// ---------------------------------------------------------------------------
// Partially matched crossover

namespace {

// Brings `value` to index i of child by swapping, keeping the position
// lookup current. After the swap child[i] == value, and later swaps at
// other indexes never displace it.
void swap_value_to(std::vector<int>& child, std::vector<int>& pos, std::size_t i, int value) {
    const auto from = static_cast<std::size_t>(pos[value]);
    const int displaced = child[i];
    std::swap(child[i], child[from]);
    pos[value] = static_cast<int>(i);
    pos[displaced] = static_cast<int>(from);
}

void pmx_swaps(Permutation& p1, Permutation& p2, const std::vector<std::size_t>& indexes) {
    const std::vector<int> a = p1.raw();
    const std::vector<int> b = p2.raw();
    std::vector<int> pos1 = positions_of(p1.raw());
    std::vector<int> pos2 = positions_of(p2.raw());
    for (const std::size_t i : indexes) {
        swap_value_to(p1.raw(), pos1, i, b[i]);
        swap_value_to(p2.raw(), pos2, i, a[i]);
    }
}

}  // namespace

void pmx_with_region(Permutation& p1, Permutation& p2, CrossRegion region) {
    require_parents(p1, p2);
    require_region(region, p1.size());
    std::vector<std::size_t> indexes;
    indexes.reserve(region.hi - region.lo + 1);
    for (std::size_t i = region.lo; i <= region.hi; ++i) {
        indexes.push_back(i);
    }
    pmx_swaps(p1, p2, indexes);
}

void pmx(Permutation& p1, Permutation& p2, RandomSource& rng) {
    require_parents(p1, p2);
    pmx_with_region(p1, p2, draw_cross_region(p1.size(), rng));
}

void upmx_with_mask(Permutation& p1, Permutation& p2, const std::vector<bool>& chosen) {
    require_parents(p1, p2);
    if (chosen.size() != p1.size()) {
        throw std::invalid_argument("mask length differs from parents");
    }
    std::vector<std::size_t> indexes;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        if (chosen[i]) {
            indexes.push_back(i);
        }
    }
    pmx_swaps(p1, p2, indexes);
}

void upmx(Permutation& p1, Permutation& p2, RandomSource& rng, double u) {
    require_parents(p1, p2);
    require_probability(u);
    upmx_with_mask(p1, p2, draw_mask(p1.size(), u, rng));
}

// ---------------------------------------------------------------------------
// Position based crossover

void pbx_with_plan(Permutation& p1, Permutation& p2, const std::vector<int>& element_order,
                   const std::vector<bool>& flip) {
    require_parents(p1, p2);
    const std::size_t n = p1.size();
    if (element_order.size() != n || flip.size() != n) {
        throw std::invalid_argument("plan length differs from parents");
    }
    const std::vector<int> pos1 = positions_of(p1.raw());
    const std::vector<int> pos2 = positions_of(p2.raw());

    // index pair per element, in list order, flipped where requested
    std::vector<std::pair<int, int>> pair_of(n);
    for (std::size_t t = 0; t < n; ++t) {
        const int e = element_order[t];
        pair_of[e] = flip[t] ? std::pair{pos2[e], pos1[e]} : std::pair{pos1[e], pos2[e]};
    }

    constexpr int open = -1;
    std::vector<int> c1(n, open);
    std::vector<int> c2(n, open);
    std::vector<bool> placed1(n, false);
    std::vector<bool> placed2(n, false);

    auto try_place = [](std::vector<int>& child, std::vector<bool>& placed, int e, int index) {
        if (!placed[e] && child[index] == open) {
            child[index] = e;
            placed[e] = true;
        }
    };
    for (const int e : element_order) {  // own index first
        try_place(c1, placed1, e, pair_of[e].first);
        try_place(c2, placed2, e, pair_of[e].second);
    }
    for (const int e : element_order) {  // then the other parent's index
        try_place(c1, placed1, e, pair_of[e].second);
        try_place(c2, placed2, e, pair_of[e].first);
    }
    auto fill_open = [&](std::vector<int>& child, std::vector<bool>& placed) {
        std::size_t slot = 0;
        for (const int e : element_order) {
            if (!placed[e]) {
                while (child[slot] != open) {
                    ++slot;
                }
                child[slot] = e;
                placed[e] = true;
            }
        }
    };
    fill_open(c1, placed1);
    fill_open(c2, placed2);
    p1.raw() = std::move(c1);
    p2.raw() = std::move(c2);
}

void pbx(Permutation& p1, Permutation& p2, RandomSource& rng) {
    require_parents(p1, p2);
    const std::size_t n = p1.size();
    std::vector<int> element_order(n);
    std::iota(element_order.begin(), element_order.end(), 0);
    shuffle_values(element_order, rng);
    std::vector<bool> flip(n);
    for (std::size_t t = 0; t < n; ++t) {
        flip[t] = rng.next_chance(0.5);
    }
    pbx_with_plan(p1, p2, element_order, flip);
}

}  // namespace permutevo
