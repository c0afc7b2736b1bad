#include "permutevo/mutation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "permutevo/distances.hpp"

namespace permutevo {

namespace {

void require_size(const Permutation& p, std::size_t minimum, const char* what) {
    if (p.size() < minimum) {
        throw std::invalid_argument(std::string(what) + ": permutation too short");
    }
}

// j uniform over [max(0, i-w), min(n-1, i+w)] excluding i; one draw.
std::size_t draw_partner(std::size_t i, std::size_t n, std::size_t w, RandomSource& rng) {
    const std::size_t width = std::min(w, n - 1);  // avoids overflow on unlimited windows
    const std::size_t lo = i > width ? i - width : 0;
    const std::size_t hi = std::min(n - 1, i + width);
    std::size_t j = lo + rng.next_index(hi - lo);
    if (j >= i) {
        ++j;
    }
    return j;
}

struct IndexPair {
    std::size_t i;
    std::size_t j;
};

IndexPair draw_index_pair(std::size_t n, std::size_t w, RandomSource& rng) {
    const std::size_t i = rng.next_index(n);
    return {i, draw_partner(i, n, w, rng)};
}

}  // namespace

WindowLimit::WindowLimit(std::size_t width) : w(width) {
    if (width < 1) {
        throw std::invalid_argument("window limit must be at least 1");
    }
}

CycleKmax::CycleKmax(std::size_t kmax) : kmax(kmax) {
    if (kmax < 2) {
        throw std::invalid_argument("kmax must be at least 2");
    }
}

CycleAlpha::CycleAlpha(double alpha) : alpha(alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) {
        throw std::invalid_argument("alpha must be in (0, 1)");
    }
}

void swap_mutation(Permutation& p, RandomSource& rng, WindowLimit w) {
    require_size(p, 2, "swap");
    const auto [i, j] = draw_index_pair(p.size(), w.w, rng);
    std::swap(p.raw()[i], p.raw()[j]);
}

void adjacent_swap_mutation(Permutation& p, RandomSource& rng) {
    swap_mutation(p, rng, WindowLimit{1});
}

void insertion_at(Permutation& p, std::size_t from, std::size_t to) {
    if (from >= p.size() || to >= p.size()) {
        throw std::invalid_argument("insertion indexes out of range");
    }
    auto begin = p.raw().begin();
    if (from < to) {
        std::rotate(begin + from, begin + from + 1, begin + to + 1);
    } else if (to < from) {
        std::rotate(begin + to, begin + from, begin + from + 1);
    }
}

void insertion_mutation(Permutation& p, RandomSource& rng, WindowLimit w) {
    require_size(p, 2, "insertion");
    const auto [i, j] = draw_index_pair(p.size(), w.w, rng);
    insertion_at(p, i, j);
}

void reversal_at(Permutation& p, std::size_t i, std::size_t j) {
    if (i > j || j >= p.size()) {
        throw std::invalid_argument("reversal indexes out of range");
    }
    std::reverse(p.raw().begin() + i, p.raw().begin() + j + 1);
}

void reversal_mutation(Permutation& p, RandomSource& rng, WindowLimit w) {
    require_size(p, 2, "reversal");
    const auto [i, j] = draw_index_pair(p.size(), w.w, rng);
    reversal_at(p, std::min(i, j), std::max(i, j));
}

void two_change_at(Permutation& p, std::size_t e1, std::size_t e2) {
    const std::size_t n = p.size();
    std::size_t a = std::min(e1, e2);
    std::size_t b = std::max(e1, e2);
    if (b >= n || a == b || b - a == 1 || b - a == n - 1) {
        throw std::invalid_argument("2-change edges must be vertex-disjoint");
    }
    // reversing the non-wrapping segment between the removed edges
    std::reverse(p.raw().begin() + a + 1, p.raw().begin() + b + 1);
}

void two_change_mutation(Permutation& p, RandomSource& rng) {
    require_size(p, 4, "2-change");
    const std::size_t n = p.size();
    const std::size_t e1 = rng.next_index(n);
    const std::size_t e2 = (e1 + 2 + rng.next_index(n - 3)) % n;
    two_change_at(p, e1, e2);
}

namespace detail {

std::vector<std::vector<int>> three_change_tours(std::span<const int> tour, std::size_t e1,
                                                 std::size_t e2, std::size_t e3) {
    const std::size_t n = tour.size();
    std::array<std::size_t, 3> edges{e1, e2, e3};
    std::sort(edges.begin(), edges.end());
    const auto [a, b, c] = edges;
    if (a == b || b == c) {
        throw std::invalid_argument("3-change edges must be distinct");
    }

    // Paths once edges a, b, c are removed: first = [a+1..b], second =
    // [b+1..c]; the third path wraps through index 0 and stays in place.
    const auto first_begin = tour.begin() + a + 1;
    const auto first_end = tour.begin() + b + 1;
    const auto second_begin = first_end;
    const auto second_end = tour.begin() + c + 1;

    std::vector<std::vector<int>> tours;
    for (int arrangement = 1; arrangement < 8; ++arrangement) {
        const bool second_first = arrangement & 4;
        const bool reverse_x = arrangement & 2;
        const bool reverse_y = arrangement & 1;

        std::vector<int> candidate(tour.begin(), tour.begin() + a + 1);
        candidate.reserve(n);
        auto append = [&candidate](auto begin, auto end, bool reversed) {
            if (reversed) {
                candidate.insert(candidate.end(), std::make_reverse_iterator(end),
                                 std::make_reverse_iterator(begin));
            } else {
                candidate.insert(candidate.end(), begin, end);
            }
        };
        if (second_first) {
            append(second_begin, second_end, reverse_x);
            append(first_begin, first_end, reverse_y);
        } else {
            append(first_begin, first_end, reverse_x);
            append(second_begin, second_end, reverse_y);
        }
        candidate.insert(candidate.end(), second_end, tour.end());

        if (detail::cyclic_edge_distance_raw(candidate, tour) != 0) {
            tours.push_back(std::move(candidate));
        }
    }
    return tours;
}

}  // namespace detail

void three_opt_mutation(Permutation& p, RandomSource& rng) {
    require_size(p, 5, "3opt");
    if (rng.next_index(2) == 0) {
        two_change_mutation(p, rng);
        return;
    }
    const std::size_t n = p.size();
    while (true) {
        std::array<std::size_t, 3> edges{};
        for (std::size_t k = 0; k < 3; ++k) {
            std::size_t e;
            bool fresh;
            do {
                e = rng.next_index(n);
                fresh = true;
                for (std::size_t s = 0; s < k; ++s) {
                    fresh = fresh && edges[s] != e;
                }
            } while (!fresh);
            edges[k] = e;
        }
        auto candidates = detail::three_change_tours(p.raw(), edges[0], edges[1], edges[2]);
        if (!candidates.empty()) {
            p.raw() = std::move(candidates[rng.next_index(candidates.size())]);
            return;
        }
    }
}

void block_move_at(Permutation& p, std::size_t a, std::size_t b, std::size_t c) {
    if (!(a < b && b <= c) || c >= p.size()) {
        throw std::invalid_argument("block-move needs a < b <= c < n");
    }
    auto begin = p.raw().begin();
    std::rotate(begin + a, begin + b, begin + c + 1);
}

void block_move_mutation(Permutation& p, RandomSource& rng, WindowLimit w) {
    require_size(p, 2, "block-move");
    const std::size_t n = p.size();
    while (true) {
        const std::size_t i = rng.next_index(n);
        const std::size_t width = std::min(w.w, n - 1);
        const std::size_t lo = i > width ? i - width : 0;
        const std::size_t hi = std::min(n - 1, i + width);
        std::array<std::size_t, 3> picks{i, lo + rng.next_index(hi - lo + 1),
                                         lo + rng.next_index(hi - lo + 1)};
        std::sort(picks.begin(), picks.end());
        if (picks[0] < picks[1]) {
            block_move_at(p, picks[0], picks[1], picks[2]);
            return;
        }
    }
}

void block_swap_at(Permutation& p, std::size_t a, std::size_t b, std::size_t c,
                   std::size_t d) {
    if (!(a <= b && b < c && c <= d) || d >= p.size()) {
        throw std::invalid_argument("block-swap needs a <= b < c <= d < n");
    }
    const auto& src = p.raw();
    std::vector<int> result;
    result.reserve(src.size());
    result.insert(result.end(), src.begin(), src.begin() + a);
    result.insert(result.end(), src.begin() + c, src.begin() + d + 1);
    result.insert(result.end(), src.begin() + b + 1, src.begin() + c);
    result.insert(result.end(), src.begin() + a, src.begin() + b + 1);
    result.insert(result.end(), src.begin() + d + 1, src.end());
    p.raw() = std::move(result);
}

void block_swap_mutation(Permutation& p, RandomSource& rng) {
    require_size(p, 2, "block-swap");
    const std::size_t n = p.size();
    while (true) {
        std::array<std::size_t, 4> picks{rng.next_index(n), rng.next_index(n),
                                         rng.next_index(n), rng.next_index(n)};
        std::sort(picks.begin(), picks.end());
        if (picks[1] < picks[2]) {
            block_swap_at(p, picks[0], picks[1], picks[2], picks[3]);
            return;
        }
    }
}

namespace {

// k distinct indexes by rejection; the draw order is the cycle order.
void apply_random_cycle(Permutation& p, std::size_t k, RandomSource& rng) {
    const std::size_t n = p.size();
    std::vector<std::size_t> indexes;
    indexes.reserve(k);
    while (indexes.size() < k) {
        const std::size_t candidate = rng.next_index(n);
        if (std::find(indexes.begin(), indexes.end(), candidate) == indexes.end()) {
            indexes.push_back(candidate);
        }
    }
    auto& elems = p.raw();
    const int last = elems[indexes[k - 1]];
    for (std::size_t t = k - 1; t > 0; --t) {
        elems[indexes[t]] = elems[indexes[t - 1]];
    }
    elems[indexes[0]] = last;
}

}  // namespace

void cycle_mutation(Permutation& p, RandomSource& rng, CycleKmax param) {
    require_size(p, 2, "cycle");
    if (param.kmax > p.size()) {
        throw std::invalid_argument("kmax exceeds permutation length");
    }
    const std::size_t k = 2 + rng.next_index(param.kmax - 1);
    apply_random_cycle(p, k, rng);
}

std::size_t sample_cycle_length(double alpha, std::size_t n, RandomSource& rng) {
    const double mass = 1.0 - std::pow(alpha, static_cast<double>(n - 1));
    const double x = rng.next_unit() * mass;
    const auto k = 2 + static_cast<std::size_t>(std::log1p(-x) / std::log(alpha));
    return std::clamp<std::size_t>(k, 2, n);
}

void cycle_mutation(Permutation& p, RandomSource& rng, CycleAlpha param) {
    require_size(p, 2, "cycle");
    const std::size_t k = sample_cycle_length(param.alpha, p.size(), rng);
    apply_random_cycle(p, k, rng);
}

void scramble_mutation(Permutation& p, RandomSource& rng, WindowLimit w) {
    require_size(p, 2, "scramble");
    const auto [i, j] = draw_index_pair(p.size(), w.w, rng);
    const std::size_t lo = std::min(i, j);
    const std::size_t hi = std::max(i, j);
    shuffle_values(std::span<int>(p.raw()).subspan(lo, hi - lo + 1), rng);
}

void uniform_scramble_mutation(Permutation& p, RandomSource& rng, double u) {
    require_size(p, 2, "uniform-scramble");
    if (u < 0.0 || u > 1.0) {
        throw std::invalid_argument("u must be in [0, 1]");
    }
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (rng.next_chance(u)) {
            chosen.push_back(i);
        }
    }
    std::vector<int> values;
    values.reserve(chosen.size());
    for (const std::size_t i : chosen) {
        values.push_back(p[i]);
    }
    shuffle_values(values, rng);
    for (std::size_t t = 0; t < chosen.size(); ++t) {
        p.raw()[chosen[t]] = values[t];
    }
}

void rotation_mutation(Permutation& p, RandomSource& rng) {
    require_size(p, 2, "rotation");
    const std::size_t r = 1 + rng.next_index(p.size() - 1);
    std::rotate(p.raw().begin(), p.raw().begin() + r, p.raw().end());
}

}  // namespace permutevo
