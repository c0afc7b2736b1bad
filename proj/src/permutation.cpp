#include "permutevo/permutation.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace permutevo {

bool is_valid_permutation(std::span<const int> elems) {
    const std::size_t n = elems.size();
    if (n == 0) {
        return false;
    }
    std::vector<bool> seen(n, false);
    for (const int value : elems) {
        if (value < 0 || static_cast<std::size_t>(value) >= n || seen[value]) {
            return false;
        }
        seen[value] = true;
    }
    return true;
}

Permutation::Permutation(std::vector<int> elems) : elems_(std::move(elems)) {
    if (!is_valid_permutation(elems_)) {
        throw std::invalid_argument("not a permutation of 0..n-1");
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> elems(n);
    std::iota(elems.begin(), elems.end(), 0);
    return Permutation(std::move(elems));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        inv[p[i]] = static_cast<int>(i);
    }
    return Permutation(std::move(inv));
}

Permutation random_permutation(std::size_t n, RandomSource& rng) {
    if (n == 0) {
        throw std::invalid_argument("permutation length must be at least 1");
    }
    std::vector<int> elems(n);
    std::iota(elems.begin(), elems.end(), 0);
    shuffle_values(elems, rng);
    return Permutation(std::move(elems));
}

PermutationCycle permutation_cycle(const Permutation& p1, const Permutation& p2,
                                   std::size_t start_index) {
    if (p1.size() != p2.size()) {
        throw std::invalid_argument("permutation lengths differ");
    }
    if (start_index >= p1.size()) {
        throw std::invalid_argument("start index out of range");
    }
    thread_local std::vector<int> position_in_p1;  // reused lookup scratch
    position_in_p1.resize(p1.size());
    for (std::size_t i = 0; i < p1.size(); ++i) {
        position_in_p1[p1[i]] = static_cast<int>(i);
    }

    PermutationCycle cycle;
    const int first = p1[start_index];
    std::size_t index = start_index;
    // index of current element in p1 equals the index of its successor in p2
    while (true) {
        cycle.elements.push_back(p1[index]);
        cycle.indexes.push_back(index);
        const int next = p2[index];
        if (next == first) {
            break;
        }
        index = static_cast<std::size_t>(position_in_p1[next]);
    }
    return cycle;
}

std::string to_string(const Permutation& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(p[i]);
    }
    out += ']';
    return out;
}

Permutation parse_permutation(std::string_view text) {
    auto fail = [] { throw std::invalid_argument("malformed permutation text"); };
    auto skip_spaces = [&text](std::size_t pos) {
        while (pos < text.size() && text[pos] == ' ') {
            ++pos;
        }
        return pos;
    };

    std::size_t pos = skip_spaces(0);
    if (pos >= text.size() || text[pos] != '[') {
        fail();
    }
    ++pos;
    std::vector<int> elems;
    bool expect_value = true;
    while (true) {
        pos = skip_spaces(pos);
        if (pos >= text.size()) {
            fail();
        }
        if (text[pos] == ']') {
            if (expect_value && !elems.empty()) {
                fail();  // trailing comma
            }
            ++pos;
            break;
        }
        if (!expect_value) {
            if (text[pos] != ',') {
                fail();
            }
            ++pos;
            expect_value = true;
            continue;
        }
        int value = 0;
        const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{}) {
            fail();
        }
        elems.push_back(value);
        pos = static_cast<std::size_t>(end - text.data());
        expect_value = false;
    }
    if (skip_spaces(pos) != text.size()) {
        fail();
    }
    return Permutation(std::move(elems));  // validates bijectivity
}

}  // namespace permutevo
