#include "permutevo/rng.hpp"

#include <utility>

namespace permutevo {

void shuffle_values(std::span<int> values, RandomSource& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = rng.next_index(i);
        std::swap(values[i - 1], values[j]);
    }
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = splitmix64(base ^ splitmix64(a));
    s = splitmix64(s ^ splitmix64(b + 0x5851F42D4C957F2Dull));
    return s;
}

}  // namespace permutevo
