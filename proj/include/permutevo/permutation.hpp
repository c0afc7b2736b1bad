#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permutevo/rng.hpp"

namespace permutevo {

/// True iff elems holds each of 0..n-1 exactly once, n >= 1.
bool is_valid_permutation(std::span<const int> elems);

/// A permutation of {0..n-1} stored as its array of element values.
/// Constructing from a vector validates; in-place operators are expected to
/// leave a valid permutation behind.
class Permutation {
  public:
    /// Throws std::invalid_argument unless elems is a permutation of 0..n-1.
    explicit Permutation(std::vector<int> elems);

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return elems_.size(); }
    int operator[](std::size_t i) const noexcept { return elems_[i]; }
    std::span<const int> elements() const noexcept { return elems_; }

    /// Mutable storage for operators.
    std::vector<int>& raw() noexcept { return elems_; }
    const std::vector<int>& raw() const noexcept { return elems_; }

    bool operator==(const Permutation&) const = default;

  private:
    std::vector<int> elems_;
};

/// Inverse q with q[p[i]] = i for all i; one linear pass.
Permutation inverse(const Permutation& p);

/// Uniform random permutation of {0..n-1} via unbiased Fisher-Yates
/// (shuffle_values draw order). Throws on n = 0.
Permutation random_permutation(std::size_t n, RandomSource& rng);

/// A cycle of the directed graph over elements induced by a pair of
/// permutations: edge x -> y whenever the index of x in p1 equals the index
/// of y in p2. Following edges from any member leads back to it.
struct PermutationCycle {
    std::vector<int> elements;         // members in traversal order from p1[start_index]
    std::vector<std::size_t> indexes;  // their positions in p1, same order
};

/// The cycle containing p1[start_index]. Traversal is O(cycle length) on
/// top of one O(n) inverse lookup. Throws on length mismatch.
PermutationCycle permutation_cycle(const Permutation& p1, const Permutation& p2,
                                   std::size_t start_index);

/// Text form "[3,0,2,1]" used by the CLI.
std::string to_string(const Permutation& p);

/// Parses the text form; throws std::invalid_argument on malformed input or
/// sequences that are not permutations of 0..n-1.
Permutation parse_permutation(std::string_view text);

}  // namespace permutevo
