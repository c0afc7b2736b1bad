#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace permutevo {

/// Deterministic randomness contract. Every stochastic operation takes a
/// RandomSource explicitly; a given seed always yields the same draw
/// sequence, and each operation documents the order in which it consumes
/// draws so tests and demos can prescribe them.
class RandomSource {
  public:
    virtual ~RandomSource() = default;

    /// Uniform integer in [0, bound). Requires bound >= 1.
    virtual std::uint64_t next_below(std::uint64_t bound) = 0;

    /// Uniform real in [0, 1).
    virtual double next_unit() = 0;

    /// Zero-mean Gaussian with the given standard deviation.
    virtual double next_gaussian(double stddev) = 0;

    /// True with probability p; consumes one unit draw.
    bool next_chance(double p) { return next_unit() < p; }

    std::size_t next_index(std::size_t bound) {
        return static_cast<std::size_t>(next_below(bound));
    }
};

/// Default source: mt19937_64 with portable derivations on top (rejection
/// sampling for bounded integers, 53-bit reals, Box-Muller Gaussians that
/// consume exactly two unit draws). Same seed, same sequence, any platform.
class SeededSource final : public RandomSource {
  public:
    explicit SeededSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_below(std::uint64_t bound) override {
        assert(bound >= 1);
        const std::uint64_t max = ~std::uint64_t{0};
        const std::uint64_t limit = max - max % bound;  // accepted count is a multiple of bound
        std::uint64_t x = engine_();
        while (x >= limit) {
            x = engine_();
        }
        return x % bound;
    }

    double next_unit() override {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double next_gaussian(double stddev) override {
        const double u1 = 1.0 - next_unit();  // (0, 1], keeps log finite
        const double u2 = next_unit();
        return stddev * std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

  private:
    std::mt19937_64 engine_;
};

/// Source that replays prescribed draws, one queue per draw kind. Used to
/// pin fixtures to exact index/mask choices. Exhausting a queue or
/// prescribing an integer >= bound throws std::logic_error. Gaussian draws
/// are returned verbatim (the requested deviation is ignored).
class ScriptedSource final : public RandomSource {
  public:
    explicit ScriptedSource(std::vector<std::uint64_t> ints,
                            std::vector<double> units = {},
                            std::vector<double> gaussians = {})
        : ints_(std::move(ints)), units_(std::move(units)), gaussians_(std::move(gaussians)) {}

    std::uint64_t next_below(std::uint64_t bound) override {
        if (int_pos_ >= ints_.size()) {
            throw std::logic_error("ScriptedSource: integer draws exhausted");
        }
        const std::uint64_t value = ints_[int_pos_++];
        if (value >= bound) {
            throw std::logic_error("ScriptedSource: prescribed integer out of range");
        }
        return value;
    }

    double next_unit() override {
        if (unit_pos_ >= units_.size()) {
            throw std::logic_error("ScriptedSource: unit draws exhausted");
        }
        return units_[unit_pos_++];
    }

    double next_gaussian(double) override {
        if (gaussian_pos_ >= gaussians_.size()) {
            throw std::logic_error("ScriptedSource: gaussian draws exhausted");
        }
        return gaussians_[gaussian_pos_++];
    }

    bool exhausted() const {
        return int_pos_ == ints_.size() && unit_pos_ == units_.size() &&
               gaussian_pos_ == gaussians_.size();
    }

  private:
    std::vector<std::uint64_t> ints_;
    std::vector<double> units_;
    std::vector<double> gaussians_;
    std::size_t int_pos_ = 0;
    std::size_t unit_pos_ = 0;
    std::size_t gaussian_pos_ = 0;
};

/// Unbiased Fisher-Yates shuffle. Draws next_below(i + 1) for
/// i = size-1 down to 1.
void shuffle_values(std::span<int> values, RandomSource& rng);

/// Derives an independent stream seed from a base seed and up to two
/// indexes (splitmix64 mixing). Used to give each experiment replication
/// its own reproducible stream.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

}  // namespace permutevo
