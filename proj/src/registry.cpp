#include "permutevo/registry.hpp"

#include <charconv>
#include <stdexcept>

#include "permutevo/crossover.hpp"
#include "permutevo/mutation.hpp"

namespace permutevo {

namespace {

struct ParsedId {
    std::string name;
    std::optional<std::string> param;
};

ParsedId split_id(std::string_view id) {
    const std::size_t colon = id.find(':');
    if (colon == std::string_view::npos) {
        return {std::string(id), std::nullopt};
    }
    return {std::string(id.substr(0, colon)), std::string(id.substr(colon + 1))};
}

double parse_real(const std::string& text, const char* what) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw std::invalid_argument(std::string(what) + ": bad numeric parameter '" + text + "'");
    }
    return value;
}

std::size_t parse_size(const std::string& text, const char* what) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw std::invalid_argument(std::string(what) + ": bad integer parameter '" + text + "'");
    }
    return value;
}

[[noreturn]] void unknown(std::string_view kind, std::string_view id) {
    throw std::invalid_argument("unknown " + std::string(kind) + " operator '" + std::string(id) +
                                "'");
}

}  // namespace

MutationFn make_mutation(std::string_view id) {
    const auto [name, param] = split_id(id);
    auto window = [&]() -> WindowLimit {
        return param ? WindowLimit{parse_size(*param, name.c_str())} : WindowLimit::unlimited();
    };
    auto no_param = [&] {
        if (param) {
            throw std::invalid_argument(name + " takes no parameter");
        }
    };
    auto required = [&]() -> const std::string& {
        if (!param) {
            throw std::invalid_argument(name + " requires a parameter suffix, e.g. " + name +
                                        ":<value>");
        }
        return *param;
    };

    if (name == "swap") {
        return [w = window()](Permutation& p, RandomSource& rng) { swap_mutation(p, rng, w); };
    }
    if (name == "adjacent-swap") {
        no_param();
        return [](Permutation& p, RandomSource& rng) { adjacent_swap_mutation(p, rng); };
    }
    if (name == "insertion") {
        return [w = window()](Permutation& p, RandomSource& rng) { insertion_mutation(p, rng, w); };
    }
    if (name == "reversal") {
        return [w = window()](Permutation& p, RandomSource& rng) { reversal_mutation(p, rng, w); };
    }
    if (name == "2-change") {
        no_param();
        return [](Permutation& p, RandomSource& rng) { two_change_mutation(p, rng); };
    }
    if (name == "3opt") {
        no_param();
        return [](Permutation& p, RandomSource& rng) { three_opt_mutation(p, rng); };
    }
    if (name == "block-move") {
        return [w = window()](Permutation& p, RandomSource& rng) {
            block_move_mutation(p, rng, w);
        };
    }
    if (name == "block-swap") {
        no_param();
        return [](Permutation& p, RandomSource& rng) { block_swap_mutation(p, rng); };
    }
    if (name == "cycle-kmax") {
        return [k = CycleKmax{parse_size(required(), "cycle-kmax")}](Permutation& p,
                                                                     RandomSource& rng) {
            cycle_mutation(p, rng, k);
        };
    }
    if (name == "cycle-alpha") {
        return [a = CycleAlpha{parse_real(required(), "cycle-alpha")}](Permutation& p,
                                                                       RandomSource& rng) {
            cycle_mutation(p, rng, a);
        };
    }
    if (name == "scramble") {
        return [w = window()](Permutation& p, RandomSource& rng) { scramble_mutation(p, rng, w); };
    }
    if (name == "uniform-scramble") {
        const double u = parse_real(required(), "uniform-scramble");
        if (u < 0.0 || u > 1.0) {
            throw std::invalid_argument("uniform-scramble: u must be in [0, 1]");
        }
        return [u](Permutation& p, RandomSource& rng) { uniform_scramble_mutation(p, rng, u); };
    }
    if (name == "rotation") {
        no_param();
        return [](Permutation& p, RandomSource& rng) { rotation_mutation(p, rng); };
    }
    unknown("mutation", id);
}

CrossoverFn make_crossover(std::string_view id, std::optional<double> u_override) {
    const auto [name, param] = split_id(id);
    auto no_param = [&] {
        if (param) {
            throw std::invalid_argument(name + " takes no parameter");
        }
    };
    auto u_value = [&](double fallback) {
        const double u = param ? parse_real(*param, name.c_str()) : u_override.value_or(fallback);
        if (u < 0.0 || u > 1.0) {
            throw std::invalid_argument(name + ": u must be in [0, 1]");
        }
        return u;
    };

    if (name == "none") {
        no_param();
        return {};
    }
    if (name == "cx") {
        no_param();
        return [](Permutation& a, Permutation& b, RandomSource& rng) { cx(a, b, rng); };
    }
    if (name == "er") {
        no_param();
        return [](Permutation& a, Permutation& b, RandomSource& rng) { er(a, b, rng); };
    }
    if (name == "eer") {
        no_param();
        return [](Permutation& a, Permutation& b, RandomSource& rng) { eer(a, b, rng); };
    }
    if (name == "ox") {
        no_param();
        return [](Permutation& a, Permutation& b, RandomSource& rng) { ox(a, b, rng); };
    }
    if (name == "nwox") {
        no_param();
        return [](Permutation& a, Permutation& b, RandomSource& rng) { nwox(a, b, rng); };
    }
    if (name == "uobx") {
        return [u = u_value(0.5)](Permutation& a, Permutation& b, RandomSource& rng) {
            uobx(a, b, rng, u);
        };
    }
    if (name == "ox2") {
        return [u = u_value(0.5)](Permutation& a, Permutation& b, RandomSource& rng) {
            ox2(a, b, rng, u);
        };
    }
    if (name == "ppx") {
        no_param();
        return [](Permutation& a, Permutation& b, RandomSource& rng) { ppx(a, b, rng); };
    }
    if (name == "uppx") {
        return [u = u_value(0.5)](Permutation& a, Permutation& b, RandomSource& rng) {
            uppx(a, b, rng, u);
        };
    }
    if (name == "pmx") {
        no_param();
        return [](Permutation& a, Permutation& b, RandomSource& rng) { pmx(a, b, rng); };
    }
    if (name == "upmx") {
        return [u = u_value(0.33)](Permutation& a, Permutation& b, RandomSource& rng) {
            upmx(a, b, rng, u);
        };
    }
    if (name == "pbx") {
        no_param();
        return [](Permutation& a, Permutation& b, RandomSource& rng) { pbx(a, b, rng); };
    }
    unknown("crossover", id);
}

const std::vector<std::string>& crossover_ids() {
    static const std::vector<std::string> ids = {"cx",  "er",   "eer", "ox",   "nwox", "uobx",
                                                 "ox2", "ppx",  "uppx", "pmx", "upmx", "pbx",
                                                 "none"};
    return ids;
}

const std::vector<std::string>& mutation_ids() {
    static const std::vector<std::string> ids = {
        "swap",       "adjacent-swap", "insertion",  "reversal",         "2-change",
        "3opt",       "block-move",    "block-swap", "cycle-kmax",       "cycle-alpha",
        "scramble",   "uniform-scramble", "rotation"};
    return ids;
}

}  // namespace permutevo
