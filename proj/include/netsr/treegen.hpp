#pragma once

#include "netsr/expr.hpp"

namespace netsr {

enum class InitStrategy { RandomChoice, FixedDepth, Grow };

struct InitParams {
    int d_min = 2;
    int d_max = 5;
    double p_terminal = 0.4;
    bool directed = false;  // controls the variable pool
    InitStrategy strategy = InitStrategy::RandomChoice;
};

/// Terminal constant draw: 0 with probability 0.1, a uniform integer from
/// 1..9 with probability 0.4, a uniform real from [0,1) with probability 0.5.
double random_constant(Rng& rng);

/// Random tree with a depth target drawn uniformly from [d_min, d_max].
/// fixed_depth puts terminals exactly at the target depth; grow lets
/// operators continue past it with probability 1 - p_terminal, up to a hard
/// cap of 2 * d_max.
GeneratorTree random_tree(const InitParams& params, Rng& rng);

std::int32_t uniform_node_index(const GeneratorTree& tree, Rng& rng);

/// Headless-chicken mutation: a uniformly chosen node of `tree` is replaced
/// by a uniformly chosen subtree of a fresh random tree.
GeneratorTree mutate(const GeneratorTree& tree, const InitParams& params, Rng& rng);

/// Subtree crossover: a uniformly chosen node of `parent1` is replaced by a
/// uniformly chosen subtree of `parent2`. Both parents stay untouched.
GeneratorTree recombine(const GeneratorTree& parent1, const GeneratorTree& parent2, Rng& rng);

}  // namespace netsr
