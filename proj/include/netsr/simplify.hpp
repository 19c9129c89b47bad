#pragma once

#include "netsr/expr.hpp"

namespace netsr {

/// Behavior-preserving reduction: constant folding, arithmetic identities,
/// decidable conditionals, equal-branch collapse, iterated to a fixpoint.
/// evaluate(simplify(t), ctx) == evaluate(t, ctx) exactly for every context.
GeneratorTree simplify(const GeneratorTree& tree);

}  // namespace netsr
