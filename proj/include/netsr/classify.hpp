#pragma once

#include <vector>

#include "netsr/expr.hpp"

namespace netsr {

/// Syntactic checks over a (usually simplified) generator tree.
bool contains_variable(const GeneratorTree& tree);
bool contains_delta(const GeneratorTree& tree);
std::vector<double> delta_thresholds(const GeneratorTree& tree);

/// Behavioral checks on a fixed probe grid of contexts.
enum class ProbeVar { Degree, Distance, Identifier, EdgeRatio };

/// True when the output varies with the probed quantity anywhere on the grid.
bool depends_on(const GeneratorTree& tree, ProbeVar var);

/// Monotone (consistently non-decreasing or non-increasing, strict
/// somewhere) in the probed quantity on every grid slice.
bool monotone_in(const GeneratorTree& tree, ProbeVar var);

/// Selection only sees weight ratios within one step, where the edge ratio
/// is a shared constant, so a tree whose output never varies across
/// candidates at any fixed edge ratio drives the same uniform process as a
/// plain constant.
bool uniform_equivalent(const GeneratorTree& tree);

/// The degree-recovery shape: output depends on degree and moves
/// monotonically with it.
bool degree_monotone(const GeneratorTree& tree);

/// The distance-recovery shape: no delta node, output depends on distance
/// and moves monotonically with it.
bool distance_family(const GeneratorTree& tree);

/// Named generator families used in recovery reports. Matching is behavioral:
/// proportionality to the family representative on the probe grid.
enum class Family { ER, PA, PAPrime, ID, Distance, Other };
const char* family_name(Family f);
Family classify_family(const GeneratorTree& tree);

}  // namespace netsr
