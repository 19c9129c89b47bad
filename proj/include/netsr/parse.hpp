#pragma once

#include <string>
#include <string_view>

#include "netsr/expr.hpp"

namespace netsr {

/// Canonical prefix syntax:
///   expr := <real> | <var> | ( <op> expr... )
/// vars: i j k_i k_j kin_i kin_j kout_i kout_j d dd dr xi   (`k` = k_i)
/// ops:  + - * / pow min max (2) | exp log abs (1) | > < = (4) | =0 (3)
///       psi (group-constant a b) | delta (threshold-constant before after)
/// The psi group and delta threshold must be literal numbers.
GeneratorTree parse_generator(std::string_view text);

/// Canonical prefix form; parse(format(t)) reproduces t exactly.
std::string format_generator(const GeneratorTree& tree);

/// Readable infix rendering for reports. Cosmetic only.
std::string format_infix(const GeneratorTree& tree);

/// Shortest decimal form that strtod parses back to the same double.
std::string format_double(double v);

}  // namespace netsr
