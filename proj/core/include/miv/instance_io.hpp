#pragma once

#include "miv/profile.hpp"

#include <string>
#include <string_view>

namespace miv {

/// Reads the line-oriented instance format:
///
///   miv <n> <t> <unweighted|external|internal>
///   n lines of t entries from {+, -, +1, -1}
///   external: one line of t rationals; internal: n such lines
///
/// Blank lines are skipped and '#' starts a comment. Syntax errors raise
/// ParseError with a 1-based line and column; weight invariants raise
/// InvalidInstance.
VotingInstance parse_instance(std::string_view text);

/// Inverse of parse_instance (entries as +1/-1, weights as p/q).
std::string serialize_instance(const VotingInstance& instance);

}  // namespace miv
