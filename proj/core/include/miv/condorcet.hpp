#pragma once

// Exhaustive Condorcet-winner checking and the subset problems behind it.
// All searches are exponential and bounded by SearchLimits.

#include "miv/limits.hpp"
#include "miv/profile.hpp"

#include <optional>
#include <vector>

namespace miv {

struct CondorcetCheck {
  bool winner = false;
  /// Lexicographically first proposal strictly beating the candidate.
  std::optional<Proposal> defeater;
};

CondorcetCheck is_condorcet(const VotingInstance& instance, const Proposal& p, const SearchLimits& limits = {});

/// Lexicographically first Condorcet winner. Unweighted and external
/// instances only consult the issue-wise majorities (any winner is one);
/// internal instances scan every proposal.
std::optional<Proposal> find_condorcet(const VotingInstance& instance, const SearchLimits& limits = {});

/// A subset of ±1 column vectors whose sum is negative in every coordinate.
/// Returns the first such subset (0-based, ascending) when subsets are ordered
/// by their index bitmask read as a binary number, column i being bit i.
std::optional<std::vector<std::size_t>> solve_nss(const std::vector<std::vector<Opinion>>& columns,
                                                  const SearchLimits& limits = {});
std::optional<std::vector<std::size_t>> solve_nss(const PreferenceProfile& profile, const SearchLimits& limits = {});

/// Lexicographically first proposal beating all-ones. Requires an unweighted
/// instance with odd n in which all-ones is the issue-wise majority.
std::optional<Proposal> solve_major(const VotingInstance& instance, const SearchLimits& limits = {});

/// Vector form of solve_major: columns of odd dimension with positive sums.
/// Returns the issues where the first defeating proposal says -1, so the
/// subset's sum has more negative than positive coordinates.
std::optional<std::vector<std::size_t>> solve_mntpss(const std::vector<std::vector<Opinion>>& columns,
                                                     const SearchLimits& limits = {});

/// True when every voter strictly prefers p to all-ones.
bool unanimously_defeats_ones(const VotingInstance& instance, const Proposal& p);

/// Appends n-1 voters approving every issue (unweighted result).
VotingInstance pad_with_unanimous_voters(const PreferenceProfile& profile);

}  // namespace miv
