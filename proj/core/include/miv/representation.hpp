#pragma once

// Majority-supported proposals close to an issue-wise majority, relevant
// topics, the three-fourths safety check, lower-bound instance generators and
// the swap maps / expectations behind the external-weight existence argument.

#include "miv/limits.hpp"
#include "miv/majority.hpp"
#include "miv/profile.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace miv {

/// Which range of the maximum average weight l the partition bound came from.
enum class BoundCase {
  SmallEll,   // l < 1/3: bound 1/2 + l/2
  MiddleEll,  // 1/3 <= l <= 1/2: bound 1 - l
  LargeEll,   // l > 1/2: bound l
  Exhaustive  // exact optimum, no bound involved
};

std::string_view to_string(BoundCase c);

struct RepresentationReport {
  Proposal proposal;
  /// Distance to the reference IWM under the average weight vector.
  Rational distance_to_iwm;
  SupportTally support;
  BoundCase bound_used = BoundCase::Exhaustive;
  /// Upper bound guaranteed by the case (equals distance for Exhaustive).
  Rational bound;
  /// Topics on which the partition proposal before complementing agrees with the IWM.
  std::vector<std::size_t> agree_topics;
};

/// Partition construction: picks T with 1/2 <= w~(T) <= case bound, agrees
/// with p_iwm exactly on T, and returns that proposal if weakly supported,
/// else its complement. Throws DimensionError on length mismatch.
RepresentationReport partition_proposal(const VotingInstance& instance, const Proposal& p_iwm);

enum class SupportLevel { Weak, Strict };

/// Lexicographically first proposal of minimum w~-distance to p_iwm among
/// those with the requested support; none if no proposal qualifies.
std::optional<RepresentationReport> best_supported_oracle(const VotingInstance& instance, const Proposal& p_iwm,
                                                          SupportLevel level = SupportLevel::Weak,
                                                          const SearchLimits& limits = {});

enum class RelevanceEngine { BruteForce, Knapsack };

/// Topics belonging to some minimal topic group (weight > 1/2, every
/// single-topic removal drops it to <= 1/2). Ascending 0-based indices.
std::vector<std::size_t> relevant_topics(std::span<const Rational> w, RelevanceEngine engine = RelevanceEngine::Knapsack,
                                         const SearchLimits& limits = {});

/// Some relevant topic (under the instance's external / uniform weights)
/// whose majority is not an exact tie.
bool has_strict_relevant_majority(const VotingInstance& instance, const SearchLimits& limits = {});

struct WagnerReport {
  /// Columns negated so that every oriented majority is >= 1/2.
  std::vector<bool> flipped;
  std::vector<Rational> majorities;
  Rational average_majority;
  /// Total voter weight placed on majority opinions after orientation.
  Rational w_ones;
  bool anscombe_safe = false;
  bool ostrogorski_safe = false;
};

WagnerReport wagner_check(const VotingInstance& instance);

struct GeneratedInstance {
  VotingInstance instance;
  Rational ell;
  /// Distance from all-ones below which no proposal is weakly supported.
  Rational lower_bound;
  bool verified = false;
  /// Empty when verified; otherwise the first failed property.
  std::string failure;
};

/// t = 2k+1 topics, single-issue voter types plus an all-ones uniform type.
/// Verification is exhaustive for t <= 15.
GeneratedInstance generate_small_ell(std::size_t k);

/// Two topics, x and x+1 voters for the smallest integer
/// x > max(l/(1-l), 1/(2l-1)). Throws ContractError unless 1/2 < l < 1.
GeneratedInstance generate_big_ell(const Rational& ell);

struct SwapMaps {
  Proposal f_plus;
  Proposal f_minus;
  Proposal f;
  /// (sgn <p, p_iwm>_w, sgn <v, p>_w).
  int type_iwm = 0;
  int type_voter = 0;
};

/// Throws ContractError for internal weights or when an inner product is zero.
SwapMaps swap_maps(std::size_t voter, const VotingInstance& instance, const Proposal& p_iwm, const Proposal& p);

struct Expectations {
  Rational ex;
  Rational ey;
  std::uint64_t sample_space = 0;
};

/// Exact means over B_m = {p : <p, p_iwm>_w > 0} of sum_i <v_i, p>_w and of
/// <p, p_iwm>_w * (supporters - opposers).
Expectations thought_experiment_expectations(const VotingInstance& instance, const Proposal& p_iwm,
                                             const SearchLimits& limits = {});

}  // namespace miv
