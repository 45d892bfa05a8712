#pragma once

// Issue-wise majorities, individual and collective pairwise comparisons,
// support tallies, and the Anscombe / Ostrogorski detectors.

#include "miv/limits.hpp"
#include "miv/profile.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace miv {

enum class ComparisonSign : std::int8_t { Negative = -1, Zero = 0, Positive = 1 };

constexpr int to_int(ComparisonSign s) { return static_cast<int>(s); }
constexpr ComparisonSign sign_of(long long v) {
  return v > 0 ? ComparisonSign::Positive : (v < 0 ? ComparisonSign::Negative : ComparisonSign::Zero);
}
constexpr ComparisonSign operator-(ComparisonSign s) { return static_cast<ComparisonSign>(-static_cast<int>(s)); }

/// Voters split by whether p lies strictly closer than 1/2 (support),
/// strictly farther (oppose), or exactly at 1/2 (indifferent).
struct SupportTally {
  std::size_t supporters = 0;
  std::size_t opposers = 0;
  std::size_t indifferent = 0;

  bool weakly_supported() const { return supporters >= opposers; }
  bool strictly_supported() const { return supporters > opposers; }
  friend bool operator==(const SupportTally&, const SupportTally&) = default;
};

/// +1 if voter i strictly prefers p to q, 0 if indifferent, -1 otherwise.
/// Internal-weight instances use voter i's own weight row.
ComparisonSign voter_compare(const VotingInstance& instance, std::size_t i, const Proposal& p, const Proposal& q);
/// Sign of (#voters preferring p) - (#voters preferring q).
ComparisonSign collective_compare(const VotingInstance& instance, const Proposal& p, const Proposal& q);
SupportTally support_tally(const VotingInstance& instance, const Proposal& p);

bool is_iwm(const VotingInstance& instance, const Proposal& p);

/// The issue-wise majority proposals of an instance. Topics with an exact
/// 1/2 majority admit both opinions; enumeration runs lexicographically
/// (+1 first) over those tied topics.
class IwmSet {
 public:
  IwmSet(const VotingInstance& instance, const SearchLimits& limits = {});

  /// +1 on every tied topic.
  const Proposal& canonical() const { return canonical_; }
  const std::vector<std::size_t>& tied_topics() const { return tied_; }
  /// 2^k for k tied topics (saturates at 2^63).
  std::uint64_t count() const;

  /// Visits members in lexicographic order until `visit` returns false.
  /// Throws CapExceeded when the tie count exceeds the configured cap.
  void for_each(const std::function<bool(const Proposal&)>& visit) const;
  std::vector<Proposal> all() const;

 private:
  Proposal canonical_;
  std::vector<std::size_t> tied_;
  std::size_t cap_;
};

IwmSet iwm_proposals(const VotingInstance& instance, const SearchLimits& limits = {});

struct AnscombeReport {
  bool occurs = false;
  /// Lexicographically first IWM beaten by its complement.
  std::optional<Proposal> witness_iwm;
  /// Support tally of the witness (its opposers are the complement's backers).
  std::optional<SupportTally> witness_tally;
};

struct OstrogorskiReport {
  bool occurs = false;
  /// Lexicographically first IWM that is not a Condorcet winner.
  std::optional<Proposal> witness_iwm;
  /// Lexicographically first proposal beating that IWM.
  std::optional<Proposal> defeater;
};

AnscombeReport detect_anscombe(const VotingInstance& instance, const SearchLimits& limits = {});
OstrogorskiReport detect_ostrogorski(const VotingInstance& instance, const SearchLimits& limits = {});

}  // namespace miv
