#pragma once

// Integer kernel for exhaustive proposal scans. Proposals are packed into a
// 64-bit code with coordinate j at bit (t-1-j), a set bit meaning -1, so
// counting 0, 1, ..., 2^t-1 walks proposals in lexicographic (+1 first) order.
// Identical voters (same vote, same weight row) are merged with a multiplicity.

#include "miv/error.hpp"
#include "miv/majority.hpp"
#include "miv/profile.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace miv::detail {

using Code = std::uint64_t;

inline void require_codable(std::size_t t) {
  if (t > 63) throw CapExceeded("proposal scans support at most 63 topics", 63, static_cast<long long>(t));
}

inline void require_scan(std::size_t t, std::size_t cap, const char* what) {
  if (t > cap) throw CapExceeded(what, static_cast<long long>(cap), static_cast<long long>(t));
}

inline Code encode(std::span<const Opinion> p) {
  require_codable(p.size());
  const std::size_t t = p.size();
  Code c = 0;
  for (std::size_t j = 0; j < t; ++j) {
    if (p[j] == Opinion::Minus) c |= Code{1} << (t - 1 - j);
  }
  return c;
}

inline Proposal decode(Code c, std::size_t t) {
  std::vector<Opinion> d(t);
  for (std::size_t j = 0; j < t; ++j) d[j] = ((c >> (t - 1 - j)) & 1U) ? Opinion::Minus : Opinion::Plus;
  return Proposal(std::move(d));
}

inline Code full_mask(std::size_t t) { return t == 64 ? ~Code{0} : ((Code{1} << t) - 1); }

/// Sum of bit-indexed integer weights over the set bits of x.
inline std::int64_t masked_sum(const std::vector<std::int64_t>& bit_weights, Code x) {
  std::int64_t s = 0;
  while (x) {
    s += bit_weights[static_cast<std::size_t>(std::countr_zero(x))];
    x &= x - 1;
  }
  return s;
}

/// Converts topic-indexed weights to bit-indexed ones.
inline std::vector<std::int64_t> to_bit_order(std::span<const std::int64_t> topic_weights) {
  const std::size_t t = topic_weights.size();
  std::vector<std::int64_t> out(t);
  for (std::size_t j = 0; j < t; ++j) out[t - 1 - j] = topic_weights[j];
  return out;
}

struct VoterGroup {
  Code vote = 0;
  std::vector<std::int64_t> bit_weights;
  std::int64_t denominator = 1;
  std::int64_t count = 0;
};

class Electorate {
 public:
  explicit Electorate(const VotingInstance& instance);

  std::size_t t() const { return t_; }
  const std::vector<VoterGroup>& groups() const { return groups_; }

  /// Scaled distance of group g to p (divide by the group denominator).
  std::int64_t distance(const VoterGroup& g, Code p) const { return masked_sum(g.bit_weights, p ^ g.vote); }

  /// Signed vote margin of p over q: (#prefer p) - (#prefer q).
  std::int64_t margin(Code p, Code q) const {
    std::int64_t m = 0;
    for (const auto& g : groups_) {
      const std::int64_t dp = distance(g, p);
      const std::int64_t dq = distance(g, q);
      if (dp < dq) {
        m += g.count;
      } else if (dp > dq) {
        m -= g.count;
      }
    }
    return m;
  }

  SupportTally tally(Code p) const {
    SupportTally s;
    for (const auto& g : groups_) {
      const std::int64_t twice = 2 * distance(g, p);
      const auto c = static_cast<std::size_t>(g.count);
      if (twice < g.denominator) {
        s.supporters += c;
      } else if (twice > g.denominator) {
        s.opposers += c;
      } else {
        s.indifferent += c;
      }
    }
    return s;
  }

  /// supporters - opposers, without materialising the tally.
  std::int64_t support_margin(Code p) const {
    std::int64_t m = 0;
    for (const auto& g : groups_) {
      const std::int64_t twice = 2 * distance(g, p);
      if (twice < g.denominator) {
        m += g.count;
      } else if (twice > g.denominator) {
        m -= g.count;
      }
    }
    return m;
  }

  /// Lexicographically first proposal q with q strictly beating p.
  std::optional<Code> first_defeater(Code p) const {
    const Code end = full_mask(t_);
    for (Code q = 0;; ++q) {
      if (q != p && margin(q, p) > 0) return q;
      if (q == end) break;
    }
    return std::nullopt;
  }

 private:
  std::size_t t_;
  std::vector<VoterGroup> groups_;
};

/// The IWM enumeration as codes, honouring the tie cap.
std::vector<Code> iwm_codes(const VotingInstance& instance, const SearchLimits& limits);

}  // namespace miv::detail
