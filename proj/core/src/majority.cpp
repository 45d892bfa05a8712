#include "miv/majority.hpp"

#include "kernel.hpp"
#include "miv/error.hpp"

#include <string>

namespace miv {

namespace {

void require_length(const VotingInstance& instance, const Proposal& p) {
  if (p.size() != instance.t()) {
    throw DimensionError("proposal has " + std::to_string(p.size()) + " entries, instance has " +
                         std::to_string(instance.t()) + " topics");
  }
}

std::int64_t scaled_distance(std::span<const Opinion> v, std::span<const Opinion> p, const ScaledWeights& w) {
  std::int64_t d = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != p[j]) d += w.weights[j];
  }
  return d;
}

}  // namespace

ComparisonSign voter_compare(const VotingInstance& instance, std::size_t i, const Proposal& p, const Proposal& q) {
  require_length(instance, p);
  require_length(instance, q);
  if (i >= instance.n()) throw DimensionError("voter index " + std::to_string(i) + " out of range");
  const auto v = instance.profile().row(i);
  const ScaledWeights& w = instance.scaled_voter_weights(i);
  return sign_of(scaled_distance(v, q, w) - scaled_distance(v, p, w));
}

ComparisonSign collective_compare(const VotingInstance& instance, const Proposal& p, const Proposal& q) {
  require_length(instance, p);
  require_length(instance, q);
  long long margin = 0;
  for (std::size_t i = 0; i < instance.n(); ++i) margin += to_int(voter_compare(instance, i, p, q));
  return sign_of(margin);
}

SupportTally support_tally(const VotingInstance& instance, const Proposal& p) {
  require_length(instance, p);
  SupportTally s;
  for (std::size_t i = 0; i < instance.n(); ++i) {
    const ScaledWeights& w = instance.scaled_voter_weights(i);
    const std::int64_t twice = 2 * scaled_distance(instance.profile().row(i), p, w);
    if (twice < w.denominator) {
      ++s.supporters;
    } else if (twice > w.denominator) {
      ++s.opposers;
    } else {
      ++s.indifferent;
    }
  }
  return s;
}

bool is_iwm(const VotingInstance& instance, const Proposal& p) {
  require_length(instance, p);
  const Rational half(1, 2);
  for (std::size_t j = 0; j < instance.t(); ++j) {
    const Rational m = topic_majority(instance, j);
    if (p[j] == Opinion::Plus ? m < half : m > half) return false;
  }
  return true;
}

IwmSet::IwmSet(const VotingInstance& instance, const SearchLimits& limits) : cap_(limits.max_tied_topics) {
  const Rational half(1, 2);
  std::vector<Opinion> d(instance.t());
  for (std::size_t j = 0; j < instance.t(); ++j) {
    const Rational m = topic_majority(instance, j);
    d[j] = m < half ? Opinion::Minus : Opinion::Plus;
    if (m == half) tied_.push_back(j);
  }
  canonical_ = Proposal(std::move(d));
}

std::uint64_t IwmSet::count() const {
  return tied_.size() >= 64 ? (std::uint64_t{1} << 63) : (std::uint64_t{1} << tied_.size());
}

void IwmSet::for_each(const std::function<bool(const Proposal&)>& visit) const {
  if (tied_.size() > cap_) {
    throw CapExceeded("issue-wise majority enumeration: too many tied topics", static_cast<long long>(cap_),
                      static_cast<long long>(tied_.size()));
  }
  const std::size_t k = tied_.size();
  Proposal p = canonical_;
  // Bit (k-1-r) of `mask` set means tied topic r takes -1, so counting up is lexicographic.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    for (std::size_t r = 0; r < k; ++r) {
      p[tied_[r]] = ((mask >> (k - 1 - r)) & 1U) ? Opinion::Minus : Opinion::Plus;
    }
    if (!visit(p)) return;
  }
}

std::vector<Proposal> IwmSet::all() const {
  std::vector<Proposal> out;
  for_each([&](const Proposal& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

IwmSet iwm_proposals(const VotingInstance& instance, const SearchLimits& limits) { return IwmSet(instance, limits); }

AnscombeReport detect_anscombe(const VotingInstance& instance, const SearchLimits& limits) {
  AnscombeReport report;
  IwmSet(instance, limits).for_each([&](const Proposal& p) {
    const SupportTally tally = support_tally(instance, p);
    if (tally.opposers > tally.supporters) {
      report.occurs = true;
      report.witness_iwm = p;
      report.witness_tally = tally;
      return false;
    }
    return true;
  });
  return report;
}

OstrogorskiReport detect_ostrogorski(const VotingInstance& instance, const SearchLimits& limits) {
  detail::require_scan(instance.t(), limits.max_scan_topics, "Ostrogorski detection: too many topics to scan");
  const detail::Electorate electorate(instance);
  OstrogorskiReport report;
  IwmSet(instance, limits).for_each([&](const Proposal& p) {
    if (auto q = electorate.first_defeater(detail::encode(p))) {
      report.occurs = true;
      report.witness_iwm = p;
      report.defeater = detail::decode(*q, instance.t());
      return false;
    }
    return true;
  });
  return report;
}

}  // namespace miv
