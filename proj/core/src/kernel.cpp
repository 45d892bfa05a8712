#include "kernel.hpp"

#include <map>
#include <utility>

namespace miv::detail {

Electorate::Electorate(const VotingInstance& instance) : t_(instance.t()) {
  require_codable(t_);
  std::map<std::pair<Code, const ScaledWeights*>, std::size_t> index;
  // Voters sharing a weight row (unweighted / external) share the same
  // ScaledWeights object, so the pointer is enough to identify the row there.
  std::map<std::pair<Code, std::vector<std::int64_t>>, std::size_t> internal_index;
  const bool internal = instance.mode() == WeightMode::Internal;
  for (std::size_t i = 0; i < instance.n(); ++i) {
    const Code vote = encode(instance.profile().row(i));
    const ScaledWeights& sw = instance.scaled_voter_weights(i);
    std::size_t* slot = nullptr;
    std::size_t fresh = groups_.size();
    if (internal) {
      std::vector<std::int64_t> key = sw.weights;
      key.push_back(sw.denominator);
      auto [it, inserted] = internal_index.try_emplace({vote, std::move(key)}, fresh);
      slot = &it->second;
      if (!inserted) {
        groups_[*slot].count += 1;
        continue;
      }
    } else {
      auto [it, inserted] = index.try_emplace({vote, &sw}, fresh);
      slot = &it->second;
      if (!inserted) {
        groups_[*slot].count += 1;
        continue;
      }
    }
    VoterGroup g;
    g.vote = vote;
    g.bit_weights = to_bit_order(sw.weights);
    g.denominator = sw.denominator;
    g.count = 1;
    groups_.push_back(std::move(g));
  }
}

std::vector<Code> iwm_codes(const VotingInstance& instance, const SearchLimits& limits) {
  IwmSet set(instance, limits);
  std::vector<Code> out;
  set.for_each([&](const Proposal& p) {
    out.push_back(encode(p));
    return true;
  });
  return out;
}

}  // namespace miv::detail
