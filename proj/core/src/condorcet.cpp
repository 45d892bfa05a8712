#include "miv/condorcet.hpp"

#include "kernel.hpp"
#include "miv/error.hpp"
#include "miv/majority.hpp"

#include <string>

namespace miv {

using detail::Code;

CondorcetCheck is_condorcet(const VotingInstance& instance, const Proposal& p, const SearchLimits& limits) {
  if (p.size() != instance.t()) throw DimensionError("proposal length does not match topic count");
  detail::require_scan(instance.t(), limits.max_scan_topics, "Condorcet check: too many topics to scan");
  const detail::Electorate electorate(instance);
  CondorcetCheck out;
  if (auto q = electorate.first_defeater(detail::encode(p))) {
    out.defeater = detail::decode(*q, instance.t());
  } else {
    out.winner = true;
  }
  return out;
}

std::optional<Proposal> find_condorcet(const VotingInstance& instance, const SearchLimits& limits) {
  const std::size_t t = instance.t();
  if (instance.mode() == WeightMode::Internal) {
    detail::require_scan(t, limits.max_internal_condorcet_topics,
                         "internal-weight Condorcet search: too many topics to scan");
    const detail::Electorate electorate(instance);
    const Code end = detail::full_mask(t);
    for (Code p = 0;; ++p) {
      if (!electorate.first_defeater(p)) return detail::decode(p, t);
      if (p == end) break;
    }
    return std::nullopt;
  }
  detail::require_scan(t, limits.max_scan_topics, "Condorcet search: too many topics to scan");
  const detail::Electorate electorate(instance);
  std::optional<Proposal> found;
  IwmSet(instance, limits).for_each([&](const Proposal& p) {
    if (!electorate.first_defeater(detail::encode(p))) {
      found = p;
      return false;
    }
    return true;
  });
  return found;
}

namespace {

struct NssSearch {
  std::size_t n;
  std::vector<std::vector<int>> cols;
  // minus_below[i][k]: number of -1 entries in coordinate k among columns 0..i-1.
  std::vector<std::vector<int>> minus_below;
  std::vector<int> sum;
  std::vector<bool> chosen;

  bool feasible(std::size_t remaining) const {
    for (std::size_t k = 0; k < n; ++k) {
      if (sum[k] - minus_below[remaining][k] >= 0) return false;
    }
    return true;
  }

  // Decides columns i-1, i-2, ..., 0; excluding before including yields the
  // numerically smallest bitmask first.
  bool dfs(std::size_t i) {
    if (!feasible(i)) return false;
    if (i == 0) return true;
    const std::size_t c = i - 1;
    if (dfs(c)) return true;
    for (std::size_t k = 0; k < n; ++k) sum[k] += cols[c][k];
    chosen[c] = true;
    if (dfs(c)) return true;
    for (std::size_t k = 0; k < n; ++k) sum[k] -= cols[c][k];
    chosen[c] = false;
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> solve_nss(const std::vector<std::vector<Opinion>>& columns,
                                                  const SearchLimits& limits) {
  detail::require_scan(columns.size(), limits.max_nss_columns, "negative-sum-subset search: too many columns");
  if (columns.empty()) return std::nullopt;
  NssSearch s;
  s.n = columns.front().size();
  for (const auto& c : columns) {
    if (c.size() != s.n) throw DimensionError("negative-sum-subset columns differ in dimension");
    std::vector<int> v(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) v[k] = to_int(c[k]);
    s.cols.push_back(std::move(v));
  }
  if (s.n == 0) throw DimensionError("negative-sum-subset columns must be non-empty");
  s.minus_below.assign(columns.size() + 1, std::vector<int>(s.n, 0));
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t k = 0; k < s.n; ++k) s.minus_below[i + 1][k] = s.minus_below[i][k] + (s.cols[i][k] < 0 ? 1 : 0);
  }
  s.sum.assign(s.n, 0);
  s.chosen.assign(columns.size(), false);
  if (!s.dfs(columns.size())) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (s.chosen[i]) out.push_back(i);
  }
  return out;
}

std::optional<std::vector<std::size_t>> solve_nss(const PreferenceProfile& profile, const SearchLimits& limits) {
  std::vector<std::vector<Opinion>> cols;
  cols.reserve(profile.t());
  for (std::size_t j = 0; j < profile.t(); ++j) cols.push_back(profile.column(j));
  return solve_nss(cols, limits);
}

std::optional<Proposal> solve_major(const VotingInstance& instance, const SearchLimits& limits) {
  if (instance.mode() != WeightMode::Unweighted) throw ContractError("MAJOR is defined for unweighted instances");
  if (instance.n() % 2 == 0) throw ContractError("MAJOR requires an odd number of voters");
  const Proposal ones = Proposal::all(instance.t(), Opinion::Plus);
  if (!is_iwm(instance, ones)) throw ContractError("MAJOR requires all-ones to be the issue-wise majority");
  detail::require_scan(instance.t(), limits.max_scan_topics, "MAJOR: too many topics to scan");
  const detail::Electorate electorate(instance);
  if (auto q = electorate.first_defeater(0)) return detail::decode(*q, instance.t());
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> solve_mntpss(const std::vector<std::vector<Opinion>>& columns,
                                                     const SearchLimits& limits) {
  if (columns.empty()) throw DimensionError("vector collection is empty");
  const std::size_t n = columns.front().size();
  std::vector<Opinion> entries(n * columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw DimensionError("vectors differ in dimension");
    int total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      entries[i * columns.size() + j] = columns[j][i];
      total += to_int(columns[j][i]);
    }
    if (total <= 0) throw ContractError("vector " + std::to_string(j) + " does not have a positive sum");
  }
  const auto instance = VotingInstance::unweighted(PreferenceProfile(n, columns.size(), std::move(entries)));
  const auto p = solve_major(instance, limits);
  if (!p) return std::nullopt;
  std::vector<std::size_t> subset;
  for (std::size_t j = 0; j < p->size(); ++j) {
    if ((*p)[j] == Opinion::Minus) subset.push_back(j);
  }
  return subset;
}

bool unanimously_defeats_ones(const VotingInstance& instance, const Proposal& p) {
  const Proposal ones = Proposal::all(instance.t(), Opinion::Plus);
  for (std::size_t i = 0; i < instance.n(); ++i) {
    if (voter_compare(instance, i, p, ones) != ComparisonSign::Positive) return false;
  }
  return true;
}

VotingInstance pad_with_unanimous_voters(const PreferenceProfile& profile) {
  const std::vector<std::vector<Opinion>> extra(profile.n() - 1, std::vector<Opinion>(profile.t(), Opinion::Plus));
  return VotingInstance::unweighted(profile.with_rows_appended(extra));
}

}  // namespace miv
