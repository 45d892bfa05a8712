#include "miv/representation.hpp"

#include "kernel.hpp"
#include "miv/error.hpp"

#include <algorithm>
#include <numeric>

namespace miv {

using detail::Code;

std::string_view to_string(BoundCase c) {
  switch (c) {
    case BoundCase::SmallEll:
      return "small-ell";
    case BoundCase::MiddleEll:
      return "middle-ell";
    case BoundCase::LargeEll:
      return "large-ell";
    case BoundCase::Exhaustive:
      return "exhaustive";
  }
  return "?";
}

namespace {

__extension__ using Wide = __int128;
__extension__ using UWide = unsigned __int128;

void require_length(const VotingInstance& instance, const Proposal& p) {
  if (p.size() != instance.t()) throw DimensionError("proposal length does not match topic count");
}

std::size_t first_argmax(const std::vector<Rational>& w) {
  return static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
}

Rational scaled_ratio(std::int64_t num, std::int64_t den) { return {num, den}; }

BigInt to_bigint(Wide v) {
  const bool neg = v < 0;
  UWide u = neg ? static_cast<UWide>(-(v + 1)) + 1 : static_cast<UWide>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

}  // namespace

RepresentationReport partition_proposal(const VotingInstance& instance, const Proposal& p_iwm) {
  require_length(instance, p_iwm);
  const std::size_t t = instance.t();
  const AverageWeights avg = average_weight_vector(instance);
  const ScaledWeights sw = scale_weights(avg.weights);
  const std::int64_t D = sw.denominator;
  const Rational& ell = avg.max;
  const Rational half(1, 2);

  std::vector<bool> in_t(t, false);
  RepresentationReport report;
  if (ell < Rational(1, 3)) {
    report.bound_used = BoundCase::SmallEll;
    report.bound = half + ell / Rational(2);
    // Drop topics in index order while the rest keeps weight >= 1/2.
    std::vector<bool> in_s(t, true);
    std::int64_t total = D;
    for (std::size_t j = 0; j < t; ++j) {
      if (2 * (total - sw.weights[j]) >= D) {
        in_s[j] = false;
        total -= sw.weights[j];
      }
    }
    if (scaled_ratio(total, D) <= report.bound) {
      in_t = in_s;
    } else {
      const auto j = static_cast<std::size_t>(std::find(in_s.begin(), in_s.end(), true) - in_s.begin());
      for (std::size_t k = 0; k < t; ++k) in_t[k] = !in_s[k] || k == j;
    }
  } else if (ell <= half) {
    report.bound_used = BoundCase::MiddleEll;
    report.bound = Rational(1) - ell;
    in_t.assign(t, true);
    in_t[first_argmax(avg.weights)] = false;
  } else {
    report.bound_used = BoundCase::LargeEll;
    report.bound = ell;
    in_t[first_argmax(avg.weights)] = true;
  }

  Proposal p = p_iwm;
  std::int64_t off_weight = 0;
  for (std::size_t j = 0; j < t; ++j) {
    if (in_t[j]) {
      report.agree_topics.push_back(j);
    } else {
      p[j] = -p[j];
      off_weight += sw.weights[j];
    }
  }
  SupportTally tally = support_tally(instance, p);
  if (tally.weakly_supported()) {
    report.proposal = std::move(p);
    report.distance_to_iwm = scaled_ratio(off_weight, D);
  } else {
    report.proposal = p.complement();
    tally = support_tally(instance, report.proposal);
    report.distance_to_iwm = scaled_ratio(D - off_weight, D);
  }
  report.support = tally;
  return report;
}

std::optional<RepresentationReport> best_supported_oracle(const VotingInstance& instance, const Proposal& p_iwm,
                                                          SupportLevel level, const SearchLimits& limits) {
  require_length(instance, p_iwm);
  const std::size_t t = instance.t();
  detail::require_scan(t, limits.max_oracle_topics, "supported-proposal oracle: too many topics");
  const AverageWeights avg = average_weight_vector(instance);
  const ScaledWeights sw = scale_weights(avg.weights);
  const auto bit_w = detail::to_bit_order(sw.weights);
  const detail::Electorate electorate(instance);
  const Code iwm = detail::encode(p_iwm);

  std::optional<Code> best;
  std::int64_t best_d = 0;
  const Code end = detail::full_mask(t);
  for (Code p = 0;; ++p) {
    const std::int64_t d = detail::masked_sum(bit_w, p ^ iwm);
    if (!best || d < best_d) {
      const std::int64_t margin = electorate.support_margin(p);
      if (level == SupportLevel::Weak ? margin >= 0 : margin > 0) {
        best = p;
        best_d = d;
      }
    }
    if (p == end) break;
  }
  if (!best) return std::nullopt;
  RepresentationReport r;
  r.proposal = detail::decode(*best, t);
  r.distance_to_iwm = scaled_ratio(best_d, sw.denominator);
  r.support = electorate.tally(*best);
  r.bound_used = BoundCase::Exhaustive;
  r.bound = r.distance_to_iwm;
  for (std::size_t j = 0; j < t; ++j) {
    if (r.proposal[j] == p_iwm[j]) r.agree_topics.push_back(j);
  }
  return r;
}

namespace {

ScaledWeights checked_scale(std::span<const Rational> w) {
  Rational total(0);
  for (const auto& x : w) {
    if (x.sign() < 0) throw InvalidInstance("weights must be non-negative");
    total += x;
  }
  if (total != Rational(1)) throw InvalidInstance("weights sum " + total.to_string() + " ≠ 1");
  return scale_weights(w);
}

std::vector<std::size_t> relevant_brute_force(const ScaledWeights& sw, const SearchLimits& limits) {
  const std::size_t t = sw.weights.size();
  detail::require_scan(t, limits.max_relevance_brute_force_topics, "brute-force relevance: too many topics");
  const std::int64_t D = sw.denominator;
  std::vector<bool> relevant(t, false);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t); ++mask) {
    std::int64_t sum = 0;
    std::int64_t lightest = D + 1;
    for (std::size_t j = 0; j < t; ++j) {
      if ((mask >> j) & 1U) {
        sum += sw.weights[j];
        lightest = std::min(lightest, sw.weights[j]);
      }
    }
    // Minimal group: weight > 1/2 and dropping the lightest member gives <= 1/2.
    if (2 * sum > D && 2 * (sum - lightest) <= D) {
      for (std::size_t j = 0; j < t; ++j) {
        if ((mask >> j) & 1U) relevant[j] = true;
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < t; ++j) {
    if (relevant[j]) out.push_back(j);
  }
  return out;
}

// Is there S among the other topics with D/2 - w_j < w(S) <= D/2?
bool knapsack_relevant(const ScaledWeights& sw, std::size_t j) {
  const std::int64_t D = sw.denominator;
  const std::int64_t wj = sw.weights[j];
  if (wj == 0) return false;
  auto hit = [&](std::int64_t s) { return 2 * s <= D && 2 * (s + wj) > D; };
  std::vector<std::int64_t> reach{0};
  std::vector<std::int64_t> shifted;
  std::vector<std::int64_t> merged;
  for (std::size_t k = 0; k < sw.weights.size(); ++k) {
    const std::int64_t a = sw.weights[k];
    if (k == j || a == 0) continue;
    shifted.clear();
    for (std::int64_t s : reach) {
      if (2 * (s + a) > D) break;
      if (hit(s + a)) return true;
      shifted.push_back(s + a);
    }
    merged.clear();
    std::set_union(reach.begin(), reach.end(), shifted.begin(), shifted.end(), std::back_inserter(merged));
    reach.swap(merged);
  }
  return std::any_of(reach.begin(), reach.end(), hit);
}

std::vector<std::size_t> relevant_knapsack(const ScaledWeights& sw, const SearchLimits& limits) {
  if (sw.denominator > limits.max_knapsack_scale) {
    throw PrecisionError("knapsack relevance: common denominator " + std::to_string(sw.denominator) +
                         " exceeds the scale bound " + std::to_string(limits.max_knapsack_scale));
  }
  const std::size_t t = sw.weights.size();
  std::vector<std::size_t> order(t);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sw.weights[a] < sw.weights[b]; });
  // Relevance is upward closed in weight: find the first relevant position.
  std::size_t lo = 0;
  std::size_t hi = t;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (knapsack_relevant(sw, order[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  std::vector<std::size_t> out(order.begin() + static_cast<std::ptrdiff_t>(lo), order.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::size_t> relevant_topics(std::span<const Rational> w, RelevanceEngine engine,
                                         const SearchLimits& limits) {
  const ScaledWeights sw = checked_scale(w);
  return engine == RelevanceEngine::BruteForce ? relevant_brute_force(sw, limits) : relevant_knapsack(sw, limits);
}

bool has_strict_relevant_majority(const VotingInstance& instance, const SearchLimits& limits) {
  const AverageWeights avg = average_weight_vector(instance);
  const Rational half(1, 2);
  for (std::size_t j : relevant_topics(avg.weights, RelevanceEngine::Knapsack, limits)) {
    if (topic_majority(instance, j) != half) return true;
  }
  return false;
}

WagnerReport wagner_check(const VotingInstance& instance) {
  const std::size_t t = instance.t();
  const AverageWeights avg = average_weight_vector(instance);
  const Rational half(1, 2);
  WagnerReport r;
  r.flipped.assign(t, false);
  r.average_majority = Rational(0);
  for (std::size_t j = 0; j < t; ++j) {
    Rational m = topic_majority(instance, j);
    if (m < half) {
      r.flipped[j] = true;
      m = Rational(1) - m;
    }
    r.average_majority += avg.weights[j] * m;
    r.majorities.push_back(std::move(m));
  }
  r.w_ones = Rational(0);
  for (std::size_t i = 0; i < instance.n(); ++i) {
    const auto w = instance.voter_weights(i);
    for (std::size_t j = 0; j < t; ++j) {
      const bool plus = instance.profile().at(i, j) == Opinion::Plus;
      if (plus != r.flipped[j]) r.w_ones += w[j];
    }
  }
  const Rational three_quarters(3, 4);
  r.anscombe_safe = r.average_majority >= three_quarters;
  r.ostrogorski_safe = instance.mode() != WeightMode::Internal &&
                       std::all_of(r.majorities.begin(), r.majorities.end(),
                                   [&](const Rational& m) { return m >= three_quarters; });
  return r;
}

namespace {

// Unique all-ones IWM, else a failure message.
std::string check_unique_ones_iwm(const VotingInstance& instance) {
  const IwmSet iwm(instance);
  if (!iwm.tied_topics().empty()) return "some topic has a tied majority";
  if (iwm.canonical() != Proposal::all(instance.t(), Opinion::Plus)) return "all-ones is not the issue-wise majority";
  return {};
}

// No weakly supported proposal lies strictly closer than `bound` to all-ones.
std::string check_lower_bound(const VotingInstance& instance, const Rational& bound) {
  const std::size_t t = instance.t();
  const AverageWeights avg = average_weight_vector(instance);
  const ScaledWeights sw = scale_weights(avg.weights);
  const auto bit_w = detail::to_bit_order(sw.weights);
  const detail::Electorate electorate(instance);
  const Code end = detail::full_mask(t);
  for (Code p = 0;; ++p) {
    if (scaled_ratio(detail::masked_sum(bit_w, p), sw.denominator) < bound && electorate.support_margin(p) >= 0) {
      return "proposal " + detail::decode(p, t).to_string() + " is weakly supported below the bound";
    }
    if (p == end) break;
  }
  return {};
}

}  // namespace

GeneratedInstance generate_small_ell(std::size_t k) {
  if (k == 0) throw ContractError("small-ell generator needs k >= 1");
  const std::size_t t = 2 * k + 1;
  const auto ti = static_cast<std::int64_t>(t);
  std::vector<Opinion> entries;
  std::vector<std::vector<Rational>> weights;
  std::size_t n = 0;
  for (std::size_t type = 0; type < t; ++type) {
    std::vector<Rational> w(t, Rational(1, 2 * ti - 1));
    w[type] = Rational(ti, 2 * ti - 1);
    for (std::size_t c = 0; c < 2 * t - 1; ++c) {
      for (std::size_t j = 0; j < t; ++j) entries.push_back(j == type ? Opinion::Minus : Opinion::Plus);
      weights.push_back(w);
      ++n;
    }
  }
  for (std::size_t c = 0; c < t + 1; ++c) {
    entries.insert(entries.end(), t, Opinion::Plus);
    weights.emplace_back(t, Rational(1, ti));
    ++n;
  }
  GeneratedInstance g{VotingInstance::internal(PreferenceProfile(n, t, std::move(entries)), std::move(weights)),
                      Rational(1, ti), Rational(1, 2) + Rational(1, 2 * ti), false, {}};
  g.failure = check_unique_ones_iwm(g.instance);
  if (g.failure.empty() && average_weight_vector(g.instance).max != g.ell) g.failure = "maximum average weight is not 1/t";
  if (g.failure.empty() && t <= 15) g.failure = check_lower_bound(g.instance, g.lower_bound);
  g.verified = g.failure.empty();
  return g;
}

GeneratedInstance generate_big_ell(const Rational& ell) {
  const Rational half(1, 2);
  const Rational one(1);
  if (!(ell > half && ell < one)) throw ContractError("big-ell generator needs 1/2 < ell < 1, got " + ell.to_string());
  const Rational a = ell / (one - ell);
  const Rational b = one / (Rational(2) * ell - one);
  const Rational m = std::max(a, b);
  const BigInt floor_m = m.numerator() / m.denominator();
  if (floor_m >= BigInt(std::int64_t{1} << 30)) throw CapExceeded("big-ell generator: x too large", 1LL << 30, -1);
  const auto x = static_cast<std::int64_t>(floor_m) + 1;

  const Rational w_plus = ell * Rational(x + 1, x);
  const Rational w_minus = ell * Rational(x, x + 1);
  std::vector<Opinion> entries;
  std::vector<std::vector<Rational>> weights;
  for (std::int64_t c = 0; c < x; ++c) {
    entries.insert(entries.end(), {Opinion::Plus, Opinion::Plus});
    weights.push_back({w_plus, one - w_plus});
  }
  for (std::int64_t c = 0; c < x + 1; ++c) {
    entries.insert(entries.end(), {Opinion::Minus, Opinion::Plus});
    weights.push_back({w_minus, one - w_minus});
  }
  const auto n = static_cast<std::size_t>(2 * x + 1);
  GeneratedInstance g{VotingInstance::internal(PreferenceProfile(n, 2, std::move(entries)), std::move(weights)), ell,
                      ell, false, {}};
  if (!(w_minus > half && w_plus < one)) g.failure = "first-topic weights leave (1/2, 1)";
  if (g.failure.empty()) g.failure = check_unique_ones_iwm(g.instance);
  if (g.failure.empty() && average_weight_vector(g.instance).weights[0] != ell) g.failure = "first average weight is not ell";
  if (g.failure.empty()) g.failure = check_lower_bound(g.instance, g.lower_bound);
  g.verified = g.failure.empty();
  return g;
}

SwapMaps swap_maps(std::size_t voter, const VotingInstance& instance, const Proposal& p_iwm, const Proposal& p) {
  if (instance.mode() == WeightMode::Internal) throw ContractError("swap maps need a shared weight vector");
  require_length(instance, p_iwm);
  require_length(instance, p);
  if (voter >= instance.n()) throw DimensionError("voter index out of range");
  const auto w = instance.voter_weights(voter);
  const auto v = instance.profile().row(voter);
  SwapMaps out;
  out.type_iwm = weighted_inner(p, p_iwm, w).sign();
  out.type_voter = weighted_inner(v, p, w).sign();
  if (out.type_iwm == 0 || out.type_voter == 0) throw ContractError("proposal has a zero inner product with the voter or the IWM");
  std::vector<Opinion> plus(p.size());
  std::vector<Opinion> minus(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    const bool agree = v[j] == p_iwm[j];
    plus[j] = agree ? p[j] : -p[j];
    minus[j] = agree ? -p[j] : p[j];
  }
  out.f_plus = Proposal(std::move(plus));
  out.f_minus = Proposal(std::move(minus));
  out.f = out.type_iwm == out.type_voter ? out.f_plus : out.f_minus;
  return out;
}

Expectations thought_experiment_expectations(const VotingInstance& instance, const Proposal& p_iwm,
                                             const SearchLimits& limits) {
  if (instance.mode() == WeightMode::Internal) throw ContractError("expectations need a shared weight vector");
  require_length(instance, p_iwm);
  const std::size_t t = instance.t();
  detail::require_scan(t, limits.max_oracle_topics, "thought-experiment enumeration: too many topics");
  const ScaledWeights& sw = instance.scaled_voter_weights(0);
  const std::int64_t D = sw.denominator;
  const auto bit_w = detail::to_bit_order(sw.weights);
  const detail::Electorate electorate(instance);
  const Code iwm = detail::encode(p_iwm);

  Wide x_num = 0;
  Wide y_num = 0;
  std::uint64_t count = 0;
  const Code end = detail::full_mask(t);
  for (Code p = 0;; ++p) {
    const std::int64_t inner = D - 2 * detail::masked_sum(bit_w, p ^ iwm);
    if (inner > 0) {
      ++count;
      for (const auto& g : electorate.groups()) {
        x_num += static_cast<Wide>(g.count) * (D - 2 * electorate.distance(g, p));
      }
      y_num += static_cast<Wide>(inner) * electorate.support_margin(p);
    }
    if (p == end) break;
  }
  if (count == 0) throw ContractError("B_m is empty");
  const BigInt den = BigInt(D) * BigInt(count);
  return {Rational(to_bigint(x_num), den), Rational(to_bigint(y_num), den), count};
}

}  // namespace miv
