#pragma once

// Value types for multi-issue binary voting: opinions, proposals, preference
// profiles, weight schemes and voting instances, plus the weighted Hamming /
// inner-product primitives the rest of the library builds on.

#include "miv/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace miv {

enum class Opinion : std::int8_t { Minus = -1, Plus = 1 };

constexpr Opinion operator-(Opinion o) { return o == Opinion::Plus ? Opinion::Minus : Opinion::Plus; }
constexpr int to_int(Opinion o) { return static_cast<int>(o); }
Opinion opinion_from_int(int v);

/// A decision (+1 / -1) on each of t topics.
///
/// Proposals order lexicographically with +1 preceding -1; every witness the
/// library reports is the first one in this order.
class Proposal {
 public:
  Proposal() = default;
  explicit Proposal(std::vector<Opinion> decisions) : decisions_(std::move(decisions)) {}
  Proposal(std::initializer_list<int> values);

  static Proposal all(std::size_t t, Opinion o) { return Proposal(std::vector<Opinion>(t, o)); }
  /// Parses "(+1,-1,+1)", "+1 -1 +1", "+-+" and similar spellings.
  static Proposal parse(std::string_view text);

  std::size_t size() const { return decisions_.size(); }
  Opinion operator[](std::size_t j) const { return decisions_[j]; }
  Opinion& operator[](std::size_t j) { return decisions_[j]; }
  std::span<const Opinion> decisions() const { return decisions_; }
  operator std::span<const Opinion>() const { return decisions_; }  // NOLINT(google-explicit-constructor)

  Proposal complement() const;
  /// "(+1,-1,+1)".
  std::string to_string() const;

  friend bool operator==(const Proposal&, const Proposal&) = default;
  /// Lexicographic, +1 before -1.
  friend bool operator<(const Proposal& a, const Proposal& b);

 private:
  std::vector<Opinion> decisions_;
};

Proposal complement(const Proposal& p);

/// n voters by t issues, every entry +1 or -1. Rows are stored row-major;
/// each column is additionally bit-packed (bit set = +1) so column Hamming
/// distances reduce to popcounts.
class PreferenceProfile {
 public:
  PreferenceProfile() = default;
  PreferenceProfile(std::size_t n, std::size_t t, std::vector<Opinion> entries);
  static PreferenceProfile from_rows(const std::vector<std::vector<int>>& rows);
  static PreferenceProfile from_columns(const std::vector<std::vector<int>>& columns);

  std::size_t n() const { return n_; }
  std::size_t t() const { return t_; }
  Opinion at(std::size_t i, std::size_t j) const { return entries_[i * t_ + j]; }
  std::span<const Opinion> row(std::size_t i) const { return {entries_.data() + i * t_, t_}; }
  std::vector<Opinion> column(std::size_t j) const;

  /// Unweighted Hamming distance between columns j and k.
  std::size_t column_distance(std::size_t j, std::size_t k) const;
  std::span<const std::uint64_t> packed_column(std::size_t j) const {
    return {packed_.data() + j * words_, words_};
  }

  PreferenceProfile submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  /// Negates every column j with flip[j] set.
  PreferenceProfile flip_columns(const std::vector<bool>& flip) const;
  PreferenceProfile flip_rows(const std::vector<bool>& flip) const;
  PreferenceProfile transpose() const;
  /// Appends the given rows below the existing ones.
  PreferenceProfile with_rows_appended(const std::vector<std::vector<Opinion>>& rows) const;

  friend bool operator==(const PreferenceProfile& a, const PreferenceProfile& b) {
    return a.n_ == b.n_ && a.t_ == b.t_ && a.entries_ == b.entries_;
  }

 private:
  void pack();

  std::size_t n_ = 0;
  std::size_t t_ = 0;
  std::size_t words_ = 0;
  std::vector<Opinion> entries_;
  std::vector<std::uint64_t> packed_;
};

enum class WeightMode { Unweighted, External, Internal };

std::string_view to_string(WeightMode mode);

/// One row of weights scaled to integers over a common denominator:
/// weights[j] / denominator is the exact rational weight of topic j and the
/// integer weights sum to `denominator`.
struct ScaledWeights {
  std::vector<std::int64_t> weights;
  std::int64_t denominator = 1;
};

/// Scales unit-sum rationals to a common integer denominator. Throws
/// PrecisionError when that denominator exceeds 2^61 (doubled distances must fit in 64 bits).
ScaledWeights scale_weights(std::span<const Rational> weights);

class WeightScheme {
 public:
  static WeightScheme unweighted() { return WeightScheme(WeightMode::Unweighted, {}, {}); }
  static WeightScheme external(std::vector<Rational> w) { return WeightScheme(WeightMode::External, std::move(w), {}); }
  static WeightScheme internal(std::vector<std::vector<Rational>> rows) {
    return WeightScheme(WeightMode::Internal, {}, std::move(rows));
  }

  WeightMode mode() const { return mode_; }
  /// External vector (External mode only).
  const std::vector<Rational>& external_weights() const { return external_; }
  /// Per-voter rows (Internal mode only).
  const std::vector<std::vector<Rational>>& internal_weights() const { return internal_; }

 private:
  WeightScheme(WeightMode m, std::vector<Rational> e, std::vector<std::vector<Rational>> i)
      : mode_(m), external_(std::move(e)), internal_(std::move(i)) {}

  WeightMode mode_ = WeightMode::Unweighted;
  std::vector<Rational> external_;
  std::vector<std::vector<Rational>> internal_;
};

/// A profile paired with a validated weight scheme. Immutable once built.
class VotingInstance {
 public:
  /// Validates dimensions, non-negativity, unit sums and (internal mode) that
  /// no topic carries zero total weight. Throws DimensionError / InvalidInstance.
  VotingInstance(PreferenceProfile profile, WeightScheme weights);

  static VotingInstance unweighted(PreferenceProfile profile) {
    return VotingInstance(std::move(profile), WeightScheme::unweighted());
  }
  static VotingInstance external(PreferenceProfile profile, std::vector<Rational> w) {
    return VotingInstance(std::move(profile), WeightScheme::external(std::move(w)));
  }
  static VotingInstance internal(PreferenceProfile profile, std::vector<std::vector<Rational>> rows) {
    return VotingInstance(std::move(profile), WeightScheme::internal(std::move(rows)));
  }

  const PreferenceProfile& profile() const { return profile_; }
  const WeightScheme& weights() const { return weights_; }
  WeightMode mode() const { return weights_.mode(); }
  std::size_t n() const { return profile_.n(); }
  std::size_t t() const { return profile_.t(); }

  /// The exact weight vector voter i judges proposals with.
  std::vector<Rational> voter_weights(std::size_t i) const;
  /// Integer-scaled form of voter_weights(i).
  const ScaledWeights& scaled_voter_weights(std::size_t i) const {
    return scaled_rows_[scaled_rows_.size() == 1 ? 0 : i];
  }

 private:
  PreferenceProfile profile_;
  WeightScheme weights_;
  std::vector<ScaledWeights> scaled_rows_;
};

struct AverageWeights {
  std::vector<Rational> weights;
  Rational max;
};

/// sum_j w_j [u_j != v_j].
Rational weighted_hamming(std::span<const Opinion> u, std::span<const Opinion> v, std::span<const Rational> w);
/// sum_j w_j u_j v_j; always equals 1 - 2 * weighted_hamming(u, v, w).
Rational weighted_inner(std::span<const Opinion> u, std::span<const Opinion> v, std::span<const Rational> w);

/// Sum of the entries of column j.
int column_balance(const PreferenceProfile& profile, std::size_t j);
/// Fraction of voters (internal mode: of the weight placed on topic j) preferring +1.
Rational topic_majority(const VotingInstance& instance, std::size_t j);
std::vector<Rational> topic_majorities(const VotingInstance& instance);
/// Per-topic mean of the voters' weight rows, with its maximum entry.
AverageWeights average_weight_vector(const VotingInstance& instance);

}  // namespace miv
