#include "miv/profile.hpp"

#include "miv/error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

namespace miv {

Opinion opinion_from_int(int v) {
  if (v == 1) return Opinion::Plus;
  if (v == -1) return Opinion::Minus;
  throw InvalidInstance("opinion must be +1 or -1, got " + std::to_string(v));
}

// ---------------------------------------------------------------- Proposal

Proposal::Proposal(std::initializer_list<int> values) {
  decisions_.reserve(values.size());
  for (int v : values) decisions_.push_back(opinion_from_int(v));
}

Proposal Proposal::parse(std::string_view text) {
  std::vector<Opinion> out;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    if (token == "+1" || token == "1" || token == "+") {
      out.push_back(Opinion::Plus);
    } else if (token == "-1" || token == "-") {
      out.push_back(Opinion::Minus);
    } else if (token.find_first_not_of("+-") == std::string::npos) {
      for (char c : token) out.push_back(c == '+' ? Opinion::Plus : Opinion::Minus);
    } else {
      throw ParseError(1, 1, "bad proposal token '" + token + "'");
    }
    token.clear();
  };
  for (char c : text) {
    if (c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  if (out.empty()) throw ParseError(1, 1, "empty proposal");
  return Proposal(std::move(out));
}

Proposal Proposal::complement() const {
  std::vector<Opinion> out(decisions_.size());
  std::transform(decisions_.begin(), decisions_.end(), out.begin(), [](Opinion o) { return -o; });
  return Proposal(std::move(out));
}

std::string Proposal::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < decisions_.size(); ++j) {
    if (j) s += ',';
    s += decisions_[j] == Opinion::Plus ? "+1" : "-1";
  }
  return s + ")";
}

bool operator<(const Proposal& a, const Proposal& b) {
  // +1 sorts first, so compare on the negated integer value.
  return std::lexicographical_compare(a.decisions_.begin(), a.decisions_.end(), b.decisions_.begin(),
                                      b.decisions_.end(),
                                      [](Opinion x, Opinion y) { return -to_int(x) < -to_int(y); });
}

Proposal complement(const Proposal& p) { return p.complement(); }

// -------------------------------------------------------- PreferenceProfile

PreferenceProfile::PreferenceProfile(std::size_t n, std::size_t t, std::vector<Opinion> entries)
    : n_(n), t_(t), entries_(std::move(entries)) {
  if (n_ == 0 || t_ == 0) throw InvalidInstance("profile needs n >= 1 and t >= 1");
  if (entries_.size() != n_ * t_) throw DimensionError("profile entry count does not match n*t");
  for (Opinion o : entries_) {
    if (o != Opinion::Plus && o != Opinion::Minus) throw InvalidInstance("profile entries must be +1 or -1");
  }
  pack();
}

PreferenceProfile PreferenceProfile::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw InvalidInstance("profile needs at least one voter");
  const std::size_t t = rows.front().size();
  std::vector<Opinion> entries;
  entries.reserve(rows.size() * t);
  for (const auto& r : rows) {
    if (r.size() != t) throw DimensionError("ragged profile rows");
    for (int v : r) entries.push_back(opinion_from_int(v));
  }
  return PreferenceProfile(rows.size(), t, std::move(entries));
}

PreferenceProfile PreferenceProfile::from_columns(const std::vector<std::vector<int>>& columns) {
  if (columns.empty()) throw InvalidInstance("profile needs at least one issue");
  const std::size_t n = columns.front().size();
  const std::size_t t = columns.size();
  std::vector<Opinion> entries(n * t);
  for (std::size_t j = 0; j < t; ++j) {
    if (columns[j].size() != n) throw DimensionError("ragged profile columns");
    for (std::size_t i = 0; i < n; ++i) entries[i * t + j] = opinion_from_int(columns[j][i]);
  }
  return PreferenceProfile(n, t, std::move(entries));
}

void PreferenceProfile::pack() {
  words_ = (n_ + 63) / 64;
  packed_.assign(words_ * t_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < t_; ++j) {
      if (entries_[i * t_ + j] == Opinion::Plus) packed_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
}

std::vector<Opinion> PreferenceProfile::column(std::size_t j) const {
  std::vector<Opinion> c(n_);
  for (std::size_t i = 0; i < n_; ++i) c[i] = at(i, j);
  return c;
}

std::size_t PreferenceProfile::column_distance(std::size_t j, std::size_t k) const {
  const std::uint64_t* a = packed_.data() + j * words_;
  const std::uint64_t* b = packed_.data() + k * words_;
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(a[w] ^ b[w]));
  return d;
}

PreferenceProfile PreferenceProfile::submatrix(std::span<const std::size_t> rows,
                                               std::span<const std::size_t> cols) const {
  std::vector<Opinion> e;
  e.reserve(rows.size() * cols.size());
  for (std::size_t i : rows) {
    if (i >= n_) throw DimensionError("submatrix row out of range");
    for (std::size_t j : cols) {
      if (j >= t_) throw DimensionError("submatrix column out of range");
      e.push_back(at(i, j));
    }
  }
  return PreferenceProfile(rows.size(), cols.size(), std::move(e));
}

PreferenceProfile PreferenceProfile::flip_columns(const std::vector<bool>& flip) const {
  if (flip.size() != t_) throw DimensionError("column flip mask length differs from t");
  std::vector<Opinion> e = entries_;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < t_; ++j) {
      if (flip[j]) e[i * t_ + j] = -e[i * t_ + j];
    }
  }
  return PreferenceProfile(n_, t_, std::move(e));
}

PreferenceProfile PreferenceProfile::flip_rows(const std::vector<bool>& flip) const {
  if (flip.size() != n_) throw DimensionError("row flip mask length differs from n");
  std::vector<Opinion> e = entries_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!flip[i]) continue;
    for (std::size_t j = 0; j < t_; ++j) e[i * t_ + j] = -e[i * t_ + j];
  }
  return PreferenceProfile(n_, t_, std::move(e));
}

PreferenceProfile PreferenceProfile::transpose() const {
  std::vector<Opinion> e(n_ * t_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < t_; ++j) e[j * n_ + i] = at(i, j);
  }
  return PreferenceProfile(t_, n_, std::move(e));
}

PreferenceProfile PreferenceProfile::with_rows_appended(const std::vector<std::vector<Opinion>>& rows) const {
  std::vector<Opinion> e = entries_;
  for (const auto& r : rows) {
    if (r.size() != t_) throw DimensionError("appended row length differs from t");
    e.insert(e.end(), r.begin(), r.end());
  }
  return PreferenceProfile(n_ + rows.size(), t_, std::move(e));
}

// ------------------------------------------------------------------ weights

std::string_view to_string(WeightMode mode) {
  switch (mode) {
    case WeightMode::Unweighted: return "unweighted";
    case WeightMode::External: return "external";
    case WeightMode::Internal: return "internal";
  }
  return "?";
}

ScaledWeights scale_weights(std::span<const Rational> weights) {
  BigInt lcm = 1;
  for (const Rational& w : weights) {
    BigInt d = w.denominator();
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  const BigInt limit = BigInt(1) << 61;
  if (lcm > limit) {
    throw PrecisionError("common weight denominator " + lcm.str() + " exceeds 2^61");
  }
  ScaledWeights out;
  out.denominator = lcm.convert_to<std::int64_t>();
  out.weights.reserve(weights.size());
  for (const Rational& w : weights) {
    BigInt scaled = w.numerator() * (lcm / w.denominator());
    out.weights.push_back(scaled.convert_to<std::int64_t>());
  }
  return out;
}

namespace {

std::string row_label(std::size_t i) { return "row " + std::to_string(i + 1); }

void check_unit_row(std::span<const Rational> row, std::size_t t, const std::string& label) {
  if (row.size() != t) {
    throw DimensionError(label + ": expected " + std::to_string(t) + " weights, got " + std::to_string(row.size()));
  }
  Rational sum = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j].sign() < 0) {
      throw InvalidInstance(label + ": weight of topic " + std::to_string(j + 1) + " is negative (" +
                            row[j].to_string() + ")");
    }
    sum += row[j];
  }
  if (sum != Rational(1)) throw InvalidInstance(label + ": weights sum " + sum.to_string() + " ≠ 1");
}

}  // namespace

VotingInstance::VotingInstance(PreferenceProfile profile, WeightScheme weights)
    : profile_(std::move(profile)), weights_(std::move(weights)) {
  const std::size_t n = profile_.n();
  const std::size_t t = profile_.t();
  if (n == 0 || t == 0) throw InvalidInstance("instance needs n >= 1 and t >= 1");
  switch (weights_.mode()) {
    case WeightMode::Unweighted: {
      ScaledWeights s;
      s.weights.assign(t, 1);
      s.denominator = static_cast<std::int64_t>(t);
      scaled_rows_.push_back(std::move(s));
      break;
    }
    case WeightMode::External: {
      check_unit_row(weights_.external_weights(), t, "external weights");
      scaled_rows_.push_back(scale_weights(weights_.external_weights()));
      break;
    }
    case WeightMode::Internal: {
      const auto& rows = weights_.internal_weights();
      if (rows.size() != n) {
        throw DimensionError("internal weights: expected " + std::to_string(n) + " rows, got " +
                             std::to_string(rows.size()));
      }
      for (std::size_t i = 0; i < n; ++i) check_unit_row(rows[i], t, row_label(i));
      for (std::size_t j = 0; j < t; ++j) {
        bool any = false;
        for (std::size_t i = 0; i < n && !any; ++i) any = !rows[i][j].is_zero();
        if (!any) throw InvalidInstance("topic " + std::to_string(j + 1) + " has zero average weight");
      }
      scaled_rows_.reserve(n);
      for (const auto& r : rows) scaled_rows_.push_back(scale_weights(r));
      break;
    }
  }
}

std::vector<Rational> VotingInstance::voter_weights(std::size_t i) const {
  switch (mode()) {
    case WeightMode::Unweighted: return std::vector<Rational>(t(), Rational(1, static_cast<std::int64_t>(t())));
    case WeightMode::External: return weights_.external_weights();
    case WeightMode::Internal: return weights_.internal_weights().at(i);
  }
  return {};
}

// --------------------------------------------------------------- primitives

Rational weighted_hamming(std::span<const Opinion> u, std::span<const Opinion> v, std::span<const Rational> w) {
  if (u.size() != v.size() || u.size() != w.size()) throw DimensionError("weighted_hamming: length mismatch");
  Rational d = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] != v[j]) d += w[j];
  }
  return d;
}

Rational weighted_inner(std::span<const Opinion> u, std::span<const Opinion> v, std::span<const Rational> w) {
  if (u.size() != v.size() || u.size() != w.size()) throw DimensionError("weighted_inner: length mismatch");
  Rational s = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] == v[j]) {
      s += w[j];
    } else {
      s -= w[j];
    }
  }
  return s;
}

int column_balance(const PreferenceProfile& profile, std::size_t j) {
  if (j >= profile.t()) throw DimensionError("column index out of range");
  int b = 0;
  for (std::size_t i = 0; i < profile.n(); ++i) b += to_int(profile.at(i, j));
  return b;
}

Rational topic_majority(const VotingInstance& instance, std::size_t j) {
  const auto& profile = instance.profile();
  if (j >= profile.t()) throw DimensionError("topic index out of range");
  if (instance.mode() != WeightMode::Internal) {
    std::int64_t plus = 0;
    for (std::size_t i = 0; i < profile.n(); ++i) plus += profile.at(i, j) == Opinion::Plus;
    return Rational(plus, static_cast<std::int64_t>(profile.n()));
  }
  // (1 / (n * avg_j)) * sum_i w_ij [v_ij = +1] == plus weight / total weight.
  const auto& rows = instance.weights().internal_weights();
  Rational plus = 0;
  Rational total = 0;
  for (std::size_t i = 0; i < profile.n(); ++i) {
    total += rows[i][j];
    if (profile.at(i, j) == Opinion::Plus) plus += rows[i][j];
  }
  if (total.is_zero()) throw InvalidInstance("topic " + std::to_string(j + 1) + " has zero average weight");
  return plus / total;
}

std::vector<Rational> topic_majorities(const VotingInstance& instance) {
  std::vector<Rational> m;
  m.reserve(instance.t());
  for (std::size_t j = 0; j < instance.t(); ++j) m.push_back(topic_majority(instance, j));
  return m;
}

AverageWeights average_weight_vector(const VotingInstance& instance) {
  AverageWeights out;
  const std::size_t t = instance.t();
  switch (instance.mode()) {
    case WeightMode::Unweighted:
      out.weights.assign(t, Rational(1, static_cast<std::int64_t>(t)));
      break;
    case WeightMode::External:
      out.weights = instance.weights().external_weights();
      break;
    case WeightMode::Internal: {
      out.weights.assign(t, Rational(0));
      for (const auto& row : instance.weights().internal_weights()) {
        for (std::size_t j = 0; j < t; ++j) out.weights[j] += row[j];
      }
      const Rational inv_n(1, static_cast<std::int64_t>(instance.n()));
      for (auto& w : out.weights) w *= inv_n;
      break;
    }
  }
  out.max = *std::max_element(out.weights.begin(), out.weights.end());
  return out;
}

}  // namespace miv
