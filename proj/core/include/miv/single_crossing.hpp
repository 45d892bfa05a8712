#pragma once

#include "miv/profile.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace miv::sc {

/// A ranking of alternative ids 0..m-1, most preferred first.
class LinearOrder {
 public:
  LinearOrder() = default;
  /// Throws InvalidInstance unless `ranking` is a permutation of 0..m-1.
  explicit LinearOrder(std::vector<std::size_t> ranking);

  std::size_t size() const { return ranking_.size(); }
  const std::vector<std::size_t>& ranking() const { return ranking_; }
  /// position()[a] is the rank of alternative a (0 = top).
  const std::vector<std::size_t>& position() const { return position_; }
  bool prefers(std::size_t a, std::size_t b) const { return position_[a] < position_[b]; }

  friend bool operator==(const LinearOrder& x, const LinearOrder& y) { return x.ranking_ == y.ranking_; }

 private:
  std::vector<std::size_t> ranking_;
  std::vector<std::size_t> position_;
};

struct OrderList {
  std::vector<std::string> alternatives;
  std::vector<LinearOrder> orders;

  std::size_t m() const { return alternatives.size(); }
  std::size_t t() const { return orders.size(); }

  /// Text form: a line "m t", then t lines each naming all m alternatives
  /// once, best first. '#' starts a comment. Throws ParseError.
  static OrderList parse(std::string_view text);
  std::string to_string() const;

  /// The orders at `order_idx`, restricted to the alternatives at `alt_idx`
  /// (renumbered in the given sequence).
  OrderList restrict(const std::vector<std::size_t>& order_idx, const std::vector<std::size_t>& alt_idx) const;
};

/// Pairs of alternatives ranked differently. Merge-count, O(m log m).
std::uint64_t kendall_tau(const LinearOrder& a, const LinearOrder& b);

/// True when along `permutation` of the list every pair of alternatives
/// switches relative order at most once. Direct O(t m^2) check.
bool is_single_crossing_sequence(const OrderList& list, const std::vector<std::size_t>& permutation);

/// A permutation of the orders witnessing single-crossingness, unique up to
/// reversal among distinct orders; equal orders keep their input order.
std::optional<std::vector<std::size_t>> recognize_single_crossing(const OrderList& list);

/// One order per column over 2n alternatives a<i>_0, a<i>_1 (i 1-based):
/// voter blocks in row order, a<i>_0 first within block i iff entry (i, j) is +1.
OrderList profile_to_orders(const PreferenceProfile& profile);

struct ScWitness {
  std::vector<std::size_t> orders;
  std::vector<std::size_t> alternatives;
};

struct ScFinderStats {
  std::size_t recognizer_calls = 0;
};

/// Minimal non-single-crossing sub-list: removing any single order or
/// alternative makes it single-crossing. Throws ContractError on yes-instances.
ScWitness find_forbidden_sc(const OrderList& list, ScFinderStats* stats = nullptr);

}  // namespace miv::sc
