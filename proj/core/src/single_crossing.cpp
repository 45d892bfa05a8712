#include "miv/single_crossing.hpp"

#include "miv/error.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace miv::sc {

LinearOrder::LinearOrder(std::vector<std::size_t> ranking) : ranking_(std::move(ranking)) {
  position_.assign(ranking_.size(), ranking_.size());
  for (std::size_t r = 0; r < ranking_.size(); ++r) {
    const std::size_t a = ranking_[r];
    if (a >= ranking_.size() || position_[a] != ranking_.size()) {
      throw InvalidInstance("linear order is not a permutation of its alternatives");
    }
    position_[a] = r;
  }
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokens_of(std::string_view line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    if (line[k] == '#') break;
    if (line[k] == ' ' || line[k] == '\t' || line[k] == '\r') {
      ++k;
      continue;
    }
    const std::size_t start = k;
    while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r' && line[k] != '#') ++k;
    out.push_back({std::string(line.substr(start, k - start)), start + 1});
  }
  return out;
}

std::size_t parse_count(const Token& tok, std::size_t line) {
  std::size_t v = 0;
  const auto* end = tok.text.data() + tok.text.size();
  auto [ptr, ec] = std::from_chars(tok.text.data(), end, v);
  if (ec != std::errc{} || ptr != end || v == 0) {
    throw ParseError(line, tok.column, "expected a positive integer, got '" + tok.text + "'");
  }
  return v;
}

std::uint64_t merge_count(std::vector<std::size_t>& a, std::vector<std::size_t>& buf, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
  std::size_t i = lo;
  std::size_t j = mid;
  std::size_t k = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      inv += mid - i;
      buf[k++] = a[j++];
    } else {
      buf[k++] = a[i++];
    }
  }
  while (i < mid) buf[k++] = a[i++];
  while (j < hi) buf[k++] = a[j++];
  std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo), buf.begin() + static_cast<std::ptrdiff_t>(hi),
            a.begin() + static_cast<std::ptrdiff_t>(lo));
  return inv;
}

}  // namespace

OrderList OrderList::parse(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<Token>>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    auto toks = tokens_of(line);
    if (!toks.empty()) lines.emplace_back(line_no, std::move(toks));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError(1, 1, "empty order list");
  const auto& [hline, header] = lines.front();
  if (header.size() != 2) throw ParseError(hline, header.front().column, "header must be 'm t'");
  const std::size_t m = parse_count(header[0], hline);
  const std::size_t t = parse_count(header[1], hline);
  if (lines.size() - 1 != t) {
    throw ParseError(lines.back().first, 1,
                     "expected " + std::to_string(t) + " orders, found " + std::to_string(lines.size() - 1));
  }
  OrderList out;
  std::map<std::string, std::size_t> ids;
  for (std::size_t r = 1; r <= t; ++r) {
    const auto& [ln, toks] = lines[r];
    if (toks.size() != m) {
      throw ParseError(ln, toks.front().column,
                       "expected " + std::to_string(m) + " alternatives, found " + std::to_string(toks.size()));
    }
    if (r == 1) {
      for (const auto& tok : toks) {
        if (!ids.emplace(tok.text, out.alternatives.size()).second) {
          throw ParseError(ln, tok.column, "alternative '" + tok.text + "' repeated");
        }
        out.alternatives.push_back(tok.text);
      }
    }
    std::vector<std::size_t> ranking;
    std::vector<bool> seen(m, false);
    for (const auto& tok : toks) {
      auto it = ids.find(tok.text);
      if (it == ids.end()) throw ParseError(ln, tok.column, "unknown alternative '" + tok.text + "'");
      if (seen[it->second]) throw ParseError(ln, tok.column, "alternative '" + tok.text + "' repeated");
      seen[it->second] = true;
      ranking.push_back(it->second);
    }
    out.orders.emplace_back(std::move(ranking));
  }
  return out;
}

std::string OrderList::to_string() const {
  std::ostringstream os;
  os << m() << ' ' << t() << '\n';
  for (const auto& o : orders) {
    for (std::size_t r = 0; r < o.size(); ++r) os << (r ? " " : "") << alternatives[o.ranking()[r]];
    os << '\n';
  }
  return os.str();
}

OrderList OrderList::restrict(const std::vector<std::size_t>& order_idx, const std::vector<std::size_t>& alt_idx) const {
  OrderList out;
  std::vector<std::size_t> renumber(m(), m());
  for (std::size_t k = 0; k < alt_idx.size(); ++k) {
    renumber.at(alt_idx[k]) = k;
    out.alternatives.push_back(alternatives[alt_idx[k]]);
  }
  for (std::size_t oi : order_idx) {
    std::vector<std::size_t> ranking;
    ranking.reserve(alt_idx.size());
    for (std::size_t a : orders.at(oi).ranking()) {
      if (renumber[a] != m()) ranking.push_back(renumber[a]);
    }
    out.orders.emplace_back(std::move(ranking));
  }
  return out;
}

std::uint64_t kendall_tau(const LinearOrder& a, const LinearOrder& b) {
  if (a.size() != b.size()) throw DimensionError("orders rank different numbers of alternatives");
  std::vector<std::size_t> seq(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) seq[r] = b.position()[a.ranking()[r]];
  std::vector<std::size_t> buf(seq.size());
  return merge_count(seq, buf, 0, seq.size());
}

bool is_single_crossing_sequence(const OrderList& list, const std::vector<std::size_t>& permutation) {
  const std::size_t m = list.m();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      int switches = 0;
      for (std::size_t k = 1; k < permutation.size(); ++k) {
        const bool prev = list.orders[permutation[k - 1]].prefers(a, b);
        const bool cur = list.orders[permutation[k]].prefers(a, b);
        if (prev != cur && ++switches > 1) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<std::size_t>> recognize_single_crossing(const OrderList& list) {
  const std::size_t t = list.t();
  std::vector<std::size_t> order(t);
  std::iota(order.begin(), order.end(), 0);
  if (t <= 2) return order;

  std::size_t x = 0;
  std::uint64_t best = 0;
  for (std::size_t j = 0; j < t; ++j) {
    const std::uint64_t d = kendall_tau(list.orders[0], list.orders[j]);
    if (d > best) {
      best = d;
      x = j;
    }
  }
  std::vector<std::uint64_t> dist(t);
  for (std::size_t j = 0; j < t; ++j) dist[j] = kendall_tau(list.orders[x], list.orders[j]);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });

  const auto& first = list.orders[order[0]];
  std::uint64_t to_prev = 0;
  for (std::size_t i = 0; i + 1 < t; ++i) {
    const std::uint64_t step = kendall_tau(list.orders[order[i]], list.orders[order[i + 1]]);
    const std::uint64_t to_next = kendall_tau(first, list.orders[order[i + 1]]);
    if (to_prev + step != to_next) return std::nullopt;
    to_prev = to_next;
  }
  return order;
}

OrderList profile_to_orders(const PreferenceProfile& profile) {
  OrderList out;
  for (std::size_t i = 0; i < profile.n(); ++i) {
    out.alternatives.push_back("a" + std::to_string(i + 1) + "_0");
    out.alternatives.push_back("a" + std::to_string(i + 1) + "_1");
  }
  for (std::size_t j = 0; j < profile.t(); ++j) {
    std::vector<std::size_t> ranking;
    ranking.reserve(2 * profile.n());
    for (std::size_t i = 0; i < profile.n(); ++i) {
      const bool plus = profile.at(i, j) == Opinion::Plus;
      ranking.push_back(2 * i + (plus ? 0 : 1));
      ranking.push_back(2 * i + (plus ? 1 : 0));
    }
    out.orders.emplace_back(std::move(ranking));
  }
  return out;
}

namespace {

class ScEliminator {
 public:
  ScEliminator(const OrderList& list, ScFinderStats& stats) : list_(list), stats_(stats) {
    orders_.resize(list.t());
    alts_.resize(list.m());
    std::iota(orders_.begin(), orders_.end(), 0);
    std::iota(alts_.begin(), alts_.end(), 0);
  }

  bool non_sc(const std::vector<std::size_t>& orders, const std::vector<std::size_t>& alts) {
    ++stats_.recognizer_calls;
    return !recognize_single_crossing(list_.restrict(orders, alts)).has_value();
  }

  bool try_keep(bool on_orders, std::vector<std::size_t>& kept) {
    if (on_orders ? non_sc(kept, alts_) : non_sc(orders_, kept)) {
      (on_orders ? orders_ : alts_) = std::move(kept);
      return true;
    }
    return false;
  }

  void shrink_groups(bool on_orders, std::size_t groups) {
    auto& axis = on_orders ? orders_ : alts_;
    while (axis.size() >= groups) {
      bool removed = false;
      const std::size_t m = axis.size();
      for (std::size_t g = 0; g < groups && !removed; ++g) {
        const std::size_t lo = g * m / groups;
        const std::size_t hi = (g + 1) * m / groups;
        std::vector<std::size_t> kept(axis.begin(), axis.begin() + static_cast<std::ptrdiff_t>(lo));
        kept.insert(kept.end(), axis.begin() + static_cast<std::ptrdiff_t>(hi), axis.end());
        removed = try_keep(on_orders, kept);
      }
      if (!removed) break;
    }
  }

  bool shrink_single(bool on_orders) {
    auto& axis = on_orders ? orders_ : alts_;
    bool any = false;
    for (std::size_t k = 0; k < axis.size();) {
      std::vector<std::size_t> kept = axis;
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
      if (try_keep(on_orders, kept)) {
        any = true;
      } else {
        ++k;
      }
    }
    return any;
  }

  ScWitness witness() const { return {orders_, alts_}; }

 private:
  const OrderList& list_;
  ScFinderStats& stats_;
  std::vector<std::size_t> orders_;
  std::vector<std::size_t> alts_;
};

}  // namespace

ScWitness find_forbidden_sc(const OrderList& list, ScFinderStats* stats) {
  ScFinderStats local;
  ScFinderStats& s = stats ? *stats : local;
  ++s.recognizer_calls;
  if (recognize_single_crossing(list)) throw ContractError("order list is single-crossing");
  ScEliminator e(list, s);
  // A forbidden sub-list uses at most 4 orders and at most 6 alternatives.
  e.shrink_groups(true, 5);
  e.shrink_single(true);
  e.shrink_groups(false, 7);
  e.shrink_single(false);
  bool changed = true;
  while (changed) {
    const bool rows = e.shrink_single(true);
    const bool cols = e.shrink_single(false);
    changed = rows || cols;
  }
  return e.witness();
}

}  // namespace miv::sc
