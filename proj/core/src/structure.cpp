#include "miv/structure.hpp"

#include "miv/error.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

namespace miv {

bool rows_are_prefix_or_suffix(const PreferenceProfile& profile) {
  for (std::size_t i = 0; i < profile.n(); ++i) {
    const auto row = profile.row(i);
    int changes = 0;
    for (std::size_t k = 1; k < row.size(); ++k) {
      if (row[k] != row[k - 1] && ++changes > 1) return false;
    }
  }
  return true;
}

PreferenceProfile present(const PreferenceProfile& profile, const Presentation& presentation) {
  const std::size_t n = profile.n();
  const std::size_t t = profile.t();
  if (presentation.column_order.size() != t || presentation.flip_mask.size() != t) {
    throw DimensionError("presentation size does not match the profile");
  }
  std::vector<Opinion> entries(n * t);
  for (std::size_t k = 0; k < t; ++k) {
    const std::size_t src = presentation.column_order[k];
    if (src >= t) throw DimensionError("presentation column index out of range");
    const bool flip = presentation.flip_mask[src];
    for (std::size_t i = 0; i < n; ++i) {
      const Opinion o = profile.at(i, src);
      entries[i * t + k] = flip ? -o : o;
    }
  }
  return PreferenceProfile(n, t, std::move(entries));
}

namespace {

bool is_permutation_of_range(const std::vector<std::size_t>& order) {
  std::vector<bool> seen(order.size(), false);
  for (std::size_t c : order) {
    if (c >= order.size() || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

// Rows whose entries along `order` change sign at most once.
bool order_is_sswnf(const PreferenceProfile& profile, const std::vector<std::size_t>& order) {
  for (std::size_t i = 0; i < profile.n(); ++i) {
    int changes = 0;
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (profile.at(i, order[k]) != profile.at(i, order[k - 1]) && ++changes > 1) return false;
    }
  }
  return true;
}

}  // namespace

bool is_presentation(const PreferenceProfile& profile, const Presentation& presentation) {
  if (presentation.column_order.size() != profile.t() || presentation.flip_mask.size() != profile.t()) return false;
  if (!is_permutation_of_range(presentation.column_order)) return false;
  return rows_are_prefix_or_suffix(present(profile, presentation));
}

Presentation rotate(const Presentation& presentation) {
  Presentation out = presentation;
  if (out.column_order.empty()) return out;
  const std::size_t first = out.column_order.front();
  std::rotate(out.column_order.begin(), out.column_order.begin() + 1, out.column_order.end());
  out.flip_mask[first] = !out.flip_mask[first];
  return out;
}

Presentation reverse(const Presentation& presentation) {
  Presentation out = presentation;
  std::reverse(out.column_order.begin(), out.column_order.end());
  return out;
}

std::optional<Presentation> recognize_sswnf(const PreferenceProfile& profile) {
  const std::size_t t = profile.t();
  const std::size_t n = profile.n();
  Presentation out{std::vector<std::size_t>(t), std::vector<bool>(t, false)};
  if (t == 0) return out;

  std::size_t x = 0;
  std::size_t best = 0;
  for (std::size_t j = 0; j < t; ++j) {
    const std::size_t d = profile.column_distance(0, j);
    if (d > best) {
      best = d;
      x = j;
    }
  }
  // Stable counting sort by distance from column x.
  std::vector<std::size_t> dist(t);
  std::vector<std::size_t> bucket(n + 2, 0);
  for (std::size_t j = 0; j < t; ++j) {
    dist[j] = profile.column_distance(x, j);
    ++bucket[dist[j] + 1];
  }
  for (std::size_t d = 1; d < bucket.size(); ++d) bucket[d] += bucket[d - 1];
  for (std::size_t j = 0; j < t; ++j) out.column_order[bucket[dist[j]]++] = j;

  if (!order_is_sswnf(profile, out.column_order)) return std::nullopt;
  return out;
}

std::optional<Presentation> recognize_ssw(const PreferenceProfile& profile) {
  const std::size_t t = profile.t();
  std::vector<bool> flip(t, false);
  if (profile.n() > 0) {
    for (std::size_t j = 0; j < t; ++j) flip[j] = profile.at(0, j) == Opinion::Plus;
  }
  auto inner = recognize_sswnf(profile.flip_columns(flip));
  if (!inner) return std::nullopt;
  inner->flip_mask = std::move(flip);
  return inner;
}

Orbit enumerate_orbit(const Presentation& presentation, const PreferenceProfile& profile) {
  if (!is_presentation(profile, presentation)) throw ContractError("not a single-switch presentation of the profile");
  Orbit orbit;
  const std::size_t t = profile.t();
  Presentation cur = presentation;
  bool found = false;
  for (std::size_t s = 0; s < 2 * t; ++s) {
    if (!found) {
      bool all_minus = true;
      for (std::size_t k = 0; k < t && all_minus; ++k) {
        const std::size_t c = cur.column_order[k];
        const Opinion o = profile.at(0, c);
        all_minus = (cur.flip_mask[c] ? -o : o) == Opinion::Minus;
      }
      if (all_minus) {
        orbit.representative = s;
        found = true;
      }
    }
    orbit.presentations.push_back(cur);
    cur = rotate(cur);
  }
  return orbit;
}

std::vector<Presentation> all_presentations(const PreferenceProfile& profile) {
  const auto found = recognize_ssw(profile);
  if (!found) return {};
  std::vector<Presentation> out;
  std::set<std::vector<Opinion>> seen;
  auto add_orbit = [&](const Presentation& start) {
    for (auto& p : enumerate_orbit(start, profile).presentations) {
      const PreferenceProfile m = present(profile, p);
      std::vector<Opinion> key;
      key.reserve(m.n() * m.t());
      for (std::size_t i = 0; i < m.n(); ++i) key.insert(key.end(), m.row(i).begin(), m.row(i).end());
      if (seen.insert(std::move(key)).second) out.push_back(std::move(p));
    }
  };
  add_orbit(*found);
  add_orbit(reverse(*found));
  return out;
}

namespace {

using MatrixCode = std::uint32_t;

// Row-major, entry (i, j) at bit i*cols + j, set bit = +1.
MatrixCode encode_matrix(const PreferenceProfile& m) {
  MatrixCode code = 0;
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.t(); ++j) {
      if (m.at(i, j) == Opinion::Plus) code |= MatrixCode{1} << (i * m.t() + j);
    }
  }
  return code;
}

PreferenceProfile decode_matrix(MatrixCode code, std::size_t rows, std::size_t cols) {
  std::vector<Opinion> e(rows * cols);
  for (std::size_t b = 0; b < rows * cols; ++b) e[b] = ((code >> b) & 1U) ? Opinion::Plus : Opinion::Minus;
  return PreferenceProfile(rows, cols, std::move(e));
}

MatrixCode permute_code(MatrixCode code, std::size_t cols, const std::vector<std::size_t>& rp,
                        const std::vector<std::size_t>& cp) {
  MatrixCode out = 0;
  for (std::size_t i = 0; i < rp.size(); ++i) {
    for (std::size_t j = 0; j < cp.size(); ++j) {
      if ((code >> (rp[i] * cols + cp[j])) & 1U) out |= MatrixCode{1} << (i * cols + j);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> permutations_of(std::size_t k) {
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

MatrixCode canonical_code(MatrixCode code, std::size_t rows, std::size_t cols) {
  static const auto p3 = permutations_of(3);
  static const auto p4 = permutations_of(4);
  const auto& rps = rows == 3 ? p3 : p4;
  const auto& cps = cols == 3 ? p3 : p4;
  MatrixCode best = ~MatrixCode{0};
  for (const auto& rp : rps) {
    for (const auto& cp : cps) best = std::min(best, permute_code(code, cols, rp, cp));
  }
  return best;
}

MatrixCode flip_code(MatrixCode code, std::size_t rows, std::size_t cols, unsigned row_flips, unsigned col_flips) {
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (((row_flips >> i) & 1U) ^ ((col_flips >> j) & 1U)) code ^= MatrixCode{1} << (i * cols + j);
    }
  }
  return code;
}

struct Catalogue {
  std::vector<CatalogueEntry> entries;
  // lookup[s][code]: catalogue index + 1, or 0; s = 0 for 3x4, 1 for 4x3.
  std::array<std::vector<std::uint16_t>, 2> lookup;
};

const Catalogue& catalogue() {
  static const Catalogue cat = [] {
    Catalogue c;
    const auto p1a = PreferenceProfile::from_rows({{-1, -1, -1, -1}, {1, 1, -1, -1}, {1, -1, 1, -1}});
    const auto p2a = PreferenceProfile::from_rows({{-1, -1, -1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
    const std::array<std::pair<const PreferenceProfile*, const char*>, 2> bases{{{&p1a, "F34-"}, {&p2a, "F43-"}}};
    for (std::size_t s = 0; s < 2; ++s) {
      const auto& base = *bases[s].first;
      const std::size_t rows = base.n();
      const std::size_t cols = base.t();
      const MatrixCode code = encode_matrix(base);
      std::set<MatrixCode> canon;
      for (unsigned rf = 0; rf < (1U << rows); ++rf) {
        for (unsigned cf = 0; cf < (1U << cols); ++cf) {
          canon.insert(canonical_code(flip_code(code, rows, cols, rf, cf), rows, cols));
        }
      }
      std::map<MatrixCode, std::size_t> index;
      std::size_t k = 1;
      for (MatrixCode m : canon) {
        index[m] = c.entries.size();
        c.entries.push_back({bases[s].second + std::to_string(k++), decode_matrix(m, rows, cols)});
      }
      c.lookup[s].assign(std::size_t{1} << (rows * cols), 0);
      for (MatrixCode m = 0; m < (MatrixCode{1} << (rows * cols)); ++m) {
        auto it = index.find(canonical_code(m, rows, cols));
        if (it != index.end()) c.lookup[s][m] = static_cast<std::uint16_t>(it->second + 1);
      }
    }
    return c;
  }();
  return cat;
}

std::optional<std::size_t> lookup_code(std::size_t rows, std::size_t cols, MatrixCode code) {
  std::size_t s = 0;
  if (rows == 3 && cols == 4) {
    s = 0;
  } else if (rows == 4 && cols == 3) {
    s = 1;
  } else {
    return std::nullopt;
  }
  const std::uint16_t v = catalogue().lookup[s][code];
  if (v == 0) return std::nullopt;
  return v - 1U;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t r = k; r-- > 0;) {
    if (idx[r] < n - k + r) {
      ++idx[r];
      for (std::size_t s = r + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
      return true;
    }
  }
  return false;
}

std::optional<ForbiddenWitness> scan_shape(const PreferenceProfile& profile, std::size_t rows, std::size_t cols) {
  if (profile.n() < rows || profile.t() < cols) return std::nullopt;
  std::vector<std::size_t> ri(rows);
  std::iota(ri.begin(), ri.end(), 0);
  do {
    std::vector<std::size_t> ci(cols);
    std::iota(ci.begin(), ci.end(), 0);
    do {
      MatrixCode code = 0;
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          if (profile.at(ri[i], ci[j]) == Opinion::Plus) code |= MatrixCode{1} << (i * cols + j);
        }
      }
      if (auto hit = lookup_code(rows, cols, code)) {
        return ForbiddenWitness{ri, ci, catalogue().entries[*hit].id};
      }
    } while (next_combination(ci, profile.t()));
  } while (next_combination(ri, profile.n()));
  return std::nullopt;
}

}  // namespace

const std::vector<CatalogueEntry>& forbidden_catalogue() { return catalogue().entries; }

std::optional<std::string> match_catalogue(const PreferenceProfile& sub) {
  if (sub.n() * sub.t() != 12) return std::nullopt;
  auto hit = lookup_code(sub.n(), sub.t(), encode_matrix(sub));
  if (!hit) return std::nullopt;
  return catalogue().entries[*hit].id;
}

std::optional<ForbiddenWitness> find_forbidden_naive(const PreferenceProfile& profile) {
  if (auto w = scan_shape(profile, 3, 4)) return w;
  return scan_shape(profile, 4, 3);
}

namespace {

class Eliminator {
 public:
  Eliminator(const PreferenceProfile& profile, FinderStats& stats) : profile_(profile), stats_(stats) {
    rows_.resize(profile.n());
    cols_.resize(profile.t());
    std::iota(rows_.begin(), rows_.end(), 0);
    std::iota(cols_.begin(), cols_.end(), 0);
  }

  bool non_ssw(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    ++stats_.recognizer_calls;
    return !recognize_ssw(profile_.submatrix(rows, cols)).has_value();
  }

  // Removes one fifth of `axis` at a time while a removable group exists.
  void shrink_groups(bool on_rows) {
    auto& axis = on_rows ? rows_ : cols_;
    while (axis.size() >= 5) {
      bool removed = false;
      const std::size_t m = axis.size();
      for (std::size_t g = 0; g < 5 && !removed; ++g) {
        const std::size_t lo = g * m / 5;
        const std::size_t hi = (g + 1) * m / 5;
        std::vector<std::size_t> kept(axis.begin(), axis.begin() + static_cast<std::ptrdiff_t>(lo));
        kept.insert(kept.end(), axis.begin() + static_cast<std::ptrdiff_t>(hi), axis.end());
        if (on_rows ? non_ssw(kept, cols_) : non_ssw(rows_, kept)) {
          axis = std::move(kept);
          removed = true;
        }
      }
      if (!removed) break;
    }
  }

  // One pass of single deletions; returns whether anything was removed.
  bool shrink_single(bool on_rows) {
    auto& axis = on_rows ? rows_ : cols_;
    bool any = false;
    for (std::size_t k = 0; k < axis.size();) {
      std::vector<std::size_t> kept = axis;
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(k));
      if (on_rows ? non_ssw(kept, cols_) : non_ssw(rows_, kept)) {
        axis = std::move(kept);
        any = true;
      } else {
        ++k;
      }
    }
    return any;
  }

  const std::vector<std::size_t>& rows() const { return rows_; }
  const std::vector<std::size_t>& cols() const { return cols_; }

 private:
  const PreferenceProfile& profile_;
  FinderStats& stats_;
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> cols_;
};

}  // namespace

ForbiddenWitness find_forbidden_fast(const PreferenceProfile& profile, FinderStats* stats) {
  FinderStats local;
  FinderStats& s = stats ? *stats : local;
  if (recognize_ssw(profile)) throw ContractError("profile is single-switch; no forbidden subprofile exists");
  ++s.recognizer_calls;
  Eliminator e(profile, s);
  e.shrink_groups(true);
  e.shrink_single(true);
  e.shrink_groups(false);
  e.shrink_single(false);
  // Column removal can free rows again; alternate until neither side shrinks.
  bool changed = true;
  while (changed) {
    changed = e.shrink_single(true);
    if (changed) changed = e.shrink_single(false);
  }
  ForbiddenWitness w{e.rows(), e.cols(), {}};
  auto id = match_catalogue(profile.submatrix(w.rows, w.cols));
  if (!id) throw ContractError("group elimination ended outside the forbidden catalogue");
  w.catalogue_id = *id;
  return w;
}

}  // namespace miv
