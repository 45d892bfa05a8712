#pragma once

// Single-switch structure: recognition with and without column flips, the
// orbit of rotate-and-negate presentations, the forbidden-subprofile
// catalogue and two finders for forbidden witnesses.

#include "miv/profile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace miv {

/// Column k of the presented matrix is column column_order[k] of the source,
/// negated when flip_mask[column_order[k]] is set. The mask is indexed by
/// source column.
struct Presentation {
  std::vector<std::size_t> column_order;
  std::vector<bool> flip_mask;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// True when the +1 entries of every row form a prefix or a suffix.
bool rows_are_prefix_or_suffix(const PreferenceProfile& profile);

/// The matrix obtained by flipping and then permuting columns.
PreferenceProfile present(const PreferenceProfile& profile, const Presentation& presentation);

/// Bijective order, matching mask length, and prefix/suffix rows.
bool is_presentation(const PreferenceProfile& profile, const Presentation& presentation);

/// Moves the first presented column to the end, negated.
Presentation rotate(const Presentation& presentation);
Presentation reverse(const Presentation& presentation);

std::optional<Presentation> recognize_sswnf(const PreferenceProfile& profile);
std::optional<Presentation> recognize_ssw(const PreferenceProfile& profile);

struct Orbit {
  /// 2t members in rotation order, starting from the input presentation.
  std::vector<Presentation> presentations;
  /// Index of the single member whose presented first row is all -1.
  std::size_t representative = 0;
};

/// Throws ContractError if `presentation` is not valid for `profile`.
Orbit enumerate_orbit(const Presentation& presentation, const PreferenceProfile& profile);

/// Every single-switch presentation of the profile, one per distinct presented
/// matrix (duplicate columns make several orders present the same matrix).
/// Empty when the profile is not single-switch.
std::vector<Presentation> all_presentations(const PreferenceProfile& profile);

struct CatalogueEntry {
  std::string id;
  /// Canonical representative: least row-major encoding over all row and
  /// column permutations.
  PreferenceProfile matrix;
};

/// The 3x4 and 4x3 forbidden subprofiles, closed under row and column flips,
/// one entry per permutation class.
const std::vector<CatalogueEntry>& forbidden_catalogue();

/// Identifier of the catalogue entry equal to `sub` up to row and column
/// permutation, if any.
std::optional<std::string> match_catalogue(const PreferenceProfile& sub);

struct ForbiddenWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::string catalogue_id;

  friend bool operator==(const ForbiddenWitness&, const ForbiddenWitness&) = default;
};

/// First catalogue occurrence, scanning 3-row x 4-column index sets in
/// lexicographic order before 4-row x 3-column ones.
std::optional<ForbiddenWitness> find_forbidden_naive(const PreferenceProfile& profile);

struct FinderStats {
  std::size_t recognizer_calls = 0;
};

/// Group-elimination finder. Throws ContractError on single-switch input.
ForbiddenWitness find_forbidden_fast(const PreferenceProfile& profile, FinderStats* stats = nullptr);

}  // namespace miv
