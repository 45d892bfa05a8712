#pragma once

#include "miv/miv.hpp"

namespace miv::test {

inline PreferenceProfile intro_profile() {
  return PreferenceProfile::from_rows({{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}, {1, 1, 1}, {1, 1, 1}});
}

inline VotingInstance intro_instance() { return VotingInstance::unweighted(intro_profile()); }

inline PreferenceProfile fig1_profile() {
  return PreferenceProfile::from_columns(
      {{1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {-1, 1, -1}, {1, -1, 1}, {-1, 1, -1}});
}

/// Column order 2,1,3,4,5,6 with column 5 negated (0-based below).
inline Presentation fig1b_presentation() { return {{1, 0, 2, 3, 4, 5}, {false, false, false, false, true, false}}; }

inline PreferenceProfile p1a() { return PreferenceProfile::from_rows({{-1, -1, -1, -1}, {1, 1, -1, -1}, {1, -1, 1, -1}}); }

inline PreferenceProfile p2a() {
  return PreferenceProfile::from_rows({{-1, -1, -1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
}

}  // namespace miv::test
