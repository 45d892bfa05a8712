#pragma once

#include <cstddef>
#include <cstdint>

namespace miv {

/// Size caps for the exhaustive searches. Exceeding one raises CapExceeded
/// instead of silently running for hours.
struct SearchLimits {
  /// Topics with an exact 1/2 majority that an IWM enumeration may branch on.
  std::size_t max_tied_topics = 20;
  /// t for full scans over all 2^t proposals (Condorcet, Ostrogorski, MAJOR).
  std::size_t max_scan_topics = 25;
  /// Columns handed to the negative-sum-subset search.
  std::size_t max_nss_columns = 30;
  /// t for the exhaustive best-supported-proposal oracle and B_m enumeration.
  std::size_t max_oracle_topics = 22;
  /// t for internal-weight Condorcet search, which is quadratic in 2^t.
  std::size_t max_internal_condorcet_topics = 12;
  /// t for the brute-force relevant-topic engine.
  std::size_t max_relevance_brute_force_topics = 20;
  /// Largest integer the knapsack relevance engine may scale weights to.
  std::int64_t max_knapsack_scale = std::int64_t{1} << 40;
};

}  // namespace miv
