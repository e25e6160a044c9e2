#pragma once

#include <cstddef>

namespace wat {

/// Size caps shared by the library and the command line tool.
///
/// Defaults can be overridden by the environment variables `WAT_DET_CAP`,
/// `WAT_ENUM_CAP` and `WAT_ITER_CAP`; explicit command line flags win over both.
struct Limits {
  /// Maximum number of subsets produced by a determinization.
  std::size_t det_cap = std::size_t{1} << 20;
  /// Maximum word length for explicit enumeration oracles.
  std::size_t enum_cap = 14;
  /// Fingerprint loop iteration cap; 0 selects 4 * (n^2 + n) * n.
  std::size_t iter_cap = 0;
  /// Maximum state count for exhaustive order searches.
  std::size_t order_cap = 9;

  static Limits from_env();
};

}  // namespace wat
