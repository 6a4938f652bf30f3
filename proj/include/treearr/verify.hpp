#ifndef TREEARR_VERIFY_HPP
#define TREEARR_VERIFY_HPP

// Batch verification of the structural properties over every tree or forest
// up to a size bound.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace treearr {

struct PropertyResult {
  std::string name;
  std::size_t max_n = 0;
  std::size_t cases = 0;
  bool pass = true;
  std::string counterexample;
};

struct SweepReport {
  std::vector<std::size_t> tree_counts;    // index n - 1
  std::vector<std::size_t> forest_counts;  // index n - 1
  std::vector<PropertyResult> properties;

  bool pass() const;
  std::string to_text() const;
};

/// Each property runs over all sizes up to min(max_n, its own bound).
/// Throws std::invalid_argument when max_n is 0 or above 6.
SweepReport sweep(std::size_t max_n, long grid_offset = 1);

}  // namespace treearr

#endif  // TREEARR_VERIFY_HPP
