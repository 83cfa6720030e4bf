#pragma once

// Brute-force reference for the diagram checks. Works from raw PD tuples,
// traces faces through crossing corners, and tries every set of two or four
// edges as a dual cycle.

#include <array>
#include <cstddef>
#include <vector>

namespace oracle {

using Pd = std::vector<std::array<int, 4>>;

struct Summary {
  std::vector<std::size_t> region_sizes;  // sorted
  bool prime = true;
  bool twist_reduced = true;
};

// pd must be connected and have at least one crossing.
Summary analyze(const Pd& pd);

}  // namespace oracle
