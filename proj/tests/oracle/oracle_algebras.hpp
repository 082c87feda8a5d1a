#pragma once

#include "naive_betti.hpp"

// Structure constants typed in by hand from the bracket tables, positions 0-based.
namespace oracle {

inline Algebra abelian(int n) { return {n, {}}; }

// [e1,e2] = -e3, [e2,e3] = -e1, [e3,e1] = -e2, shifted by `base`
inline Algebra su2(int base = 0) {
  return {3 + base, {{base + 0, base + 1, base + 2, -1}, {base + 1, base + 2, base + 0, -1}, {base + 0, base + 2, base + 1, 1}}};
}

inline Algebra h3(int base = 0) { return {3 + base, {{base + 0, base + 1, base + 2, -1}}}; }

inline Algebra h5() { return {5, {{0, 1, 4, -1}, {2, 3, 4, -1}}}; }

}  // namespace oracle
