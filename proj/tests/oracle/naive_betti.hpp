#pragma once

#include <gmpxx.h>

#include <vector>

// Reference Betti numbers for Chevalley-Eilenberg complexes. Deliberately
// shares no code with the library: forms are bit masks, matrices are nested
// vectors of mpq_class, ranks come from a plain elimination loop.
namespace oracle {

struct Bracket {
  int i;  // 0-based positions, i < j
  int j;
  int k;
  mpq_class c;  // c^k_{ij}
};

struct Algebra {
  int dim = 0;
  std::vector<Bracket> brackets;
};

using Mat = std::vector<std::vector<mpq_class>>;

int rank_of(Mat m);

// d as a matrix from degree-k to degree-(k+1) monomials, in increasing-mask order.
Mat ce_matrix(const Algebra& a, int k);

std::vector<int> betti(const Algebra& a);
// Cohomology of forms with i_v = 0 and i_v d = 0 for every vertical position v.
std::vector<int> basic_betti(const Algebra& a, const std::vector<int>& vertical);

}  // namespace oracle
