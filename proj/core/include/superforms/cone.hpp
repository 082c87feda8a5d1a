#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superforms/hodge.hpp"

namespace superforms {

// Per-degree maps source_k -> target_{k + degree} in complex coordinates.
struct ChainMap {
  CochainComplex source;
  CochainComplex target;
  int degree = 0;
  std::vector<Matrix> blocks;  // indexed by source degree - source.lo

  Matrix at(int k) const;  // zero of the right shape outside the range
};

// First degree where phi fails to commute with the differentials.
std::optional<std::string> chain_map_defect(const ChainMap& phi);

ChainMap identity_map(const CochainComplex& cx);
ChainMap zero_map(const CochainComplex& source, const CochainComplex& target);
// Restriction of an ambient operator to a subcomplex (throws if it leaves it).
ChainMap restrict_operator(const GradedOperator& op, const CochainComplex& source, const CochainComplex& target);

// C[k]_i = C_{i+k} with differential (-1)^k d.
CochainComplex shift(const CochainComplex& cx, int k);
// Pure reindexing R_i = C_{i+k}, no sign.
CochainComplex regrade(const CochainComplex& cx, int k);
// C(phi)_i = C_{i+1} + C'_i with d(c, c') = (d c, phi c - d c'); phi of degree 0.
CochainComplex build_cone(const ChainMap& phi);

struct DegreeRow {
  std::string table;  // which identity the row belongs to
  int degree = 0;
  std::string claim;
  long claimed = 0;
  long computed = 0;
  bool ok = false;
  bool normative = true;
};

struct DecompositionVerdict {
  std::string title;
  std::vector<DegreeRow> rows;
  CheckList checks;
  std::map<int, Matrix> witnesses;  // per-degree bases in ambient coordinates

  bool pass() const;  // every normative row and check
  void add_row(DegreeRow row) { rows.push_back(std::move(row)); }
};

// Induced map on cohomology in representative coordinates.
Matrix induced_map(const ChainMap& phi, const CohomologyReport& hs, const CohomologyReport& ht, int k);

// Exactness of H(C) -> H(C') -> H(cone) -> H(C[1]) -> ... at every node.
DecompositionVerdict long_exact_check(const ChainMap& phi);

// L restricted to a basic complex as a degree-2 chain map.
ChainMap basic_lefschetz(const Model& model, const CochainComplex& basic);

// L as a degree-0 chain map B[-1] -> B[1] on a basic complex.
ChainMap shifted_lefschetz(const Model& model, const CochainComplex& basic);

// Long exact sequence of the shifted Lefschetz cone on the basic complex of
// the transversally Kahler foliation.
DecompositionVerdict lefschetz_cone_check(const Model& model);

// The Reeb-invariant complex against regrade(cone(L: B[-1] -> B[1]), -1)
// under alpha + eta^beta -> (beta, alpha), plus exactness of the sequence.
DecompositionVerdict cone_identification(const Model& model);

DecompositionVerdict sasakian_decomposition(const Model& model);
DecompositionVerdict sasakian_harmonic_check(const Model& model);
DecompositionVerdict vaisman_decomposition(const Model& model);
DecompositionVerdict vaisman_harmonic_check(const Model& model);

}  // namespace superforms
