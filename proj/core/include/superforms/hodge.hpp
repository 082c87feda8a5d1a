#pragma once

#include <string>
#include <vector>

#include "superforms/graded_operator.hpp"
#include "superforms/hattori.hpp"
#include "superforms/models.hpp"
#include "superforms/relations.hpp"

namespace superforms {

// A finite cochain complex. basis[i] spans degree lo + i: its columns are the
// basis vectors in ambient coordinates (identity for abstract complexes), and
// diff[i] maps degree lo + i to lo + i + 1 in basis coordinates.
struct CochainComplex {
  std::string label;
  SpacePtr ambient;  // null for abstract complexes
  int lo = 0;
  std::vector<Matrix> basis;
  std::vector<Matrix> diff;

  int hi() const { return lo + static_cast<int>(basis.size()) - 1; }
  std::size_t dim(int k) const;
  Matrix d(int k) const;     // zero of the right shape outside the range
  Matrix gram(int k) const;  // basis^H basis
  Matrix embed(int k) const; // basis(k), or an empty matrix outside the range
};

// Abstract complex with identity bases; throws when shapes or d^2 fail.
CochainComplex abstract_complex(std::string label, int lo, std::vector<Matrix> diff, std::vector<std::size_t> dims);

// Throws std::invalid_argument when shapes disagree or d^2 != 0.
void check_complex(const CochainComplex& cx);

// Restriction of d to per-degree subspaces; throws if d leaves them.
CochainComplex subcomplex(std::string label, const GradedOperator& d, std::vector<Matrix> spans);

CochainComplex full_complex(const Model& model);
// Forms killed by i_v and Lie_v for every v spanning the foliation.
CochainComplex basic_subcomplex(const Model& model, const FoliationSpec& fol);
// Forms killed by Lie_v only (the invariant complex of a foliation).
CochainComplex invariant_subcomplex(const Model& model, const FoliationSpec& fol);

struct CohomologyReport {
  std::string label;
  int lo = 0;
  std::vector<int> betti;
  // Per degree, harmonic representatives in complex coordinates and in
  // ambient coordinates (columns, canonical basis).
  std::vector<Matrix> representatives;
  std::vector<Matrix> ambient_representatives;

  int betti_at(int k) const;
  int euler_characteristic() const;
};

CohomologyReport cohomology(const CochainComplex& cx);

// Image of the differential into degree k, in complex coordinates.
Matrix boundaries(const CochainComplex& cx, int k);

// Class coordinates of complex-coordinate cocycles with respect to the
// representatives of the report (throws if a column is not a cocycle).
Matrix class_coordinates(const CochainComplex& cx, const CohomologyReport& h, int k, const Matrix& cocycles);

// Laplacian {d, d*} of the full complex and its kernel at degree k.
GradedOperator laplacian(const Model& model);
Matrix harmonic_space(const Model& model, int k);
// Basic Laplacian in complex coordinates (adjoint taken with the Gram metric).
Matrix basic_laplacian(const CochainComplex& cx, int k);

// {d1, d1*} - sum_v Lie_v^2 for the Hattori split of the foliation.
GradedOperator split_laplacian(const Model& model, const FoliationSpec& fol);

// Per-degree Hodge star blocks; `within` selects the transversal star.
std::vector<Matrix> hodge_star_blocks(const SpacePtr& space, Monomial within);

GradedOperator lefschetz_operator(const Model& model);  // wedge with omega0 on all sectors
GradedOperator wedge_operator(const Model& model, const FormElement& form);

// Outcome of one boolean assertion. Informational items never fail a run.
struct Check {
  std::string group;
  std::string name;
  bool ok = false;
  bool normative = true;
  std::string detail;
};

struct CheckList {
  std::string title;
  std::vector<Check> items;

  void add(std::string group, std::string name, bool ok, std::string detail = {}, bool normative = true);
  bool all_ok() const;  // normative items only
  void append(const CheckList& other);
};

RelationReport basic_adjoint_check(const Model& model, const FoliationSpec& fol);

// Hard Lefschetz, (p,q) stability, basic adjoint, positivity of the split
// Laplacian and its commutation with horizontal projectors, the basic
// harmonic characterization, the eigenvalue argument and the kernel
// vanishing statements, all on the transversally Kahler foliation.
CheckList transversal_hodge_package(const Model& model);

}  // namespace superforms
