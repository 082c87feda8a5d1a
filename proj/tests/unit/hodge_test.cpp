#include <gtest/gtest.h>

#include "superforms/hodge.hpp"

namespace {

using namespace superforms;

Matrix unit_columns(const FormSpace& space, int k, const std::vector<std::vector<int>>& monomials) {
  Matrix out(space.dim(k), monomials.size());
  for (std::size_t c = 0; c < monomials.size(); ++c)
    out(space.index_of(Monomial::from_positions(monomials[c])), c) = Scalar(1);
  return out;
}

TEST(Hodge, HarmonicTopFormOfSu2) {
  Model m = builtin_model("su2");
  SpacePtr space = form_space(m);
  Matrix h3 = harmonic_space(m, 3);
  EXPECT_TRUE(same_span(h3, unit_columns(*space, 3, {{0, 1, 2}})));
  EXPECT_EQ(harmonic_space(m, 1).cols(), 0u);
  EXPECT_EQ(harmonic_space(m, 2).cols(), 0u);
}

TEST(Hodge, HarmonicOneFormsOfHeisenberg) {
  Model m = builtin_model("h3");
  Matrix h1 = harmonic_space(m, 1);
  EXPECT_TRUE(same_span(h1, unit_columns(*form_space(m), 1, {{0}, {1}})));
}

TEST(Hodge, LaplacianIsCentralAndPositive) {
  for (const std::string name : {"su2", "h5"}) {
    Model m = builtin_model(name);
    GradedOperator lap = laplacian(m);
    EXPECT_TRUE(supercommutator(lap, structure_operators(m).at("d")).is_zero()) << name;
    for (int k = 0; k <= m.dim(); ++k) EXPECT_TRUE(is_positive_semidefinite(lap.block(k))) << name << " " << k;
  }
}

TEST(Hodge, BasicComplexes) {
  Model h3 = builtin_model("h3");
  CochainComplex b = basic_subcomplex(h3, h3.pack.reeb_foliation());
  EXPECT_EQ(b.dim(0), 1u);
  EXPECT_EQ(b.dim(1), 2u);
  EXPECT_EQ(b.dim(2), 1u);
  EXPECT_EQ(b.dim(3), 0u);
  EXPECT_NO_THROW(check_complex(b));
  // on su2 the basic forms of the adjoint sector are nonzero but acyclic
  Model su2 = builtin_model("su2");
  CochainComplex bs = basic_subcomplex(su2, su2.pack.reeb_foliation());
  EXPECT_GT(bs.dim(1), 0u);
  EXPECT_EQ(cohomology(bs).betti, (std::vector<int>{1, 0, 1, 0}));
  CochainComplex inv = invariant_subcomplex(su2, su2.pack.reeb_foliation());
  EXPECT_EQ(cohomology(inv).betti, cohomology(full_complex(su2)).betti);
}

TEST(Hodge, BasicAdjoint) {
  for (const std::string name : {"su2", "h3", "h5", "su2xr", "h3xr"}) {
    Model m = builtin_model(name);
    EXPECT_TRUE(basic_adjoint_check(m, m.pack.kahler_foliation()).all_printed()) << name;
  }
}

TEST(Hodge, AbstractComplexValidation) {
  Matrix one = Matrix::identity(1);
  EXPECT_NO_THROW(abstract_complex("ok", 0, {one}, {1, 1}));
  EXPECT_THROW(abstract_complex("d2", 0, {one, one}, {1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(abstract_complex("shape", 0, {Matrix(2, 1)}, {1, 1}), std::invalid_argument);
}

TEST(Hodge, SubcomplexMustBeClosed) {
  Model h3 = builtin_model("h3");
  SpacePtr space = form_space(h3);
  GradedOperator d = structure_operators(h3).at("d");
  std::vector<Matrix> spans;
  for (int k = 0; k <= 3; ++k) spans.push_back(Matrix(space->dim(k), 0));
  spans[1] = unit_columns(*space, 1, {{2}});  // d theta^3 leaves the zero span
  EXPECT_THROW(subcomplex("bad", d, spans), std::exception);
}

TEST(Hodge, ClassCoordinates) {
  Model h3 = builtin_model("h3");
  CochainComplex cx = full_complex(h3);
  CohomologyReport h = cohomology(cx);
  Matrix c = class_coordinates(cx, h, 1, unit_columns(*form_space(h3), 1, {{0}, {1}}));
  EXPECT_EQ(rank(c), 2u);
  EXPECT_THROW(class_coordinates(cx, h, 1, unit_columns(*form_space(h3), 1, {{2}})), std::exception);
  // theta^1 ^ theta^2 = d theta^3 is exact
  Matrix exact = class_coordinates(cx, h, 2, unit_columns(*form_space(h3), 2, {{0, 1}}));
  EXPECT_TRUE(exact.is_zero());
}

TEST(Hodge, PoincareDualityAndEuler) {
  for (const auto& m : builtin_models()) {
    CohomologyReport h = cohomology(full_complex(m));
    for (int k = 0; k <= m.dim(); ++k) EXPECT_EQ(h.betti_at(k), h.betti_at(m.dim() - k)) << m.name();
    if (m.dim() % 2 == 1) {
      EXPECT_EQ(h.euler_characteristic(), 0) << m.name();
    }
  }
}

TEST(Hodge, TransversalPackage) {
  for (const auto& m : builtin_models()) {
    CheckList c = transversal_hodge_package(m);
    EXPECT_TRUE(c.all_ok()) << m.name();
    for (const auto& item : c.items)
      if (item.normative) {
        EXPECT_TRUE(item.ok) << m.name() << " " << item.group << " " << item.name;
      }
  }
}

TEST(Hodge, CheckListIgnoresInformationalItems) {
  CheckList c;
  c.add("g", "normative", true);
  c.add("g", "informational", false, "", false);
  EXPECT_TRUE(c.all_ok());
  c.add("g", "broken", false);
  EXPECT_FALSE(c.all_ok());
}

}  // namespace
