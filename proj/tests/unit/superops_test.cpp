#include <gtest/gtest.h>

#include "superforms/graded_operator.hpp"
#include "superforms/hattori.hpp"
#include "superforms/models.hpp"
#include "superforms/relations.hpp"

namespace {

using namespace superforms;

TEST(Superops, DerivationExtensionRebuildsHeisenbergDifferential) {
  Model h3 = builtin_model("h3");
  SpacePtr space = scalar_space(h3);
  GeneratorAction action{FormElement(3), {FormElement(3), FormElement(3), wedge(FormElement::generator(3, 0), FormElement::generator(3, 1))}};
  GradedOperator d = extend_derivation(space, Parity::odd, action, "d");
  EXPECT_EQ(d, scalar_ce_differential(h3));
  EXPECT_EQ(d.shift(), 1);
  EXPECT_TRUE(d.parity_matches_shift());
  // d(theta^3 ^ theta^1) = (theta^1 ^ theta^2) ^ theta^1 = 0
  EXPECT_TRUE(d.apply(wedge(FormElement::generator(3, 2), FormElement::generator(3, 0))).is_zero());
}

TEST(Superops, ComposeAndSupercommutator) {
  Model h3 = builtin_model("h3");
  OperatorSet ops = structure_operators(h3);
  const GradedOperator& e = ops.at("e_r");
  const GradedOperator& i = ops.at("i_r");
  EXPECT_EQ(compose(e, i).shift(), 0);
  EXPECT_EQ(supercommutator(e, i), ops.at("Id"));
  EXPECT_TRUE(compose(e, e).is_zero());
  EXPECT_EQ(supercommutator(e, i), supercommutator(i, e));
  const GradedOperator& l = ops.at("L");
  // even-odd: {L, e} = -{e, L}
  EXPECT_EQ(supercommutator(l, e), -supercommutator(e, l));
}

TEST(Superops, AdjointPairs) {
  for (const std::string name : {"h3", "su2"}) {
    OperatorSet ops = structure_operators(builtin_model(name));
    EXPECT_EQ(adjoint(ops.at("e_r")), ops.at("i_r")) << name;
    EXPECT_EQ(adjoint(ops.at("L")), ops.at("Lambda")) << name;
    EXPECT_EQ(adjoint(adjoint(ops.at("d"))), ops.at("d")) << name;
    GradedOperator ab = compose(ops.at("L"), ops.at("d"));
    EXPECT_EQ(adjoint(ab), compose(adjoint(ops.at("d")), adjoint(ops.at("L")))) << name;
  }
}

TEST(Superops, ReebPower) {
  OperatorSet ops = structure_operators(builtin_model("su2"));
  const GradedOperator& lie = ops.at("Lie_r");
  GradedOperator l1 = reeb_power(ops.at("L"), lie, 1);
  EXPECT_EQ(l1, compose(ops.at("L"), lie));
  ASSERT_TRUE(l1.reeb_label().has_value());
  EXPECT_EQ(l1.reeb_label()->second, 1);
  EXPECT_EQ(reeb_power(ops.at("L"), lie, 0), ops.at("L"));
  EXPECT_FALSE(reeb_power(ops.at("Id"), lie, 2).is_zero());
  // theta^1 is rotated by the Reeb flow, so e_1 does not commute with Lie_r
  Model su2 = builtin_model("su2");
  GradedOperator e1 = on_all_sectors(multiplication(scalar_space(su2), FormElement::generator(3, 0)), ops.space);
  EXPECT_THROW(reeb_power(e1, lie, 1), std::invalid_argument);
}

TEST(Superops, JacobiExample) {
  OperatorSet ops = structure_operators(builtin_model("su2"));
  RelationEntry e = super_jacobi_check(ops.at("d"), ops.at("d"), ops.at("i_r"));
  EXPECT_EQ(e.verdict, Verdict::pass);
}

TEST(Superops, FirstOrderDeterminacy) {
  Model h3 = builtin_model("h3");
  SpacePtr space = scalar_space(h3);
  GradedOperator d = scalar_ce_differential(h3);
  EXPECT_FALSE(first_order_defect(d).has_value());
  GradedOperator l = multiplication(space, h3.pack.omega0, "L");
  // {L, d*} is first order up to its zero-order term
  EXPECT_FALSE(first_order_defect(supercommutator(l, adjoint(d))).has_value());
  Model su2 = builtin_model("su2");
  GradedOperator ds = scalar_ce_differential(su2);
  GradedOperator lap = supercommutator(ds, adjoint(ds));
  EXPECT_TRUE(first_order_defect(lap).has_value());
}

TEST(Superops, CompareReportsFirstMismatch) {
  OperatorSet ops = structure_operators(builtin_model("h3"));
  auto m = compare_operators(ops.at("Id"), 2 * ops.at("Id"));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->degree, 0);
  EXPECT_EQ(m->entry.left, Scalar(1));
  EXPECT_EQ(m->entry.right, Scalar(2));
  EXPECT_FALSE(compare_operators(ops.at("Id"), ops.at("Id")).has_value());
}

TEST(Superops, RelationVariants) {
  OperatorSet ops = structure_operators(builtin_model("h3"));
  const GradedOperator& id = ops.at("Id");
  RelationEntry exact = check_relation({"t", "2 Id", 2 * id, Scalar(2), "Id", id}, "h3");
  EXPECT_EQ(exact.verdict, Verdict::pass);
  RelationEntry variant = check_relation({"t", "-2 Id", -2 * id, Scalar(2), "Id", id}, "h3");
  EXPECT_EQ(variant.verdict, Verdict::pass_variant);
  EXPECT_FALSE(variant.variant.empty());
  RelationEntry wrong = check_relation({"t", "3 Id", 3 * id, Scalar(1), "Id", id}, "h3");
  EXPECT_EQ(wrong.verdict, Verdict::fail);
  EXPECT_TRUE(wrong.mismatch.has_value());
}

TEST(Superops, JacobiPoolOnHeisenberg) {
  SasakianOperators s = sasakian_operators(builtin_model("h3"));
  RelationReport r = super_jacobi_pool(s.generators(), "h3");
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_NE(r.entries[0].name.find("1728 ordered triples"), std::string::npos);
  EXPECT_TRUE(r.all_printed());
}

}  // namespace
