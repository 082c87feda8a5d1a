#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "superforms/models.hpp"

namespace {

using namespace superforms;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ModelErrorKind error_kind(const std::string& text) {
  try {
    validate(parse_model(text));
  } catch (const ModelError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ModelErrorKind::io;
}

FormElement gen(int dim, int pos) { return FormElement::generator(dim, pos); }

TEST(Models, ShippedFilesMatchBuiltins) {
  for (const auto& name : builtin_names()) {
    Model file = parse_model(read_file(std::string(SUPERFORMS_MODELS_DIR) + "/" + name + ".alg"));
    Model builtin = builtin_model(name);
    EXPECT_EQ(file.name(), name);
    EXPECT_TRUE(file.algebra == builtin.algebra) << name;
    EXPECT_EQ(file.pack.kind, builtin.pack.kind) << name;
    EXPECT_EQ(file.pack.reeb, builtin.pack.reeb) << name;
    EXPECT_EQ(file.pack.lee, builtin.pack.lee) << name;
    EXPECT_EQ(file.pack.j, builtin.pack.j) << name;
    EXPECT_EQ(file.pack.eta, builtin.pack.eta) << name;
    EXPECT_EQ(file.pack.omega0, builtin.pack.omega0) << name;
    EXPECT_EQ(file.pack.omega, builtin.pack.omega) << name;
    EXPECT_EQ(file.pack.theta, builtin.pack.theta) << name;
    EXPECT_NO_THROW(validate(file)) << name;
  }
}

TEST(Models, LoadByNameOrPath) {
  EXPECT_EQ(load_model("h3").name(), "h3");
  EXPECT_EQ(load_model(std::string(SUPERFORMS_MODELS_DIR) + "/h5.alg").dim(), 5);
  try {
    load_model("no-such-model");
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ModelErrorKind::unknown_model);
  }
}

TEST(Models, Su2AndHeisenbergStructure) {
  Model su2 = builtin_model("su2");
  EXPECT_EQ(su2.pack.eta, gen(3, 2));
  EXPECT_EQ(su2.pack.omega0, wedge(gen(3, 0), gen(3, 1)));
  EXPECT_EQ(su2.algebra.c(0, 1, 2), Rational(-1));
  EXPECT_EQ(su2.algebra.c(1, 2, 0), Rational(-1));
  EXPECT_EQ(su2.algebra.c(2, 0, 1), Rational(-1));
  Model h3 = builtin_model("h3");
  EXPECT_EQ(scalar_ce_differential(h3).apply(gen(3, 2)), wedge(gen(3, 0), gen(3, 1)));
  EXPECT_TRUE(h3.algebra.unimodular());
  EXPECT_FALSE(h3.algebra.jacobi_violation().has_value());
}

TEST(Models, ErrorKinds) {
  const std::string head = "[algebra]\ndim = 3\n[brackets]\n";
  const std::string tail = "[structure]\nkind = sasakian\nreeb = 3\nJ: 1 -> 2\n";
  EXPECT_EQ(error_kind(head + "1 2 -> 3 : -1\n2 1 -> 3 : -1\n" + tail), ModelErrorKind::antisymmetry);
  EXPECT_EQ(error_kind(head + "1 2 -> 3 : x\n" + tail), ModelErrorKind::syntax);
  // [e1,e2] = e2, [e1,e3] = e1, [e2,e3] = e1 breaks Jacobi
  EXPECT_EQ(error_kind("[algebra]\ndim = 3\n[brackets]\n1 2 -> 2 : 1\n1 3 -> 1 : 1\n2 3 -> 1 : 1\n"
                       "[structure]\nkind = kahler\n"),
            ModelErrorKind::jacobi);
  // abelian: d eta = 0, no contact structure
  EXPECT_EQ(error_kind(head + tail), ModelErrorKind::contact);
  EXPECT_EQ(error_kind("[algebra]\ndim = 2\n[structure]\nkind = kahler\nJ: 1 -> 1\n"), ModelErrorKind::complex_structure);
  const std::string vaisman = "[structure]\nkind = vaisman\nlee = 0\nreeb = 3\nJ: 1 -> 2\nJ: 0 -> 3\n";
  // Lee form not closed
  EXPECT_EQ(error_kind("[algebra]\ndim = 4\nfirst_index = 0\n[brackets]\n1 2 -> 3 : -1\n1 2 -> 0 : -1\n" + vaisman),
            ModelErrorKind::vaisman);
  // a supplied omega that is not g(J., .)
  EXPECT_EQ(error_kind("[algebra]\ndim = 4\nfirst_index = 0\n[brackets]\n1 2 -> 3 : -1\n" + vaisman + "[omega]\n1 2 : 1\n"),
            ModelErrorKind::complex_structure);
}

TEST(Models, SyntaxErrorsCiteLines) {
  try {
    parse_model("[algebra]\ndim = 3\n\n[brackets]\n1 2 3 : 1\n");
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ModelErrorKind::syntax);
    EXPECT_EQ(e.line(), 5);
  }
}

TEST(Models, VaismanOmegaIsSynthesized) {
  Model m = parse_model("[algebra]\ndim = 4\nfirst_index = 0\n[brackets]\n1 2 -> 3 : -1\n"
                        "[structure]\nkind = vaisman\nlee = 0\nreeb = 3\nJ: 1 -> 2\nJ: 0 -> 3\n");
  EXPECT_EQ(m.pack.omega, m.pack.omega0 + wedge(m.pack.theta, m.pack.eta));
  // d(I theta) = omega - theta ^ I theta
  FormElement i_theta = m.pack.apply_j(m.pack.theta);
  EXPECT_EQ(i_theta, m.pack.eta);
  EXPECT_EQ(scalar_ce_differential(m).apply(i_theta), m.pack.omega - wedge(m.pack.theta, i_theta));
  EXPECT_NO_THROW(validate(m));
}

TEST(Models, ReebContractionOfEta) {
  for (const auto& m : builtin_models()) {
    if (!m.pack.reeb) continue;
    EXPECT_EQ(contract(*m.pack.reeb, m.pack.eta), FormElement::unit(m.dim())) << m.name();
    EXPECT_TRUE(contract(*m.pack.reeb, m.pack.omega0).is_zero()) << m.name();
    EXPECT_EQ(scalar_ce_differential(m).apply(m.pack.eta), m.pack.omega0) << m.name();
  }
}

TEST(Models, WeilOperatorOnHolomorphicCovector) {
  Model h3 = builtin_model("h3");
  OperatorSet ops = structure_operators(h3);
  FormElement v = gen(3, 0) - Scalar::i() * gen(3, 1);
  EXPECT_EQ(ops.at("W").apply(v), Scalar::i() * v);
  EXPECT_EQ(ops.at("W").apply(gen(3, 2)), FormElement(3));
}

TEST(Models, ReebLieDerivative) {
  Model su2 = builtin_model("su2");
  SpacePtr scalar = scalar_space(su2);
  GradedOperator lie = supercommutator(scalar_ce_differential(su2), contraction(scalar, 2));
  FormElement image = lie.apply(gen(3, 0));
  EXPECT_EQ(image, -gen(3, 1));
  EXPECT_FALSE(structure_operators(su2).at("Lie_r").is_zero());
  EXPECT_TRUE(structure_operators(builtin_model("h3")).at("Lie_r").is_zero());
}

TEST(Models, ReebFieldIsCentralAndSkew) {
  for (const auto& m : builtin_models()) {
    OperatorSet ops = structure_operators(m);
    if (!ops.has("Lie_r")) continue;
    const GradedOperator& lie = ops.at("Lie_r");
    EXPECT_EQ(adjoint(lie), -lie) << m.name();
    for (const auto& [name, op] : ops.ops) {
      EXPECT_TRUE(supercommutator(lie, op).is_zero()) << m.name() << " " << name;
    }
  }
}

TEST(Models, DifferentialSquaresToZero) {
  for (const auto& m : builtin_models()) {
    EXPECT_TRUE(compose(ce_differential(m), ce_differential(m)).is_zero()) << m.name();
  }
}

TEST(Models, BigradingProjectorsResolveIdentity) {
  for (const std::string name : {"h3", "su2", "h5"}) {
    Model m = builtin_model(name);
    OperatorSet ops = structure_operators(m);
    FoliationSpec fol = m.pack.reeb_foliation();
    int n = (m.dim() - 1) / 2;
    GradedOperator sum = GradedOperator::zero(ops.space, 0, Parity::even);
    std::vector<GradedOperator> all;
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q)
        for (int v = 0; v <= 1; ++v) all.push_back(bigrading_projector(ops.at("W"), fol, p, q, v));
    for (std::size_t a = 0; a < all.size(); ++a) {
      sum += all[a];
      EXPECT_EQ(compose(all[a], all[a]), all[a]) << name;
      for (std::size_t b = a + 1; b < all.size(); ++b) EXPECT_TRUE(compose(all[a], all[b]).is_zero()) << name;
    }
    EXPECT_EQ(sum, ops.at("Id")) << name;
  }
}

TEST(Models, LeeFieldOnVaismanModels) {
  for (const std::string name : {"su2xr", "h3xr"}) {
    Model m = builtin_model(name);
    OperatorSet ops = structure_operators(m);
    EXPECT_TRUE(ops.at("Lie_theta").is_zero()) << name;
    EXPECT_TRUE(scalar_ce_differential(m).apply(m.pack.theta).is_zero()) << name;
  }
}

}  // namespace
