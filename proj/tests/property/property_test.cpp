#include <gtest/gtest.h>

#include <random>

#include "superforms/cone.hpp"

namespace {

using namespace superforms;

constexpr unsigned kSeed = 20240611;

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Scalar scalar(bool complex = false) {
    Scalar re = Scalar::frac(integer(-5, 5), integer(1, 4));
    if (!complex) return re;
    return re + Scalar::i() * Scalar::frac(integer(-3, 3), integer(1, 3));
  }
  FormElement form(int dim, int degree, bool complex = false) {
    FormElement f(dim);
    for (Monomial m : monomials_of_degree(dim, degree))
      if (integer(0, 2) > 0) f.add(m, scalar(complex));
    return f;
  }
  Matrix matrix(std::size_t rows, std::size_t cols, int zero_weight = 1) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (integer(0, zero_weight) > 0) m(r, c) = scalar();
    return m;
  }

 private:
  std::mt19937 gen_;
};

int parity_sign(int k) { return k % 2 ? -1 : 1; }

TEST(Property, WedgeIsGradedCommutative) {
  Rng rng(kSeed);
  for (int trial = 0; trial < 60; ++trial) {
    int p = rng.integer(0, 3), q = rng.integer(0, 2);
    FormElement a = rng.form(5, p, true), b = rng.form(5, q, true);
    EXPECT_EQ(wedge(a, b), Scalar(parity_sign(p * q)) * wedge(b, a));
  }
}

TEST(Property, ContractionSquaresToZero) {
  Rng rng(kSeed + 1);
  for (int trial = 0; trial < 60; ++trial) {
    FormElement a = rng.form(5, rng.integer(0, 5));
    int v = rng.integer(0, 4);
    EXPECT_TRUE(contract(v, contract(v, a)).is_zero());
  }
}

TEST(Property, StarIsAnIsometryWithKnownSquare) {
  Rng rng(kSeed + 2);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rng.integer(1, 6), k = rng.integer(0, n);
    FormElement a = rng.form(n, k, true), b = rng.form(n, k, true);
    EXPECT_EQ(hodge_star(hodge_star(a)), Scalar(parity_sign(k * (n - k))) * a);
    EXPECT_EQ(inner_product(hodge_star(a), hodge_star(b)), inner_product(a, b));
  }
}

TEST(Property, WedgeAndContractionAreAdjoint) {
  Rng rng(kSeed + 3);
  for (int trial = 0; trial < 60; ++trial) {
    int k = rng.integer(0, 4), v = rng.integer(0, 4);
    FormElement a = rng.form(5, k, true), b = rng.form(5, k + 1, true);
    FormElement theta = FormElement::generator(5, v);
    EXPECT_EQ(inner_product(wedge(theta, a), b), inner_product(a, contract(v, b)));
    // multiplying on the right costs the Koszul sign of moving theta past a
    EXPECT_EQ(inner_product(wedge(a, theta), b), Scalar(parity_sign(k)) * inner_product(a, contract(v, b)));
  }
}

TEST(Property, DifferentialSquaresToZeroOnRandomForms) {
  Rng rng(kSeed + 4);
  for (const std::string name : {"h5", "su2", "su2xr"}) {
    Model m = builtin_model(name);
    GradedOperator d = scalar_ce_differential(m);
    for (int trial = 0; trial < 20; ++trial) {
      FormElement a = rng.form(m.dim(), rng.integer(0, m.dim()));
      EXPECT_TRUE(d.apply(d.apply(a)).is_zero()) << name;
    }
  }
}

TEST(Property, AdjointPairing) {
  Rng rng(kSeed + 5);
  for (const std::string name : {"su2", "h5"}) {
    OperatorSet ops = structure_operators(builtin_model(name));
    for (const std::string op : {"d", "L", "W", "Lie_r"}) {
      const GradedOperator& a = ops.at(op);
      GradedOperator as = adjoint(a);
      for (int trial = 0; trial < 4; ++trial) {
        int k = rng.integer(0, a.top_degree());
        int t = k + a.shift();
        if (t < 0 || t > a.top_degree()) continue;
        Matrix x = rng.matrix(ops.space->dim(k), 1), y = rng.matrix(ops.space->dim(t), 1);
        EXPECT_EQ((a.block(k) * x).adjoint() * y, x.adjoint() * (as.block(t) * y)) << name << " " << op;
      }
    }
  }
}

TEST(Property, RankNullity) {
  Rng rng(kSeed + 6);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = rng.integer(1, 7), c = rng.integer(1, 7);
    // sparse factors produce rank-deficient products
    Matrix m = rng.matrix(r, 3, 2) * rng.matrix(3, c, 2);
    Matrix ker = nullspace(m);
    EXPECT_EQ(rank(m) + ker.cols(), c);
    if (ker.cols() > 0) {
      EXPECT_TRUE((m * ker).is_zero());
    }
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Property, GradedAntisymmetryOfSupercommutator) {
  for (const std::string name : {"su2", "h3"}) {
    SasakianOperators s = sasakian_operators(builtin_model(name));
    std::vector<GradedOperator> pool = s.generators();
    for (const auto& a : pool)
      for (const auto& b : pool) {
        int sign = a.odd() && b.odd() ? 1 : -1;
        EXPECT_EQ(supercommutator(a, b), Scalar(sign) * supercommutator(b, a)) << name << " " << a.label() << " " << b.label();
      }
  }
}

// Upper triangular with nonzero diagonal.
Matrix random_invertible(Rng& rng, std::size_t n) {
  Matrix g = rng.matrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < r; ++c) g(r, c) = Scalar(0);
    g(r, r) = Scalar(rng.integer(1, 5));
  }
  return g;
}

TEST(Property, ConeOfAnIsomorphismIsAcyclic) {
  Rng rng(kSeed + 7);
  for (const std::string name : {"h3", "su2", "h5"}) {
    CochainComplex cx = full_complex(builtin_model(name));
    std::vector<Matrix> g, g_inv;
    for (int k = cx.lo; k <= cx.hi(); ++k) {
      g.push_back(random_invertible(rng, cx.dim(k)));
      g_inv.push_back(*inverse(g.back()));
    }
    std::vector<Matrix> diff;
    std::vector<std::size_t> dims;
    for (int k = cx.lo; k <= cx.hi(); ++k) dims.push_back(cx.dim(k));
    for (std::size_t i = 0; i + 1 < g.size(); ++i) diff.push_back(g[i + 1] * cx.diff[i] * g_inv[i]);
    ChainMap phi{cx, abstract_complex("conjugate", cx.lo, diff, dims), 0, g};
    EXPECT_FALSE(chain_map_defect(phi).has_value()) << name;
    for (int b : cohomology(build_cone(phi)).betti) EXPECT_EQ(b, 0) << name;
    EXPECT_TRUE(long_exact_check(phi).pass()) << name;
  }
}

}  // namespace
