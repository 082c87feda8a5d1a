#include <gtest/gtest.h>

#include "naive_betti.hpp"
#include "oracle_algebras.hpp"
#include "superforms/hodge.hpp"

namespace {

using namespace superforms;

std::vector<int> trimmed(std::vector<int> b, std::size_t size) {
  b.resize(size);
  return b;
}

struct FullCase {
  std::string model;
  oracle::Algebra algebra;
  std::vector<int> expected;
};

TEST(Betti, FullComplexMatchesOracle) {
  std::vector<FullCase> cases = {
      {"torus2", oracle::abelian(2), {1, 2, 1}},
      {"torus4", oracle::abelian(4), {1, 4, 6, 4, 1}},
      {"su2", oracle::su2(), {1, 0, 0, 1}},
      {"h3", oracle::h3(), {1, 2, 2, 1}},
      {"h5", oracle::h5(), {1, 4, 5, 5, 4, 1}},
      {"su2xr", oracle::su2(1), {1, 1, 0, 1, 1}},
      {"h3xr", oracle::h3(1), {1, 3, 4, 3, 1}},
  };
  for (const auto& c : cases) {
    std::vector<int> reference = oracle::betti(c.algebra);
    EXPECT_EQ(reference, c.expected) << c.model;
    EXPECT_EQ(cohomology(full_complex(builtin_model(c.model))).betti, reference) << c.model;
  }
}

TEST(Betti, BasicComplexesMatchOracle) {
  struct BasicCase {
    std::string model;
    oracle::Algebra algebra;
    std::vector<int> vertical;
    std::vector<int> expected;
  };
  std::vector<BasicCase> cases = {
      {"h3", oracle::h3(), {2}, {1, 2, 1}},
      {"su2", oracle::su2(), {2}, {1, 0, 1}},
      {"h5", oracle::h5(), {4}, oracle::basic_betti(oracle::h5(), {4})},
      {"su2xr", oracle::su2(1), {0, 3}, {1, 0, 1}},
      {"h3xr", oracle::h3(1), {0, 3}, {1, 2, 1}},
  };
  for (const auto& c : cases) {
    std::vector<int> reference = oracle::basic_betti(c.algebra, c.vertical);
    EXPECT_EQ(reference, c.expected) << c.model;
    Model m = builtin_model(c.model);
    FoliationSpec fol = m.pack.kahler_foliation();
    std::vector<int> engine = cohomology(basic_subcomplex(m, fol)).betti;
    EXPECT_EQ(trimmed(engine, reference.size()), reference) << c.model;
    for (std::size_t k = reference.size(); k < engine.size(); ++k) EXPECT_EQ(engine[k], 0) << c.model;
  }
}

TEST(Betti, HeisenbergFiveBasicNumbers) {
  // horizontal generators are closed, so the basic complex is the transversal torus^4
  EXPECT_EQ(oracle::basic_betti(oracle::h5(), {4}), (std::vector<int>{1, 4, 6, 4, 1}));
}

}  // namespace
