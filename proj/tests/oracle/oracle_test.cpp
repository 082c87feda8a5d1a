#include <gtest/gtest.h>

#include "naive_betti.hpp"
#include "oracle_algebras.hpp"

namespace {

using oracle::Mat;

Mat multiply(const Mat& a, const Mat& b) {
  std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  Mat out(a.size(), std::vector<mpq_class>(cols));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t c = 0; c < cols; ++c) out[r][c] += a[r][k] * b[k][c];
  return out;
}

bool all_zero(const Mat& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

TEST(Oracle, RankOfSmallMatrices) {
  EXPECT_EQ(oracle::rank_of({{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(oracle::rank_of({{0, 1}, {1, 0}}), 2);
  EXPECT_EQ(oracle::rank_of({{0, 0}, {0, 0}}), 0);
  EXPECT_EQ(oracle::rank_of({{mpq_class(1, 3), 1, 0}, {1, 3, 0}, {0, 0, 5}}), 2);
}

TEST(Oracle, DifferentialSquaresToZero) {
  for (const auto& a : {oracle::su2(), oracle::h3(), oracle::h5(), oracle::su2(1), oracle::h3(1)}) {
    for (int k = 0; k + 1 < a.dim; ++k) {
      EXPECT_TRUE(all_zero(multiply(oracle::ce_matrix(a, k + 1), oracle::ce_matrix(a, k)))) << "degree " << k;
    }
  }
}

TEST(Oracle, HeisenbergGeneratorDifferential) {
  // d theta^3 = theta^1 ^ theta^2: column of theta^3 (mask 4) in degree 1 is row of mask 3
  Mat d1 = oracle::ce_matrix(oracle::h3(), 1);
  ASSERT_EQ(d1.size(), 3u);
  EXPECT_EQ(d1[0][2], 1);
  EXPECT_EQ(d1[0][0], 0);
  EXPECT_EQ(d1[0][1], 0);
}

TEST(Oracle, AbelianBettiAreBinomial) {
  EXPECT_EQ(oracle::betti(oracle::abelian(2)), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(oracle::betti(oracle::abelian(4)), (std::vector<int>{1, 4, 6, 4, 1}));
  EXPECT_EQ(oracle::basic_betti(oracle::abelian(3), {2}), (std::vector<int>{1, 2, 1}));
}

TEST(Oracle, LowDimensionalAlgebras) {
  EXPECT_EQ(oracle::betti(oracle::su2()), (std::vector<int>{1, 0, 0, 1}));
  EXPECT_EQ(oracle::betti(oracle::h3()), (std::vector<int>{1, 2, 2, 1}));
  EXPECT_EQ(oracle::basic_betti(oracle::h3(), {2}), (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(oracle::basic_betti(oracle::su2(), {2}), (std::vector<int>{1, 0, 1}));
}

TEST(Oracle, EulerCharacteristicOfUnimodularOddAlgebras) {
  for (const auto& a : {oracle::su2(), oracle::h3(), oracle::h5()}) {
    auto b = oracle::betti(a);
    int chi = 0;
    for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 ? -1 : 1) * b[k];
    EXPECT_EQ(chi, 0);
  }
}

}  // namespace
