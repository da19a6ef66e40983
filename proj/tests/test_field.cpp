#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sectcx/chain_complex.hpp"
#include "sectcx/examples.hpp"
#include "sectcx/field.hpp"

using namespace sectcx;

namespace {

Matrix random_matrix(std::mt19937& rng, const PrimeField& f, int rows, int cols, int density = 2) {
  Matrix m(rows, cols);
  std::uniform_int_distribution<std::int64_t> val(0, f.modulus() - 1);
  std::uniform_int_distribution<int> keep(0, density);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (keep(rng) == 0) m(i, j) = f.from_int(val(rng));
  return m;
}

}  // namespace

TEST(PrimeField, RejectsNonPrimes) {
  EXPECT_THROW(PrimeField(1), DomainError);
  EXPECT_THROW(PrimeField(4), DomainError);
  EXPECT_THROW(PrimeField(std::int64_t{1} << 31), DomainError);
  EXPECT_NO_THROW(PrimeField(2147483647));
}

TEST(PrimeField, Arithmetic) {
  PrimeField f(7);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.mul(f.inv(3), 3), 1u);
  EXPECT_EQ(f.signed_value(6), -1);
  PrimeField big(2147483647);
  EXPECT_EQ(big.mul(big.inv(123456789), 123456789), 1u);
}

TEST(Linalg, RankOfBoundaryMatrices) {
  for (std::int64_t p : {2, 3, 32003}) {
    PrimeField f(p);
    EXPECT_EQ(rank(f, Matrix::from_int(f, {{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}})), 2);
    EXPECT_EQ(rank(f, Matrix::from_int(f, {{1, 1}, {-1, -1}, {1, 1}})), 1);
    EXPECT_EQ(rank(f, Matrix(4, 3)), 0);
  }
}

TEST(Linalg, RankNullityAndKernel) {
  std::mt19937 rng(3);
  for (std::int64_t p : {2, 3, 32003}) {
    PrimeField f(p);
    for (int trial = 0; trial < 50; ++trial) {
      int r = std::uniform_int_distribution<int>(0, 7)(rng);
      int c = std::uniform_int_distribution<int>(0, 7)(rng);
      Matrix m = random_matrix(rng, f, r, c);
      Matrix k = kernel(f, m);
      EXPECT_EQ(rank(f, m) + k.cols(), c);
      EXPECT_TRUE(multiply(f, m, k).is_zero());
      EXPECT_EQ(rank(f, k), k.cols());
      EXPECT_EQ(rank(f, image(f, m)), rank(f, m));
    }
  }
}

TEST(Linalg, SolveAndLeftInverse) {
  std::mt19937 rng(5);
  PrimeField f(32003);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix a = random_matrix(rng, f, 6, 4, 1);
    Matrix x = random_matrix(rng, f, 4, 2, 1);
    Matrix b = multiply(f, a, x);
    auto sol = solve(f, a, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(multiply(f, a, *sol), b);
    Matrix basis = image(f, a);
    Matrix l = left_inverse(f, basis);
    EXPECT_EQ(multiply(f, l, basis), Matrix::identity(basis.cols()));
  }
  Matrix a = Matrix::from_int(f, {{1, 0}, {0, 0}});
  Matrix b = Matrix::from_int(f, {{0}, {1}});
  EXPECT_FALSE(solve(f, a, b).has_value());
}

TEST(Homology, SphereReebMatrices) {
  PrimeField f(2);
  ChainComplex c(f);
  c.push_degree({"0", "1", "2"}, Matrix(0, 3));
  c.push_degree({"01", "02", "12"}, Matrix::from_int(f, {{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}}));
  c.push_degree({"a", "b"}, Matrix::from_int(f, {{1, 1}, {-1, -1}, {1, 1}}));
  EXPECT_NO_THROW(c.check());
  EXPECT_EQ(betti_numbers(c, 2), (std::vector<int>{1, 0, 1}));
}

TEST(Homology, SingleCell) {
  PrimeField f(3);
  ChainComplex c(f);
  c.push_degree({}, Matrix(0, 0));
  c.push_degree({"x"}, Matrix(0, 1));
  EXPECT_EQ(betti_numbers(c, 2), (std::vector<int>{0, 1, 0}));
}

TEST(Homology, CircleAndPointSphere) {
  PrimeField f(2);
  EXPECT_EQ(betti_numbers(normalized_chains(f, examples::circle().space, 2), 1), (std::vector<int>{1, 1}));
  auto ps = normalized_chains(f, examples::point_sphere().space, 3);
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(ps.differential(n).is_zero());
  EXPECT_EQ(betti_numbers(ps, 2), (std::vector<int>{1, 0, 1}));
}

TEST(Homology, RepresentativesAndProjection) {
  PrimeField f(3);
  auto c = normalized_chains(f, examples::cylinder().space, 3);
  for (int n = 0; n <= 2; ++n) {
    HomologyDegree h = homology(c, n);
    EXPECT_TRUE(multiply(f, c.differential(n), h.representatives).is_zero());
    if (h.dim > 0) EXPECT_EQ(multiply(f, h.projection, h.representatives), Matrix::identity(h.dim));
  }
  // Degree 0 representatives are single vertices.
  HomologyDegree h0 = homology(c, 0);
  ASSERT_EQ(h0.dim, 1);
  EXPECT_EQ(h0.representatives(0, 0), 1u);
}

TEST(Homology, RejectsNonComplex) {
  PrimeField f(2);
  ChainComplex c(f);
  c.push_degree({"a"}, Matrix(0, 1));
  c.push_degree({"e"}, Matrix::from_int(f, {{1}}));
  c.push_degree({"t"}, Matrix::from_int(f, {{1}}));
  EXPECT_THROW(c.check(), DomainError);
}

TEST(InducedMap, IdentityIsIdentity) {
  PrimeField f(32003);
  auto c = normalized_chains(f, examples::sphere().space, 3);
  for (int n = 0; n <= 2; ++n) {
    HomologyDegree h = homology(c, n);
    EXPECT_EQ(induced_map(f, Matrix::identity(c.size(n)), h, h), Matrix::identity(h.dim));
  }
}

TEST(InducedMap, InclusionOfVertexIntoSimplex) {
  PrimeField f(3);
  auto point = normalized_chains(f, standard_simplex(0), 1);
  auto tri = normalized_chains(f, standard_simplex(2), 3);
  ChainMap inc;
  inc.components.push_back(Matrix::from_int(f, {{0}, {0}, {1}}));  // vertex 0 -> vertex "2"
  inc.components.push_back(Matrix(3, 0));
  EXPECT_NO_THROW(check_chain_map(point, tri, inc));
  Matrix h0 = induced_map(f, inc.at(0), homology(point, 0), homology(tri, 0));
  EXPECT_EQ(rank(f, h0), 1);
  EXPECT_EQ(h0.rows(), 1);
  EXPECT_EQ(h0.cols(), 1);
}

TEST(InducedMap, RejectsNonChainMap) {
  PrimeField f(2);
  auto tri = normalized_chains(f, standard_simplex(1), 2);
  ChainMap bad;
  bad.components.push_back(Matrix::identity(2));
  bad.components.push_back(Matrix(2, 1));
  bad.components.back()(0, 0) = 1;
  EXPECT_THROW(check_chain_map(tri, tri, bad), DomainError);
}

TEST(Homology, MooreAndNormalizedAgree) {
  std::mt19937 rng(11);
  PrimeField f(2);
  std::vector<examples::Example> cases = {examples::point_sphere(), examples::circle(), examples::sphere()};
  for (int k = 0; k < 10; ++k) cases.push_back(examples::random_gluing(rng, 3));
  for (const auto& ex : cases) {
    auto moore = oracle::moore_complex(ex.space, f, 3);
    EXPECT_NO_THROW(moore.check());
    auto norm = normalized_chains(f, ex.space, 3);
    EXPECT_EQ(betti_numbers(moore, 2), betti_numbers(norm, 2)) << ex.name;
  }
}
