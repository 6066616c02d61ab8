#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "spantree/errors.hpp"

using namespace spantree;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  ExactMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int spread, double zero_rate) {
  std::uniform_int_distribution<int> entry(-spread, spread);
  std::bernoulli_distribution zero(zero_rate);
  ExactMatrix m(n, n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = zero(rng) ? 0 : entry(rng);
  return m;
}

} // namespace

TEST_CASE("exact division") {
  CHECK(exact_divide(BigInt(144), BigInt(12)) == 12);
  CHECK(exact_divide(BigInt(-80), BigInt(10)) == -8);
  CHECK_THROWS_AS(exact_divide(BigInt(7), BigInt(2)), ExactnessError);
  CHECK_THROWS_AS(exact_divide(BigInt(7), BigInt(0)), std::domain_error);
}

TEST_CASE("small determinants") {
  CHECK(determinant(ExactMatrix(0, 0, 0)) == 1);
  CHECK(determinant(from_rows({{5}})) == 5);
  CHECK(determinant(from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(from_rows({{0, 1, 2}, {0, 3, 4}, {0, 5, 6}})) == 0);
  CHECK(determinant(from_rows({{2, 0, 0}, {1, 3, 0}, {4, 5, 6}})) == 36);
  CHECK_THROWS_AS(determinant(ExactMatrix(2, 3, 0)), std::invalid_argument);
}

TEST_CASE("determinant of a large integer matrix stays exact") {
  // diag(10^30, 10^30) has determinant 10^60, far beyond 64 bits
  ExactMatrix m(2, 2, 0);
  m(0, 0) = boost::multiprecision::pow(BigInt(10), 30);
  m(1, 1) = m(0, 0);
  CHECK(determinant(m) == boost::multiprecision::pow(BigInt(10), 60));
}

TEST_CASE("bareiss agrees with the Leibniz formula") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const ExactMatrix m = random_matrix(rng, n, 9, trial % 3 == 0 ? 0.5 : 0.1);
    CHECK(determinant(m) == fixtures::leibniz_determinant(m, BigInt(1)));
  }
}

TEST_CASE("laplacian of figure 1(a)") {
  const ExactMatrix l = laplacian(fixtures::fig1a());
  CHECK(l.diagonal() == IntVector{2, 4, 1, 2, 3, 2});
  CHECK(l(0, 1) == -1);
  CHECK(l(0, 2) == 0);
  for (std::size_t r = 0; r < 6; ++r) {
    BigInt row = 0;
    for (std::size_t c = 0; c < 6; ++c) {
      row += l(r, c);
      CHECK(l(r, c) == l(c, r));
    }
    CHECK(row == 0);
  }
  CHECK(determinant(l) == 0);
}

TEST_CASE("reordered laplacian") {
  const Graph g = fixtures::fig1d();
  const ExactMatrix l = laplacian(g, {1, 5, 2, 3, 4});
  CHECK(l.diagonal() == IntVector{2, 2, 3, 1, 4});
  CHECK(l(1, 2) == -1); // 5 ~ 2
  CHECK_THROWS_AS(laplacian(g, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(laplacian(g, {1, 1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("minors and rank-one updates") {
  const ExactMatrix l = laplacian(fixtures::fig1a());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const BigInt sign = (i + j) % 2 ? -1 : 1;
      CHECK(sign * minor_determinant(l, i, j) == 11);
    }

  const ExactMatrix m = rank_one_update(from_rows({{1, 0}, {0, 1}}), {1, 2}, {3, 4});
  CHECK(m == from_rows({{4, 4}, {6, 9}}));
  CHECK_THROWS_AS(rank_one_update(m, {1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("triangularity and helpers") {
  CHECK(is_upper_triangular(from_rows({{1, 2}, {0, 3}})));
  CHECK_FALSE(is_upper_triangular(from_rows({{1, 2}, {1, 3}})));
  CHECK(sum(IntVector{1, -2, 5}) == 4);
  CHECK(indicator({3, 1, 2}, VertexSet{1, 2}) == IntVector{0, 1, 1});
}
