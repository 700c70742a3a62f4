#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpsurf/linalg.hpp"

using namespace qpsurf;
using namespace qpsurf::linalg;

namespace {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix out(n, std::vector<Integer>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l) out[i][j] += a[i][l] * b[l][j];
  return out;
}

// determinant by fraction elimination, for unimodularity checks
Rational determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("rational solve returns a solution of consistent systems") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = rng() % 5 + 1, cols = rng() % 5 + 1;
    RationalMatrix a(rows, std::vector<Rational>(cols));
    std::vector<Rational> x(cols);
    for (auto& v : x) v = Rational(static_cast<long>(rng() % 7) - 3);
    std::vector<Rational> b(rows, 0);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        a[i][j] = Rational(static_cast<long>(rng() % 5) - 2);
        b[i] += a[i][j] * x[j];
      }
    }
    const auto s = solve_rational(a, b, cols);
    REQUIRE(s.has_value());
    for (std::size_t i = 0; i < rows; ++i) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < cols; ++j) lhs += a[i][j] * (*s)[j];
      CHECK(lhs == b[i]);
    }
  }
  CHECK_FALSE(solve_rational({{1, 1}, {2, 2}}, {1, 3}, 2).has_value());
}

TEST_CASE("mod 2 solve") {
  const auto s = solve_mod2({{1, 1, 0}, {0, 1, 1}}, {1, 0}, 3);
  REQUIRE(s.has_value());
  CHECK(((*s)[0] ^ (*s)[1]) == 1);
  CHECK(((*s)[1] ^ (*s)[2]) == 0);
  CHECK_FALSE(solve_mod2({{1, 1}, {1, 1}}, {1, 0}, 2).has_value());
}

TEST_CASE("Smith form: U A V = D, unimodular, divisibility chain") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = rng() % 4 + 1, cols = rng() % 4 + 1;
    IntMatrix a(rows, std::vector<Integer>(cols));
    for (auto& row : a)
      for (auto& v : row) v = static_cast<long>(rng() % 13) - 6;
    const SmithForm s = smith_normal_form(a, cols);
    const IntMatrix d = multiply(multiply(s.u, a), s.v);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        const Integer expected = (i == j && i < s.diagonal.size()) ? s.diagonal[i] : Integer(0);
        CHECK(d[i][j] == expected);
      }
    }
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
  }
}

TEST_CASE("integer solve: solvable, and the root degree obstruction") {
  // 2x = 4 solvable; 2x = 1 needs a square root of the generator
  {
    const SmithForm s = smith_normal_form({{2}}, 1);
    const auto ok = solve_integer(s, {4}, 1, 1);
    REQUIRE(ok.solution.has_value());
    CHECK((*ok.solution)[0] == 2);
    const auto bad = solve_integer(s, {1}, 1, 1);
    CHECK_FALSE(bad.solution.has_value());
    CHECK_FALSE(bad.rationally_inconsistent);
    CHECK(bad.obstruction_degree == 2);
  }
  {
    // x + y = 1, x - y = 0 has the rational solution 1/2 only
    const SmithForm s = smith_normal_form({{1, 1}, {1, -1}}, 2);
    CHECK_FALSE(solve_integer(s, {1, 0}, 2, 2).solution.has_value());
    CHECK(solve_integer(s, {2, 0}, 2, 2).solution.has_value());
  }
  {
    const SmithForm s = smith_normal_form({{1, 1}, {2, 2}}, 2);
    CHECK(solve_integer(s, {1, 3}, 2, 2).rationally_inconsistent);
  }
}

TEST_CASE("rank over the Novikov fraction field") {
  NovikovRowEchelon e;
  const NovikovScalar q = NovikovScalar::q_power(1);
  CHECK(e.insert({{0, NovikovScalar(1)}, {1, q}}));
  CHECK_FALSE(e.insert({{0, q}, {1, q * q}}));
  CHECK(e.insert({{0, NovikovScalar(1)}, {1, NovikovScalar(1)}}));
  CHECK_FALSE(e.insert({{0, NovikovScalar(3)}, {1, NovikovScalar(2) + q}}));
  CHECK_FALSE(e.insert({}));
  CHECK(e.rank() == 2);

  CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rational_rank({{1, 2, 3}, {0, 1, 1}, {1, 3, 4}}) == 2);
}

TEST_CASE("Novikov rank agrees with rational rank on constant rows") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = rng() % 6 + 1, cols = rng() % 6 + 1;
    RationalMatrix dense(rows, std::vector<Rational>(cols, 0));
    NovikovRowEchelon e;
    for (std::size_t i = 0; i < rows; ++i) {
      SparseRow row;
      for (std::size_t j = 0; j < cols; ++j) {
        const long v = rng() % 3 == 0 ? static_cast<long>(rng() % 5) - 2 : 0;
        dense[i][j] = v;
        if (v != 0) row[j] = NovikovScalar(v);
      }
      e.insert(row);
    }
    CHECK(e.rank() == rational_rank(dense));
  }
}
