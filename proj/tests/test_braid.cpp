#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpsurf/braid.hpp"
#include "qpsurf/novikov.hpp"

using namespace qpsurf;

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// unreduced Burau matrix at t = 2/3: an invariant of the braid, independent of normal forms
Matrix burau(const BraidWord& w) {
  const std::size_t n = w.strands;
  const Rational t(2, 3);
  Matrix m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (int l : w.letters) {
    const std::size_t i = std::abs(l) - 1;
    Matrix g(n, std::vector<Rational>(n, 0));
    for (std::size_t k = 0; k < n; ++k) g[k][k] = 1;
    if (l > 0) {
      g[i][i] = 1 - t;
      g[i][i + 1] = t;
      g[i + 1][i] = 1;
      g[i + 1][i + 1] = 0;
    } else {
      g[i][i] = 0;
      g[i][i + 1] = 1;
      g[i + 1][i] = 1 / t;
      g[i + 1][i + 1] = 1 - 1 / t;
    }
    m = multiply(m, g);
  }
  return m;
}

BraidWord random_word(int strands, std::size_t length, std::mt19937_64& rng) {
  BraidWord w{strands, {}};
  for (std::size_t i = 0; i < length; ++i) {
    const int g = static_cast<int>(rng() % (strands - 1)) + 1;
    w.letters.push_back(rng() % 2 ? g : -g);
  }
  return w;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord inverse(const BraidWord& a) {
  BraidWord out{a.strands, {}};
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

}  // namespace

TEST_CASE("parsing and printing") {
  const BraidWord w = parse_braid("s1 s2 S1", 3);
  CHECK(w.letters == std::vector<int>{1, 2, -1});
  CHECK(to_string(w) == "s1 s2 S1");
  CHECK(parse_braid("", 4).letters.empty());
  CHECK_THROWS_AS(parse_braid("s3", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("s0", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("t1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("s1x", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("s1", 1), std::invalid_argument);
}

TEST_CASE("Garside element and canonical factorization, small cases") {
  CHECK(garside_element(2).letters == std::vector<int>{1});
  CHECK(garside_element(3).letters == std::vector<int>{1, 2, 1});
  CHECK(canonical_factorization(2).letters == std::vector<int>{1});
  CHECK(canonical_factorization(3).letters == std::vector<int>{2, 1, 2});
  CHECK(garside_element(5).letters.size() == 10u);
}

TEST_CASE("both words lift the longest permutation and agree as braids") {
  for (int n = 2; n <= 6; ++n) {
    Permutation reversal(n);
    for (int k = 0; k < n; ++k) reversal[k] = n - 1 - k;
    const BraidWord d = garside_element(n), c = canonical_factorization(n);
    CHECK(permutation_of(d) == reversal);
    CHECK(permutation_of(c) == reversal);
    CHECK(exponent_sum(c) == n * (n - 1) / 2);
    CHECK(c.letters.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(left_normal_form(c) == left_normal_form(d));
    CHECK(burau(c) == burau(d));
    const NormalForm nf = left_normal_form(d);
    CHECK(nf.delta_power == 1);
    CHECK(nf.factors.empty());
  }
}

TEST_CASE("normal form basics") {
  CHECK(left_normal_form(parse_braid("s1 S1", 3)) == left_normal_form(BraidWord{3, {}}));
  CHECK(braid_equal(parse_braid("s1 s2 s1", 3), parse_braid("s2 s1 s2", 3)));
  CHECK(braid_equal(parse_braid("s1 s3", 4), parse_braid("s3 s1", 4)));
  CHECK_FALSE(braid_equal(parse_braid("s1 s2", 3), parse_braid("s2 s1", 3)));
  CHECK_FALSE(braid_equal(parse_braid("s1", 3), parse_braid("S1", 3)));
  const NormalForm inv = left_normal_form(parse_braid("S1 S2 S1", 3));
  CHECK(inv.delta_power == -1);
  CHECK(inv.factors.empty());
  CHECK(to_string(left_normal_form(parse_braid("s1 s1", 3))) == "D^0 [2 1 3] [2 1 3]");
}

TEST_CASE("normal forms are canonical on random words") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng() % 4) + 2;
    const BraidWord w = random_word(n, rng() % 12, rng);
    const NormalForm nf = left_normal_form(w);
    const BraidWord back = to_word(nf);
    // idempotent, and the expansion is the same braid
    CHECK(left_normal_form(back) == nf);
    CHECK(burau(back) == burau(w));
    CHECK(exponent_sum(back) == exponent_sum(w));
    CHECK(permutation_of(back) == permutation_of(w));
    // inserting a cancelling pair changes nothing
    const BraidWord x = random_word(n, 3, rng);
    const std::size_t cut = w.letters.empty() ? 0 : rng() % (w.letters.size() + 1);
    BraidWord padded{n, std::vector<int>(w.letters.begin(), w.letters.begin() + cut)};
    padded = concat(concat(padded, concat(x, inverse(x))), BraidWord{n, {w.letters.begin() + cut, w.letters.end()}});
    CHECK(left_normal_form(padded) == nf);
    CHECK(left_normal_form(concat(w, inverse(w))) == left_normal_form(BraidWord{n, {}}));
  }
}

TEST_CASE("different normal forms mean different Burau matrices on three strands") {
  // the Burau representation is faithful on three strands, so equality must match exactly
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const BraidWord a = random_word(3, rng() % 7, rng), b = random_word(3, rng() % 7, rng);
    CHECK((left_normal_form(a) == left_normal_form(b)) == (burau(a) == burau(b)));
  }
}
