#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpsurf/potential.hpp"

using namespace qpsurf;

namespace {

NovikovScalar random_unit(std::mt19937_64& rng) {
  Rational c(static_cast<long>(rng() % 4) + 1, static_cast<long>(rng() % 4) + 1);
  c.canonicalize();
  if (rng() % 2) c = -c;
  return NovikovScalar::monomial(c, Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 2) + 1));
}

// random closed walk of the given length, or empty when the walk gets stuck
Path random_cycle(const Quiver& q, std::mt19937_64& rng, std::size_t length) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    Path p{static_cast<int>(rng() % q.num_arrows())};
    while (p.size() < length) {
      std::vector<int> next;
      for (int a = 0; a < q.num_arrows(); ++a) {
        if (q.arrow(a).source == q.arrow(p.back()).target) next.push_back(a);
      }
      if (next.empty()) break;
      p.push_back(next[rng() % next.size()]);
    }
    if (p.size() == length && q.arrow(p.back()).target == q.arrow(p.front()).source) return p;
  }
  return {};
}

// all paths of exactly `length` arrows from s to t
std::vector<Path> paths_between(const Quiver& q, int s, int t, std::size_t length) {
  std::vector<Path> frontier{{}};
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      const int at = p.empty() ? s : q.arrow(p.back()).target;
      for (int a = 0; a < q.num_arrows(); ++a) {
        if (q.arrow(a).source != at) continue;
        Path r = p;
        r.push_back(a);
        next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Path> out;
  for (const Path& p : frontier) {
    if (q.arrow(p.back()).target == t) out.push_back(p);
  }
  return out;
}

Potential random_potential(const Quiver& q, std::mt19937_64& rng, int terms, std::size_t truncation) {
  Potential w(truncation);
  for (int i = 0; i < terms; ++i) {
    const Path p = random_cycle(q, rng, 3 + rng() % 4);
    if (!p.empty()) w.add(p, random_unit(rng));
  }
  return w;
}

NovikovScalar at(const DiagonalGauge& g, int a) {
  const auto it = g.find(a);
  return it == g.end() ? NovikovScalar(1) : it->second;
}

const Quiver& markov() {
  static const Quiver q = inscribed_quiver(standard_triangulation({1, 1}), 1);
  return q;
}

const Quiver& rank_two_torus() {
  static const Quiver q = inscribed_quiver(standard_triangulation({1, 1}), 2);
  return q;
}

}  // namespace

TEST_CASE("cyclic words use the least rotation") {
  CHECK(CyclicWord({3, 1, 2}).arrows() == Path{1, 2, 3});
  CHECK(CyclicWord({2, 1, 2, 1}).arrows() == Path{1, 2, 1, 2});
  CHECK(CyclicWord({5, 4, 4}).arrows() == Path{4, 4, 5});
  CHECK(CyclicWord({1, 2, 1, 3}).count(1) == 2);
  const Quiver& q = markov();
  CHECK(CyclicWord(primitive_cycles(q)[0].arrows).closed_on(q));
  CHECK_FALSE(CyclicWord({0, 0}).closed_on(q));
}

TEST_CASE("potential bookkeeping drops zeros and long words") {
  Potential w(4);
  w.add(Path{0, 1, 2}, NovikovScalar(2));
  w.add(Path{1, 2, 0}, NovikovScalar(-2));
  CHECK(w.empty());
  w.add(Path{0, 1, 2, 0, 1}, NovikovScalar(1));
  CHECK(w.empty());
  w.add(Path{0, 1, 2}, NovikovScalar(3));
  CHECK(w.coefficient(CyclicWord({2, 0, 1})) == NovikovScalar(3));
  CHECK(w.max_word_length() == 3);
}

TEST_CASE("cyclic derivative: one occurrence") {
  // a: 0->1, b: 1->0, a2: 0->1, b2: 1->0; W = l * a b a2 b2
  Quiver q(2);
  const int a = q.add_arrow(0, 1), b = q.add_arrow(1, 0), a2 = q.add_arrow(0, 1), b2 = q.add_arrow(1, 0);
  Potential w;
  const NovikovScalar l = NovikovScalar::monomial(3, 2);
  w.add(Path{a, b, a2, b2}, l);
  const PathSum d = cyclic_derivative(w, a);
  REQUIRE(d.size() == 1);
  CHECK(d.begin()->first == Path{b, a2, b2});
  CHECK(d.begin()->second == l);
}

TEST_CASE("cyclic derivative: two occurrences") {
  Quiver q(1);
  const int a = q.add_arrow(0, 0), x = q.add_arrow(0, 0), y = q.add_arrow(0, 0);
  Potential w;
  w.add(Path{a, x, a, y}, NovikovScalar(5));
  const PathSum d = cyclic_derivative(w, a);
  PathSum expected;
  expected[{x, a, y}] = NovikovScalar(5);
  expected[{y, a, x}] = NovikovScalar(5);
  CHECK(d == expected);
}

TEST_CASE("sum of a * d_a W is the length-weighted potential") {
  std::mt19937_64 rng(8);
  const Quiver& q = rank_two_torus();
  for (int trial = 0; trial < 30; ++trial) {
    const Potential w = random_potential(q, rng, 6, Potential::kUnlimited);
    Potential lhs;
    for (int a = 0; a < q.num_arrows(); ++a) {
      for (const auto& [p, c] : cyclic_derivative(w, a)) {
        Path word{a};
        word.insert(word.end(), p.begin(), p.end());
        lhs.add(word, c);
      }
    }
    Potential rhs;
    for (const auto& [word, c] : w.terms()) rhs.add(word, c * NovikovScalar(static_cast<long>(word.size())));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("diagonal gauges form a group action") {
  std::mt19937_64 rng(12);
  const Quiver& q = rank_two_torus();
  for (int trial = 0; trial < 30; ++trial) {
    const Potential w = random_potential(q, rng, 5, 12);
    DiagonalGauge g1, g2;
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (rng() % 2) g1[a] = random_unit(rng);
      if (rng() % 2) g2[a] = random_unit(rng);
    }
    CHECK(apply_diagonal(w, {}) == w);
    CHECK(apply_diagonal(apply_diagonal(w, g1), g2) == apply_diagonal(w, compose_diagonal(g1, g2)));
    CHECK(apply_diagonal(apply_diagonal(w, g1), inverse_diagonal(g1)) == w);
  }
}

TEST_CASE("scaling one arrow by q^t scales each word through it once") {
  const Quiver& q = markov();
  const Potential w = unit_potential(q);
  const Potential v = apply_diagonal(w, {{0, NovikovScalar::q_power(Rational(1, 3))}});
  for (const auto& [word, c] : v.terms()) {
    CHECK(c == NovikovScalar::q_power(Rational(word.count(0), 3)));
  }
}

TEST_CASE("unitriangular substitution: cubic plus one quartic") {
  Quiver q(4);
  const int a = q.add_arrow(0, 1), b = q.add_arrow(1, 2), c = q.add_arrow(2, 0);
  const int x = q.add_arrow(0, 3), y = q.add_arrow(3, 1);
  Potential w(8);
  w.add(Path{a, b, c}, NovikovScalar(2));
  CHECK(apply_unitriangular(w, {}) == w);
  UnitriangularGauge u;
  u[a][{x, y}] = NovikovScalar(5);
  const Potential v = apply_unitriangular(w, u);
  Potential expected(8);
  expected.add(Path{a, b, c}, NovikovScalar(2));
  expected.add(Path{x, y, b, c}, NovikovScalar(10));
  CHECK(v == expected);
}

TEST_CASE("unitriangular inverse undoes the substitution up to the truncation") {
  std::mt19937_64 rng(31);
  const Quiver& q = rank_two_torus();
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t truncation = 9;
    const Potential w = random_potential(q, rng, 5, truncation);
    UnitriangularGauge u;
    for (int k = 0; k < 3; ++k) {
      const int a = static_cast<int>(rng() % q.num_arrows());
      const auto paths = paths_between(q, q.arrow(a).source, q.arrow(a).target, 2 + rng() % 2);
      if (paths.empty()) continue;
      u[a][paths[rng() % paths.size()]] += random_unit(rng);
    }
    const Potential back = apply_unitriangular(apply_unitriangular(w, u), inverse_unitriangular(u, truncation));
    CHECK(back == w);
  }
}

TEST_CASE("canonical potential and its preconditions") {
  const Quiver& q = markov();
  const Potential w = unit_potential(q);
  CHECK(w.size() == 3);
  CHECK(w.truncation() == 12);
  CHECK(default_truncation(q) == 12);
  CHECK(is_primitive(q, w));
  CHECK(is_generic(q, w));
  CHECK_THROWS_WITH_AS(canonical_potential(q, {1, 1}), "missing coefficient for L_p0^(1)", std::invalid_argument);
  CHECK_THROWS_WITH_AS(canonical_potential(q, {1, 0, 1}), "zero coefficient for t_b1", std::invalid_argument);
}

TEST_CASE("projection, genericity and primitivity") {
  const Quiver& q = rank_two_torus();
  const Potential w = unit_potential(q);
  CHECK(primitive_projection(q, w) == w);

  Potential extra = w;
  Path doubled = primitive_cycles(q)[0].arrows;
  const Path once = doubled;
  doubled.insert(doubled.end(), once.begin(), once.end());
  extra.add(doubled, NovikovScalar(7));
  CHECK(primitive_projection(q, extra) == w);
  CHECK(primitive_projection(q, primitive_projection(q, extra)) == primitive_projection(q, extra));
  CHECK(is_generic(q, extra));
  CHECK_FALSE(is_primitive(q, extra));

  Potential missing = w;
  missing.add(primitive_cycles(q)[0].arrows, NovikovScalar(-1));
  CHECK_FALSE(is_generic(q, missing));
}

TEST_CASE("projection commutes with diagonal gauges") {
  std::mt19937_64 rng(41);
  const Quiver& q = rank_two_torus();
  for (int trial = 0; trial < 30; ++trial) {
    Potential w = unit_potential(q);
    const Potential noise = random_potential(q, rng, 4, w.truncation());
    for (const auto& [word, c] : noise.terms()) w.add(word, c);
    DiagonalGauge g;
    for (int a = 0; a < q.num_arrows(); ++a) g[a] = random_unit(rng);
    CHECK(primitive_projection(q, apply_diagonal(w, g)) == apply_diagonal(primitive_projection(q, w), g));
  }
}

TEST_CASE("normalize: identity on normalized input, round trip on rescaled input") {
  const Quiver& q = rank_two_torus();
  const Potential w = unit_potential(q);
  const NormalizeResult same = normalize(q, w);
  REQUIRE(same.ok());
  CHECK(*same.potential == w);

  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    DiagonalGauge g;
    for (int a = 0; a < q.num_arrows(); ++a) g[a] = random_unit(rng);
    const Potential moved = apply_diagonal(w, g);
    const NormalizeResult n = normalize(q, moved);
    REQUIRE(n.ok());
    CHECK(apply_diagonal(moved, n.gauge) == *n.potential);
    for (const auto& c : primitive_cycles(q)) {
      if (c.kind != CycleKind::Ring) CHECK(n.potential->coefficient(CyclicWord(c.arrows)).is_one());
    }
  }
}

TEST_CASE("normalize reports non-monomial coefficients and missing cycles") {
  const Quiver& q = markov();
  std::vector<NovikovScalar> c(3, NovikovScalar(1));
  c[0] = NovikovScalar(1) + NovikovScalar::q_power(1);
  CHECK_FALSE(normalize(q, canonical_potential(q, c)).ok());
  Potential w = unit_potential(q);
  w.add(primitive_cycles(q)[1].arrows, NovikovScalar(-1));
  const NormalizeResult n = normalize(q, w);
  CHECK_FALSE(n.ok());
  CHECK(n.obstruction.find("t_b1") != std::string::npos);
}

TEST_CASE("monomial gauge solving: square roots are obstructions") {
  // (g_a g_b)^2 must equal the target ratio on the word abab
  const CyclicWord abab({0, 1, 0, 1});
  const auto four = solve_monomial_gauge({{abab, NovikovScalar(4)}}, 2);
  REQUIRE(four.ok());
  const NovikovScalar prod = at(*four.gauge, 0) * at(*four.gauge, 1);
  CHECK(prod * prod == NovikovScalar(4));

  const auto two = solve_monomial_gauge({{abab, NovikovScalar(2)}}, 2);
  CHECK_FALSE(two.ok());
  CHECK(two.obstruction.find("root adjunction required") != std::string::npos);

  const auto minus = solve_monomial_gauge({{abab, NovikovScalar(-1)}}, 2);
  CHECK_FALSE(minus.ok());
  CHECK(minus.obstruction.find("root adjunction required") != std::string::npos);

  // exponents are rational, so q needs no root adjunction
  const auto q = solve_monomial_gauge({{abab, NovikovScalar::monomial(9, 1)}}, 2);
  REQUIRE(q.ok());
  const NovikovScalar pq = at(*q.gauge, 0) * at(*q.gauge, 1);
  CHECK(pq * pq == NovikovScalar::monomial(9, 1));
}

TEST_CASE("diagonal equivalence recovers some gauge") {
  std::mt19937_64 rng(71);
  const Quiver& q = rank_two_torus();
  const Potential w = unit_potential(q);
  DiagonalGauge g;
  for (int a = 0; a < q.num_arrows(); ++a) g[a] = random_unit(rng);
  const Potential v = apply_diagonal(w, g);
  const GaugeSolve s = diagonal_equivalence(w, v, q.num_arrows());
  REQUIRE(s.ok());
  CHECK(apply_diagonal(w, *s.gauge) == v);

  Potential other = w;
  other.add(Path{0, 1, 2, 0, 1, 2}, NovikovScalar(1));
  CHECK_FALSE(diagonal_equivalence(w, other, q.num_arrows()).ok());
}

TEST_CASE("strong genericity at rank two") {
  const Quiver& q = rank_two_torus();
  auto with_rings = [&](const NovikovScalar& c1, const NovikovScalar& c2) {
    std::vector<NovikovScalar> c;
    for (const auto& cyc : primitive_cycles(q)) {
      c.push_back(cyc.kind != CycleKind::Ring ? NovikovScalar(1) : (cyc.level == 1 ? c1 : c2));
    }
    return canonical_potential(q, c);
  };
  // the marked point has valence 6
  CHECK(strongly_generic(q, with_rings(1, 1)));
  CHECK_FALSE(strongly_generic(q, with_rings(1, -1)));
  CHECK(strongly_generic(q, with_rings(NovikovScalar::q_power(1), NovikovScalar::q_power(2))));

  const Quiver r = inscribed_quiver(standard_triangulation({1, 2}), 2);
  CHECK_FALSE(strongly_generic(r, unit_potential(r)));  // valences 9 and 3

  CHECK_THROWS_WITH_AS(strongly_generic(markov(), unit_potential(markov())), "m != 2", std::invalid_argument);
  Potential scaled = apply_diagonal(unit_potential(q), {{0, NovikovScalar(2)}});
  CHECK_THROWS_WITH_AS(strongly_generic(q, scaled), "not normalized", std::invalid_argument);
}

TEST_CASE("areas to coefficients and back") {
  const Quiver& q = rank_two_torus();
  const auto cycles = primitive_cycles(q);
  std::map<int, Rational> areas;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].kind != CycleKind::BlackTriangle) areas[static_cast<int>(i)] = 1;
  }
  const auto c = potential_from_areas(q, areas);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    CHECK(c[i] == (cycles[i].kind == CycleKind::BlackTriangle ? NovikovScalar(1) : NovikovScalar::q_power(1)));
  }

  std::map<int, Rational> distinct = areas;
  int k = 1;
  for (auto& [i, a] : distinct) {
    a = Rational(k++, 3);
    a.canonicalize();
  }
  const KahlerData data = kahler_data_from_potential(q, canonical_potential(q, potential_from_areas(q, distinct)));
  CHECK(data.sphere_area.size() == 2);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].kind != CycleKind::Ring) continue;
    CHECK(data.sphere_area.at({cycles[i].marked_point, cycles[i].level}) == 2 * distinct.at(static_cast<int>(i)));
  }

  std::map<int, Rational> incomplete = areas;
  incomplete.erase(incomplete.begin());
  CHECK_THROWS_AS(potential_from_areas(q, incomplete), std::invalid_argument);
  std::map<int, Rational> zero = areas;
  zero.begin()->second = 0;
  CHECK_THROWS_AS(potential_from_areas(q, zero), std::invalid_argument);
  CHECK_THROWS_AS(kahler_data_from_potential(q, unit_potential(q)), std::invalid_argument);
}

TEST_CASE("words print with arrow names") {
  const Quiver& q = markov();
  CHECK(to_string(CyclicWord(primitive_cycles(q)[0].arrows), q) == "a0 a1 a2");
}
