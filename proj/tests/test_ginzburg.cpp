#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpsurf/ginzburg.hpp"

using namespace qpsurf;

namespace {

QP markov_qp() {
  const Quiver q = inscribed_quiver(standard_triangulation({1, 1}), 1);
  return {q, unit_potential(q)};
}

QP triangle(const NovikovScalar& lambda) {
  Quiver q(3);
  q.add_arrow(0, 1, "a");
  q.add_arrow(1, 2, "b");
  q.add_arrow(2, 0, "c");
  Potential w;
  if (!lambda.is_zero()) w.add(Path{0, 1, 2}, lambda);
  return {q, w};
}

// Dense oracle for constant-coefficient potentials: every path p u p' with u a term of a
// cyclic derivative, kept when its length fits, reduced by rational elimination.
std::size_t dense_jacobian_dim(const QP& x, int length) {
  const Quiver& q = x.quiver;
  struct P {
    int s, t;
    Path arrows;
  };
  std::vector<P> paths;
  for (int v = 0; v < q.num_vertices(); ++v) paths.push_back({v, v, {}});
  for (std::size_t begin = 0; begin < paths.size(); ++begin) {
    const P p = paths[begin];
    if (static_cast<int>(p.arrows.size()) == length) continue;
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrow(a).source != p.t) continue;
      P next = p;
      next.arrows.push_back(a);
      next.t = q.arrow(a).target;
      paths.push_back(next);
    }
  }
  auto key = [](const P& p) { return std::make_pair(p.arrows.empty() ? -1 - p.s : 0, p.arrows); };
  std::map<std::pair<int, Path>, std::size_t> index;
  for (const auto& p : paths) index.emplace(key(p), index.size());

  std::vector<std::vector<Rational>> rows;
  for (int a = 0; a < q.num_arrows(); ++a) {
    std::map<Path, Rational> d;
    for (const auto& [word, c] : x.potential.terms()) {
      const Path& w = word.arrows();
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != a) continue;
        Path u;
        for (std::size_t k = 1; k < w.size(); ++k) u.push_back(w[(i + k) % w.size()]);
        d[u] += c.coefficient(0);
      }
    }
    const int from = q.arrow(a).target, to = q.arrow(a).source;
    for (const auto& left : paths) {
      if (left.t != from) continue;
      for (const auto& right : paths) {
        if (right.s != to) continue;
        std::vector<Rational> row(index.size(), 0);
        bool any = false;
        for (const auto& [u, c] : d) {
          if (sgn(c) == 0) continue;
          const std::size_t len = left.arrows.size() + u.size() + right.arrows.size();
          if (static_cast<int>(len) > length) continue;
          P whole{left.s, right.t, left.arrows};
          whole.arrows.insert(whole.arrows.end(), u.begin(), u.end());
          whole.arrows.insert(whole.arrows.end(), right.arrows.begin(), right.arrows.end());
          row[index.at(key(whole))] += c;
          any = true;
        }
        if (any) rows.push_back(std::move(row));
      }
    }
  }
  std::size_t rank = 0;
  const std::size_t cols = index.size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][c]) == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return cols - rank;
}

}  // namespace

TEST_CASE("a single cubic term gives three binary structure constants") {
  const NovikovScalar lambda = NovikovScalar::monomial(Rational(2, 3), 1);
  const CY3Presentation p = presentation(triangle(lambda));
  REQUIRE(p.structure_constants.size() == 3);
  for (const auto& [key, c] : p.structure_constants) {
    CHECK(key.second.size() == 2);
    CHECK(c == lambda);
  }
  CHECK(p.structure_constants.at({2, {0, 1}}) == lambda);
  CHECK(p.structure_constants.at({0, {1, 2}}) == lambda);
  CHECK(p.structure_constants.at({1, {2, 0}}) == lambda);
}

TEST_CASE("Markov hom dimensions") {
  const QP x = markov_qp();
  const CY3Presentation p = presentation(x);
  const auto a = x.quiver.multiplicity_matrix();
  for (int v = 0; v < 3; ++v) {
    for (int w = 0; w < 3; ++w) {
      CHECK(p.dims[v][w][0] == (v == w));
      CHECK(p.dims[v][w][3] == (v == w));
      CHECK(p.dims[v][w][1] == a[v][w]);
      CHECK(p.dims[v][w][2] == a[w][v]);
      if (v != w) CHECK(p.dims[v][w][1] + p.dims[v][w][2] == 2);
    }
  }
  int consecutive = 0;
  for (int v = 0; v < 3; ++v) consecutive += p.dims[v][(v + 1) % 3][1] == 2;
  CHECK((consecutive == 3 || consecutive == 0));
  CHECK(basis_labels(x.quiver, 0, 0, 0) == std::vector<std::string>{"e_0"});
  CHECK(basis_labels(x.quiver, 0, 0, 3) == std::vector<std::string>{"e_0^"});
}

TEST_CASE("Euler form is minus the exchange matrix") {
  for (const auto& [g, d, m] : {std::tuple{1, 1, 1}, std::tuple{1, 2, 2}, std::tuple{2, 1, 2}}) {
    const Quiver q = inscribed_quiver(standard_triangulation({g, d}), m);
    const CY3Presentation p = presentation({q, unit_potential(q)});
    const IntMatrix2 b = exchange_matrix(q);
    const IntMatrix2 chi = euler_matrix(q);
    for (int v = 0; v < q.num_vertices(); ++v) {
      for (int w = 0; w < q.num_vertices(); ++w) {
        const auto& dim = p.dims[v][w];
        CHECK(chi[v][w] == dim[0] - dim[1] + dim[2] - dim[3]);
        CHECK(chi[v][w] == -b[v][w]);
        CHECK(basis_labels(q, v, w, 1).size() == static_cast<std::size_t>(dim[1]));
        CHECK(basis_labels(q, v, w, 2).size() == static_cast<std::size_t>(dim[2]));
      }
    }
  }
}

TEST_CASE("structure constants are cyclic on random potentials") {
  std::mt19937_64 rng(13);
  const Quiver q = inscribed_quiver(standard_triangulation({1, 2}), 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<NovikovScalar> c;
    for (std::size_t i = 0; i < primitive_cycles(q).size(); ++i) {
      c.push_back(NovikovScalar::monomial(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 5)));
    }
    const CY3Presentation p = presentation({q, canonical_potential(q, c)});
    CHECK(cyclicity_check(p).ok());
  }
}

TEST_CASE("cyclicity check notices a broken constant") {
  CY3Presentation p = presentation(triangle(NovikovScalar(1)));
  p.structure_constants.begin()->second = NovikovScalar(2);
  CHECK_FALSE(cyclicity_check(p).ok());
}

TEST_CASE("truncated Jacobian dimension: hand values") {
  // no potential: every path survives
  for (int l = 0; l <= 4; ++l) CHECK(jacobian_dim_truncated(triangle(NovikovScalar()), l) == 3u * (l + 1));
  // abc: all paths of length two vanish
  CHECK(jacobian_dim_truncated(triangle(NovikovScalar(1)), 0) == 3u);
  for (int l = 1; l <= 4; ++l) CHECK(jacobian_dim_truncated(triangle(NovikovScalar(1)), l) == 6u);
  Quiver a2(2);
  a2.add_arrow(0, 1);
  CHECK(jacobian_dim_truncated({a2, Potential()}, 3) == 3u);
}

TEST_CASE("truncated Jacobian dimension agrees with dense elimination") {
  const QP markov = markov_qp();
  for (int l = 0; l <= 4; ++l) CHECK(jacobian_dim_truncated(markov, l) == dense_jacobian_dim(markov, l));
  const Quiver q = inscribed_quiver(standard_triangulation({1, 2}), 1);
  const QP x{q, unit_potential(q)};
  for (int l = 0; l <= 3; ++l) CHECK(jacobian_dim_truncated(x, l) == dense_jacobian_dim(x, l));
}
