#include "qpsurf/potential.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qpsurf/linalg.hpp"

namespace qpsurf {

void add_to(PathSum& sum, const Path& p, const NovikovScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = sum.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) sum.erase(it);
}

CyclicWord::CyclicWord(Path arrows) : arrows_(std::move(arrows)) {
  if (arrows_.empty()) throw std::invalid_argument("cyclic word must be nonempty");
  const std::size_t n = arrows_.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const int x = arrows_[(r + i) % n], y = arrows_[(best + i) % n];
      if (x != y) {
        if (x < y) best = r;
        break;
      }
    }
  }
  std::rotate(arrows_.begin(), arrows_.begin() + static_cast<std::ptrdiff_t>(best), arrows_.end());
}

bool CyclicWord::closed_on(const Quiver& q) const {
  const std::size_t n = arrows_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (arrows_[i] < 0 || arrows_[i] >= q.num_arrows()) return false;
    const int next = arrows_[(i + 1) % n];
    if (next < 0 || next >= q.num_arrows()) return false;
    if (q.arrow(arrows_[i]).target != q.arrow(next).source) return false;
  }
  return true;
}

int CyclicWord::count(int a) const { return static_cast<int>(std::count(arrows_.begin(), arrows_.end(), a)); }

void Potential::add(const CyclicWord& w, const NovikovScalar& c) {
  if (c.is_zero() || w.size() > truncation_) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NovikovScalar Potential::coefficient(const CyclicWord& w) const {
  const auto it = terms_.find(w);
  return it == terms_.end() ? NovikovScalar{} : it->second;
}

std::size_t Potential::max_word_length() const {
  std::size_t n = 0;
  for (const auto& [w, c] : terms_) n = std::max(n, w.size());
  return n;
}

PathSum cyclic_derivative(const Potential& w, int a) {
  PathSum out;
  for (const auto& [word, c] : w.terms()) {
    const auto& arrows = word.arrows();
    const std::size_t n = arrows.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (arrows[i] != a) continue;
      Path p;
      p.reserve(n - 1);
      for (std::size_t k = 1; k < n; ++k) p.push_back(arrows[(i + k) % n]);
      add_to(out, p, c);
    }
  }
  return out;
}

Potential apply_diagonal(const Potential& w, const DiagonalGauge& g) {
  Potential out(w.truncation());
  for (const auto& [word, c] : w.terms()) {
    NovikovScalar x = c;
    for (int a : word.arrows()) {
      const auto it = g.find(a);
      if (it != g.end()) x *= it->second;
    }
    out.add(word, x);
  }
  return out;
}

DiagonalGauge compose_diagonal(const DiagonalGauge& g1, const DiagonalGauge& g2) {
  DiagonalGauge out = g1;
  for (const auto& [a, x] : g2) {
    auto [it, inserted] = out.try_emplace(a, x);
    if (!inserted) it->second *= x;
  }
  return out;
}

DiagonalGauge inverse_diagonal(const DiagonalGauge& g, const Rational& truncation) {
  DiagonalGauge out;
  for (const auto& [a, x] : g) out[a] = x.is_monomial() ? inverse_monomial(x) : inverse_mod(x, truncation);
  return out;
}

PathSum substitute(const PathSum& p, const Substitution& s, std::size_t max_length) {
  PathSum out;
  for (const auto& [path, coeff] : p) {
    if (path.size() > max_length) continue;
    PathSum partial{{Path{}, coeff}};
    for (std::size_t i = 0; i < path.size() && !partial.empty(); ++i) {
      const std::size_t remaining = path.size() - i - 1;
      const auto it = s.find(path[i]);
      const PathSum identity{{Path{path[i]}, NovikovScalar(1)}};
      const PathSum& image = it == s.end() ? identity : it->second;
      PathSum next;
      for (const auto& [pp, pc] : partial) {
        for (const auto& [ip, ic] : image) {
          if (pp.size() + ip.size() + remaining > max_length) continue;
          Path joined = pp;
          joined.insert(joined.end(), ip.begin(), ip.end());
          add_to(next, joined, pc * ic);
        }
      }
      partial = std::move(next);
    }
    for (const auto& [pp, pc] : partial) add_to(out, pp, pc);
  }
  return out;
}

Potential substitute(const Potential& w, const Substitution& s) {
  Potential out(w.truncation());
  for (const auto& [word, c] : w.terms()) {
    const PathSum expanded = substitute(PathSum{{word.arrows(), c}}, s, w.truncation());
    for (const auto& [p, x] : expanded) {
      if (!p.empty()) out.add(p, x);
    }
  }
  return out;
}

namespace {

Substitution as_substitution(const UnitriangularGauge& u) {
  Substitution s;
  for (const auto& [a, correction] : u) {
    PathSum image = correction;
    add_to(image, Path{a}, 1);
    s[a] = std::move(image);
  }
  return s;
}

}  // namespace

Potential apply_unitriangular(const Potential& w, const UnitriangularGauge& u) {
  return substitute(w, as_substitution(u));
}

UnitriangularGauge inverse_unitriangular(const UnitriangularGauge& u, std::size_t max_length) {
  // d_a = -c_a(b |-> b + d_b), iterated to a fixed point; each round fixes one more length
  UnitriangularGauge d;
  for (std::size_t round = 0; round <= max_length; ++round) {
    const Substitution phi = as_substitution(d);
    UnitriangularGauge next;
    for (const auto& [a, correction] : u) {
      PathSum image = substitute(correction, phi, max_length);
      for (auto& [p, c] : image) c = -c;
      if (!image.empty()) next[a] = std::move(image);
    }
    if (next == d) break;
    d = std::move(next);
  }
  return d;
}

std::map<CyclicWord, int> primitive_index(const Quiver& q) {
  std::map<CyclicWord, int> index;
  const auto cycles = primitive_cycles(q);
  for (std::size_t i = 0; i < cycles.size(); ++i) index.emplace(CyclicWord(cycles[i].arrows), static_cast<int>(i));
  return index;
}

std::size_t default_truncation(const Quiver& q) {
  std::size_t longest = 0;
  for (const auto& c : primitive_cycles(q)) longest = std::max(longest, c.arrows.size());
  return 2 * longest;
}

Potential canonical_potential(const Quiver& q, const std::vector<NovikovScalar>& coefficients,
                              std::size_t truncation) {
  const auto cycles = primitive_cycles(q);
  if (truncation == 0) truncation = default_truncation(q);
  Potential w(truncation);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i >= coefficients.size()) throw std::invalid_argument("missing coefficient for " + cycles[i].label());
    if (coefficients[i].is_zero()) throw std::invalid_argument("zero coefficient for " + cycles[i].label());
    w.add(cycles[i].arrows, coefficients[i]);
  }
  return w;
}

Potential unit_potential(const Quiver& q, std::size_t truncation) {
  return canonical_potential(q, std::vector<NovikovScalar>(primitive_cycles(q).size(), NovikovScalar(1)), truncation);
}

Potential primitive_projection(const Quiver& q, const Potential& w) {
  const auto index = primitive_index(q);
  Potential out(w.truncation());
  for (const auto& [word, c] : w.terms()) {
    if (index.count(word) != 0) out.add(word, c);
  }
  return out;
}

bool is_primitive(const Quiver& q, const Potential& w) {
  const auto index = primitive_index(q);
  if (w.size() != index.size()) return false;
  for (const auto& [word, c] : w.terms()) {
    if (index.count(word) == 0) return false;
  }
  return true;
}

bool is_generic(const Quiver& q, const Potential& w) { return is_primitive(q, primitive_projection(q, w)); }

namespace {

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> out;
  n = abs(n);
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

long valuation_at(Integer n, const Integer& p) {
  long v = 0;
  n = abs(n);
  if (n == 0) return 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

GaugeSolve solve_monomial_gauge(const std::vector<std::pair<CyclicWord, NovikovScalar>>& targets, int num_arrows) {
  GaugeSolve out;
  const std::size_t rows = targets.size();
  const auto cols = static_cast<std::size_t>(num_arrows);
  linalg::RationalMatrix a(rows, std::vector<Rational>(cols, 0));
  linalg::IntMatrix ai(rows, std::vector<Integer>(cols, 0));
  std::vector<std::vector<int>> a2(rows, std::vector<int>(cols, 0));
  std::vector<Rational> exponents(rows);
  std::vector<int> signs(rows);
  std::set<Integer> primes;
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& [word, ratio] = targets[i];
    if (!ratio.is_monomial()) {
      out.obstruction = "non-monomial ratio " + ratio.to_string() + " requires a non-diagonal gauge";
      return out;
    }
    for (int arrow : word.arrows()) {
      if (arrow < 0 || arrow >= num_arrows) throw std::out_of_range("arrow id out of range");
      a[i][arrow] += 1;
      ai[i][arrow] += 1;
      a2[i][arrow] += 1;
    }
    exponents[i] = *ratio.valuation();
    const Rational k = ratio.leading_coefficient();
    signs[i] = sgn(k) < 0 ? 1 : 0;
    for (const auto& p : prime_factors(k.get_num())) primes.insert(p);
    for (const auto& p : prime_factors(k.get_den())) primes.insert(p);
  }

  const auto e = linalg::solve_rational(a, exponents, cols);
  if (!e) {
    out.obstruction = "exponent system inconsistent: no diagonal gauge reaches these valuations";
    return out;
  }
  const auto s = linalg::solve_mod2(a2, signs, cols);
  if (!s) {
    out.obstruction = "root adjunction required (square root of -1)";
    return out;
  }
  std::vector<Rational> magnitude(cols, 1);
  if (!primes.empty()) {
    const auto smith = linalg::smith_normal_form(ai, cols);
    for (const auto& p : primes) {
      std::vector<Integer> b(rows);
      for (std::size_t i = 0; i < rows; ++i) {
        const Rational k = targets[i].second.leading_coefficient();
        b[i] = valuation_at(k.get_num(), p) - valuation_at(k.get_den(), p);
      }
      const auto solved = linalg::solve_integer(smith, b, rows, cols);
      if (solved.rationally_inconsistent) {
        out.obstruction = "multiplicative system inconsistent at prime " + p.get_str();
        return out;
      }
      if (!solved.solution) {
        out.obstruction = "root adjunction required (" + solved.obstruction_degree.get_str() + "-th root of " +
                          p.get_str() + ")";
        return out;
      }
      for (std::size_t j = 0; j < cols; ++j) {
        const Integer& x = (*solved.solution)[j];
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), Integer(abs(x)).get_ui());
        magnitude[j] *= sgn(x) >= 0 ? Rational(power) : Rational(1) / Rational(power);
      }
    }
  }
  DiagonalGauge g;
  for (std::size_t j = 0; j < cols; ++j) {
    Rational lambda = magnitude[j];
    if ((*s)[j] != 0) lambda = -lambda;
    const NovikovScalar x = NovikovScalar::monomial(lambda, (*e)[j]);
    if (!x.is_one()) g[static_cast<int>(j)] = x;
  }
  out.gauge = std::move(g);
  return out;
}

NormalizeResult normalize(const Quiver& q, const Potential& w) {
  NormalizeResult out;
  const auto cycles = primitive_cycles(q);
  std::vector<std::pair<CyclicWord, NovikovScalar>> targets;
  for (const auto& c : cycles) {
    if (c.kind == CycleKind::Ring) continue;
    const CyclicWord word(c.arrows);
    const NovikovScalar coeff = w.coefficient(word);
    if (coeff.is_zero()) {
      out.obstruction = "not generic: missing coefficient on " + c.label();
      return out;
    }
    if (!coeff.is_monomial()) {
      out.obstruction = "non-monomial coefficient on " + c.label() + ": " + coeff.to_string();
      return out;
    }
    targets.emplace_back(word, inverse_monomial(coeff));
  }
  auto solved = solve_monomial_gauge(targets, q.num_arrows());
  if (!solved.ok()) {
    out.obstruction = solved.obstruction;
    return out;
  }
  out.gauge = std::move(*solved.gauge);
  out.potential = apply_diagonal(w, out.gauge);
  return out;
}

GaugeSolve diagonal_equivalence(const Potential& from, const Potential& to, int num_arrows) {
  GaugeSolve out;
  if (from.size() != to.size()) {
    out.obstruction = "supports differ";
    return out;
  }
  std::vector<std::pair<CyclicWord, NovikovScalar>> targets;
  for (const auto& [word, c] : from.terms()) {
    const NovikovScalar d = to.coefficient(word);
    if (d.is_zero()) {
      out.obstruction = "supports differ";
      return out;
    }
    const NovikovScalar ratio =
        NovikovScalar::monomial(d.leading_coefficient() / c.leading_coefficient(), *d.valuation() - *c.valuation());
    if (ratio * c != d) {
      out.obstruction = "coefficient ratio is not a monomial";
      return out;
    }
    targets.emplace_back(word, ratio);
  }
  return solve_monomial_gauge(targets, num_arrows);
}

namespace {

const CycleClass* find_ring(const std::vector<CycleClass>& cycles, int p, int j) {
  for (const auto& c : cycles) {
    if (c.kind == CycleKind::Ring && c.marked_point == p && c.level == j) return &c;
  }
  return nullptr;
}

}  // namespace

bool strongly_generic(const Quiver& q, const Potential& w) {
  const Embedding* emb = q.embedding();
  if (emb == nullptr) throw std::invalid_argument("embedding tags missing");
  if (emb->rank != 2) throw std::invalid_argument("m != 2");
  const auto cycles = primitive_cycles(q);
  for (const auto& c : cycles) {
    if (c.kind != CycleKind::Ring && !w.coefficient(CyclicWord(c.arrows)).is_one()) {
      throw std::invalid_argument("not normalized");
    }
  }
  const auto valence = emb->triangulation.vertex_valences();
  for (int p = 0; p < emb->triangulation.num_vertices(); ++p) {
    const NovikovScalar c1 = w.coefficient(CyclicWord(find_ring(cycles, p, 1)->arrows));
    const NovikovScalar c2 = w.coefficient(CyclicWord(find_ring(cycles, p, 2)->arrows));
    const NovikovScalar s = valence[p] % 2 == 0 ? c1 + c2 : c1 - c2;
    if (s.is_zero()) return false;
  }
  return true;
}

std::vector<NovikovScalar> potential_from_areas(const Quiver& q, const std::map<int, Rational>& areas) {
  const auto cycles = primitive_cycles(q);
  std::vector<NovikovScalar> c(cycles.size(), NovikovScalar(1));
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].kind == CycleKind::BlackTriangle) continue;
    const auto it = areas.find(static_cast<int>(i));
    if (it == areas.end()) throw std::invalid_argument("missing area for " + cycles[i].label());
    if (sgn(it->second) <= 0) throw std::invalid_argument("area must be positive for " + cycles[i].label());
    c[i] = NovikovScalar::q_power(it->second);
  }
  return c;
}

KahlerData kahler_data_from_potential(const Quiver& q, const Potential& w) {
  KahlerData out;
  for (const auto& c : primitive_cycles(q)) {
    if (c.kind != CycleKind::Ring) continue;
    const NovikovScalar coeff = w.coefficient(CyclicWord(c.arrows));
    if (coeff.is_zero()) throw std::invalid_argument("ring coefficient missing for " + c.label());
    const Rational v = *coeff.valuation();
    if (sgn(v) <= 0) throw std::invalid_argument("nonpositive valuation on ring coefficient " + c.label());
    out.sphere_area[{c.marked_point, c.level}] = 2 * v;
  }
  return out;
}

std::string to_string(const CyclicWord& w, const Quiver& q) {
  std::string out;
  for (int a : w.arrows()) {
    if (!out.empty()) out += ' ';
    out += a < q.num_arrows() ? q.arrow(a).name : "a" + std::to_string(a);
  }
  return out;
}

}  // namespace qpsurf
