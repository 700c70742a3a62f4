#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpsurf/novikov.hpp"
#include "qpsurf/quiver.hpp"

namespace qpsurf {

/// Arrow ids in composition order: target(p[i]) = source(p[i+1]).
using Path = std::vector<int>;
/// Formal linear combination of paths.
using PathSum = std::map<Path, NovikovScalar>;

void add_to(PathSum& sum, const Path& p, const NovikovScalar& c);

/// Closed path stored as its lexicographically least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(Path arrows);

  const Path& arrows() const { return arrows_; }
  std::size_t size() const { return arrows_.size(); }
  /// Whether consecutive arrows compose (cyclically) in q.
  bool closed_on(const Quiver& q) const;
  /// Number of occurrences of arrow a.
  int count(int a) const;

  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  Path arrows_;
};

class Potential {
 public:
  static constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();
  using TermMap = std::map<CyclicWord, NovikovScalar>;

  explicit Potential(std::size_t truncation = kUnlimited) : truncation_(truncation) {}

  std::size_t truncation() const { return truncation_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * w; words longer than the truncation are dropped, zero sums erased.
  void add(const CyclicWord& w, const NovikovScalar& c);
  void add(const Path& closed_path, const NovikovScalar& c) { add(CyclicWord(closed_path), c); }
  NovikovScalar coefficient(const CyclicWord& w) const;
  std::size_t max_word_length() const;

  friend bool operator==(const Potential& a, const Potential& b) { return a.terms_ == b.terms_; }

 private:
  std::size_t truncation_;
  TermMap terms_;
};

/// Sum over occurrences of a in each word: the rotation starting after a, with a removed.
PathSum cyclic_derivative(const Potential& w, int a);

/// arrow -> nonzero scalar; arrows not listed are scaled by 1.
using DiagonalGauge = std::map<int, NovikovScalar>;
/// arrow -> correction (paths of length >= 2 parallel to the arrow): a |-> a + correction(a).
using UnitriangularGauge = std::map<int, PathSum>;
/// arrow -> full image in the path algebra; arrows not listed are fixed.
using Substitution = std::map<int, PathSum>;

Potential apply_diagonal(const Potential& w, const DiagonalGauge& g);
/// Pointwise product g1 * g2 (apply g1 then g2 equals applying the product).
DiagonalGauge compose_diagonal(const DiagonalGauge& g1, const DiagonalGauge& g2);
/// Pointwise inverse; non-monomial entries are inverted to exponent `truncation`.
DiagonalGauge inverse_diagonal(const DiagonalGauge& g, const Rational& truncation = 64);

/// Expands every word under the substitution, dropping words longer than w.truncation().
Potential substitute(const Potential& w, const Substitution& s);
/// Image of a path sum under the substitution, dropping paths longer than `max_length`.
PathSum substitute(const PathSum& p, const Substitution& s, std::size_t max_length);

Potential apply_unitriangular(const Potential& w, const UnitriangularGauge& u);
/// Formal inverse of a |-> a + u(a), valid on paths of length <= max_length.
UnitriangularGauge inverse_unitriangular(const UnitriangularGauge& u, std::size_t max_length);

/// Primitive cycles of an embedded quiver keyed by cyclic word (value = index into primitive_cycles).
std::map<CyclicWord, int> primitive_index(const Quiver& q);

/// 2 * (longest primitive cycle length).
std::size_t default_truncation(const Quiver& q);

/// W_c: coefficients aligned with primitive_cycles(q).
/// Throws std::invalid_argument naming the cycle on a missing or zero coefficient.
Potential canonical_potential(const Quiver& q, const std::vector<NovikovScalar>& coefficients,
                              std::size_t truncation = 0);
/// All coefficients 1.
Potential unit_potential(const Quiver& q, std::size_t truncation = 0);

Potential primitive_projection(const Quiver& q, const Potential& w);
/// Supported exactly on the primitive cycles, each with a nonzero coefficient.
bool is_primitive(const Quiver& q, const Potential& w);
/// The primitive projection is primitive.
bool is_generic(const Quiver& q, const Potential& w);

/// Outcome of solving for a monomial diagonal gauge.
struct GaugeSolve {
  std::optional<DiagonalGauge> gauge;
  std::string obstruction;  // empty on success
  bool ok() const { return gauge.has_value(); }
};

/// Monomial diagonal gauge g with (prod of g over the word) = ratio for every listed word.
/// Exponents are solved over Q, signs over GF(2), and every prime exponent over Z;
/// reports "root adjunction required" when an integer system needs a k-th root.
GaugeSolve solve_monomial_gauge(const std::vector<std::pair<CyclicWord, NovikovScalar>>& targets, int num_arrows);

struct NormalizeResult {
  std::optional<Potential> potential;
  DiagonalGauge gauge;
  std::string obstruction;
  bool ok() const { return potential.has_value(); }
};

/// Diagonal gauge making every t_b and q_w coefficient 1.
NormalizeResult normalize(const Quiver& q, const Potential& w);

/// Diagonal gauge g with apply_diagonal(from, g) == to, if one exists.
GaugeSolve diagonal_equivalence(const Potential& from, const Potential& to, int num_arrows);

/// c_p^(1) + (-1)^valence(p) c_p^(2) != 0 at every marked point.
/// Throws std::invalid_argument("m != 2") or ("not normalized").
bool strongly_generic(const Quiver& q, const Potential& w);

/// Areas keyed by primitive cycle index (every q_w and ring). Returns coefficients aligned
/// with primitive_cycles(q): 1 on t_b, q^area elsewhere.
std::vector<NovikovScalar> potential_from_areas(const Quiver& q, const std::map<int, Rational>& areas);

struct KahlerData {
  /// (marked point, level) -> sphere area = 2 * valuation of the ring coefficient.
  std::map<std::pair<int, int>, Rational> sphere_area;
  friend bool operator==(const KahlerData&, const KahlerData&) = default;
};
KahlerData kahler_data_from_potential(const Quiver& q, const Potential& w);

std::string to_string(const CyclicWord& w, const Quiver& q);

}  // namespace qpsurf
