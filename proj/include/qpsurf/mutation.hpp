#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpsurf/potential.hpp"
#include "qpsurf/quiver.hpp"
#include "qpsurf/surface.hpp"

namespace qpsurf {

/// Quiver with potential; the truncation length lives on the potential.
struct QP {
  Quiver quiver;
  Potential potential;
};

/// Arrow reversal at k plus composite arrows. New arrow order: arrows away from k
/// (original order), composites [a,b] for a into k and b out of k (both by id), then a*
/// for incoming a, then b* for outgoing b. Throws std::invalid_argument("loop or 2-cycle at k").
QP premutate(const QP& x, int k);

struct ReduceResult {
  QP qp;
  /// Substitutions applied in order to the input potential (a right-equivalence).
  std::vector<Substitution> gauge;
  /// Deleted 2-cycle pairs, as arrow ids of the input.
  std::vector<std::pair<int, int>> deleted;
  /// Input arrow id -> output arrow id, or -1 when deleted.
  std::vector<int> arrow_map;
};

/// Splits off the trivial part up to the truncation length. Length-2 words are paired
/// in canonical word order; pivots must be monomials.
/// Throws std::invalid_argument("non-invertible 2-cycle block ...").
ReduceResult reduce(const QP& x);

QP mutate(const QP& x, int k);

IntMatrix2 matrix_mutation(const IntMatrix2& b, int k);

/// One line of a mutation log.
struct MutationStep {
  int vertex = 0;
  std::vector<std::string> arrows_added;
  std::vector<std::string> arrows_removed;
  std::vector<std::string> terms_added;
  std::vector<std::string> terms_removed;
};

/// Mutates along `vertices`, recording per-step arrow and potential diffs (by name).
QP mutate_sequence(const QP& x, const std::vector<int>& vertices, std::vector<MutationStep>* log = nullptr);

struct DiagonalMatch {
  std::vector<int> arrow_map;  // arrow of a -> arrow of b
  DiagonalGauge gauge;         // on the relabelled arrows
};

/// Arrow bijection compatible with `vertex_map` (a -> b) plus a diagonal gauge carrying
/// a.potential to b.potential, if one exists among at most 2^16 parallel-arrow matchings.
std::optional<DiagonalMatch> match_up_to_diagonal(const QP& a, const QP& b, const std::vector<int>& vertex_map);

struct FlipReport {
  std::vector<int> sequence;
  /// 2-cycle pairs split off the flipped side (nonzero when the flip creates a valence-2 vertex).
  int target_deleted_pairs = 0;
  bool quiver_isomorphic = false;
  bool primitive_support = false;
  std::optional<std::vector<int>> vertex_bijection;
  std::string message;
  bool ok() const { return quiver_isomorphic && primitive_support; }
};

/// For m = 1 the default sequence is the vertex on e.
std::vector<int> default_flip_sequence(const IdealTriangulation& t, int e, int m);

/// Mutates (Q(Delta_m), W_1) along `sequence` and compares with the reduced QP
/// (Q(flip(t,e)_m), W_1): quivers up to isomorphism, then every term of the reduced
/// target potential must pull back into the support of the mutated potential.
/// An empty sequence means the default one. Throws std::invalid_argument("wrong sequence
/// length") unless the sequence has m(m+1)(m+2)/6 entries.
FlipReport verify_flip(const IdealTriangulation& t, int e, int m, std::vector<int> sequence = {},
                       std::size_t truncation = 0);

/// Breadth-first search over quiver-level mutations, deduplicated up to isomorphism.
/// Consecutive repeats of a vertex are skipped (mutation is an involution).
std::optional<std::vector<int>> mutation_sequence_search(const Quiver& source, const Quiver& target,
                                                         int max_length);

}  // namespace qpsurf
