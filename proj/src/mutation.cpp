#include "qpsurf/mutation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace qpsurf {

QP premutate(const QP& x, int k) {
  const Quiver& q = x.quiver;
  if (k < 0 || k >= q.num_vertices()) throw std::out_of_range("vertex out of range: " + std::to_string(k));
  std::vector<int> incoming, outgoing;
  std::set<int> sources, targets;
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    if (a.source == k && a.target == k) throw std::invalid_argument("loop or 2-cycle at k");
    if (a.target == k) {
      incoming.push_back(i);
      sources.insert(a.source);
    } else if (a.source == k) {
      outgoing.push_back(i);
      targets.insert(a.target);
    }
  }
  for (int v : sources) {
    if (targets.count(v) != 0) throw std::invalid_argument("loop or 2-cycle at k");
  }

  Quiver out(q.num_vertices());
  std::vector<int> kept(q.num_arrows(), -1);
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    if (a.source != k && a.target != k) kept[i] = out.add_arrow(a.source, a.target, a.name);
  }
  std::map<std::pair<int, int>, int> composite;
  for (int a : incoming) {
    for (int b : outgoing) {
      composite[{a, b}] = out.add_arrow(q.arrow(a).source, q.arrow(b).target,
                                        "[" + q.arrow(a).name + "," + q.arrow(b).name + "]");
    }
  }
  std::map<int, int> star;
  for (int a : incoming) star[a] = out.add_arrow(k, q.arrow(a).source, q.arrow(a).name + "*");
  for (int b : outgoing) star[b] = out.add_arrow(q.arrow(b).target, k, q.arrow(b).name + "*");

  Potential w(x.potential.truncation());
  for (const auto& [word, c] : x.potential.terms()) {
    const Path& arrows = word.arrows();
    const std::size_t n = arrows.size();
    std::size_t start = 0;
    while (start < n && q.arrow(arrows[start]).source == k) ++start;
    if (start == n) throw std::invalid_argument("loop or 2-cycle at k");
    Path rewritten;
    for (std::size_t i = 0; i < n; ++i) {
      const int a = arrows[(start + i) % n];
      if (q.arrow(a).target == k) {
        const int b = arrows[(start + i + 1) % n];
        rewritten.push_back(composite.at({a, b}));
        ++i;
      } else {
        rewritten.push_back(kept[a]);
      }
    }
    w.add(rewritten, c);
  }
  for (const auto& [ab, id] : composite) w.add(Path{id, star.at(ab.second), star.at(ab.first)}, 1);
  return {std::move(out), std::move(w)};
}

namespace {

Substitution single(int arrow, PathSum image) {
  Substitution s;
  s[arrow] = std::move(image);
  return s;
}

bool is_pair_word(const CyclicWord& w, const std::map<int, int>& partner) {
  if (w.size() != 2) return false;
  const auto it = partner.find(w.arrows()[0]);
  return it != partner.end() && it->second == w.arrows()[1];
}

}  // namespace

ReduceResult reduce(const QP& x) {
  const Quiver& q = x.quiver;
  Potential w = x.potential;
  ReduceResult result;
  std::map<int, int> role;  // arrow -> 0 for a_k, 1 for b_k
  std::map<int, int> partner;
  std::vector<std::pair<int, int>> pairs;

  // Gaussian elimination on the quadratic part
  while (true) {
    std::optional<CyclicWord> pivot_word;
    for (const auto& [word, c] : w.terms()) {
      if (word.size() != 2) continue;
      if (partner.count(word.arrows()[0]) != 0 || partner.count(word.arrows()[1]) != 0) continue;
      pivot_word = word;
      break;
    }
    if (!pivot_word) break;
    const int x0 = pivot_word->arrows()[0], y0 = pivot_word->arrows()[1];
    if (x0 == y0) throw std::invalid_argument("non-invertible 2-cycle block (loop)");
    const NovikovScalar lambda = w.coefficient(*pivot_word);
    if (!lambda.is_monomial()) {
      throw std::invalid_argument("non-invertible 2-cycle block (non-monomial pivot " + lambda.to_string() + ")");
    }
    const NovikovScalar inv = inverse_monomial(lambda);

    // y0 |-> lambda^-1 (y0 - sum_{y != y0} M(x0,y) y)
    PathSum image{{Path{y0}, inv}};
    for (const auto& [word, c] : w.terms()) {
      if (word.size() != 2 || word == *pivot_word) continue;
      const int u = word.arrows()[0], v = word.arrows()[1];
      if (u == x0 && v != x0) add_to(image, Path{v}, -inv * c);
      if (v == x0 && u != x0) add_to(image, Path{u}, -inv * c);
    }
    Substitution s1 = single(y0, image);
    w = substitute(w, s1);
    result.gauge.push_back(std::move(s1));

    // x0 |-> x0 - sum_{x != x0} M'(x,y0) x
    PathSum image2{{Path{x0}, NovikovScalar(1)}};
    bool changed = false;
    for (const auto& [word, c] : w.terms()) {
      if (word.size() != 2 || word == *pivot_word) continue;
      const int u = word.arrows()[0], v = word.arrows()[1];
      if (u == y0 && v != y0) {
        add_to(image2, Path{v}, -c);
        changed = true;
      }
      if (v == y0 && u != y0) {
        add_to(image2, Path{u}, -c);
        changed = true;
      }
    }
    if (changed) {
      Substitution s2 = single(x0, image2);
      w = substitute(w, s2);
      result.gauge.push_back(std::move(s2));
    }
    if (!w.coefficient(*pivot_word).is_one()) throw std::logic_error("2-cycle pivot did not normalize");
    partner[x0] = y0;
    partner[y0] = x0;
    role[x0] = 0;
    role[y0] = 1;
    pairs.emplace_back(x0, y0);
  }

  // kill every other word through a paired arrow, one length at a time
  if (!pairs.empty()) {
    const std::size_t rounds = std::min<std::size_t>(w.truncation(), 4096) + 1;
    for (std::size_t round = 0; round < rounds; ++round) {
      std::map<int, PathSum> u_of, v_of;  // keyed by a_k
      bool impure = false;
      for (const auto& [word, c] : w.terms()) {
        if (is_pair_word(word, partner)) continue;
        const Path& arrows = word.arrows();
        const std::size_t n = arrows.size();
        std::optional<std::size_t> first_a, first_b;
        for (std::size_t i = 0; i < n; ++i) {
          const auto it = role.find(arrows[i]);
          if (it == role.end()) continue;
          if (it->second == 0 && !first_a) first_a = i;
          if (it->second == 1 && !first_b) first_b = i;
        }
        if (first_a) {
          Path rest;
          for (std::size_t i = 1; i < n; ++i) rest.push_back(arrows[(*first_a + i) % n]);
          add_to(u_of[arrows[*first_a]], rest, c);
          impure = true;
        } else if (first_b) {
          Path rest;
          for (std::size_t i = 1; i < n; ++i) rest.push_back(arrows[(*first_b + i) % n]);
          add_to(v_of[partner.at(arrows[*first_b])], rest, c);
          impure = true;
        }
      }
      if (!impure) break;
      Substitution s;
      for (const auto& [a, b] : pairs) {
        const auto u = u_of.find(a);
        if (u != u_of.end() && !u->second.empty()) {
          PathSum image{{Path{b}, NovikovScalar(1)}};
          for (const auto& [p, c] : u->second) add_to(image, p, -c);
          s[b] = std::move(image);
        }
        const auto v = v_of.find(a);
        if (v != v_of.end() && !v->second.empty()) {
          PathSum image{{Path{a}, NovikovScalar(1)}};
          for (const auto& [p, c] : v->second) add_to(image, p, -c);
          s[a] = std::move(image);
        }
      }
      w = substitute(w, s);
      result.gauge.push_back(std::move(s));
    }
  }

  // delete the trivial part
  result.arrow_map.assign(q.num_arrows(), -1);
  Quiver out(q.num_vertices());
  for (int i = 0; i < q.num_arrows(); ++i) {
    if (partner.count(i) != 0) continue;
    const Arrow& a = q.arrow(i);
    result.arrow_map[i] = out.add_arrow(a.source, a.target, a.name, a.tag);
  }
  Potential reduced(w.truncation());
  for (const auto& [word, c] : w.terms()) {
    if (is_pair_word(word, partner)) {
      if (!c.is_one()) throw std::logic_error("trivial part lost its normalization");
      continue;
    }
    Path mapped;
    for (int a : word.arrows()) {
      const int m = result.arrow_map[a];
      if (m < 0) throw std::logic_error("reduction left a word through a deleted arrow");
      mapped.push_back(m);
    }
    reduced.add(mapped, c);
  }
  result.deleted = std::move(pairs);
  result.qp = {std::move(out), std::move(reduced)};
  return result;
}

QP mutate(const QP& x, int k) { return reduce(premutate(x, k)).qp; }

IntMatrix2 matrix_mutation(const IntMatrix2& b, int k) {
  const int n = static_cast<int>(b.size());
  IntMatrix2 out = b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
      } else {
        out[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
      }
    }
  }
  return out;
}

namespace {

std::multiset<std::string> arrow_names(const Quiver& q) {
  std::multiset<std::string> out;
  for (const auto& a : q.arrows()) out.insert(a.name);
  return out;
}

std::multiset<std::string> term_strings(const QP& x) {
  std::multiset<std::string> out;
  for (const auto& [word, c] : x.potential.terms()) out.insert(c.to_string() + " * " + to_string(word, x.quiver));
  return out;
}

std::vector<std::string> difference(const std::multiset<std::string>& a, const std::multiset<std::string>& b) {
  std::vector<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

QP mutate_sequence(const QP& x, const std::vector<int>& vertices, std::vector<MutationStep>* log) {
  QP current = x;
  for (int k : vertices) {
    QP next = mutate(current, k);
    if (log != nullptr) {
      MutationStep step;
      step.vertex = k;
      const auto before = arrow_names(current.quiver), after = arrow_names(next.quiver);
      step.arrows_added = difference(after, before);
      step.arrows_removed = difference(before, after);
      const auto tb = term_strings(current), ta = term_strings(next);
      step.terms_added = difference(ta, tb);
      step.terms_removed = difference(tb, ta);
      log->push_back(std::move(step));
    }
    current = std::move(next);
  }
  return current;
}

std::vector<int> default_flip_sequence(const IdealTriangulation& t, int e, int m) {
  if (e < 0 || e >= t.num_edges()) throw std::out_of_range("edge out of range: " + std::to_string(e));
  if (m != 1) throw std::invalid_argument("no default flip sequence for m > 1; supply one");
  return {e};
}

namespace {

/// Calls `accept(pullback)` for arrow bijections compatible with `sigma` (source vertex ->
/// target vertex), where pullback[target arrow] = source arrow, until it returns true.
/// Gives up after 2^16 candidates.
template <class Accept>
bool search_arrow_matchings(const Quiver& source, const Quiver& target, const std::vector<int>& sigma,
                            Accept accept) {
  if (source.num_arrows() != target.num_arrows()) return false;
  std::map<std::pair<int, int>, std::vector<int>> target_class, source_class;
  for (int i = 0; i < target.num_arrows(); ++i) {
    target_class[{target.arrow(i).source, target.arrow(i).target}].push_back(i);
  }
  for (int i = 0; i < source.num_arrows(); ++i) {
    source_class[{sigma[source.arrow(i).source], sigma[source.arrow(i).target]}].push_back(i);
  }
  std::vector<const std::vector<int>*> t_arrows;
  std::vector<std::vector<int>> perms;
  for (const auto& [key, arrows] : target_class) {
    if (source_class[key].size() != arrows.size()) return false;
    t_arrows.push_back(&arrows);
    perms.push_back(source_class[key]);
  }
  std::vector<int> pullback(target.num_arrows(), -1);
  for (long budget = 1L << 16; budget > 0; --budget) {
    for (std::size_t c = 0; c < perms.size(); ++c) {
      for (std::size_t i = 0; i < perms[c].size(); ++i) pullback[(*t_arrows[c])[i]] = perms[c][i];
    }
    if (accept(pullback)) return true;
    std::size_t c = 0;
    while (c < perms.size() && !std::next_permutation(perms[c].begin(), perms[c].end())) ++c;
    if (c == perms.size()) return false;
  }
  return false;
}

}  // namespace

std::optional<DiagonalMatch> match_up_to_diagonal(const QP& a, const QP& b, const std::vector<int>& vertex_map) {
  std::optional<DiagonalMatch> found;
  search_arrow_matchings(a.quiver, b.quiver, vertex_map, [&](const std::vector<int>& pullback) {
    std::vector<int> forward(a.quiver.num_arrows(), -1);
    for (std::size_t i = 0; i < pullback.size(); ++i) forward[pullback[i]] = static_cast<int>(i);
    Potential relabelled(a.potential.truncation());
    for (const auto& [word, c] : a.potential.terms()) {
      Path p;
      for (int x : word.arrows()) p.push_back(forward[x]);
      relabelled.add(p, c);
    }
    auto solved = diagonal_equivalence(relabelled, b.potential, b.quiver.num_arrows());
    if (!solved.ok()) return false;
    found = DiagonalMatch{std::move(forward), std::move(*solved.gauge)};
    return true;
  });
  return found;
}

FlipReport verify_flip(const IdealTriangulation& t, int e, int m, std::vector<int> sequence, std::size_t truncation) {
  if (sequence.empty()) sequence = default_flip_sequence(t, e, m);
  const std::size_t expected = static_cast<std::size_t>(m) * (m + 1) * (m + 2) / 6;
  if (sequence.size() != expected) {
    throw std::invalid_argument("wrong sequence length: expected " + std::to_string(expected) + ", got " +
                                std::to_string(sequence.size()));
  }
  const IdealTriangulation flipped = flip(t, e).triangulation;
  const Quiver q = inscribed_quiver(t, m);
  const Quiver target_quiver = inscribed_quiver(flipped, m);
  if (truncation == 0) truncation = std::max(default_truncation(q), default_truncation(target_quiver));

  FlipReport report;
  report.sequence = sequence;
  const ReduceResult target = reduce({target_quiver, unit_potential(target_quiver, truncation)});
  report.target_deleted_pairs = static_cast<int>(target.deleted.size());

  QP x{q, unit_potential(q, truncation)};
  x.quiver.forget_embedding();
  try {
    x = mutate_sequence(x, sequence);
  } catch (const std::exception& ex) {
    report.message = std::string("mutation failed: ") + ex.what();
    return report;
  }
  report.vertex_bijection = quiver_isomorphic(x.quiver, target.qp.quiver);
  report.quiver_isomorphic = report.vertex_bijection.has_value();
  if (!report.quiver_isomorphic) {
    report.message = "mutated quiver is not isomorphic to the quiver of the flipped triangulation";
    return report;
  }
  report.primitive_support = search_arrow_matchings(
      x.quiver, target.qp.quiver, *report.vertex_bijection, [&](const std::vector<int>& pullback) {
        for (const auto& [word, c] : target.qp.potential.terms()) {
          Path p;
          for (int a : word.arrows()) p.push_back(pullback[a]);
          if (x.potential.coefficient(CyclicWord(p)).is_zero()) return false;
        }
        return true;
      });
  report.message =
      report.primitive_support ? "ok" : "primitive projection lacks full support under every arrow matching";
  return report;
}

namespace {

IntMatrix2 positive_part(const IntMatrix2& b) {
  IntMatrix2 a = b;
  for (auto& row : a) {
    for (auto& x : row) x = std::max(x, 0);
  }
  return a;
}

}  // namespace

std::optional<std::vector<int>> mutation_sequence_search(const Quiver& source, const Quiver& target, int max_length) {
  if (source.num_vertices() != target.num_vertices()) return std::nullopt;
  const IntMatrix2 goal = positive_part(exchange_matrix(target));
  const std::size_t goal_hash = isomorphism_invariant(goal);

  struct State {
    IntMatrix2 b;
    std::vector<int> path;
  };
  std::set<IntMatrix2> labelled;
  std::unordered_map<std::size_t, std::vector<IntMatrix2>> classes;
  // true when b is new up to isomorphism; sets *hit when it is isomorphic to the goal
  auto visit = [&](const IntMatrix2& b, bool* hit) {
    if (!labelled.insert(b).second) return false;
    const IntMatrix2 a = positive_part(b);
    const std::size_t h = isomorphism_invariant(a);
    if (h == goal_hash && find_multiplicity_isomorphism(a, goal)) {
      *hit = true;
      return true;
    }
    auto& bucket = classes[h];
    for (const auto& other : bucket) {
      if (find_multiplicity_isomorphism(a, other)) return false;
    }
    bucket.push_back(a);
    return true;
  };
  bool hit = false;
  const IntMatrix2 start = exchange_matrix(source);
  visit(start, &hit);
  if (hit) return std::vector<int>{};
  std::deque<State> queue{{start, {}}};
  const int n = source.num_vertices();
  while (!queue.empty()) {
    State s = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(s.path.size()) >= max_length) continue;
    for (int k = 0; k < n; ++k) {
      if (!s.path.empty() && s.path.back() == k) continue;
      IntMatrix2 next = matrix_mutation(s.b, k);
      std::vector<int> path = s.path;
      path.push_back(k);
      if (visit(next, &hit)) {
        if (hit) return path;
        queue.push_back({std::move(next), std::move(path)});
      }
    }
  }
  return std::nullopt;
}

}  // namespace qpsurf
