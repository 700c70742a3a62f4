#include "qpsurf/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qpsurf {

int Quiver::add_arrow(int source, int target, std::string name, std::optional<ArrowTag> tag) {
  if (source < 0 || source >= num_vertices_ || target < 0 || target >= num_vertices_) {
    throw std::out_of_range("arrow endpoint out of range");
  }
  const int id = num_arrows();
  if (name.empty()) name = "a" + std::to_string(id);
  arrows_.push_back({source, target, std::move(name), tag});
  return id;
}

std::vector<std::vector<int>> Quiver::multiplicity_matrix() const {
  std::vector<std::vector<int>> a(num_vertices_, std::vector<int>(num_vertices_, 0));
  for (const auto& arrow : arrows_) ++a[arrow.source][arrow.target];
  return a;
}

std::vector<int> Quiver::arrows_between(int source, int target) const {
  std::vector<int> out;
  for (int i = 0; i < num_arrows(); ++i) {
    if (arrows_[i].source == source && arrows_[i].target == target) out.push_back(i);
  }
  return out;
}

void Quiver::forget_embedding() {
  embedding_.reset();
  for (auto& a : arrows_) a.tag.reset();
}

std::string Quiver::vertex_name(int v) const {
  if (embedding_ && v < static_cast<int>(embedding_->labels.size())) {
    const auto& label = embedding_->labels[v];
    if (const auto* e = std::get_if<EdgePoint>(&label)) {
      return "E" + std::to_string(e->edge) + "." + std::to_string(e->position);
    }
    const auto& p = std::get<InteriorPoint>(label);
    return "F" + std::to_string(p.face) + "(" + std::to_string(p.bary[0]) + "," + std::to_string(p.bary[1]) + "," +
           std::to_string(p.bary[2]) + ")";
  }
  return "v" + std::to_string(v);
}

namespace {

using Bary = std::array<int, 3>;

Bary plus_unit(Bary x, int i) {
  ++x[i];
  return x;
}

Bary minus_unit(Bary x, int i) {
  --x[i];
  return x;
}

/// All triples of non-negative integers (or >= `lower`) summing to `total`, lexicographic.
std::vector<Bary> lattice_triples(int total, int lower) {
  std::vector<Bary> out;
  for (int a = lower; a <= total; ++a) {
    for (int b = lower; a + b <= total; ++b) {
      const int c = total - a - b;
      if (c >= lower) out.push_back({a, b, c});
    }
  }
  return out;
}

/// Vertex numbering of the subdivided triangulation.
class Lattice {
 public:
  Lattice(const IdealTriangulation& t, int m) : t_(t), m_(m) {
    const auto interior = lattice_triples(m + 1, 1);
    for (std::size_t i = 0; i < interior.size(); ++i) interior_index_[interior[i]] = static_cast<int>(i);
    per_face_ = static_cast<int>(interior.size());
  }

  int num_vertices() const { return m_ * t_.num_edges() + per_face_ * t_.num_faces(); }

  /// Quiver vertex at lattice point x of `face`, or -1 for a corner (marked point).
  int vertex(int face, const Bary& x) const {
    for (int i = 0; i < 3; ++i) {
      if (x[i] == m_ + 1) return -1;
    }
    for (int k = 0; k < 3; ++k) {
      if (x[k] != 0) continue;
      const int c = (k + 1) % 3;  // zero coordinate c+2 <=> side c
      const int dist = x[(c + 1) % 3];
      const Slot s{face, c};
      const int e = t_.edge_of(s);
      const int pos = t_.edges()[e].first == s ? dist : m_ + 1 - dist;
      return e * m_ + pos - 1;
    }
    return m_ * t_.num_edges() + face * per_face_ + interior_index_.at(x);
  }

  std::vector<VertexLabel> labels() const {
    std::vector<VertexLabel> out;
    for (int e = 0; e < t_.num_edges(); ++e) {
      for (int p = 1; p <= m_; ++p) out.emplace_back(EdgePoint{e, p});
    }
    const auto interior = lattice_triples(m_ + 1, 1);
    for (int f = 0; f < t_.num_faces(); ++f) {
      for (const auto& x : interior) out.emplace_back(InteriorPoint{f, x});
    }
    return out;
  }

 private:
  const IdealTriangulation& t_;
  int m_;
  int per_face_ = 0;
  std::map<Bary, int> interior_index_;
};

}  // namespace

Quiver inscribed_quiver(const IdealTriangulation& t, int m) {
  if (m < 1) throw std::invalid_argument("rank m must be >= 1");
  const auto report = validate(t);
  if (!report.empty()) throw std::invalid_argument("invalid triangulation: " + report.front());

  Lattice lattice(t, m);
  auto embedding = std::make_shared<Embedding>();
  embedding->triangulation = t;
  embedding->rank = m;
  embedding->labels = lattice.labels();

  Quiver q(lattice.num_vertices());
  const auto black_y = lattice_triples(m + 2, 1);
  for (int f = 0; f < t.num_faces(); ++f) {
    for (const auto& y : black_y) {
      BlackTriangle b;
      b.face = f;
      b.y = y;
      for (int i = 0; i < 3; ++i) b.vertices[i] = lattice.vertex(f, minus_unit(y, i));
      const int id = static_cast<int>(embedding->black_triangles.size());
      for (int i = 0; i < 3; ++i) {
        b.arrows[i] = q.add_arrow(b.vertices[i], b.vertices[(i + 1) % 3], {}, ArrowTag{id, i});
      }
      embedding->black_triangles.push_back(b);
    }
  }
  q.set_embedding(std::move(embedding));
  return q;
}

std::string to_string(CycleKind kind) {
  switch (kind) {
    case CycleKind::BlackTriangle: return "black_triangle";
    case CycleKind::WhiteTriangle: return "white_triangle";
    case CycleKind::WhiteQuadrilateral: return "white_quadrilateral";
    case CycleKind::Ring: return "ring";
  }
  return "unknown";
}

std::string CycleClass::label() const {
  switch (kind) {
    case CycleKind::BlackTriangle: return "t_b" + std::to_string(black_triangle);
    case CycleKind::WhiteTriangle:
    case CycleKind::WhiteQuadrilateral: return "q_w" + std::to_string(region);
    case CycleKind::Ring: return "L_p" + std::to_string(marked_point) + "^(" + std::to_string(level) + ")";
  }
  return "?";
}

namespace {

const Embedding& require_embedding(const Quiver& q) {
  const Embedding* e = q.embedding();
  if (e == nullptr) throw std::invalid_argument("embedding tags missing");
  for (const auto& a : q.arrows()) {
    if (!a.tag) throw std::invalid_argument("embedding tags missing");
  }
  return *e;
}

struct WhiteTriangle {
  int face = 0;
  Bary x{};  // vertices x + e_i
  std::array<int, 3> arrow{-1, -1, -1};     // black edge opposite vertex k, or -1
  std::array<int, 3> glue_to{-1, -1, -1};   // partner white triangle across a boundary segment
  std::array<int, 3> glue_edge{-1, -1, -1};
};

/// Small-triangle model of Delta_m used by the face tracer.
class Subdivision {
 public:
  explicit Subdivision(const Quiver& q) : q_(q), emb_(require_embedding(q)) {
    const int m = emb_.rank;
    const auto& t = emb_.triangulation;
    // black edges keyed by (face, unordered lattice pair)
    for (const auto& b : emb_.black_triangles) {
      for (int i = 0; i < 3; ++i) {
        const Bary from = minus_unit(b.y, i);
        const Bary to = minus_unit(b.y, (i + 1) % 3);
        black_edge_[key(b.face, from, to)] = b.arrows[i];
      }
    }
    std::map<std::tuple<int, int, int>, std::pair<int, int>> segment_owner;  // (face, slot, segment)
    for (int f = 0; f < t.num_faces(); ++f) {
      for (const auto& x : lattice_triples(m, 0)) {
        WhiteTriangle w;
        w.face = f;
        w.x = x;
        const int id = static_cast<int>(whites_.size());
        for (int k = 0; k < 3; ++k) {
          if (x[k] == 0) {
            const int slot = (k + 1) % 3;
            segment_owner[{f, slot, x[(slot + 1) % 3]}] = {id, k};
          } else {
            w.arrow[k] = black_edge_.at(key(f, plus_unit(x, (k + 1) % 3), plus_unit(x, (k + 2) % 3)));
          }
        }
        whites_.push_back(w);
      }
    }
    for (auto& w : whites_) {
      for (int k = 0; k < 3; ++k) {
        if (w.arrow[k] >= 0) continue;
        const int slot = (k + 1) % 3;
        const int segment = w.x[(slot + 1) % 3];
        const Slot partner = t.partner({w.face, slot});
        const auto [other, other_edge] = segment_owner.at({partner.face, partner.corner, m - segment});
        w.glue_to[k] = other;
        w.glue_edge[k] = other_edge;
      }
    }
  }

  const std::vector<WhiteTriangle>& whites() const { return whites_; }

  int arrow_between(int face, const Bary& from, const Bary& to) const { return black_edge_.at(key(face, from, to)); }

  /// Next boundary edge (white triangle, edge) after boundary edge (w, k), following arrow direction.
  std::pair<int, int> next_boundary(int w, int k) const {
    int h = (k + 1) % 3;  // head of the arrow on edge k is vertex k+1
    int current = w;
    for (int guard = 0; guard < 4 * static_cast<int>(whites_.size()) + 4; ++guard) {
      const WhiteTriangle& tri = whites_[current];
      const int other = (h + 1) % 3;
      if (tri.arrow[other] >= 0) return {current, other};
      const int k2 = tri.glue_edge[other];
      current = tri.glue_to[other];
      h = (k2 + 1) % 3;
    }
    throw std::logic_error("face tracing did not close up");
  }

  /// Whether the arrow on edge k of white triangle w runs clockwise around it.
  bool clockwise(int w, int k, const Lattice& lattice) const {
    const auto& tri = whites_[w];
    const Arrow& a = q_.arrow(tri.arrow[k]);
    return a.source == lattice.vertex(tri.face, plus_unit(tri.x, (k + 2) % 3)) &&
           a.target == lattice.vertex(tri.face, plus_unit(tri.x, (k + 1) % 3));
  }

 private:
  static std::tuple<int, Bary, Bary> key(int face, Bary a, Bary b) {
    if (b < a) std::swap(a, b);
    return {face, a, b};
  }

  const Quiver& q_;
  const Embedding& emb_;
  std::map<std::tuple<int, Bary, Bary>, int> black_edge_;
  std::vector<WhiteTriangle> whites_;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

FaceTrace trace_faces(const Quiver& q) {
  const Embedding& emb = require_embedding(q);
  const int m = emb.rank;
  const auto& t = emb.triangulation;
  Subdivision sub(q);
  Lattice lattice(t, m);
  const auto& whites = sub.whites();
  const int n = static_cast<int>(whites.size());

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (int w = 0; w < n; ++w) {
    for (int k = 0; k < 3; ++k) {
      if (whites[w].glue_to[k] >= 0) parent[find_root(parent, w)] = find_root(parent, whites[w].glue_to[k]);
    }
  }

  FaceTrace trace;
  trace.num_black_faces = static_cast<int>(emb.black_triangles.size());
  std::map<int, int> region_of_root;
  std::vector<std::vector<std::pair<int, int>>> boundary;
  for (int w = 0; w < n; ++w) {
    const int r = find_root(parent, w);
    auto [it, inserted] = region_of_root.try_emplace(r, static_cast<int>(trace.white_regions.size()));
    if (inserted) {
      trace.white_regions.emplace_back();
      boundary.emplace_back();
    }
    WhiteRegion& region = trace.white_regions[it->second];
    ++region.num_small_triangles;
    for (int i = 0; i < 3; ++i) {
      if (whites[w].x[i] == m) region.marked_point = t.vertex_at({whites[w].face, i});
    }
    for (int k = 0; k < 3; ++k) {
      if (whites[w].arrow[k] >= 0) boundary[it->second].emplace_back(w, k);
    }
  }

  for (std::size_t r = 0; r < trace.white_regions.size(); ++r) {
    const auto& edges = boundary[r];
    const auto start = edges.front();
    auto current = start;
    auto& arrows = trace.white_regions[r].arrows;
    do {
      if (!sub.clockwise(current.first, current.second, lattice)) trace.white_boundaries_clockwise = false;
      arrows.push_back(whites[current.first].arrow[current.second]);
      current = sub.next_boundary(current.first, current.second);
    } while (current != start && arrows.size() <= edges.size());
    if (arrows.size() != edges.size()) throw std::logic_error("white region boundary is not a single cycle");
  }

  trace.euler_characteristic = q.num_vertices() - q.num_arrows() + trace.num_black_faces +
                               static_cast<int>(trace.white_regions.size());
  return trace;
}

std::vector<CycleClass> primitive_cycles(const Quiver& q) {
  const Embedding& emb = require_embedding(q);
  const int m = emb.rank;
  const auto& t = emb.triangulation;
  const FaceTrace trace = trace_faces(q);

  std::vector<CycleClass> out;
  for (std::size_t b = 0; b < emb.black_triangles.size(); ++b) {
    CycleClass c;
    c.kind = CycleKind::BlackTriangle;
    c.black_triangle = static_cast<int>(b);
    const auto& arrows = emb.black_triangles[b].arrows;
    c.arrows.assign(arrows.begin(), arrows.end());
    out.push_back(std::move(c));
  }

  std::vector<int> p_region(t.num_vertices(), -1);
  for (std::size_t r = 0; r < trace.white_regions.size(); ++r) {
    const auto& region = trace.white_regions[r];
    if (region.marked_point >= 0) {
      p_region[region.marked_point] = static_cast<int>(r);
      continue;
    }
    CycleClass c;
    c.region = static_cast<int>(r);
    c.arrows = region.arrows;
    if (region.arrows.size() == 3) {
      c.kind = CycleKind::WhiteTriangle;
    } else if (region.arrows.size() == 4) {
      c.kind = CycleKind::WhiteQuadrilateral;
    } else {
      throw std::logic_error("white region without marked point has boundary length " +
                             std::to_string(region.arrows.size()));
    }
    out.push_back(std::move(c));
  }

  Subdivision sub(q);
  Lattice lattice(t, m);
  for (int p = 0; p < t.num_vertices(); ++p) {
    const auto corners = t.corners_clockwise(p);
    for (int j = 1; j <= m; ++j) {
      CycleClass c;
      c.kind = CycleKind::Ring;
      c.marked_point = p;
      c.level = j;
      if (j == 1) c.region = p_region[p];
      for (const Slot corner : corners) {
        const int a = corner.corner, b = (a + 1) % 3, d = (a + 2) % 3;
        // row x_a = m+1-j, from the side-(a+2) end (x_b = 0) to the side-a end (x_d = 0)
        for (int i = 0; i < j; ++i) {
          Bary from{}, to{};
          from[a] = to[a] = m + 1 - j;
          from[b] = i;
          from[d] = j - i;
          to[b] = i + 1;
          to[d] = j - i - 1;
          const int arrow = sub.arrow_between(corner.face, from, to);
          const Arrow& ar = q.arrow(arrow);
          if (ar.source != lattice.vertex(corner.face, from) || ar.target != lattice.vertex(corner.face, to)) {
            throw std::logic_error("ring arrow is not oriented clockwise around its marked point");
          }
          c.arrows.push_back(arrow);
        }
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

CycleCensus cycle_census(const Quiver& q) {
  const Embedding& emb = require_embedding(q);
  const auto cycles = primitive_cycles(q);
  CycleCensus c;
  for (const auto& cycle : cycles) {
    switch (cycle.kind) {
      case CycleKind::BlackTriangle: ++c.black_triangles; break;
      case CycleKind::WhiteTriangle: ++c.white_triangles; break;
      case CycleKind::WhiteQuadrilateral: ++c.white_quadrilaterals; break;
      case CycleKind::Ring: ++c.rings; break;
    }
  }
  const long g = emb.triangulation.surface().genus;
  const long d = emb.triangulation.surface().num_marked;
  const long m = emb.rank;
  const long edges = 6 * g - 6 + 3 * d;
  const long faces = 4 * g - 4 + 2 * d;
  c.black_formula = faces * m * (m + 1) / 2;
  c.white_formula_printed = edges * (m - 2) + faces * (m - 2) * (m - 1) / 2;
  c.white_formula_derived = edges * (m - 1) + faces * (m - 1) * (m - 2) / 2;
  c.ring_formula = d * m;
  return c;
}

IntMatrix2 exchange_matrix(const Quiver& q) {
  const int n = q.num_vertices();
  IntMatrix2 b(n, std::vector<int>(n, 0));
  for (const auto& a : q.arrows()) {
    if (a.source == a.target) continue;
    ++b[a.source][a.target];
    --b[a.target][a.source];
  }
  return b;
}

Quiver quiver_from_exchange_matrix(const IntMatrix2& b) {
  const int n = static_cast<int>(b.size());
  Quiver q(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < b[i][j]; ++k) q.add_arrow(i, j);
    }
  }
  return q;
}

namespace {

/// Joint colour refinement of two multiplicity matrices; colours are canonical ranks of signatures.
class ColourRefinement {
 public:
  using Signature = std::vector<long>;

  static std::vector<std::vector<int>> refine(const std::vector<const IntMatrix2*>& graphs,
                                              std::vector<std::vector<int>> colours) {
    std::size_t classes = count_classes(colours);
    while (true) {
      std::vector<std::vector<Signature>> sigs(graphs.size());
      std::map<Signature, int> palette;
      for (std::size_t g = 0; g < graphs.size(); ++g) {
        const auto& a = *graphs[g];
        const int n = static_cast<int>(a.size());
        sigs[g].resize(n);
        for (int v = 0; v < n; ++v) {
          std::vector<std::array<long, 3>> nbrs;
          for (int u = 0; u < n; ++u) {
            if (u == v || (a[v][u] == 0 && a[u][v] == 0)) continue;
            nbrs.push_back({colours[g][u], a[v][u], a[u][v]});
          }
          std::sort(nbrs.begin(), nbrs.end());
          Signature s{colours[g][v], a[v][v]};
          for (const auto& x : nbrs) s.insert(s.end(), x.begin(), x.end());
          sigs[g][v] = s;
          palette.emplace(std::move(s), 0);
        }
      }
      int next = 0;
      for (auto& [sig, id] : palette) id = next++;
      for (std::size_t g = 0; g < graphs.size(); ++g) {
        for (std::size_t v = 0; v < sigs[g].size(); ++v) colours[g][v] = palette.at(sigs[g][v]);
      }
      const std::size_t now = count_classes(colours);
      if (now == classes) return colours;
      classes = now;
    }
  }

  static std::size_t count_classes(const std::vector<std::vector<int>>& colours) {
    std::vector<int> all;
    for (const auto& c : colours) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  }
};

bool same_histogram(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const IntMatrix2& a1, const IntMatrix2& a2) : a1_(a1), a2_(a2), n_(static_cast<int>(a1.size())) {}

  /// Whether an isomorphism extends `fixed` (pairs v -> w); on success fills `out`.
  bool extend(const std::vector<std::pair<int, int>>& fixed, std::vector<int>* out) const {
    std::vector<std::vector<int>> colours(2, std::vector<int>(n_, 0));
    int tag = 1;
    for (const auto& [v, w] : fixed) {
      colours[0][v] = tag;
      colours[1][w] = tag;
      ++tag;
    }
    colours = ColourRefinement::refine({&a1_, &a2_}, std::move(colours));
    if (!same_histogram(colours[0], colours[1])) return false;

    // pick the smallest non-singleton class in graph 1
    std::map<int, std::vector<int>> cls1, cls2;
    for (int v = 0; v < n_; ++v) {
      cls1[colours[0][v]].push_back(v);
      cls2[colours[1][v]].push_back(v);
    }
    const std::vector<int>* best = nullptr;
    int best_colour = -1;
    for (const auto& [c, members] : cls1) {
      if (members.size() > 1 && (best == nullptr || members.size() < best->size())) {
        best = &members;
        best_colour = c;
      }
    }
    if (best == nullptr) {
      std::vector<int> sigma(n_);
      for (int v = 0; v < n_; ++v) sigma[v] = cls2.at(colours[0][v]).front();
      if (!is_isomorphism(sigma)) return false;
      if (out != nullptr) *out = std::move(sigma);
      return true;
    }
    const int v = best->front();
    for (int w : cls2.at(best_colour)) {
      auto next = fixed;
      next.emplace_back(v, w);
      if (extend(next, out)) return true;
    }
    return false;
  }

  bool is_isomorphism(const std::vector<int>& sigma) const {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (a1_[i][j] != a2_[sigma[i]][sigma[j]]) return false;
      }
    }
    return true;
  }

  int size() const { return n_; }

 private:
  const IntMatrix2& a1_;
  const IntMatrix2& a2_;
  int n_;
};

}  // namespace

std::optional<std::vector<int>> multiplicity_isomorphic(const IntMatrix2& a1, const IntMatrix2& a2) {
  if (a1.size() != a2.size()) return std::nullopt;
  const int n = static_cast<int>(a1.size());
  if (n == 0) return std::vector<int>{};
  IsomorphismSearch search(a1, a2);
  if (!search.extend({}, nullptr)) return std::nullopt;
  // lexicographically least: fix images in vertex order, smallest feasible first
  std::vector<std::pair<int, int>> fixed;
  std::vector<char> used(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      auto trial = fixed;
      trial.emplace_back(v, w);
      if (search.extend(trial, nullptr)) {
        fixed = std::move(trial);
        used[w] = 1;
        break;
      }
    }
  }
  std::vector<int> sigma(n);
  for (const auto& [v, w] : fixed) sigma[v] = w;
  return sigma;
}

std::optional<std::vector<int>> find_multiplicity_isomorphism(const IntMatrix2& a1, const IntMatrix2& a2) {
  if (a1.size() != a2.size()) return std::nullopt;
  if (a1.empty()) return std::vector<int>{};
  IsomorphismSearch search(a1, a2);
  std::vector<int> sigma;
  if (!search.extend({}, &sigma)) return std::nullopt;
  return sigma;
}

std::optional<std::vector<int>> quiver_isomorphic(const Quiver& q1, const Quiver& q2) {
  if (q1.num_vertices() != q2.num_vertices() || q1.num_arrows() != q2.num_arrows()) return std::nullopt;
  return multiplicity_isomorphic(q1.multiplicity_matrix(), q2.multiplicity_matrix());
}

std::size_t isomorphism_invariant(const IntMatrix2& a) {
  // integer colour refinement with hashed signatures; cheap enough for search buckets
  const std::size_t n = a.size();
  auto mix = [](std::size_t h, std::size_t x) { return h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); };
  std::vector<std::size_t> colour(n, 1), next(n);
  std::vector<std::size_t> nbrs;
  for (int round = 0; round < 4; ++round) {
    for (std::size_t v = 0; v < n; ++v) {
      nbrs.clear();
      for (std::size_t u = 0; u < n; ++u) {
        if (u == v || (a[v][u] == 0 && a[u][v] == 0)) continue;
        nbrs.push_back(mix(mix(colour[u], static_cast<std::size_t>(a[v][u])), static_cast<std::size_t>(a[u][v]) + 7));
      }
      std::sort(nbrs.begin(), nbrs.end());
      std::size_t h = mix(colour[v], static_cast<std::size_t>(a[v][v]));
      for (std::size_t x : nbrs) h = mix(h, x);
      next[v] = h;
    }
    colour.swap(next);
  }
  std::sort(colour.begin(), colour.end());
  std::size_t h = n;
  for (std::size_t c : colour) h = mix(h, c);
  return h;
}

std::string export_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph Q {\n";
  for (int v = 0; v < q.num_vertices(); ++v) {
    os << "  v" << v << " [label=\"" << q.vertex_name(v) << "\"];\n";
  }
  for (const auto& a : q.arrows()) {
    os << "  v" << a.source << " -> v" << a.target << " [label=\"" << a.name << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qpsurf
