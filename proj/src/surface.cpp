#include "qpsurf/surface.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace qpsurf {

void MarkedSurface::require_valid() const {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1, got " + std::to_string(genus));
  if (num_marked < 1) throw std::invalid_argument("number of marked points must be >= 1, got " + std::to_string(num_marked));
}

IdealTriangulation::IdealTriangulation(MarkedSurface surface, std::vector<int> partner)
    : surface_(surface), partner_(std::move(partner)) {
  const int n = static_cast<int>(partner_.size());
  involution_ok_ = n % 3 == 0 && n > 0;
  for (int s = 0; s < n && involution_ok_; ++s) {
    const int p = partner_[s];
    involution_ok_ = p >= 0 && p < n && p != s && partner_[p] == s;
  }
  if (!involution_ok_) return;

  edge_of_slot_.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (s < partner_[s]) {
      edge_of_slot_[s] = edge_of_slot_[partner_[s]] = static_cast<int>(edges_.size());
      edges_.push_back({Slot::from_index(s), Slot::from_index(partner_[s])});
    }
  }

  vertex_of_corner_.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (vertex_of_corner_[s] >= 0) continue;
    Slot c = Slot::from_index(s);
    while (vertex_of_corner_[c.index()] < 0) {
      vertex_of_corner_[c.index()] = num_vertices_;
      c = clockwise_corner(c);
    }
    ++num_vertices_;
  }
}

std::vector<Slot> IdealTriangulation::corners_clockwise(int v) const {
  std::vector<Slot> out;
  const auto it = std::find(vertex_of_corner_.begin(), vertex_of_corner_.end(), v);
  if (it == vertex_of_corner_.end()) return out;
  const Slot start = Slot::from_index(static_cast<int>(it - vertex_of_corner_.begin()));
  Slot c = start;
  do {
    out.push_back(c);
    c = clockwise_corner(c);
  } while (c != start);
  return out;
}

std::vector<int> IdealTriangulation::vertex_valences() const {
  std::vector<int> valence(num_vertices_, 0);
  for (int v : vertex_of_corner_) ++valence[v];
  return valence;
}

std::vector<std::string> validate(const IdealTriangulation& t, const MarkedSurface& s) {
  std::vector<std::string> report;
  if (s.genus < 1) report.emplace_back("genus must be at least 1");
  if (s.num_marked < 1) report.emplace_back("at least one marked point required");
  if (!t.involution_ok_) {
    report.emplace_back("pairing is not a fixed-point-free involution on the face slots");
    return report;
  }
  for (int f = 0; f < t.num_faces(); ++f) {
    for (int c = 0; c < 3; ++c) {
      if (t.partner({f, c}).face == f) {
        report.emplace_back("self-folded triangle: face " + std::to_string(f) + " has two sides glued together");
        break;
      }
    }
  }
  // connectivity over face adjacency
  std::vector<char> seen(t.num_faces(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int c = 0; c < 3; ++c) {
      const int g = t.partner({f, c}).face;
      if (!seen[g]) {
        seen[g] = 1;
        ++reached;
        queue.push_back(g);
      }
    }
  }
  if (reached != t.num_faces()) report.emplace_back("surface is not connected");

  const int v = t.num_vertices(), e = t.num_edges(), f = t.num_faces();
  if (v != s.num_marked) {
    report.emplace_back("vertex count " + std::to_string(v) + " differs from marked points " +
                        std::to_string(s.num_marked));
  }
  if (e != s.expected_edges()) {
    report.emplace_back("edge count " + std::to_string(e) + " differs from 6g-6+3d = " +
                        std::to_string(s.expected_edges()));
  }
  if (f != s.expected_faces()) {
    report.emplace_back("face count " + std::to_string(f) + " differs from 4g-4+2d = " +
                        std::to_string(s.expected_faces()));
  }
  if (v - e + f != s.euler_characteristic()) {
    report.emplace_back("Euler characteristic " + std::to_string(v - e + f) + " differs from 2-2g = " +
                        std::to_string(s.euler_characteristic()));
  }
  return report;
}

int traced_genus(const IdealTriangulation& t) {
  return (2 - (t.num_vertices() - t.num_edges() + t.num_faces())) / 2;
}

IdealTriangulation standard_triangulation(const MarkedSurface& s) {
  s.require_valid();
  const int g = s.genus;
  const int polygon = 4 * g;
  const int fan_faces = polygon - 2;
  std::vector<int> partner(3 * fan_faces, -1);
  auto glue = [&partner](Slot a, Slot b) {
    partner[a.index()] = b.index();
    partner[b.index()] = a.index();
  };
  // side s_i of the polygon (P_i -> P_{i+1}) as a slot of the fan
  auto side_slot = [&](int i) -> Slot {
    if (i == 0) return {0, 0};
    if (i == polygon - 1) return {fan_faces - 1, 2};
    return {i - 1, 1};
  };
  // diagonal P0-P_j is slot 2 of face j-2 and slot 0 of face j-1
  for (int j = 2; j <= polygon - 2; ++j) glue({j - 2, 2}, {j - 1, 0});
  for (int k = 0; k < g; ++k) {
    glue(side_slot(4 * k), side_slot(4 * k + 2));
    glue(side_slot(4 * k + 1), side_slot(4 * k + 3));
  }

  for (int extra = 1; extra < s.num_marked; ++extra) {
    const int f1 = static_cast<int>(partner.size()) / 3;
    const int f2 = f1 + 1;
    partner.resize(partner.size() + 6, -1);
    // old slots 1 and 2 of face 0 move to slot 0 of f1 and f2
    const int old1 = partner[Slot{0, 1}.index()];
    const int old2 = partner[Slot{0, 2}.index()];
    auto rehome = [&partner](Slot moved, int old_partner) {
      partner[moved.index()] = old_partner;
      partner[old_partner] = moved.index();
    };
    // face 0 may be glued to itself only through slots 1/2 in degenerate inputs; not for fans
    rehome({f1, 0}, old1);
    rehome({f2, 0}, old2);
    glue({0, 1}, {f1, 2});
    glue({f1, 1}, {f2, 2});
    glue({f2, 1}, {0, 2});
  }

  IdealTriangulation t(s, std::move(partner));
  const auto report = validate(t, s);
  if (!report.empty()) {
    throw std::runtime_error("no self-folded-free triangulation constructed for g=" + std::to_string(s.genus) +
                             ", d=" + std::to_string(s.num_marked) + ": " + report.front());
  }
  return t;
}

namespace {

std::optional<FlipResult> try_flip(const IdealTriangulation& t, int edge) {
  if (edge < 0 || edge >= t.num_edges()) return std::nullopt;
  const Slot s = t.edges()[edge].first;
  const Slot sp = t.edges()[edge].second;
  if (s.face == sp.face) return std::nullopt;
  const int f = s.face, fp = sp.face;
  const Slot alpha = s.next();          // B -> C
  const Slot beta = s.next().next();    // C -> A
  const Slot gamma = sp.next();         // A -> D
  const Slot delta = sp.next().next();  // D -> B

  const int n = static_cast<int>(t.partner_indices().size());
  std::vector<int> moved(n);
  std::iota(moved.begin(), moved.end(), 0);
  moved[delta.index()] = Slot{f, 0}.index();
  moved[alpha.index()] = Slot{f, 1}.index();
  moved[beta.index()] = Slot{fp, 0}.index();
  moved[gamma.index()] = Slot{fp, 1}.index();

  std::vector<int> partner(n, -1);
  for (int x = 0; x < n; ++x) {
    if (x == s.index() || x == sp.index()) continue;
    partner[moved[x]] = moved[t.partner_indices()[x]];
  }
  partner[Slot{f, 2}.index()] = Slot{fp, 2}.index();
  partner[Slot{fp, 2}.index()] = Slot{f, 2}.index();

  IdealTriangulation out(t.surface(), std::move(partner));
  if (!validate(out).empty()) return std::nullopt;
  return FlipResult{out, out.edge_of({f, 2})};
}

}  // namespace

bool is_flippable(const IdealTriangulation& t, int edge) { return try_flip(t, edge).has_value(); }

FlipResult flip(const IdealTriangulation& t, int edge) {
  auto result = try_flip(t, edge);
  if (!result) throw std::invalid_argument("edge not flippable: " + std::to_string(edge));
  return *std::move(result);
}

TriangulationCanonicalForm canonical_form(const IdealTriangulation& t) {
  const int faces = t.num_faces();
  TriangulationCanonicalForm best;
  for (int start = 0; start < 3 * faces; ++start) {
    std::vector<int> face_map(faces, -1), shift(faces, 0), order;
    const Slot s0 = Slot::from_index(start);
    face_map[s0.face] = 0;
    shift[s0.face] = s0.corner;
    order.push_back(s0.face);
    std::vector<int> code;
    code.reserve(3 * faces);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int f = order[i];
      for (int j = 0; j < 3; ++j) {
        const Slot p = t.partner({f, (shift[f] + j) % 3});
        if (face_map[p.face] < 0) {
          face_map[p.face] = static_cast<int>(order.size());
          shift[p.face] = p.corner;
          order.push_back(p.face);
        }
        code.push_back(3 * face_map[p.face] + (p.corner - shift[p.face] + 3) % 3);
      }
    }
    if (best.code.empty() || code < best.code) {
      best.code = std::move(code);
      best.face_map = std::move(face_map);
      best.corner_shift = std::move(shift);
    }
  }
  return best;
}

bool isomorphic(const IdealTriangulation& a, const IdealTriangulation& b) {
  if (a.num_faces() != b.num_faces()) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

}  // namespace qpsurf
