#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace qpsurf {

/// Closed oriented surface of genus g >= 1 with d >= 1 marked points.
struct MarkedSurface {
  int genus = 1;
  int num_marked = 1;

  int expected_edges() const { return 6 * genus - 6 + 3 * num_marked; }
  int expected_faces() const { return 4 * genus - 4 + 2 * num_marked; }
  int euler_characteristic() const { return 2 - 2 * genus; }

  /// Throws std::invalid_argument unless genus >= 1 and num_marked >= 1.
  void require_valid() const;

  friend bool operator==(const MarkedSurface&, const MarkedSurface&) = default;
};

/// Side `corner` of triangle `face`, running from corner `corner` to corner `corner + 1`
/// in the boundary orientation induced by the surface.
struct Slot {
  int face = 0;
  int corner = 0;

  int index() const { return 3 * face + corner; }
  static Slot from_index(int i) { return {i / 3, i % 3}; }
  Slot next() const { return {face, (corner + 1) % 3}; }
  Slot prev() const { return {face, (corner + 2) % 3}; }

  friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct Edge {
  Slot first;   // the smaller slot; positions along the edge are measured from its start
  Slot second;
};

/// Ideal triangulation stored as a combinatorial map: F oriented triangles and a
/// fixed-point-free involution on the 3F sides. Gluing always reverses direction,
/// so the surface is oriented by the corner order of every face.
class IdealTriangulation {
 public:
  IdealTriangulation() = default;
  /// `partner[s]` is the slot index glued to slot index s. Derived data is computed
  /// eagerly; no validation happens here (see validate()).
  IdealTriangulation(MarkedSurface surface, std::vector<int> partner);

  const MarkedSurface& surface() const { return surface_; }
  int num_faces() const { return static_cast<int>(partner_.size()) / 3; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_vertices() const { return num_vertices_; }

  Slot partner(Slot s) const { return Slot::from_index(partner_[s.index()]); }
  const std::vector<int>& partner_indices() const { return partner_; }

  const std::vector<Edge>& edges() const { return edges_; }
  int edge_of(Slot s) const { return edge_of_slot_[s.index()]; }

  /// Vertex at corner `c` of `face` (the start point of Slot{face, c}).
  int vertex_at(Slot corner) const { return vertex_of_corner_[corner.index()]; }
  /// Corners at `v` in clockwise order, starting from the least corner.
  std::vector<Slot> corners_clockwise(int v) const;
  /// Number of edge-ends at each vertex (= number of corners there).
  std::vector<int> vertex_valences() const;

  /// Corner reached by rotating clockwise around the vertex at `corner`.
  Slot clockwise_corner(Slot corner) const { return partner(corner).next(); }

  friend bool operator==(const IdealTriangulation& a, const IdealTriangulation& b) {
    return a.surface_ == b.surface_ && a.partner_ == b.partner_;
  }

 private:
  MarkedSurface surface_;
  std::vector<int> partner_;
  std::vector<Edge> edges_;
  std::vector<int> edge_of_slot_;
  std::vector<int> vertex_of_corner_;
  int num_vertices_ = 0;
  bool involution_ok_ = false;

  friend std::vector<std::string> validate(const IdealTriangulation&, const MarkedSurface&);
};

/// Names of violated invariants; empty means valid.
std::vector<std::string> validate(const IdealTriangulation& t, const MarkedSurface& s);
inline std::vector<std::string> validate(const IdealTriangulation& t) { return validate(t, t.surface()); }

/// Genus recovered from V - E + F of the map (independent of the stored surface).
int traced_genus(const IdealTriangulation& t);

/// Deterministic generator. Genus g: the 4g-gon with side word a1 b1 a1^-1 b1^-1 ...,
/// fan-triangulated from polygon vertex 0 (face i-1 = (P0, P_i, P_{i+1})). Each further
/// marked point is added by splitting face 0 = (A,B,C) into (A,B,X), (B,C,X), (C,A,X);
/// the two new faces are appended.
IdealTriangulation standard_triangulation(const MarkedSurface& s);

struct FlipResult {
  IdealTriangulation triangulation;
  int new_edge = -1;
};

/// Replaces edge e by the other diagonal of its quadrilateral. The two faces keep
/// their indices; face f becomes (D,B,C) and face f' becomes (C,A,D) where f = (A,B,C)
/// with e = A->B and f' = (B,A,D). Throws std::invalid_argument("edge not flippable").
FlipResult flip(const IdealTriangulation& t, int edge);
bool is_flippable(const IdealTriangulation& t, int edge);

/// Canonical code: minimum over all starting slots of the breadth-first relabelled
/// partner table. Equal codes <=> orientation-preserving isomorphism.
struct TriangulationCanonicalForm {
  std::vector<int> code;
  std::vector<int> face_map;    // old face -> new face for the minimizing start
  std::vector<int> corner_shift;  // rotation applied to each old face
};
TriangulationCanonicalForm canonical_form(const IdealTriangulation& t);
bool isomorphic(const IdealTriangulation& a, const IdealTriangulation& b);

}  // namespace qpsurf
