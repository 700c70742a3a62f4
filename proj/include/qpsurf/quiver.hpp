#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qpsurf/surface.hpp"

namespace qpsurf {

/// Quiver vertex on an ideal edge; `position` in 1..m counted from the start of the edge's first slot.
struct EdgePoint {
  int edge = 0;
  int position = 1;
  friend bool operator==(const EdgePoint&, const EdgePoint&) = default;
};

/// Interior lattice point of a face: barycentric integers summing to m+1, all >= 1,
/// indexed by the face's corners.
struct InteriorPoint {
  int face = 0;
  std::array<int, 3> bary{};
  friend bool operator==(const InteriorPoint&, const InteriorPoint&) = default;
};

using VertexLabel = std::variant<EdgePoint, InteriorPoint>;

struct ArrowTag {
  int black_triangle = 0;
  int side = 0;  // arrow runs from vertex `side` to vertex `side + 1` of the black triangle
  friend bool operator==(const ArrowTag&, const ArrowTag&) = default;
};

struct Arrow {
  int source = 0;
  int target = 0;
  std::string name;
  std::optional<ArrowTag> tag;
};

/// Downward triangle of the side-(m+1) subdivision of `face`. With y summing to m+2
/// (all entries >= 1), its vertices are the lattice points y - e_i, listed anticlockwise.
struct BlackTriangle {
  int face = 0;
  std::array<int, 3> y{};
  std::array<int, 3> vertices{};
  std::array<int, 3> arrows{};
};

/// Geometric data of an inscribed quiver Q(Delta_m).
struct Embedding {
  IdealTriangulation triangulation;
  int rank = 1;
  std::vector<VertexLabel> labels;
  std::vector<BlackTriangle> black_triangles;
};

class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int num_vertices) : num_vertices_(num_vertices) {}

  int num_vertices() const { return num_vertices_; }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int id) const { return arrows_.at(id); }

  /// Appends an arrow; an empty name becomes "a<id>". Returns the id.
  int add_arrow(int source, int target, std::string name = {}, std::optional<ArrowTag> tag = std::nullopt);

  /// a(i -> j)
  std::vector<std::vector<int>> multiplicity_matrix() const;
  std::vector<int> arrows_between(int source, int target) const;

  const Embedding* embedding() const { return embedding_.get(); }
  void set_embedding(std::shared_ptr<const Embedding> e) { embedding_ = std::move(e); }
  /// Drops embedding and tags (used once arrows stop matching the surface picture).
  void forget_embedding();

  std::string vertex_name(int v) const;

 private:
  int num_vertices_ = 0;
  std::vector<Arrow> arrows_;
  std::shared_ptr<const Embedding> embedding_;
};

/// Q(Delta_m): m points on every ideal edge, the side-(m+1) subdivision of each
/// face, and each black triangle's boundary oriented anticlockwise.
/// Vertex order: edge points by (edge, position), then interior points by (face, bary).
/// Arrow order: by black triangle (face, then y lexicographic), then side.
Quiver inscribed_quiver(const IdealTriangulation& t, int m);

enum class CycleKind { BlackTriangle, WhiteTriangle, WhiteQuadrilateral, Ring };

std::string to_string(CycleKind kind);

struct CycleClass {
  CycleKind kind = CycleKind::BlackTriangle;
  std::vector<int> arrows;  // directed closed path, in traversal order
  int black_triangle = -1;  // BlackTriangle
  int region = -1;          // white region id (white kinds), or the p-region for rings at level 1
  int marked_point = -1;    // Ring
  int level = 0;            // Ring: j in 1..m

  std::string label() const;
};

/// Complementary region of the black triangles, traced on the surface.
struct WhiteRegion {
  std::vector<int> arrows;        // boundary, in arrow direction
  int marked_point = -1;          // marked point inside, or -1
  int num_small_triangles = 0;
};

/// Face-tracing of the embedded quiver: black triangles plus all white regions.
struct FaceTrace {
  std::vector<WhiteRegion> white_regions;
  int num_black_faces = 0;
  /// V - A + (#black + #white) of the embedded graph.
  int euler_characteristic = 0;
  /// Every boundary arrow of every white region runs clockwise around that region.
  bool white_boundaries_clockwise = true;
};

/// Throws std::invalid_argument("embedding tags missing") for abstract quivers.
FaceTrace trace_faces(const Quiver& q);

/// t_b (black id order), then q_w (region order), then rings ordered by (p, j).
std::vector<CycleClass> primitive_cycles(const Quiver& q);

struct CycleCensus {
  long black_triangles = 0;
  long white_triangles = 0;
  long white_quadrilaterals = 0;
  long rings = 0;

  // closed forms
  long black_formula = 0;         // (4g-4+2d) m(m+1)/2
  long white_formula_printed = 0;  // (6g-6+3d)(m-2) + (4g-4+2d)(m-2)(m-1)/2
  long white_formula_derived = 0;  // (6g-6+3d)(m-1) + (4g-4+2d)(m-1)(m-2)/2
  long ring_formula = 0;          // d m

  bool black_matches() const { return black_triangles == black_formula; }
  bool rings_match() const { return rings == ring_formula; }
  bool white_matches_printed() const { return white_triangles + white_quadrilaterals == white_formula_printed; }
  bool white_matches_derived() const { return white_triangles + white_quadrilaterals == white_formula_derived; }
  long total() const { return black_triangles + white_triangles + white_quadrilaterals + rings; }
};

CycleCensus cycle_census(const Quiver& q);

using IntMatrix2 = std::vector<std::vector<int>>;

/// B[i][j] = a(i->j) - a(j->i)
IntMatrix2 exchange_matrix(const Quiver& q);

/// Quiver whose arrows realise the positive entries of an antisymmetric matrix.
Quiver quiver_from_exchange_matrix(const IntMatrix2& b);

/// Lexicographically least vertex bijection sigma with a1(i->j) = a2(sigma i -> sigma j).
std::optional<std::vector<int>> quiver_isomorphic(const Quiver& q1, const Quiver& q2);
std::optional<std::vector<int>> multiplicity_isomorphic(const IntMatrix2& a1, const IntMatrix2& a2);
/// Some bijection (first found by individualisation-refinement), without the lexicographic pass.
std::optional<std::vector<int>> find_multiplicity_isomorphism(const IntMatrix2& a1, const IntMatrix2& a2);

/// Isomorphism-invariant hash of a multiplicity matrix (colour refinement).
std::size_t isomorphism_invariant(const IntMatrix2& a);

std::string export_dot(const Quiver& q);

}  // namespace qpsurf
