#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qpsurf/potential.hpp"
#include "qpsurf/quiver.hpp"
#include "qpsurf/surface.hpp"

namespace qpsurf {

/// Cell of the dual cellulation through one quiver vertex: a matching path joining two
/// black-triangle centres (edge point) or a tripod joining three (interior point).
struct DualCell {
  int quiver_vertex = 0;
  std::vector<int> black_triangles;
};

struct DualRegion {
  int white_region = 0;
  int marked_point = -1;
};

/// Vertices are the black triangles of Q(Delta_m).
struct DualCellulation {
  int num_vertices = 0;
  std::vector<DualCell> cells;
  std::vector<DualRegion> regions;
};

DualCellulation dual_cellulation(const IdealTriangulation& t, int m);

enum class SphereKind { Matching, Tripod };

struct Sphere {
  SphereKind kind = SphereKind::Matching;
  int edge = -1;   // Matching
  int layer = 0;   // Matching: 1..m
  int face = -1;   // Tripod
  std::array<int, 3> bary{};  // Tripod
  std::string label() const;
};

/// Spheres are indexed like the quiver vertices.
struct SphereConfiguration {
  std::vector<Sphere> spheres;
  /// (i, j) with i < j -> number of intersection points (one per shared black triangle).
  std::map<std::pair<int, int>, int> intersections;
  int num_matching() const;
  int num_tripod() const;
};

SphereConfiguration sphere_configuration(const IdealTriangulation& t, int m);

/// Undirected multiplicities a(i->j) + a(j->i) of the quiver, in the same keyed form.
std::map<std::pair<int, int>, int> underlying_multigraph(const Quiver& q);

struct GeometryCensus {
  long h2_rank = 0;             // d m + 1
  long branch_points = 0;       // m (m+1) (2g-2+d)
  long dual_vertices = 0;       // F m (m+1) / 2
  long sphere_total = 0;        // (6g-6+3d) m + (2g-2+d) m (m-1)
  long lefschetz_per_face = 0;  // m (m+1) / 2
};

GeometryCensus geometry_census(const MarkedSurface& s, int m);

/// orderings[p] is a permutation of the fibre components 1..m+1 over marked point p.
struct EigenOrdering {
  int rank = 1;
  std::vector<std::vector<int>> orderings;
};

EigenOrdering standard_eigen_ordering(int num_marked, int m);
EigenOrdering random_eigen_ordering(int num_marked, int m, std::mt19937_64& rng);
bool is_valid(const EigenOrdering& e);

/// Per marked point, the components at even positions (2, 4, ...) of its ordering.
std::vector<std::vector<int>> background_cycle(const EigenOrdering& e);

struct Disc {
  int component = 0;
  int sign = 0;
  Rational area = 0;
};

struct DiscPair {
  int marked_point = 0;
  int level = 0;
  std::array<Disc, 2> discs;
};

struct DiscCensus {
  std::vector<DiscPair> pairs;  // ordered by (p, j)
};

/// Discs of L_p^(j) meet components at positions j and j+1 with signs +1, -1. Areas are
/// the valuations of the ring coefficients of `w` when given, else 0.
DiscCensus disc_census(const EigenOrdering& e, const Quiver* q = nullptr, const Potential* w = nullptr);

struct ParityEntry {
  int marked_point = 0;
  int level = 0;
  int signed_count = 0;
  bool ok = false;
};

struct ParityReport {
  std::vector<ParityEntry> entries;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Signed intersection of each disc pair with Z_b. Throws std::invalid_argument
/// ("inconsistent ordering") when census and background cycle disagree on marked points.
ParityReport disc_parity_check(const DiscCensus& census, const std::vector<std::vector<int>>& z);

/// One chart per ideal triangle: lattice, black triangles, dual vertices, matching paths, tripods.
std::string export_svg(const IdealTriangulation& t, int m);

}  // namespace qpsurf
