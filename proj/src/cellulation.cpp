#include "qpsurf/cellulation.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qpsurf {

DualCellulation dual_cellulation(const IdealTriangulation& t, int m) {
  const Quiver q = inscribed_quiver(t, m);
  const Embedding& emb = *q.embedding();
  DualCellulation d;
  d.num_vertices = static_cast<int>(emb.black_triangles.size());
  d.cells.resize(q.num_vertices());
  for (int v = 0; v < q.num_vertices(); ++v) d.cells[v].quiver_vertex = v;
  for (std::size_t b = 0; b < emb.black_triangles.size(); ++b) {
    for (int v : emb.black_triangles[b].vertices) d.cells[v].black_triangles.push_back(static_cast<int>(b));
  }
  const FaceTrace trace = trace_faces(q);
  for (std::size_t r = 0; r < trace.white_regions.size(); ++r) {
    d.regions.push_back({static_cast<int>(r), trace.white_regions[r].marked_point});
  }
  return d;
}

std::string Sphere::label() const {
  if (kind == SphereKind::Matching) return "M(e" + std::to_string(edge) + "," + std::to_string(layer) + ")";
  return "T(f" + std::to_string(face) + ";" + std::to_string(bary[0]) + "," + std::to_string(bary[1]) + "," +
         std::to_string(bary[2]) + ")";
}

int SphereConfiguration::num_matching() const {
  return static_cast<int>(
      std::count_if(spheres.begin(), spheres.end(), [](const Sphere& s) { return s.kind == SphereKind::Matching; }));
}

int SphereConfiguration::num_tripod() const { return static_cast<int>(spheres.size()) - num_matching(); }

SphereConfiguration sphere_configuration(const IdealTriangulation& t, int m) {
  const Quiver q = inscribed_quiver(t, m);
  const Embedding& emb = *q.embedding();
  SphereConfiguration c;
  for (const auto& label : emb.labels) {
    Sphere s;
    if (const auto* e = std::get_if<EdgePoint>(&label)) {
      s.kind = SphereKind::Matching;
      s.edge = e->edge;
      s.layer = e->position;
    } else {
      const auto& p = std::get<InteriorPoint>(label);
      s.kind = SphereKind::Tripod;
      s.face = p.face;
      s.bary = p.bary;
    }
    c.spheres.push_back(s);
  }
  for (const auto& b : emb.black_triangles) {
    for (int i = 0; i < 3; ++i) {
      const int u = b.vertices[i], v = b.vertices[(i + 1) % 3];
      ++c.intersections[{std::min(u, v), std::max(u, v)}];
    }
  }
  return c;
}

std::map<std::pair<int, int>, int> underlying_multigraph(const Quiver& q) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& a : q.arrows()) ++out[{std::min(a.source, a.target), std::max(a.source, a.target)}];
  return out;
}

GeometryCensus geometry_census(const MarkedSurface& s, int m) {
  const long g = s.genus, d = s.num_marked, mm = m;
  GeometryCensus c;
  c.h2_rank = d * mm + 1;
  c.branch_points = mm * (mm + 1) * (2 * g - 2 + d);
  c.dual_vertices = static_cast<long>(s.expected_faces()) * mm * (mm + 1) / 2;
  c.sphere_total = (6 * g - 6 + 3 * d) * mm + (2 * g - 2 + d) * mm * (mm - 1);
  c.lefschetz_per_face = mm * (mm + 1) / 2;
  return c;
}

EigenOrdering standard_eigen_ordering(int num_marked, int m) {
  EigenOrdering e;
  e.rank = m;
  std::vector<int> identity(m + 1);
  std::iota(identity.begin(), identity.end(), 1);
  e.orderings.assign(num_marked, identity);
  return e;
}

EigenOrdering random_eigen_ordering(int num_marked, int m, std::mt19937_64& rng) {
  EigenOrdering e = standard_eigen_ordering(num_marked, m);
  for (auto& o : e.orderings) {
    // Fisher-Yates with modulo draws, so sequences are reproducible across standard libraries
    for (std::size_t i = o.size(); i > 1; --i) std::swap(o[i - 1], o[rng() % i]);
  }
  return e;
}

bool is_valid(const EigenOrdering& e) {
  for (const auto& o : e.orderings) {
    std::vector<int> sorted = o;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(e.rank + 1);
    std::iota(expected.begin(), expected.end(), 1);
    if (sorted != expected) return false;
  }
  return true;
}

std::vector<std::vector<int>> background_cycle(const EigenOrdering& e) {
  std::vector<std::vector<int>> z;
  for (const auto& o : e.orderings) {
    std::vector<int> even;
    for (std::size_t i = 1; i < o.size(); i += 2) even.push_back(o[i]);
    std::sort(even.begin(), even.end());
    z.push_back(std::move(even));
  }
  return z;
}

DiscCensus disc_census(const EigenOrdering& e, const Quiver* q, const Potential* w) {
  if (!is_valid(e)) throw std::invalid_argument("inconsistent ordering");
  std::map<std::pair<int, int>, Rational> areas;
  if (q != nullptr && w != nullptr) {
    for (const auto& c : primitive_cycles(*q)) {
      if (c.kind != CycleKind::Ring) continue;
      const auto v = w->coefficient(CyclicWord(c.arrows)).valuation();
      if (v) areas[{c.marked_point, c.level}] = *v;
    }
  }
  DiscCensus census;
  for (std::size_t p = 0; p < e.orderings.size(); ++p) {
    for (int j = 1; j <= e.rank; ++j) {
      DiscPair pair;
      pair.marked_point = static_cast<int>(p);
      pair.level = j;
      const auto it = areas.find({static_cast<int>(p), j});
      const Rational area = it == areas.end() ? Rational(0) : it->second;
      pair.discs[0] = {e.orderings[p][j - 1], +1, area};
      pair.discs[1] = {e.orderings[p][j], -1, area};
      census.pairs.push_back(pair);
    }
  }
  return census;
}

ParityReport disc_parity_check(const DiscCensus& census, const std::vector<std::vector<int>>& z) {
  ParityReport report;
  for (const auto& pair : census.pairs) {
    if (pair.marked_point < 0 || pair.marked_point >= static_cast<int>(z.size())) {
      throw std::invalid_argument("inconsistent ordering");
    }
    const auto& zp = z[pair.marked_point];
    ParityEntry entry{pair.marked_point, pair.level, 0, false};
    for (const auto& disc : pair.discs) {
      if (std::find(zp.begin(), zp.end(), disc.component) != zp.end()) entry.signed_count += disc.sign;
    }
    const std::string name = "L_p" + std::to_string(pair.marked_point) + "^(" + std::to_string(pair.level) + ")";
    if (pair.discs[0].sign + pair.discs[1].sign != 0) report.violations.push_back(name + ": discs do not have opposite signs");
    if (pair.discs[0].component == pair.discs[1].component) {
      report.violations.push_back(name + ": both discs meet component " + std::to_string(pair.discs[0].component));
    }
    entry.ok = entry.signed_count != 0;
    if (!entry.ok) report.violations.push_back(name + ": signed intersection with Z_b is 0");
    report.entries.push_back(entry);
  }
  return report;
}

std::string export_svg(const IdealTriangulation& t, int m) {
  const Quiver q = inscribed_quiver(t, m);
  const Embedding& emb = *q.embedding();
  constexpr double kSize = 240, kMargin = 30;
  const double height = kSize * 0.8660254037844386;
  const int faces = t.num_faces();
  const int columns = std::min(faces, 4);
  const int rows = (faces + columns - 1) / columns;

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << columns * (kSize + 2 * kMargin) << "\" height=\""
     << rows * (height + 2 * kMargin) << "\">\n";
  for (int f = 0; f < faces; ++f) {
    const double ox = (f % columns) * (kSize + 2 * kMargin) + kMargin;
    const double oy = (f / columns) * (height + 2 * kMargin) + kMargin;
    // corner 0 top, 1 bottom-left, 2 bottom-right: anticlockwise on screen
    const std::array<std::array<double, 2>, 3> corner{{{ox + kSize / 2, oy}, {ox, oy + height}, {ox + kSize, oy + height}}};
    auto point = [&](const std::array<int, 3>& x) {
      std::array<double, 2> p{0, 0};
      for (int i = 0; i < 3; ++i) {
        p[0] += x[i] * corner[i][0] / (m + 1);
        p[1] += x[i] * corner[i][1] / (m + 1);
      }
      return p;
    };
    os << "<g id=\"face" << f << "\">\n";
    os << "<polygon points=\"";
    for (const auto& c : corner) os << c[0] << "," << c[1] << " ";
    os << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << ox << "\" y=\"" << oy + 12 << "\" font-size=\"12\">face " << f << "</text>\n";
    for (const auto& b : emb.black_triangles) {
      if (b.face != f) continue;
      std::array<std::array<double, 2>, 3> v{};
      std::array<double, 2> centre{0, 0};
      for (int i = 0; i < 3; ++i) {
        auto x = b.y;
        --x[i];
        v[i] = point(x);
        centre[0] += v[i][0] / 3;
        centre[1] += v[i][1] / 3;
      }
      os << "<polygon points=\"";
      for (const auto& p : v) os << p[0] << "," << p[1] << " ";
      os << "\" fill=\"#bbbbbb\" stroke=\"#555555\"/>\n";
      for (int i = 0; i < 3; ++i) {
        // half of a matching path or tripod leg: black-triangle centre to quiver vertex
        os << "<line x1=\"" << centre[0] << "\" y1=\"" << centre[1] << "\" x2=\"" << v[i][0] << "\" y2=\"" << v[i][1]
           << "\" stroke=\"#cc0000\"/>\n";
      }
      os << "<circle cx=\"" << centre[0] << "\" cy=\"" << centre[1] << "\" r=\"3\" fill=\"#cc0000\"/>\n";
      for (int i = 0; i < 3; ++i) {
        os << "<circle cx=\"" << v[i][0] << "\" cy=\"" << v[i][1] << "\" r=\"2.5\" fill=\"black\"><title>"
           << q.vertex_name(b.vertices[i]) << "</title></circle>\n";
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace qpsurf
