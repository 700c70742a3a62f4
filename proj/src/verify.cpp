#include "qpsurf/verify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "qpsurf/braid.hpp"
#include "qpsurf/cellulation.hpp"
#include "qpsurf/mutation.hpp"
#include "qpsurf/potential.hpp"
#include "qpsurf/quiver.hpp"
#include "qpsurf/surface.hpp"

namespace qpsurf {

namespace {

void record(SuiteResult& r, bool ok, const std::string& line) {
  ++r.cases;
  if (!ok) ++r.failures;
  r.lines.push_back((ok ? "ok   " : "FAIL ") + line);
}

std::string surface_tag(int g, int d, int m) {
  return "g=" + std::to_string(g) + " d=" + std::to_string(d) + " m=" + std::to_string(m);
}

NovikovScalar random_unit(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 5) + 1;
  const long den = static_cast<long>(rng() % 5) + 1;
  const long sign = rng() % 2 == 0 ? 1 : -1;
  const Rational exponent(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 3) + 1);
  Rational coefficient(sign * num, den);
  coefficient.canonicalize();
  return NovikovScalar::monomial(coefficient, exponent);
}

DiagonalGauge random_gauge(int num_arrows, std::mt19937_64& rng) {
  DiagonalGauge g;
  for (int a = 0; a < num_arrows; ++a) g[a] = random_unit(rng);
  return g;
}

bool unit_on_non_rings(const Quiver& q, const Potential& w) {
  for (const auto& c : primitive_cycles(q)) {
    if (c.kind != CycleKind::Ring && !w.coefficient(CyclicWord(c.arrows)).is_one()) return false;
  }
  return true;
}

std::vector<NovikovScalar> ring_coefficients(const Quiver& q, const std::vector<NovikovScalar>& per_point_level1,
                                             const std::vector<NovikovScalar>& per_point_level2) {
  const auto cycles = primitive_cycles(q);
  std::vector<NovikovScalar> c(cycles.size(), NovikovScalar(1));
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].kind != CycleKind::Ring) continue;
    c[i] = cycles[i].level == 1 ? per_point_level1[cycles[i].marked_point] : per_point_level2[cycles[i].marked_point];
  }
  return c;
}

}  // namespace

SuiteResult verify_counts() {
  SuiteResult r{"counts", {}, 0, 0};
  for (int g = 1; g <= 3; ++g) {
    for (int d = 1; d <= 4; ++d) {
      const MarkedSurface s{g, d};
      const IdealTriangulation t = standard_triangulation(s);
      const long e = 6 * g - 6 + 3 * d, f = 4 * g - 4 + 2 * d;
      const bool tri_ok = validate(t).empty() && traced_genus(t) == g && t.num_edges() == e && t.num_faces() == f;
      record(r, tri_ok,
             "triangulation g=" + std::to_string(g) + " d=" + std::to_string(d) + ": E=" + std::to_string(t.num_edges()) +
                 " F=" + std::to_string(t.num_faces()));
      for (int m = 1; m <= 4; ++m) {
        const Quiver q = inscribed_quiver(t, m);
        const GeometryCensus geo = geometry_census(s, m);
        const long vertices = m * e + f * m * (m - 1) / 2;
        const long arrows = 3 * f * m * (m + 1) / 2;
        const long dual = f * m * (m + 1) / 2;
        std::ostringstream os;
        os << surface_tag(g, d, m) << ": vertices=" << q.num_vertices() << " arrows=" << q.num_arrows()
           << " spheres=" << geo.sphere_total << " dual=" << geo.dual_vertices << " branch=" << geo.branch_points
           << " h2=" << geo.h2_rank;
        const bool ok = q.num_vertices() == vertices && geo.sphere_total == vertices && q.num_arrows() == arrows &&
                        geo.dual_vertices == dual && geo.branch_points == dual && geo.h2_rank == d * m + 1 &&
                        dual_cellulation(t, m).num_vertices == dual;
        record(r, ok, os.str());

        const FaceTrace trace = trace_faces(q);
        const CycleCensus c = cycle_census(q);
        std::ostringstream cs;
        cs << surface_tag(g, d, m) << ": t_b=" << c.black_triangles << "/" << c.black_formula << " rings=" << c.rings
           << "/" << c.ring_formula << " euler=" << trace.euler_characteristic;
        record(r,
               c.black_matches() && c.rings_match() && c.white_matches_derived() &&
                   trace.euler_characteristic == 2 - 2 * g && trace.white_boundaries_clockwise,
               cs.str());

        const long white = c.white_triangles + c.white_quadrilaterals;
        std::ostringstream ws;
        ws << surface_tag(g, d, m) << ": q_w enumerated=" << white << " printed=" << c.white_formula_printed
           << " (difference " << white - c.white_formula_printed << " = E)";
        if (c.white_matches_printed()) {
          record(r, true, ws.str());
        } else {
          // the printed bracket undercounts by exactly E; anything else is a real failure
          const bool expected = white - c.white_formula_printed == e;
          ++r.cases;
          if (!expected) ++r.failures;
          r.lines.push_back((expected ? "expected-mismatch " : "FAIL ") + ws.str());
        }
      }
    }
  }
  return r;
}

SuiteResult verify_flips() {
  SuiteResult r{"flips", {}, 0, 0};
  for (const MarkedSurface s : {MarkedSurface{1, 1}, MarkedSurface{1, 2}}) {
    const IdealTriangulation t = standard_triangulation(s);
    for (int e = 0; e < t.num_edges(); ++e) {
      const std::string tag = "g=" + std::to_string(s.genus) + " d=" + std::to_string(s.num_marked) + " edge " +
                              std::to_string(e);
      if (!is_flippable(t, e)) {
        r.lines.push_back("skip " + tag + ": not flippable");
        continue;
      }
      const FlipReport report = verify_flip(t, e, 1);
      std::ostringstream os;
      os << tag << ": sequence [" << report.sequence[0] << "] iso=" << report.quiver_isomorphic
         << " support=" << report.primitive_support << " split_pairs=" << report.target_deleted_pairs;
      if (!report.message.empty()) os << " (" << report.message << ")";
      record(r, report.ok(), os.str());
    }
  }
  return r;
}

SuiteResult verify_garside() {
  SuiteResult r{"garside", {}, 0, 0};
  for (int n = 2; n <= 6; ++n) {
    const BraidWord canonical = canonical_factorization(n);
    const BraidWord delta = garside_element(n);
    const NormalForm nf = left_normal_form(canonical);
    Permutation longest(n);
    for (int k = 0; k < n; ++k) longest[k] = n - 1 - k;
    const long length = static_cast<long>(n) * (n - 1) / 2;
    std::ostringstream os;
    os << "n=" << n << ": length=" << canonical.letters.size() << " normal form " << to_string(nf)
       << "; transpositions on sheets 1..m (m=n-1): " << (n - 1) * (n - 2) / 2 << ", half-twists m(m+1)/2: " << length;
    const bool ok = nf == left_normal_form(delta) && nf.delta_power == 1 && nf.factors.empty() &&
                    static_cast<long>(canonical.letters.size()) == length && exponent_sum(canonical) == length &&
                    permutation_of(canonical) == longest && permutation_of(delta) == longest;
    record(r, ok, os.str());
  }
  return r;
}

SuiteResult verify_gauge(std::uint64_t seed, int samples) {
  SuiteResult r{"gauge", {}, 0, 0};
  std::mt19937_64 rng(seed);
  const IdealTriangulation t11 = standard_triangulation({1, 1});
  const IdealTriangulation t12 = standard_triangulation({1, 2});
  const Quiver quivers[2] = {inscribed_quiver(t11, 2), inscribed_quiver(t12, 2)};
  int round_trip_failures = 0, equivariance_failures = 0;
  for (int i = 0; i < samples; ++i) {
    const Quiver& q = quivers[i % 2];
    const Potential w1 = unit_potential(q);
    const DiagonalGauge g = random_gauge(q.num_arrows(), rng);
    const Potential moved = apply_diagonal(w1, g);
    const NormalizeResult n = normalize(q, moved);
    const bool round_trip = n.ok() && unit_on_non_rings(q, *n.potential) && apply_diagonal(moved, n.gauge) == *n.potential;
    if (!round_trip) {
      ++round_trip_failures;
      r.lines.push_back("FAIL sample " + std::to_string(i) + ": normalize " + (n.ok() ? "wrong" : n.obstruction));
    }

    // add non-primitive words (squares of primitive cycles) before projecting
    Potential w = w1;
    const auto cycles = primitive_cycles(q);
    for (int k = 0; k < 3; ++k) {
      Path p = cycles[rng() % cycles.size()].arrows;
      const Path once = p;
      p.insert(p.end(), once.begin(), once.end());
      w.add(p, random_unit(rng));
    }
    if (primitive_projection(q, apply_diagonal(w, g)) != apply_diagonal(primitive_projection(q, w), g)) {
      ++equivariance_failures;
      r.lines.push_back("FAIL sample " + std::to_string(i) + ": projection not equivariant");
    }
  }
  record(r, round_trip_failures == 0,
         "normalize round trip on " + std::to_string(samples) + " random diagonal gauges (seed " +
             std::to_string(seed) + ")");
  record(r, equivariance_failures == 0,
         "primitive projection commutes with diagonal gauges on " + std::to_string(samples) + " samples");

  // strong genericity at m = 2: (1,1) has one marked point of valence 6, (1,2) has valences 9 and 3
  const NovikovScalar one(1), minus_one(-1);
  const Potential even_sum = canonical_potential(quivers[0], ring_coefficients(quivers[0], {one}, {one}));
  const Potential even_cancel = canonical_potential(quivers[0], ring_coefficients(quivers[0], {one}, {minus_one}));
  const Potential odd_cancel = canonical_potential(quivers[1], ring_coefficients(quivers[1], {one, one}, {one, one}));
  record(r, strongly_generic(quivers[0], even_sum), "valence 6, c1=1 c2=1: strongly generic");
  record(r, !strongly_generic(quivers[0], even_cancel), "valence 6, c1=1 c2=-1: degenerate");
  record(r, !strongly_generic(quivers[1], odd_cancel), "valences 9 and 3, c1=1 c2=1: degenerate");
  return r;
}

SuiteResult verify_parity(std::uint64_t seed, int samples_per_point) {
  SuiteResult r{"parity", {}, 0, 0};
  std::mt19937_64 rng(seed);
  for (const MarkedSurface s : {MarkedSurface{1, 1}, MarkedSurface{1, 2}}) {
    const IdealTriangulation t = standard_triangulation(s);
    for (int m = 1; m <= 4; ++m) {
      const Quiver q = inscribed_quiver(t, m);
      const Potential w = unit_potential(q);
      int bad = 0, checked = 0;
      for (int k = 0; k < samples_per_point; ++k) {
        const EigenOrdering e = k == 0 ? standard_eigen_ordering(s.num_marked, m)
                                       : random_eigen_ordering(s.num_marked, m, rng);
        const ParityReport report = disc_parity_check(disc_census(e, &q, &w), background_cycle(e));
        for (const auto& entry : report.entries) {
          ++checked;
          if (!entry.ok || (entry.signed_count != 1 && entry.signed_count != -1)) ++bad;
        }
        for (const auto& v : report.violations) r.lines.push_back("FAIL " + surface_tag(s.genus, s.num_marked, m) + ": " + v);
      }
      record(r, bad == 0,
             surface_tag(s.genus, s.num_marked, m) + ": " + std::to_string(checked) + " (p,j) checks over " +
                 std::to_string(samples_per_point) + " orderings");
    }
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"counts", "flips", "garside", "gauge", "parity"};
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  for (const auto& n : suite_names()) {
    if (name != "all" && name != n) continue;
    if (n == "counts") out.push_back(verify_counts());
    if (n == "flips") out.push_back(verify_flips());
    if (n == "garside") out.push_back(verify_garside());
    if (n == "gauge") out.push_back(verify_gauge(seed));
    if (n == "parity") out.push_back(verify_parity(seed));
  }
  if (out.empty()) throw std::invalid_argument("unknown suite: " + name);
  return out;
}

}  // namespace qpsurf
