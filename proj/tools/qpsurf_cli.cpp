#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "qpsurf/braid.hpp"
#include "qpsurf/cellulation.hpp"
#include "qpsurf/ginzburg.hpp"
#include "qpsurf/mutation.hpp"
#include "qpsurf/serialize.hpp"
#include "qpsurf/verify.hpp"

using namespace qpsurf;

namespace {

struct RunConfig {
  int genus = 1;
  int marked = 1;
  int rank = 1;
  std::size_t trunc = 0;  // 0: twice the longest primitive cycle
  std::uint64_t seed = 1;
  std::string format;
  std::string out;
};

// positional form `g d m` is off where the subcommand has its own positionals
void add_surface_options(CLI::App* cmd, RunConfig& cfg, bool positional = true) {
  const std::string p = positional ? "genus," : "", q = positional ? "marked," : "", r = positional ? "rank," : "";
  cmd->add_option(p + "--genus", cfg.genus, "genus g >= 1")->check(CLI::Range(1, 64));
  cmd->add_option(q + "--marked", cfg.marked, "marked points d >= 1")->check(CLI::Range(1, 64));
  cmd->add_option(r + "--rank", cfg.rank, "rank m >= 1")->check(CLI::Range(1, 64));
}

void add_trunc_option(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--trunc", cfg.trunc, "truncation length L >= 3 (default: twice the longest primitive cycle)")
      ->check(CLI::Range(static_cast<std::size_t>(3), static_cast<std::size_t>(1000)));
}

void add_output_options(CLI::App* cmd, RunConfig& cfg, const std::vector<std::string>& formats) {
  cfg.format = formats.front();
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", cfg.out, "output file (default: stdout)");
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw std::runtime_error("cannot write " + cfg.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  return Json::parse(f);
}

IdealTriangulation surface_triangulation(const RunConfig& cfg) {
  const MarkedSurface s{cfg.genus, cfg.marked};
  s.require_valid();
  return standard_triangulation(s);
}

/// Quiver from --quiver if given, else Q(Delta_m) of the standard triangulation.
Quiver load_quiver(const RunConfig& cfg, const std::string& quiver_file) {
  if (!quiver_file.empty()) return quiver_from_json(read_json(quiver_file));
  return inscribed_quiver(surface_triangulation(cfg), cfg.rank);
}

/// Potential from --potential if given, else W_1 on an embedded quiver.
Potential load_potential(const RunConfig& cfg, const Quiver& q, const std::string& potential_file) {
  if (!potential_file.empty()) {
    Potential w = potential_from_json(read_json(potential_file));
    if (cfg.trunc != 0) {
      Potential cut(cfg.trunc);
      for (const auto& [word, c] : w.terms()) cut.add(word, c);
      w = cut;
    }
    for (const auto& [word, c] : w.terms()) {
      if (!word.closed_on(q)) throw std::invalid_argument("potential word is not a cycle of the quiver");
    }
    return w;
  }
  if (q.embedding() == nullptr) throw std::invalid_argument("abstract quiver needs --potential");
  return unit_potential(q, cfg.trunc);
}

std::string word_text(const Path& p, const Quiver& q) {
  std::string out;
  for (int a : p) out += (out.empty() ? "" : " ") + q.arrow(a).name;
  return out;
}

Json census_json(const CycleCensus& c) {
  return {{"black_triangles", c.black_triangles},           {"white_triangles", c.white_triangles},
          {"white_quadrilaterals", c.white_quadrilaterals}, {"rings", c.rings},
          {"black_formula", c.black_formula},               {"white_formula_printed", c.white_formula_printed},
          {"white_formula_derived", c.white_formula_derived}, {"ring_formula", c.ring_formula}};
}

Json geometry_json(const GeometryCensus& g) {
  return {{"h2_rank", g.h2_rank},
          {"branch_points", g.branch_points},
          {"dual_vertices", g.dual_vertices},
          {"sphere_total", g.sphere_total},
          {"lefschetz_per_face", g.lefschetz_per_face}};
}

int cmd_build(const RunConfig& cfg) {
  const IdealTriangulation t = surface_triangulation(cfg);
  const Quiver q = inscribed_quiver(t, cfg.rank);
  if (cfg.format == "dot") return emit(cfg, export_dot(q)), 0;
  if (cfg.format == "svg") return emit(cfg, export_svg(t, cfg.rank)), 0;
  const CycleCensus c = cycle_census(q);
  const GeometryCensus g = geometry_census(t.surface(), cfg.rank);
  if (cfg.format == "table") {
    std::ostringstream os;
    os << "surface        g=" << cfg.genus << " d=" << cfg.marked << " m=" << cfg.rank << "\n"
       << "edges          " << t.num_edges() << "\n"
       << "faces          " << t.num_faces() << "\n"
       << "vertices       " << q.num_vertices() << "\n"
       << "arrows         " << q.num_arrows() << "\n"
       << "t_b            " << c.black_triangles << " (formula " << c.black_formula << ")\n"
       << "q_w            " << c.white_triangles + c.white_quadrilaterals << " (triangles " << c.white_triangles
       << ", quadrilaterals " << c.white_quadrilaterals << "; printed bracket " << c.white_formula_printed << ")\n"
       << "rings          " << c.rings << " (formula " << c.ring_formula << ")\n"
       << "spheres        " << g.sphere_total << "\n"
       << "dual vertices  " << g.dual_vertices << "\n"
       << "branch points  " << g.branch_points << "\n"
       << "h2 rank        " << g.h2_rank << "\n";
    emit(cfg, os.str());
    return 0;
  }
  Json j;
  j["triangulation"] = to_json(t);
  j["quiver"] = to_json(q);
  j["cycle_census"] = census_json(c);
  j["geometry_census"] = geometry_json(g);
  emit(cfg, dump(j));
  return 0;
}

int cmd_cycles(const RunConfig& cfg) {
  const Quiver q = inscribed_quiver(surface_triangulation(cfg), cfg.rank);
  const auto cycles = primitive_cycles(q);
  if (cfg.format == "table") {
    std::ostringstream os;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      os << i << "\t" << cycles[i].label() << "\t" << cycles[i].arrows.size() << "\t"
         << word_text(cycles[i].arrows, q) << "\n";
    }
    emit(cfg, os.str());
    return 0;
  }
  Json arr = Json::array();
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    Json c;
    c["index"] = i;
    c["kind"] = to_string(cycles[i].kind);
    c["label"] = cycles[i].label();
    c["arrows"] = cycles[i].arrows;
    if (cycles[i].kind == CycleKind::Ring) {
      c["marked_point"] = cycles[i].marked_point;
      c["level"] = cycles[i].level;
    }
    arr.push_back(std::move(c));
  }
  emit(cfg, dump({{"cycles", arr}, {"census", census_json(cycle_census(q))}}));
  return 0;
}

Json step_json(const MutationStep& s) {
  return {{"vertex", s.vertex},
          {"arrows_added", s.arrows_added},
          {"arrows_removed", s.arrows_removed},
          {"terms_added", s.terms_added},
          {"terms_removed", s.terms_removed}};
}

int cmd_mutate(const RunConfig& cfg, const std::string& quiver_file, const std::string& potential_file,
               const std::vector<int>& vertices) {
  const Quiver q = load_quiver(cfg, quiver_file);
  const QP x{q, load_potential(cfg, q, potential_file)};
  for (int v : vertices) {
    if (v < 0 || v >= q.num_vertices()) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  }
  std::vector<MutationStep> log;
  const QP y = mutate_sequence(x, vertices, &log);

  Json j;
  j["sequence"] = vertices;
  j["quiver"] = to_json(y.quiver);
  j["potential"] = to_json(y.potential);
  Json steps = Json::array();
  for (const auto& s : log) steps.push_back(step_json(s));
  j["log"] = std::move(steps);
  if (auto iso = quiver_isomorphic(y.quiver, x.quiver)) {
    const auto match = match_up_to_diagonal(y, x, *iso);
    j["returns_to_input"] = {{"quiver_isomorphic", true}, {"diagonal_gauge_equivalent", match.has_value()}};
  } else {
    j["returns_to_input"] = {{"quiver_isomorphic", false}, {"diagonal_gauge_equivalent", false}};
  }
  emit(cfg, dump(j));
  return 0;
}

int cmd_flip(const RunConfig& cfg, int edge, const std::vector<int>& sequence, int search) {
  const IdealTriangulation t = surface_triangulation(cfg);
  if (edge < 0 || edge >= t.num_edges()) throw std::invalid_argument("edge out of range");
  std::vector<int> seq = sequence;
  Json j;
  j["edge"] = edge;
  if (seq.empty() && search > 0) {
    const auto target = inscribed_quiver(flip(t, edge).triangulation, cfg.rank);
    const auto found = mutation_sequence_search(inscribed_quiver(t, cfg.rank), target, search);
    if (!found) throw std::runtime_error("not found within bound");
    seq = *found;
    j["searched"] = true;
  }
  if (seq.empty()) seq = default_flip_sequence(t, edge, cfg.rank);
  const long expected = static_cast<long>(cfg.rank) * (cfg.rank + 1) * (cfg.rank + 2) / 6;
  const FlipReport r = verify_flip(t, edge, cfg.rank, seq, cfg.trunc);
  j["sequence"] = r.sequence;
  j["expected_length"] = expected;
  j["quiver_isomorphic"] = r.quiver_isomorphic;
  j["primitive_support"] = r.primitive_support;
  j["target_deleted_pairs"] = r.target_deleted_pairs;
  if (r.vertex_bijection) j["vertex_bijection"] = *r.vertex_bijection;
  j["message"] = r.message;
  j["ok"] = r.ok();
  emit(cfg, dump(j));
  return r.ok() ? 0 : 1;
}

Json gauge_json(const DiagonalGauge& g, const Quiver& q) {
  Json out = Json::object();
  for (const auto& [a, s] : g) out[q.arrow(a).name] = s.to_string();
  return out;
}

int cmd_normalize(const RunConfig& cfg, const std::string& quiver_file, const std::string& potential_file,
                  bool randomize) {
  const Quiver q = load_quiver(cfg, quiver_file);
  Potential w = load_potential(cfg, q, potential_file);
  Json j;
  if (randomize) {
    // start from a seeded random monomial rescaling of the input
    std::mt19937_64 rng(cfg.seed);
    DiagonalGauge g;
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Rational e(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 3) + 1);
      Rational c(static_cast<long>(rng() % 5) + 1, static_cast<long>(rng() % 5) + 1);
      c.canonicalize();
      g[a] = NovikovScalar::monomial(rng() % 2 ? c : Rational(-c), e);
    }
    w = apply_diagonal(w, g);
    j["input"] = to_json(w);
  }
  if (!is_generic(q, w)) throw std::invalid_argument("potential is not generic");
  const NormalizeResult r = normalize(q, w);
  j["ok"] = r.ok();
  if (r.ok()) {
    j["gauge"] = gauge_json(r.gauge, q);
    j["potential"] = to_json(*r.potential);
  } else {
    j["obstruction"] = r.obstruction;
  }
  emit(cfg, dump(j));
  return r.ok() ? 0 : 1;
}

int cmd_ginzburg(const RunConfig& cfg, const std::string& quiver_file, const std::string& potential_file) {
  const Quiver q = load_quiver(cfg, quiver_file);
  const QP x{q, load_potential(cfg, q, potential_file)};
  const CY3Presentation p = presentation(x);
  const CyclicityReport cyc = cyclicity_check(p);
  const IntMatrix2 chi = euler_matrix(q);
  if (cfg.format == "table") {
    std::ostringstream os;
    os << "v\tw\tdeg0\tdeg1\tdeg2\tdeg3\tchi\n";
    for (int v = 0; v < p.num_vertices; ++v) {
      for (int w = 0; w < p.num_vertices; ++w) {
        const auto& d = p.dims[v][w];
        if (d[0] + d[1] + d[2] + d[3] == 0) continue;
        os << v << "\t" << w << "\t" << d[0] << "\t" << d[1] << "\t" << d[2] << "\t" << d[3] << "\t" << chi[v][w]
           << "\n";
      }
    }
    os << "structure constants: " << p.structure_constants.size() << "\n";
    for (const auto& [key, c] : p.structure_constants) {
      os << "<m_" << key.second.size() << "(";
      for (std::size_t i = key.second.size(); i-- > 0;) {
        os << q.arrow(key.second[i]).name << (i ? "," : "");
      }
      os << "), " << q.arrow(key.first).name << "*> = " << c.to_string() << "\n";
    }
    os << "cyclicity: " << (cyc.ok() ? "ok" : "FAIL") << "\n";
    for (const auto& v : cyc.violations) os << "  " << v << "\n";
    emit(cfg, os.str());
    return cyc.ok() ? 0 : 1;
  }
  Json dims = Json::array();
  for (int v = 0; v < p.num_vertices; ++v) {
    for (int w = 0; w < p.num_vertices; ++w) {
      const auto& d = p.dims[v][w];
      if (d[0] + d[1] + d[2] + d[3] != 0) dims.push_back({{"source", v}, {"target", w}, {"dims", d}});
    }
  }
  Json constants = Json::array();
  for (const auto& [key, c] : p.structure_constants) {
    constants.push_back({{"output", key.first}, {"inputs", key.second}, {"coeff", c.to_string()}});
  }
  Json j;
  j["num_vertices"] = p.num_vertices;
  j["dims"] = std::move(dims);
  j["euler_matrix"] = chi;
  j["structure_constants"] = std::move(constants);
  j["cyclicity_ok"] = cyc.ok();
  j["cyclicity_violations"] = cyc.violations;
  emit(cfg, dump(j));
  return cyc.ok() ? 0 : 1;
}

int cmd_census(const RunConfig& cfg) {
  const IdealTriangulation t = surface_triangulation(cfg);
  const Quiver q = inscribed_quiver(t, cfg.rank);
  const SphereConfiguration spheres = sphere_configuration(t, cfg.rank);
  std::mt19937_64 rng(cfg.seed);
  const EigenOrdering e = random_eigen_ordering(cfg.marked, cfg.rank, rng);
  const Potential w = unit_potential(q, cfg.trunc);
  const DiscCensus discs = disc_census(e, &q, &w);
  const auto z = background_cycle(e);
  const ParityReport parity = disc_parity_check(discs, z);

  Json j;
  j["geometry_census"] = geometry_json(geometry_census(t.surface(), cfg.rank));
  j["cycle_census"] = census_json(cycle_census(q));
  j["spheres"] = {{"matching", spheres.num_matching()}, {"tripod", spheres.num_tripod()}};
  Json inter = Json::array();
  for (const auto& [key, n] : spheres.intersections) {
    inter.push_back({{"spheres", {spheres.spheres[key.first].label(), spheres.spheres[key.second].label()}}, {"points", n}});
  }
  j["intersections"] = std::move(inter);
  j["eigen_ordering"] = e.orderings;
  j["background_cycle"] = z;
  Json pairs = Json::array();
  for (std::size_t i = 0; i < discs.pairs.size(); ++i) {
    const auto& d = discs.pairs[i];
    pairs.push_back({{"marked_point", d.marked_point},
                     {"level", d.level},
                     {"components", {d.discs[0].component, d.discs[1].component}},
                     {"signs", {d.discs[0].sign, d.discs[1].sign}},
                     {"area", d.discs[0].area.get_str()},
                     {"signed_intersection", parity.entries[i].signed_count}});
  }
  j["discs"] = std::move(pairs);
  j["parity_ok"] = parity.ok();
  emit(cfg, dump(j));
  return parity.ok() ? 0 : 1;
}

int cmd_braid(const RunConfig& cfg, const std::string& action, const std::vector<std::string>& words, int strands) {
  std::ostringstream os;
  if (action == "garside") {
    const BraidWord d = garside_element(strands), c = canonical_factorization(strands);
    os << "garside       " << to_string(d) << "\n"
       << "canonical     " << to_string(c) << "\n"
       << "normal form   " << to_string(left_normal_form(c)) << "\n"
       << "equal         " << (braid_equal(c, d) ? "yes" : "no") << "\n";
    emit(cfg, os.str());
    return braid_equal(c, d) ? 0 : 1;
  }
  if (action == "normal") {
    if (words.size() != 1) throw std::invalid_argument("braid normal takes one word");
    const NormalForm nf = left_normal_form(parse_braid(words[0], strands));
    os << to_string(nf) << "\n" << to_string(to_word(nf)) << "\n";
    emit(cfg, os.str());
    return 0;
  }
  if (words.size() != 2) throw std::invalid_argument("braid check takes two words");
  const bool equal = braid_equal(parse_braid(words[0], strands), parse_braid(words[1], strands));
  os << (equal ? "equal" : "different") << "\n";
  emit(cfg, os.str());
  return equal ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  const auto results = run_suites(suite, cfg.seed);
  std::ostringstream os;
  bool all_ok = true;
  for (const auto& r : results) {
    os << "== " << r.name << "\n";
    for (const auto& line : r.lines) os << line << "\n";
    os << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.cases - r.failures << "/" << r.cases << ")\n";
    all_ok = all_ok && r.ok();
  }
  emit(cfg, os.str());
  return all_ok ? 0 : 1;
}

int cmd_export(const RunConfig& cfg, const std::string& quiver_file) {
  if (cfg.format == "svg") {
    emit(cfg, export_svg(surface_triangulation(cfg), cfg.rank));
    return 0;
  }
  const Quiver q = load_quiver(cfg, quiver_file);
  if (cfg.format == "dot") {
    emit(cfg, export_dot(q));
  } else {
    emit(cfg, dump(to_json(q)));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inscribed quivers with potential on marked surfaces"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string quiver_file, potential_file, suite = "all", braid_action = "check";
  std::vector<int> vertices, sequence;
  std::vector<std::string> words;
  int edge = 0, search = 0, strands = 3;
  bool randomize = false;

  auto* build = app.add_subcommand("build", "standard triangulation, quiver and census artifacts");
  add_surface_options(build, cfg);
  add_output_options(build, cfg, {"json", "dot", "svg", "table"});

  auto* cycles = app.add_subcommand("cycles", "primitive cycles of Q(Delta_m)");
  add_surface_options(cycles, cfg);
  add_output_options(cycles, cfg, {"json", "table"});

  auto* mutate_cmd = app.add_subcommand("mutate", "DWZ mutation along a vertex sequence");
  add_surface_options(mutate_cmd, cfg, false);
  add_trunc_option(mutate_cmd, cfg);
  mutate_cmd->add_option("--quiver", quiver_file, "quiver.v1 file")->check(CLI::ExistingFile);
  mutate_cmd->add_option("--potential", potential_file, "potential.v1 file")->check(CLI::ExistingFile);
  mutate_cmd->add_option("vertices", vertices, "vertex sequence");
  add_output_options(mutate_cmd, cfg, {"json"});

  auto* flip_cmd = app.add_subcommand("flip", "check a flip against a mutation sequence");
  add_surface_options(flip_cmd, cfg);
  add_trunc_option(flip_cmd, cfg);
  flip_cmd->add_option("--edge", edge, "edge to flip")->required();
  flip_cmd->add_option("--sequence", sequence, "mutation sequence (default: vertex on the edge for m = 1)");
  flip_cmd->add_option("--search", search, "search sequences up to this length when none is given");
  add_output_options(flip_cmd, cfg, {"json"});

  auto* normalize_cmd = app.add_subcommand("normalize", "diagonal gauge making t_b and q_w coefficients 1");
  add_surface_options(normalize_cmd, cfg);
  add_trunc_option(normalize_cmd, cfg);
  normalize_cmd->add_option("--quiver", quiver_file, "quiver.v1 file")->check(CLI::ExistingFile);
  normalize_cmd->add_option("--potential", potential_file, "potential.v1 file")->check(CLI::ExistingFile);
  normalize_cmd->add_flag("--random-gauge", randomize, "rescale the input by a seeded random gauge first");
  normalize_cmd->add_option("--seed", cfg.seed, "random seed");
  add_output_options(normalize_cmd, cfg, {"json"});

  auto* ginzburg_cmd = app.add_subcommand("ginzburg", "CY3 hom-space presentation");
  add_surface_options(ginzburg_cmd, cfg);
  add_trunc_option(ginzburg_cmd, cfg);
  ginzburg_cmd->add_option("--quiver", quiver_file, "quiver.v1 file")->check(CLI::ExistingFile);
  ginzburg_cmd->add_option("--potential", potential_file, "potential.v1 file")->check(CLI::ExistingFile);
  add_output_options(ginzburg_cmd, cfg, {"json", "table"});

  auto* census_cmd = app.add_subcommand("census", "sphere configuration, disc census and parity");
  add_surface_options(census_cmd, cfg);
  add_trunc_option(census_cmd, cfg);
  census_cmd->add_option("--seed", cfg.seed, "seed for the eigen-ordering");
  add_output_options(census_cmd, cfg, {"json"});

  auto* braid_cmd = app.add_subcommand("braid", "braid words: check WORD WORD | normal WORD | garside");
  braid_cmd->add_option("action", braid_action, "check, normal or garside")
      ->check(CLI::IsMember({"check", "normal", "garside"}));
  braid_cmd->add_option("words", words, "words such as \"s1 s2 S1\"");
  braid_cmd->add_option("--strands", strands, "number of strands")->check(CLI::Range(2, 64));
  add_output_options(braid_cmd, cfg, {"table"});

  auto* verify_cmd = app.add_subcommand("verify", "run property suites");
  verify_cmd->add_option("suite", suite, "all, counts, flips, garside, gauge or parity")
      ->check(CLI::IsMember({"all", "counts", "flips", "garside", "gauge", "parity"}));
  verify_cmd->add_option("--seed", cfg.seed, "random seed");
  add_output_options(verify_cmd, cfg, {"table"});

  auto* export_cmd = app.add_subcommand("export", "quiver as JSON or DOT, cellulation as SVG");
  add_surface_options(export_cmd, cfg);
  export_cmd->add_option("--quiver", quiver_file, "quiver.v1 file")->check(CLI::ExistingFile);
  add_output_options(export_cmd, cfg, {"json", "dot", "svg"});

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return cmd_build(cfg);
    if (*cycles) return cmd_cycles(cfg);
    if (*mutate_cmd) return cmd_mutate(cfg, quiver_file, potential_file, vertices);
    if (*flip_cmd) return cmd_flip(cfg, edge, sequence, search);
    if (*normalize_cmd) return cmd_normalize(cfg, quiver_file, potential_file, randomize);
    if (*ginzburg_cmd) return cmd_ginzburg(cfg, quiver_file, potential_file);
    if (*census_cmd) return cmd_census(cfg);
    if (*braid_cmd) return cmd_braid(cfg, braid_action, words, strands);
    if (*verify_cmd) return cmd_verify(cfg, suite);
    if (*export_cmd) return cmd_export(cfg, quiver_file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
