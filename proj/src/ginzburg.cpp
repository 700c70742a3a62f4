#include "qpsurf/ginzburg.hpp"

#include "qpsurf/linalg.hpp"

namespace qpsurf {

CY3Presentation presentation(const QP& x) {
  const Quiver& q = x.quiver;
  CY3Presentation p;
  p.num_vertices = q.num_vertices();
  p.dims.assign(q.num_vertices(), std::vector<std::array<int, 4>>(q.num_vertices(), {0, 0, 0, 0}));
  for (int v = 0; v < q.num_vertices(); ++v) {
    p.dims[v][v][0] = 1;
    p.dims[v][v][3] = 1;
  }
  for (const auto& a : q.arrows()) {
    ++p.dims[a.source][a.target][1];
    ++p.dims[a.target][a.source][2];
  }
  for (const auto& [word, c] : x.potential.terms()) {
    const Path& arrows = word.arrows();
    const std::size_t n = arrows.size();
    if (n < 2) continue;
    for (std::size_t r = 0; r < n; ++r) {
      Path inputs;
      for (std::size_t i = 1; i < n; ++i) inputs.push_back(arrows[(r + i) % n]);
      p.structure_constants[{arrows[r], std::move(inputs)}] = c;
    }
  }
  return p;
}

std::vector<std::string> basis_labels(const Quiver& q, int v, int w, int degree) {
  std::vector<std::string> out;
  switch (degree) {
    case 0:
      if (v == w) out.push_back("e_" + std::to_string(v));
      break;
    case 1:
      for (int a : q.arrows_between(v, w)) out.push_back(q.arrow(a).name);
      break;
    case 2:
      for (int a : q.arrows_between(w, v)) out.push_back(q.arrow(a).name + "*");
      break;
    case 3:
      if (v == w) out.push_back("e_" + std::to_string(v) + "^");
      break;
    default:
      break;
  }
  return out;
}

IntMatrix2 euler_matrix(const Quiver& q) {
  const int n = q.num_vertices();
  IntMatrix2 chi(n, std::vector<int>(n, 0));
  const auto a = q.multiplicity_matrix();
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      const int delta = v == w ? 1 : 0;
      chi[v][w] = delta - a[v][w] + a[w][v] - delta;
    }
  }
  return chi;
}

CyclicityReport cyclicity_check(const CY3Presentation& p) {
  CyclicityReport report;
  for (const auto& [key, value] : p.structure_constants) {
    const auto& [a0, inputs] = key;
    if (inputs.empty()) continue;
    Path rotated(inputs.begin() + 1, inputs.end());
    rotated.push_back(a0);
    const auto it = p.structure_constants.find({inputs.front(), rotated});
    if (it == p.structure_constants.end() || it->second != value) {
      std::string name = "a" + std::to_string(a0) + " <-";
      for (int a : inputs) name += " a" + std::to_string(a);
      report.violations.push_back("cyclic rotation mismatch at " + name);
    }
  }
  return report;
}

std::size_t jacobian_dim_truncated(const QP& x, int length) {
  const Quiver& q = x.quiver;
  // paths by length; a lazy path at v is encoded as {-1 - v}
  std::vector<std::vector<Path>> by_length(static_cast<std::size_t>(std::max(length, 0)) + 1);
  for (int v = 0; v < q.num_vertices(); ++v) by_length[0].push_back({-1 - v});
  auto source_of = [&](const Path& p) { return p[0] < 0 ? -1 - p[0] : q.arrow(p.front()).source; };
  auto target_of = [&](const Path& p) { return p[0] < 0 ? -1 - p[0] : q.arrow(p.back()).target; };
  for (int l = 1; l <= length; ++l) {
    for (const Path& p : by_length[l - 1]) {
      const int t = target_of(p);
      for (int a = 0; a < q.num_arrows(); ++a) {
        if (q.arrow(a).source != t) continue;
        Path next = p[0] < 0 ? Path{} : p;
        next.push_back(a);
        by_length[l].push_back(std::move(next));
      }
    }
  }
  std::map<Path, std::size_t> index;
  for (const auto& level : by_length) {
    for (const auto& p : level) index.emplace(p, index.size());
  }

  linalg::NovikovRowEchelon echelon;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const PathSum r = cyclic_derivative(x.potential, a);
    if (r.empty()) continue;
    std::size_t shortest = r.begin()->first.size();
    for (const auto& [p, c] : r) shortest = std::min(shortest, p.size());
    const int from = q.arrow(a).target, to = q.arrow(a).source;
    for (int i = 0; i <= length; ++i) {
      for (const Path& left : by_length[i]) {
        if (target_of(left) != from) continue;
        for (int j = 0; i + j + static_cast<int>(shortest) <= length; ++j) {
          for (const Path& right : by_length[j]) {
            if (source_of(right) != to) continue;
            linalg::SparseRow row;
            for (const auto& [mid, c] : r) {
              if (i + j + static_cast<int>(mid.size()) > length) continue;
              Path whole = left[0] < 0 ? Path{} : left;
              whole.insert(whole.end(), mid.begin(), mid.end());
              if (right[0] >= 0) whole.insert(whole.end(), right.begin(), right.end());
              if (whole.empty()) whole = {-1 - from};
              NovikovScalar& slot = row[index.at(whole)];
              slot += c;
            }
            echelon.insert(std::move(row));
          }
        }
      }
    }
  }
  return index.size() - echelon.rank();
}

}  // namespace qpsurf
