#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qpsurf/mutation.hpp"

namespace qpsurf {

/// Degree 0..3 endomorphism data of the simples of the Ginzburg category of (Q, W).
struct CY3Presentation {
  int num_vertices = 0;
  /// dims[v][w][i] = dim Hom^i(v, w): units, arrows v->w, duals of arrows w->v, top classes.
  std::vector<std::vector<std::array<int, 4>>> dims;
  /// (a0, [a1..ak]) -> <m_k(a_k, ..., a_1), a0*>, the coefficient of the cyclic word a0 a1 ... ak.
  std::map<std::pair<int, Path>, NovikovScalar> structure_constants;
};

CY3Presentation presentation(const QP& x);

/// Basis labels of Hom^degree(v, w): "e_v", arrow names, "<name>*", "e_v^".
std::vector<std::string> basis_labels(const Quiver& q, int v, int w, int degree);

/// chi(v, w) = sum_i (-1)^i dim Hom^i(v, w) = -B[v][w].
IntMatrix2 euler_matrix(const Quiver& q);

struct CyclicityReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// <m_k(a_k..a_1), a0> = <m_k(a0, a_k..a_2), a1> for every stored constant.
CyclicityReport cyclicity_check(const CY3Presentation& p);

/// dim of (paths of length <= bound) / span{ p * dW/da * p' truncated to length <= bound }.
std::size_t jacobian_dim_truncated(const QP& x, int length);

}  // namespace qpsurf
