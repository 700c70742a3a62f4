#include "qpsurf/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace qpsurf::linalg {

std::optional<std::vector<Rational>> solve_rational(const RationalMatrix& a, const std::vector<Rational>& b,
                                                    std::size_t num_columns) {
  const std::size_t rows = a.size();
  RationalMatrix m(rows, std::vector<Rational>(num_columns + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < num_columns; ++j) m[i][j] = a[i][j];
    m[i][num_columns] = b[i];
  }
  std::vector<std::size_t> pivot_columns;
  std::size_t r = 0;
  for (std::size_t c = 0; c < num_columns && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j <= num_columns; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_columns.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (sgn(m[i][num_columns]) != 0) return std::nullopt;
  }
  std::vector<Rational> x(num_columns);
  for (std::size_t i = 0; i < r; ++i) x[pivot_columns[i]] = m[i][num_columns];
  return x;
}

std::optional<std::vector<int>> solve_mod2(const std::vector<std::vector<int>>& a, const std::vector<int>& b,
                                           std::size_t num_columns) {
  const std::size_t rows = a.size();
  std::vector<std::vector<int>> m(rows, std::vector<int>(num_columns + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < num_columns; ++j) m[i][j] = a[i][j] & 1;
    m[i][num_columns] = b[i] & 1;
  }
  std::vector<std::size_t> pivot_columns;
  std::size_t r = 0;
  for (std::size_t c = 0; c < num_columns && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      for (std::size_t j = c; j <= num_columns; ++j) m[i][j] ^= m[r][j];
    }
    pivot_columns.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][num_columns] != 0) return std::nullopt;
  }
  std::vector<int> x(num_columns, 0);
  for (std::size_t i = 0; i < r; ++i) x[pivot_columns[i]] = m[i][num_columns];
  return x;
}

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) { std::swap(m[i], m[j]); }
void swap_columns(IntMatrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}
// row_i -= f * row_j
void add_row(IntMatrix& m, std::size_t i, std::size_t j, const Integer& f) {
  for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] -= f * m[j][c];
}
// col_i -= f * col_j
void add_column(IntMatrix& m, std::size_t i, std::size_t j, const Integer& f) {
  for (auto& row : m) row[i] -= f * row[j];
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input, std::size_t num_columns) {
  const std::size_t rows = input.size();
  IntMatrix a = input;
  for (auto& row : a) row.resize(num_columns, 0);
  SmithForm out{identity(rows), identity(num_columns), {}};

  std::size_t t = 0;
  while (t < rows && t < num_columns) {
    // choose the smallest nonzero entry of the remaining block as pivot
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < num_columns; ++j) {
        if (sgn(a[i][j]) == 0) continue;
        if (!pivot || abs(a[i][j]) < abs(a[pivot->first][pivot->second])) pivot = {i, j};
      }
    }
    if (!pivot) break;
    swap_rows(a, t, pivot->first);
    swap_rows(out.u, t, pivot->first);
    swap_columns(a, t, pivot->second);
    swap_columns(out.v, t, pivot->second);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        add_row(a, i, t, f);
        add_row(out.u, i, t, f);
        if (sgn(a[i][t]) != 0) {
          swap_rows(a, t, i);
          swap_rows(out.u, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < num_columns; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        add_column(a, j, t, f);
        add_column(out.v, j, t, f);
        if (sgn(a[t][j]) != 0) {
          swap_columns(a, t, j);
          swap_columns(out.v, t, j);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the remaining block by the pivot
        for (std::size_t i = t + 1; i < rows && clean; ++i) {
          for (std::size_t j = t + 1; j < num_columns; ++j) {
            Integer rem;
            mpz_fdiv_r(rem.get_mpz_t(), a[i][j].get_mpz_t(), a[t][t].get_mpz_t());
            if (sgn(rem) != 0) {
              // row_t += row_i, then reduce again
              add_row(a, t, i, -1);
              add_row(out.u, t, i, -1);
              clean = false;
              break;
            }
          }
        }
      }
    }
    if (sgn(a[t][t]) < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : out.u[t]) x = -x;
    }
    out.diagonal.push_back(a[t][t]);
    ++t;
  }
  return out;
}

IntegerSolve solve_integer(const SmithForm& smith, const std::vector<Integer>& b, std::size_t num_rows,
                           std::size_t num_columns) {
  // A x = b  <=>  D y = U b  with x = V y
  std::vector<Integer> ub(num_rows, 0);
  for (std::size_t i = 0; i < num_rows; ++i) {
    for (std::size_t j = 0; j < num_rows; ++j) ub[i] += smith.u[i][j] * b[j];
  }
  IntegerSolve out;
  const std::size_t r = smith.diagonal.size();
  for (std::size_t i = r; i < num_rows; ++i) {
    if (sgn(ub[i]) != 0) {
      out.rationally_inconsistent = true;
      return out;
    }
  }
  std::vector<Integer> y(num_columns, 0);
  for (std::size_t i = 0; i < r; ++i) {
    Integer rem;
    mpz_fdiv_qr(y[i].get_mpz_t(), rem.get_mpz_t(), ub[i].get_mpz_t(), smith.diagonal[i].get_mpz_t());
    if (sgn(rem) != 0) {
      out.obstruction_degree = smith.diagonal[i];
      return out;
    }
  }
  std::vector<Integer> x(num_columns, 0);
  for (std::size_t i = 0; i < num_columns; ++i) {
    for (std::size_t j = 0; j < num_columns; ++j) x[i] += smith.v[i][j] * y[j];
  }
  out.solution = std::move(x);
  return out;
}

namespace {

void scale_row(SparseRow& row, const NovikovScalar& f) {
  for (auto it = row.begin(); it != row.end();) {
    it->second *= f;
    if (it->second.is_zero()) {
      it = row.erase(it);
    } else {
      ++it;
    }
  }
}

void normalize_if_monomial(SparseRow& row) {
  const NovikovScalar& lead = row.begin()->second;
  if (lead.is_monomial() && !lead.is_one()) scale_row(row, inverse_monomial(lead));
}

}  // namespace

bool NovikovRowEchelon::insert(SparseRow row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->second.is_zero()) {
      it = row.erase(it);
    } else {
      ++it;
    }
  }
  while (!row.empty()) {
    const std::size_t lead_col = row.begin()->first;
    auto pivot = pivots_.find(lead_col);
    if (pivot == pivots_.end()) {
      normalize_if_monomial(row);
      pivots_.emplace(lead_col, std::move(row));
      return true;
    }
    const NovikovScalar& p = pivot->second.begin()->second;
    const NovikovScalar f = row.begin()->second;
    if (!p.is_one()) scale_row(row, p);
    for (const auto& [c, v] : pivot->second) {
      NovikovScalar& slot = row[c];
      slot -= f * v;
      if (slot.is_zero()) row.erase(c);
    }
    if (!row.empty()) normalize_if_monomial(row);
  }
  return false;
}

std::size_t rational_rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace qpsurf::linalg
