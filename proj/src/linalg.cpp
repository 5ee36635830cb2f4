#include "ellarr/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ellarr {

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  if (r.get_den() <= 0) throw std::runtime_error("bad rational: " + s);
  return r;
}

int sign_of(const Rat& r) { return sgn(r); }

QVec vec_add(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec vec_sub(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_integer_vector(const QVec& v) {
  for (const Rat& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

int mat_rank(QMat rows) {
  if (rows.empty()) return 0;
  size_t ncols = rows[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < rows.size(); ++col) {
    size_t piv = row;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[row], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[row][col];
      for (size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::optional<QVec> solve_square(QMat a, QVec b) {
  size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  QVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

QMat nullspace(QMat rows, int ncols) {
  std::vector<int> pivot_col;
  size_t row = 0;
  for (int col = 0; col < ncols && row < rows.size(); ++col) {
    size_t piv = row;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[row], rows[piv]);
    Rat d = rows[row][col];
    for (int c = 0; c < ncols; ++c) rows[row][c] /= d;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (int c = 0; c < ncols; ++c) rows[r][c] -= f * rows[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::set<int> pivots(pivot_col.begin(), pivot_col.end());
  QMat basis;
  for (int free_col = 0; free_col < ncols; ++free_col) {
    if (pivots.count(free_col)) continue;
    QVec v(ncols, Rat(0));
    v[free_col] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -rows[r][free_col];
    basis.push_back(v);
  }
  return basis;
}

int affine_dim(const std::vector<QVec>& points) {
  if (points.empty()) return -1;
  QMat diffs;
  for (size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], points[0]));
  if (diffs.empty()) return 0;
  return mat_rank(diffs);
}

namespace {

// Inequality row: coeffs . x >= rhs, stored normalized for deduplication.
struct IneqRow {
  QVec coeffs;
  Rat rhs;
};

void normalize_row(IneqRow& row) {
  Rat scale = 0;
  for (const Rat& c : row.coeffs)
    if (c != 0) {
      scale = abs(c);
      break;
    }
  if (scale == 0 && row.rhs != 0) scale = abs(row.rhs);
  if (scale == 0) return;
  for (Rat& c : row.coeffs) c /= scale;
  row.rhs /= scale;
}

std::string row_key(const IneqRow& row) {
  std::string key;
  for (const Rat& c : row.coeffs) {
    key += rat_to_string(c);
    key += ',';
  }
  key += '|';
  key += rat_to_string(row.rhs);
  return key;
}

}  // namespace

bool feasible(const std::vector<LinConstraint>& constraints, int nvars) {
  // Substitute the equalities away first.
  QMat eq;   // rows of length nvars + 1, last entry = rhs
  std::vector<IneqRow> ineq;
  for (const auto& c : constraints) {
    if (c.equality) {
      QVec row = c.coeffs;
      row.push_back(c.rhs);
      eq.push_back(row);
    } else {
      ineq.push_back({c.coeffs, c.rhs});
    }
  }
  std::vector<bool> eliminated(nvars, false);
  size_t erow = 0;
  for (int col = 0; col < nvars && erow < eq.size(); ++col) {
    size_t piv = erow;
    while (piv < eq.size() && eq[piv][col] == 0) ++piv;
    if (piv == eq.size()) continue;
    std::swap(eq[erow], eq[piv]);
    for (size_t r = 0; r < eq.size(); ++r) {
      if (r == erow || eq[r][col] == 0) continue;
      Rat f = eq[r][col] / eq[erow][col];
      for (int c = 0; c <= nvars; ++c) eq[r][c] -= f * eq[erow][c];
    }
    for (auto& row : ineq) {
      if (row.coeffs[col] == 0) continue;
      Rat f = row.coeffs[col] / eq[erow][col];
      for (int c = 0; c < nvars; ++c) row.coeffs[c] -= f * eq[erow][c];
      row.rhs -= f * eq[erow][nvars];
    }
    eliminated[col] = true;
    ++erow;
  }
  for (size_t r = erow; r < eq.size(); ++r) {
    bool zero = true;
    for (int c = 0; c < nvars; ++c)
      if (eq[r][c] != 0) zero = false;
    if (zero && eq[r][nvars] != 0) return false;
  }

  // Fourier-Motzkin over the remaining variables.
  for (int var = 0; var < nvars; ++var) {
    if (eliminated[var]) continue;
    std::vector<IneqRow> lower, upper, rest;
    for (auto& row : ineq) {
      int s = sign_of(row.coeffs[var]);
      if (s > 0)
        lower.push_back(row);
      else if (s < 0)
        upper.push_back(row);
      else
        rest.push_back(row);
    }
    std::set<std::string> seen;
    std::vector<IneqRow> next;
    auto push = [&](IneqRow row) {
      normalize_row(row);
      bool all_zero = true;
      for (const Rat& c : row.coeffs)
        if (c != 0) all_zero = false;
      if (all_zero) {
        if (row.rhs > 0) return false;  // 0 >= positive: contradiction
        return true;
      }
      auto key = row_key(row);
      if (seen.insert(key).second) next.push_back(std::move(row));
      return true;
    };
    for (auto& row : rest)
      if (!push(row)) return false;
    for (const auto& lo : lower)
      for (const auto& hi : upper) {
        // lo: a x_var >= ...,  hi: -b x_var >= ...  with a, b > 0.
        Rat a = lo.coeffs[var];
        Rat b = -hi.coeffs[var];
        IneqRow comb;
        comb.coeffs.resize(nvars, Rat(0));
        for (int c = 0; c < nvars; ++c) comb.coeffs[c] = b * lo.coeffs[c] + a * hi.coeffs[c];
        comb.rhs = b * lo.rhs + a * hi.rhs;
        comb.coeffs[var] = 0;
        if (!push(comb)) return false;
      }
    ineq = std::move(next);
  }
  for (const auto& row : ineq)
    if (row.rhs > 0) return false;
  return true;
}

}  // namespace ellarr
