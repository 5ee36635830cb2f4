#include "ellarr/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ellarr {

namespace {

ZMat identity_mat(size_t n) {
  ZMat m(n, std::vector<Int>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Sparse-aware product of integer matrices.
ZMat mat_mul(const ZMat& a, const ZMat& b) {
  size_t r = a.size(), k = r ? a[0].size() : 0, c = b.empty() ? 0 : b[0].size();
  ZMat out(r, std::vector<Int>(c, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < c; ++j)
        if (b[t][j] != 0) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

// Determinant via fraction-free elimination; used on small certificates.
Int det_bareiss(ZMat m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Int denom = 1;
  int sign = 1;
  for (size_t t = 0; t + 1 < n; ++t) {
    size_t piv = t;
    while (piv < n && m[piv][t] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != t) {
      std::swap(m[piv], m[t]);
      sign = -sign;
    }
    for (size_t i = t + 1; i < n; ++i)
      for (size_t j = t + 1; j < n; ++j) {
        Int num = m[t][t] * m[i][j] - m[i][t] * m[t][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
      }
    denom = m[t][t];
    for (size_t i = t + 1; i < n; ++i) m[i][t] = 0;
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

// Determinant modulo a prime, for certificates too large for Bareiss.
long det_mod_p(const ZMat& m, long p) {
  size_t n = m.size();
  std::vector<std::vector<long>> a(n, std::vector<long>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Int r = m[i][j] % p;
      long v = r.get_si();
      a[i][j] = ((v % p) + p) % p;
    }
  auto pow_mod = [&](long b, long e) {
    long r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = (__int128)r * b % p;
      b = (__int128)b * b % p;
      e >>= 1;
    }
    return r;
  };
  long det = 1;
  for (size_t t = 0; t < n; ++t) {
    size_t piv = t;
    while (piv < n && a[piv][t] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != t) {
      std::swap(a[piv], a[t]);
      det = p - det;
    }
    det = (__int128)det * a[t][t] % p;
    long inv = pow_mod(a[t][t], p - 2);
    for (size_t i = t + 1; i < n; ++i) {
      if (a[i][t] == 0) continue;
      long f = (__int128)a[i][t] * inv % p;
      for (size_t j = t; j < n; ++j)
        a[i][j] = ((a[i][j] - (__int128)f * a[t][j]) % p + p) % p;
    }
  }
  return det;
}

bool unimodular(const ZMat& m, long prime) {
  if (m.size() <= 48) {
    Int d = det_bareiss(m);
    return d == 1 || d == -1;
  }
  long d = det_mod_p(m, prime);
  return d == 1 || d == prime - 1;
}

}  // namespace

SNFResult snf(const ZMat& m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  SNFResult res;
  res.s = m;
  res.u = identity_mat(rows);
  res.v = identity_mat(cols);
  ZMat& s = res.s;
  ZMat& u = res.u;
  ZMat& v = res.v;

  auto row_addmul = [&](size_t dst, size_t src, const Int& f) {
    for (size_t j = 0; j < cols; ++j) s[dst][j] += f * s[src][j];
    for (size_t j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
  };
  auto col_addmul = [&](size_t dst, size_t src, const Int& f) {
    for (size_t i = 0; i < rows; ++i) s[i][dst] += f * s[i][src];
    for (size_t i = 0; i < cols; ++i) v[i][dst] += f * v[i][src];
  };
  auto row_swap = [&](size_t i, size_t j) {
    std::swap(s[i], s[j]);
    std::swap(u[i], u[j]);
  };
  auto col_swap = [&](size_t i, size_t j) {
    for (size_t r = 0; r < rows; ++r) std::swap(s[r][i], s[r][j]);
    for (size_t r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
  };
  auto row_negate = [&](size_t i) {
    for (size_t j = 0; j < cols; ++j) s[i][j] = -s[i][j];
    for (size_t j = 0; j < rows; ++j) u[i][j] = -u[i][j];
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // smallest-magnitude pivot in the remaining block
    size_t pi = rows, pj = cols;
    Int best = 0;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        if (s[i][j] == 0) continue;
        Int mag = abs(s[i][j]);
        if (pi == rows || mag < best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (s[i][t] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), s[i][t].get_mpz_t(), s[t][t].get_mpz_t());
        row_addmul(i, t, -q);
        if (s[i][t] != 0) {
          row_swap(i, t);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (s[t][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), s[t][j].get_mpz_t(), s[t][t].get_mpz_t());
        col_addmul(j, t, -q);
        if (s[t][j] != 0) {
          col_swap(j, t);
          clean = false;
        }
      }
      if (!clean) continue;
      // enforce divisibility of the remaining block by the pivot
      for (size_t i = t + 1; i < rows && clean; ++i)
        for (size_t j = t + 1; j < cols && clean; ++j)
          if (s[i][j] % s[t][t] != 0) {
            row_addmul(t, i, 1);
            clean = false;
          }
    }
    if (s[t][t] < 0) row_negate(t);
    ++t;
  }

  for (size_t i = 0; i < t; ++i)
    if (s[i][i] != 0) res.invariant_factors.push_back(s[i][i]);
  res.rank = static_cast<int>(res.invariant_factors.size());

  if (mat_mul(mat_mul(u, m), v) != s) throw std::runtime_error("snf: U*M*V != S");
  if (!unimodular(u, 1000003) || !unimodular(v, 1000003))
    throw std::runtime_error("snf: certificate is not unimodular");
  for (size_t i = 1; i < res.invariant_factors.size(); ++i)
    if (res.invariant_factors[i] % res.invariant_factors[i - 1] != 0)
      throw std::runtime_error("snf: invariant factors do not divide");
  return res;
}

ChainComplex boundary_matrices(const AcyclicCategory& cat, int max_dim) {
  ChainComplex cx;
  cx.basis = nerve_chains(cat, max_dim);
  const auto& chains = cx.basis.chains;
  std::vector<std::map<std::vector<int>, int>> index(chains.size());
  for (size_t d = 0; d < chains.size(); ++d)
    for (size_t i = 0; i < chains[d].size(); ++i) index[d][chains[d][i]] = static_cast<int>(i);

  cx.d.resize(chains.size());
  cx.d[0] = ZMat();  // zero map out of degree 0
  for (size_t d = 1; d < chains.size(); ++d) {
    ZMat mat(chains[d - 1].size(), std::vector<Int>(chains[d].size(), 0));
    for (size_t col = 0; col < chains[d].size(); ++col) {
      const auto& ch = chains[d][col];
      for (size_t i = 0; i <= d; ++i) {
        int sgn = (i % 2 == 0) ? 1 : -1;
        std::vector<int> face;
        if (d == 1) {
          // faces of a 1-chain are the target (i=0) and source (i=1) objects
          face = {i == 0 ? cat.morphisms[ch[0]].tgt : cat.morphisms[ch[0]].src};
        } else if (i == 0) {
          face.assign(ch.begin() + 1, ch.end());
        } else if (i == d) {
          face.assign(ch.begin(), ch.end() - 1);
        } else {
          face.assign(ch.begin(), ch.end());
          auto comp = cat.composite(ch[i - 1], ch[i]);
          if (!comp) throw std::runtime_error("boundary: missing composite");
          face[i - 1] = *comp;
          face.erase(face.begin() + i);
        }
        mat[index[d - 1].at(face)][col] += sgn;
      }
    }
    cx.d[d] = std::move(mat);
  }

  // dd = 0, checked column by column through sparse application.
  for (size_t d = 2; d < cx.d.size(); ++d) {
    const ZMat& hi = cx.d[d];
    const ZMat& lo = cx.d[d - 1];
    for (size_t col = 0; hi.size() && col < hi[0].size(); ++col) {
      std::vector<Int> acc(lo.size(), 0);
      for (size_t r = 0; r < hi.size(); ++r) {
        if (hi[r][col] == 0) continue;
        for (size_t q = 0; q < lo.size(); ++q)
          if (lo[q][r] != 0) acc[q] += hi[r][col] * lo[q][r];
      }
      for (const Int& x : acc)
        if (x != 0) throw std::runtime_error("boundary: dd != 0");
    }
  }
  return cx;
}

HomologySummary homology(const AcyclicCategory& cat, int max_dim) {
  auto cx = boundary_matrices(cat, max_dim);
  size_t dims = cx.basis.chains.size();
  std::vector<SNFResult> forms(dims);
  for (size_t d = 1; d < dims; ++d) forms[d] = snf(cx.d[d]);
  HomologySummary h;
  h.betti.resize(dims);
  h.torsion.resize(dims);
  for (size_t d = 0; d < dims; ++d) {
    long long rank_d = (d >= 1) ? forms[d].rank : 0;
    long long rank_up = (d + 1 < dims) ? forms[d + 1].rank : 0;
    h.betti[d] =
        static_cast<long long>(cx.basis.chains[d].size()) - rank_d - rank_up;
    if (d + 1 < dims)
      for (const Int& f : forms[d + 1].invariant_factors)
        if (f > 1) h.torsion[d].push_back(f);
  }
  return h;
}

}  // namespace ellarr
