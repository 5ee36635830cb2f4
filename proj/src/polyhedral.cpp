#include "ellarr/polyhedral.hpp"

#include <stdexcept>

namespace ellarr {

std::vector<std::vector<int>> covectors(const std::vector<IVec>& gens, int d) {
  const size_t k = gens.size();
  std::vector<std::vector<int>> result;
  std::vector<int> v(k, -1);
  while (true) {
    std::vector<LinConstraint> cons;
    for (size_t j = 0; j < k; ++j) {
      LinConstraint c;
      c.coeffs.resize(d);
      for (int i = 0; i < d; ++i) c.coeffs[i] = Rat(v[j] == -1 ? -gens[j][i] : gens[j][i]);
      if (v[j] == 0) {
        c.rhs = 0;
        c.equality = true;
      } else {
        // strict homogeneous side condition: g.x > 0 iff g.x >= 1 is solvable
        c.rhs = 1;
        c.equality = false;
      }
      cons.push_back(std::move(c));
    }
    if (feasible(cons, d)) result.push_back(v);
    // next candidate in {-1,0,1}^k
    size_t j = 0;
    while (j < k && v[j] == 1) v[j++] = -1;
    if (j == k) break;
    ++v[j];
  }
  return result;
}

FacePoset zonotope_face_poset(const std::vector<IVec>& gens, int d) {
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != d) throw std::runtime_error("generator dimension mismatch");
  auto cov = covectors(gens, d);
  FacePoset p;
  const size_t n = cov.size();
  p.ranks.resize(n);
  p.labels.resize(n);
  p.leq.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    QMat zero_rows;
    std::string lab;
    for (size_t j = 0; j < cov[i].size(); ++j) {
      lab += (cov[i][j] == 0 ? '0' : (cov[i][j] > 0 ? '+' : '-'));
      if (cov[i][j] == 0) {
        QVec row(d);
        for (int t = 0; t < d; ++t) row[t] = Rat(gens[j][t]);
        zero_rows.push_back(std::move(row));
      }
    }
    p.ranks[i] = mat_rank(zero_rows);
    p.labels[i] = lab.empty() ? "()" : lab;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      bool le = true;
      for (size_t t = 0; t < cov[i].size() && le; ++t)
        if (cov[j][t] != 0 && cov[j][t] != cov[i][t]) le = false;
      p.leq[i][j] = le;
    }
  return p;
}

FacePoset poset_product(const FacePoset& a, const FacePoset& b) {
  FacePoset p;
  const size_t na = a.size(), nb = b.size();
  p.ranks.resize(na * nb);
  p.labels.resize(na * nb);
  p.leq.assign(na * nb, std::vector<bool>(na * nb, false));
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nb; ++j) {
      p.ranks[i * nb + j] = a.ranks[i] + b.ranks[j];
      p.labels[i * nb + j] = "(" + a.labels[i] + "*" + b.labels[j] + ")";
    }
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nb; ++j)
      for (size_t k = 0; k < na; ++k)
        for (size_t l = 0; l < nb; ++l)
          p.leq[i * nb + j][k * nb + l] = a.leq[i][k] && b.leq[j][l];
  return p;
}

AcyclicCategory poset_to_category(const FacePoset& p) {
  AcyclicCategory cat;
  for (size_t i = 0; i < p.size(); ++i) cat.add_object(p.ranks[i], p.labels[i]);
  std::map<std::pair<int, int>, int> mor;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p.size(); ++j)
      if (i != j && p.leq[i][j])
        mor[{static_cast<int>(i), static_cast<int>(j)}] =
            cat.add_morphism(static_cast<int>(i), static_cast<int>(j), "<");
  for (const auto& [fp, f] : mor)
    for (const auto& [gp, g] : mor)
      if (fp.second == gp.first) cat.set_composite(f, g, mor.at({fp.first, gp.second}));
  return cat;
}

bool poset_isomorphic(const FacePoset& a, const FacePoset& b) {
  return categories_isomorphic(poset_to_category(a), poset_to_category(b)).has_value();
}

}  // namespace ellarr
