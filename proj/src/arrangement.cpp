#include "ellarr/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ellarr {

namespace {

// thrown when a margin turns out too small; caught by the doubling loop
struct MarginRetry {
  std::string what;
};

Rat rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rat(q);
}

std::string qvec_key(const QVec& v) {
  std::string s;
  for (const auto& x : v) s += rat_to_string(x) + ",";
  return s;
}

std::string verts_key(const std::vector<QVec>& vs) {
  std::string s;
  for (const auto& v : vs) s += qvec_key(v) + ";";
  return s;
}

}  // namespace

IVec tag_vector(const std::string& tag) {
  if (tag.size() < 2 || tag.front() != '(' || tag.back() != ')')
    throw std::runtime_error("bad translation tag: " + tag);
  IVec v;
  std::string cur;
  for (size_t i = 1; i + 1 < tag.size(); ++i) {
    if (tag[i] == ',') {
      v.push_back(Int(cur));
      cur.clear();
    } else {
      cur += tag[i];
    }
  }
  if (!cur.empty()) v.push_back(Int(cur));
  return v;
}

std::string vector_tag(const IVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

ArrangementSpec spec_from_json(const nlohmann::json& j) {
  ArrangementSpec spec;
  spec.d = j.at("d").get<int>();
  for (const auto& col : j.at("columns")) {
    IVec c;
    for (const auto& x : col) c.push_back(Int(x.get<long>()));
    spec.columns.push_back(std::move(c));
  }
  for (const auto& o : j.at("offsets")) spec.offsets.push_back(rat_from_string(o.get<std::string>()));
  return spec;
}

nlohmann::json spec_to_json(const ArrangementSpec& spec) {
  nlohmann::json j;
  j["d"] = spec.d;
  j["columns"] = nlohmann::json::array();
  for (const auto& c : spec.columns) {
    nlohmann::json col = nlohmann::json::array();
    for (const auto& x : c) col.push_back(x.get_si());
    j["columns"].push_back(col);
  }
  j["offsets"] = nlohmann::json::array();
  for (const auto& o : spec.offsets) j["offsets"].push_back(rat_to_string(o));
  return j;
}

void validate_spec(const ArrangementSpec& spec) {
  if (spec.d < 1) throw std::runtime_error("ambient dimension must be >= 1");
  const size_t n = spec.columns.size();
  if (n == 0) throw std::runtime_error("need at least one hypersurface");
  if (spec.offsets.size() != n) throw std::runtime_error("offsets/columns length mismatch");
  QMat rows;
  for (const auto& c : spec.columns) {
    if (static_cast<int>(c.size()) != spec.d)
      throw std::runtime_error("column dimension mismatch");
    bool zero = true;
    QVec row(spec.d);
    for (int i = 0; i < spec.d; ++i) {
      if (c[i] != 0) zero = false;
      row[i] = Rat(c[i]);
    }
    if (zero) throw std::runtime_error("zero column");
    rows.push_back(std::move(row));
  }
  for (const auto& b : spec.offsets)
    if (b < 0 || b >= 1) throw std::runtime_error("offsets must lie in [0,1)");
  if (mat_rank(rows) != spec.d)
    throw std::runtime_error(
        "arrangement is not essential (column rank < d); project to the span "
        "of the columns to obtain an equivalent essential arrangement");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      bool same = spec.columns[i] == spec.columns[j] && spec.offsets[i] == spec.offsets[j];
      bool neg = true;
      for (int t = 0; t < spec.d; ++t)
        if (spec.columns[i][t] != -spec.columns[j][t]) neg = false;
      Rat nb = spec.offsets[j] == 0 ? Rat(0) : Rat(1) - spec.offsets[j];
      if (neg && spec.offsets[i] == nb) same = true;
      if (same)
        throw std::runtime_error("repeated hypersurface (columns " + std::to_string(i) + "," +
                                 std::to_string(j) + " agree up to sign)");
    }
}

namespace {

struct LiftFace {
  std::vector<int> sign;  // over the hyperplane list; 0 = contained
  int dim = 0;
  std::vector<QVec> verts;
  QVec bary;
};

struct LiftComplex {
  std::vector<std::pair<int, Int>> hyp;  // (family j, translate k): a_j.x = b_j + k
  std::vector<LiftFace> faces;
};

// All bounded faces of the lifted arrangement restricted to the margin box,
// with complete vertex lists (incomplete candidates are discarded; the
// stabilization loop recovers them at a larger margin).
LiftComplex build_lift(const ArrangementSpec& spec, int m) {
  const int d = spec.d;
  const size_t n = spec.columns.size();
  LiftComplex lc;
  // translate range per family over the box [-m, 1+m]^d
  for (size_t j = 0; j < n; ++j) {
    Rat lo = 0, hi = 0;
    for (int i = 0; i < d; ++i) {
      Rat at_lo = Rat(spec.columns[j][i]) * Rat(-m);
      Rat at_hi = Rat(spec.columns[j][i]) * Rat(1 + m);
      lo += std::min(at_lo, at_hi);
      hi += std::max(at_lo, at_hi);
    }
    Int klo(rat_floor(lo - spec.offsets[j]).get_num());
    Int khi(rat_floor(hi - spec.offsets[j]).get_num() + 1);
    for (Int k = klo; k <= khi; ++k) lc.hyp.push_back({static_cast<int>(j), k});
  }
  const size_t H = lc.hyp.size();
  auto normal = [&](size_t h) {
    QVec v(d);
    for (int i = 0; i < d; ++i) v[i] = Rat(spec.columns[lc.hyp[h].first][i]);
    return v;
  };
  auto rhs = [&](size_t h) -> Rat { return spec.offsets[lc.hyp[h].first] + Rat(lc.hyp[h].second); };

  // vertices: solutions of d independent hyperplanes inside the box
  std::map<std::string, QVec> vert_map;
  std::vector<size_t> idx(d);
  std::vector<QVec> vertices;
  {
    std::vector<int> comb(d);
    for (int i = 0; i < d; ++i) comb[i] = i;
    while (true) {
      QMat a(d);
      QVec b(d);
      for (int i = 0; i < d; ++i) {
        a[i] = normal(comb[i]);
        b[i] = rhs(comb[i]);
      }
      auto x = solve_square(a, b);
      if (x) {
        bool inside = true;
        for (int i = 0; i < d && inside; ++i)
          if ((*x)[i] < Rat(-m) || (*x)[i] > Rat(1 + m)) inside = false;
        if (inside) vert_map.emplace(qvec_key(*x), *x);
      }
      int i = d - 1;
      while (i >= 0 && comb[i] == static_cast<int>(H) - d + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int t = i + 1; t < d; ++t) comb[t] = comb[t - 1] + 1;
    }
  }
  for (auto& [k, v] : vert_map) vertices.push_back(v);

  // candidate faces: relax zero-sets of vertices via local covectors
  std::vector<std::vector<int>> vert_sign(vertices.size(), std::vector<int>(H));
  std::map<std::string, std::vector<int>> face_signs;
  for (size_t vi = 0; vi < vertices.size(); ++vi) {
    std::vector<size_t> zero;
    for (size_t h = 0; h < H; ++h) {
      vert_sign[vi][h] = sign_of(dot(normal(h), vertices[vi]) - rhs(h));
      if (vert_sign[vi][h] == 0) zero.push_back(h);
    }
    std::vector<IVec> gens;
    for (size_t h : zero) gens.push_back(spec.columns[lc.hyp[h].first]);
    for (const auto& cov : covectors(gens, d)) {
      std::vector<int> s = vert_sign[vi];
      for (size_t t = 0; t < zero.size(); ++t) s[zero[t]] = cov[t];
      std::string key(s.size(), '0');
      for (size_t h = 0; h < H; ++h) key[h] = static_cast<char>('1' + s[h]);
      face_signs.emplace(std::move(key), std::move(s));
    }
  }

  for (auto& [key, s] : face_signs) {
    LiftFace f;
    f.sign = s;
    QMat zero_rows;
    for (size_t h = 0; h < H; ++h)
      if (s[h] == 0) zero_rows.push_back(normal(h));
    f.dim = d - mat_rank(zero_rows);
    // incident vertices: sign compatible everywhere
    for (size_t vi = 0; vi < vertices.size(); ++vi) {
      bool ok = true;
      for (size_t h = 0; h < H && ok; ++h)
        if (vert_sign[vi][h] != 0 && vert_sign[vi][h] != s[h]) ok = false;
      if (ok) f.verts.push_back(vertices[vi]);
    }
    // numeric lexicographic order is translation-invariant, so vertex lists
    // of faces in the same orbit correspond entrywise
    std::sort(f.verts.begin(), f.verts.end());
    if (f.verts.empty() || affine_dim(f.verts) != f.dim) continue;
    // bounded iff the recession cone is trivial; one constraint per family
    {
      std::vector<LinConstraint> cone;
      std::vector<int> fam_sign(n, 2);  // 2 = unseen, -1/0/+1, 9 = mixed -> equality
      for (size_t h = 0; h < H; ++h) {
        int j = lc.hyp[h].first;
        int sg = s[h];
        if (fam_sign[j] == 2) fam_sign[j] = sg;
        else if (fam_sign[j] != sg) fam_sign[j] = 9;
      }
      for (size_t j = 0; j < n; ++j) {
        if (fam_sign[j] == 2) continue;
        LinConstraint c;
        c.coeffs.resize(d);
        for (int i = 0; i < d; ++i) c.coeffs[i] = Rat(spec.columns[j][i]);
        c.rhs = 0;
        if (fam_sign[j] == 9 || fam_sign[j] == 0) {
          c.equality = true;
        } else {
          c.equality = false;
          if (fam_sign[j] < 0)
            for (int i = 0; i < d; ++i) c.coeffs[i] = -c.coeffs[i];
        }
        cone.push_back(std::move(c));
      }
      bool unbounded = false;
      for (int i = 0; i < d && !unbounded; ++i)
        for (int sgn : {1, -1}) {
          auto cons = cone;
          LinConstraint c;
          c.coeffs.assign(d, Rat(0));
          c.coeffs[i] = Rat(sgn);
          c.rhs = 1;
          cons.push_back(std::move(c));
          if (feasible(cons, d)) {
            unbounded = true;
            break;
          }
        }
      if (unbounded) continue;
    }
    f.bary.assign(d, Rat(0));
    for (const auto& v : f.verts)
      for (int i = 0; i < d; ++i) f.bary[i] += v[i];
    for (int i = 0; i < d; ++i) f.bary[i] /= Rat(static_cast<long>(f.verts.size()));
    lc.faces.push_back(std::move(f));
  }
  return lc;
}

bool in_unit_box(const QVec& x) {
  for (const auto& c : x)
    if (c < 0 || c >= 1) return false;
  return true;
}

ToricBundle build_bundle(const ArrangementSpec& spec, int m) {
  const int d = spec.d;
  const size_t n = spec.columns.size();
  LiftComplex lc = build_lift(spec, m);

  // canonical faces: barycenter in [0,1)^d, deterministic order
  std::vector<int> canon;
  for (size_t f = 0; f < lc.faces.size(); ++f)
    if (in_unit_box(lc.faces[f].bary)) canon.push_back(static_cast<int>(f));
  // sort so that construction order equals the canonical (rank, label) order
  // used by the serializer; labels embed the barycenter key
  std::sort(canon.begin(), canon.end(), [&](int a, int b) {
    return std::make_pair(lc.faces[a].dim, qvec_key(lc.faces[a].bary)) <
           std::make_pair(lc.faces[b].dim, qvec_key(lc.faces[b].bary));
  });
  std::map<std::string, int> canon_by_bary;  // barycenter key -> canonical index
  for (size_t i = 0; i < canon.size(); ++i)
    canon_by_bary[qvec_key(lc.faces[canon[i]].bary)] = static_cast<int>(i);

  ToricBundle bundle;
  bundle.spec = spec;
  (void)m;  // margin_used is assigned by the stabilization loop
  for (size_t i = 0; i < canon.size(); ++i) {
    const LiftFace& f = lc.faces[canon[i]];
    FaceOrbit orb;
    orb.id = static_cast<int>(i);
    orb.dim = f.dim;
    orb.vertices = f.verts;
    orb.barycenter = f.bary;
    for (size_t j = 0; j < n; ++j) {
      bool contained = true;
      std::string k0;
      for (const auto& v : f.verts) {
        QVec aj(d);
        for (int t = 0; t < d; ++t) aj[t] = Rat(spec.columns[j][t]);
        Rat val = dot(aj, v) - spec.offsets[j];
        if (!is_integer_vector({val})) {
          contained = false;
          break;
        }
        std::string k = rat_to_string(val);
        if (k0.empty()) k0 = k;
        else if (k != k0) {
          contained = false;
          break;
        }
      }
      if (contained) orb.support.push_back(static_cast<int>(j));
    }
    bundle.cat.add_object(f.dim, "F" + std::to_string(f.dim) + "@" + qvec_key(f.bary));
    bundle.geom.push_back(std::move(orb));
  }

  // morphisms: for each canonical G, each complex face f in cl(rep G)
  struct MorRec {
    int src, tgt;
    IVec v;
  };
  std::vector<MorRec> mors;
  for (size_t gi = 0; gi < canon.size(); ++gi) {
    const LiftFace& g = lc.faces[canon[gi]];
    for (const LiftFace& f : lc.faces) {
      if (&f == &lc.faces[canon[gi]]) continue;
      bool below = true;
      for (size_t h = 0; h < lc.hyp.size() && below; ++h)
        if (f.sign[h] != 0 && f.sign[h] != g.sign[h]) below = false;
      if (!below) continue;
      IVec w(d);
      QVec shifted = f.bary;
      for (int i = 0; i < d; ++i) {
        Rat fl = rat_floor(f.bary[i]);
        w[i] = fl.get_num();
        shifted[i] = f.bary[i] - fl;
      }
      auto it = canon_by_bary.find(qvec_key(shifted));
      if (it == canon_by_bary.end())
        throw MarginRetry{"canonical lookup missing for a boundary face"};
      const FaceOrbit& F = bundle.geom[it->second];
      if (F.dim != f.dim) throw MarginRetry{"canonical lookup dimension mismatch"};
      std::vector<QVec> tv = f.verts;
      for (auto& vv : tv)
        for (int i = 0; i < d; ++i) vv[i] -= Rat(w[i]);
      if (verts_key(tv) != verts_key(F.vertices))
        throw MarginRetry{"canonical representative has incomplete vertex set"};
      mors.push_back({it->second, static_cast<int>(gi), w});
    }
  }
  std::sort(mors.begin(), mors.end(), [](const MorRec& a, const MorRec& b) {
    return std::make_tuple(a.src, a.tgt, vector_tag(a.v)) <
           std::make_tuple(b.src, b.tgt, vector_tag(b.v));
  });
  std::map<std::tuple<int, int, std::string>, int> mor_id;
  for (const auto& mr : mors) {
    std::string tag = vector_tag(mr.v);
    int id = bundle.cat.add_morphism(mr.src, mr.tgt, tag);
    if (!mor_id.emplace(std::make_tuple(mr.src, mr.tgt, tag), id).second)
      throw MarginRetry{"duplicate morphism"};
  }
  // composition: translation vectors add
  for (size_t f = 0; f < mors.size(); ++f)
    for (size_t g = 0; g < mors.size(); ++g) {
      if (mors[f].tgt != mors[g].src) continue;
      IVec sum(d);
      for (int i = 0; i < d; ++i) sum[i] = mors[f].v[i] + mors[g].v[i];
      auto it = mor_id.find(std::make_tuple(mors[f].src, mors[g].tgt, vector_tag(sum)));
      if (it == mor_id.end()) throw MarginRetry{"missing composite morphism"};
      bundle.cat.set_composite(static_cast<int>(f), static_cast<int>(g), it->second);
    }
  return bundle;
}

std::string bundle_fingerprint(const ToricBundle& b) {
  return bundle_to_json(b).dump();
}

}  // namespace

std::vector<AffineFace> affine_face_complex(const ArrangementSpec& spec, int margin) {
  validate_spec(spec);
  LiftComplex lc = build_lift(spec, margin);
  std::vector<AffineFace> out;
  for (const auto& f : lc.faces)
    if (in_unit_box(f.bary)) out.push_back({f.dim, f.verts, f.bary});
  std::sort(out.begin(), out.end(), [](const AffineFace& a, const AffineFace& b) {
    return std::tie(a.dim, a.barycenter) < std::tie(b.dim, b.barycenter);
  });
  return out;
}

ToricBundle toric_face_category(const ArrangementSpec& spec, int margin_cap) {
  validate_spec(spec);
  std::string prev_fp;
  ToricBundle prev;
  bool have_prev = false;
  for (int m = 1; m <= margin_cap; m *= 2) {
    ToricBundle cur;
    try {
      cur = build_bundle(spec, m);
    } catch (const MarginRetry&) {
      have_prev = false;
      continue;
    }
    std::string fp = bundle_fingerprint(cur);
    if (have_prev && fp == prev_fp) {
      auto rep = validate(prev.cat);
      if (!rep.ok()) throw std::runtime_error("face category invalid: " + rep.violations[0]);
      long long chi = euler_characteristic_cells(prev.cat);
      if (chi != 0) throw std::runtime_error("face category Euler characteristic != 0");
      return prev;
    }
    prev = std::move(cur);
    prev.margin_used = m;
    prev_fp = fp;
    have_prev = true;
  }
  throw std::runtime_error("face enumeration did not stabilize within the margin cap");
}

ChamberGraph chamber_graph(const ToricBundle& bundle) {
  const int d = bundle.spec.d;
  ChamberGraph g;
  for (size_t o = 0; o < bundle.cat.objects.size(); ++o)
    if (bundle.cat.objects[o].rank == d) g.chambers.push_back(static_cast<int>(o));
  for (size_t o = 0; o < bundle.cat.objects.size(); ++o) {
    if (bundle.cat.objects[o].rank != d - 1) continue;
    std::vector<int> inc;
    for (size_t m = 0; m < bundle.cat.morphisms.size(); ++m)
      if (bundle.cat.morphisms[m].src == static_cast<int>(o) &&
          bundle.cat.objects[bundle.cat.morphisms[m].tgt].rank == d)
        inc.push_back(static_cast<int>(m));
    if (inc.size() != 2) throw std::runtime_error("wall without exactly two chamber incidences");
    int c0 = bundle.cat.morphisms[inc[0]].tgt;
    int c1 = bundle.cat.morphisms[inc[1]].tgt;
    ChamberGraph::Edge e;
    e.wall = static_cast<int>(o);
    bool first_is_tail;
    if (c0 != c1) {
      first_is_tail = bundle.geom[c0].barycenter < bundle.geom[c1].barycenter;
    } else {
      first_is_tail = tag_vector(bundle.cat.morphisms[inc[0]].tag) <
                      tag_vector(bundle.cat.morphisms[inc[1]].tag);
    }
    e.inc_tail = first_is_tail ? inc[0] : inc[1];
    e.inc_head = first_is_tail ? inc[1] : inc[0];
    g.edges.push_back(e);
  }
  return g;
}

std::vector<StarEntry> codim2_star(const ToricBundle& bundle, const ChamberGraph& graph, int p) {
  const int d = bundle.spec.d;
  if (bundle.cat.objects[p].rank != d - 2)
    throw std::runtime_error("codim2_star: face has wrong dimension");
  const FaceOrbit& P = bundle.geom[p];

  // direction space of p, then an oriented transverse frame (u1, u2)
  QMat dirs;
  for (size_t i = 1; i < P.vertices.size(); ++i) dirs.push_back(vec_sub(P.vertices[i], P.vertices[0]));
  QMat dir_basis;  // row-reduced independent directions
  {
    QMat rows = dirs;
    int want = d - 2;
    for (const auto& r : rows) {
      QMat test = dir_basis;
      test.push_back(r);
      if (mat_rank(test) > static_cast<int>(dir_basis.size())) dir_basis.push_back(r);
      if (static_cast<int>(dir_basis.size()) == want) break;
    }
    if (static_cast<int>(dir_basis.size()) != want)
      throw std::runtime_error("codim2_star: degenerate direction space");
  }
  QMat trans = nullspace(dir_basis, d);
  if (trans.size() != 2) throw std::runtime_error("codim2_star: transverse plane not 2-dimensional");
  // frame matrix columns: dir_basis^T | u1 | u2, with positive determinant
  auto frame_coords = [&](const QVec& x, const QMat& frame_rows) -> std::pair<Rat, Rat> {
    QMat a(d, QVec(d));
    for (int i = 0; i < d; ++i) {
      for (size_t c = 0; c < frame_rows.size(); ++c) a[i][c] = frame_rows[c][i];
    }
    auto sol = solve_square(a, x);
    if (!sol) throw std::runtime_error("codim2_star: frame is singular");
    return {(*sol)[d - 2], (*sol)[d - 1]};
  };
  QMat frame = dir_basis;
  frame.push_back(trans[0]);
  frame.push_back(trans[1]);
  {
    // determinant sign via rank-free elimination: use solve of unit vectors?
    // cheaper: compute determinant by Gaussian elimination over Q
    QMat a(d, QVec(d));
    for (int i = 0; i < d; ++i)
      for (int c = 0; c < d; ++c) a[i][c] = frame[c][i];
    Rat det = 1;
    for (int t = 0; t < d; ++t) {
      int piv = -1;
      for (int i = t; i < d; ++i)
        if (a[i][t] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) throw std::runtime_error("codim2_star: frame is singular");
      if (piv != t) {
        std::swap(a[piv], a[t]);
        det = -det;
      }
      det *= a[t][t];
      for (int i = t + 1; i < d; ++i) {
        if (a[i][t] == 0) continue;
        Rat f = a[i][t] / a[t][t];
        for (int c = t; c < d; ++c) a[i][c] -= f * a[t][c];
      }
    }
    if (det < 0) std::swap(frame[d - 2], frame[d - 1]);
  }

  struct Ray {
    Rat s, t;
    int mor;
    bool is_wall;
  };
  std::vector<Ray> rays;
  for (size_t m = 0; m < bundle.cat.morphisms.size(); ++m) {
    if (bundle.cat.morphisms[m].src != p) continue;
    int tgt = bundle.cat.morphisms[m].tgt;
    int rk = bundle.cat.objects[tgt].rank;
    if (rk != d - 1 && rk != d) continue;
    IVec v = tag_vector(bundle.cat.morphisms[m].tag);
    QVec x = bundle.geom[tgt].barycenter;
    for (int i = 0; i < d; ++i) x[i] = x[i] - Rat(v[i]) - P.barycenter[i];
    auto [s, t] = frame_coords(x, frame);
    rays.push_back({s, t, static_cast<int>(m), rk == d - 1});
  }
  auto half = [](const Ray& r) {
    return (r.t > 0 || (r.t == 0 && r.s > 0)) ? 0 : 1;
  };
  std::sort(rays.begin(), rays.end(), [&](const Ray& a, const Ray& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    Rat cross = a.s * b.t - b.s * a.t;
    if (cross != 0) return cross > 0;
    return a.mor < b.mor;  // wall ray and nothing else may share a direction
  });
  const size_t N = rays.size();
  if (N == 0 || N % 2 != 0) throw std::runtime_error("codim2_star: bad incidence count");
  for (size_t i = 0; i < N; ++i)
    if (rays[i].is_wall == rays[(i + 1) % N].is_wall)
      throw std::runtime_error("codim2_star: star does not alternate");

  std::map<int, const ChamberGraph::Edge*> edge_of_wall;
  for (const auto& e : graph.edges) edge_of_wall[e.wall] = &e;

  std::vector<StarEntry> star;
  for (size_t i = 0; i < N; ++i) {
    StarEntry entry;
    entry.mor = rays[i].mor;
    entry.is_wall = rays[i].is_wall;
    entry.sign = 0;
    if (rays[i].is_wall) {
      const Ray& prev = rays[(i + N - 1) % N];
      if (prev.is_wall) throw std::runtime_error("codim2_star: expected chamber before wall");
      int wall = bundle.cat.morphisms[rays[i].mor].tgt;
      int cham = bundle.cat.morphisms[prev.mor].tgt;
      IVec vw = tag_vector(bundle.cat.morphisms[rays[i].mor].tag);
      IVec vc = tag_vector(bundle.cat.morphisms[prev.mor].tag);
      IVec u(d);
      for (int t2 = 0; t2 < d; ++t2) u[t2] = vc[t2] - vw[t2];
      auto inc = bundle.cat.find_morphism(wall, cham, vector_tag(u));
      if (!inc) throw std::runtime_error("codim2_star: missing wall->chamber incidence");
      const auto* e = edge_of_wall.at(wall);
      entry.sign = (*inc == e->inc_tail) ? 1 : -1;
    }
    star.push_back(entry);
  }
  return star;
}

nlohmann::json bundle_to_json(const ToricBundle& bundle) {
  nlohmann::json j;
  j["spec"] = spec_to_json(bundle.spec);
  j["margin"] = bundle.margin_used;
  j["category"] = category_to_json(bundle.cat);
  j["geometry"] = nlohmann::json::array();
  for (const auto& f : bundle.geom) {
    nlohmann::json g;
    g["id"] = f.id;
    g["dim"] = f.dim;
    g["support"] = f.support;
    g["barycenter"] = nlohmann::json::array();
    for (const auto& c : f.barycenter) g["barycenter"].push_back(rat_to_string(c));
    g["vertices"] = nlohmann::json::array();
    for (const auto& v : f.vertices) {
      nlohmann::json vv = nlohmann::json::array();
      for (const auto& c : v) vv.push_back(rat_to_string(c));
      g["vertices"].push_back(vv);
    }
    j["geometry"].push_back(g);
  }
  return j;
}

ToricBundle bundle_from_json(const nlohmann::json& j) {
  ToricBundle b;
  b.spec = spec_from_json(j.at("spec"));
  b.margin_used = j.at("margin").get<int>();
  b.cat = category_from_json(j.at("category"));
  for (const auto& g : j.at("geometry")) {
    FaceOrbit f;
    f.id = g.at("id").get<int>();
    f.dim = g.at("dim").get<int>();
    for (const auto& s : g.at("support")) f.support.push_back(s.get<int>());
    for (const auto& c : g.at("barycenter")) f.barycenter.push_back(rat_from_string(c.get<std::string>()));
    for (const auto& v : g.at("vertices")) {
      QVec vv;
      for (const auto& c : v) vv.push_back(rat_from_string(c.get<std::string>()));
      f.vertices.push_back(std::move(vv));
    }
    b.geom.push_back(std::move(f));
  }
  return b;
}

}  // namespace ellarr
