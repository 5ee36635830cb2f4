#include "ellarr/scwol.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace ellarr {

int AcyclicCategory::add_object(int rank, std::string label) {
  objects.push_back({rank, std::move(label)});
  return static_cast<int>(objects.size()) - 1;
}

int AcyclicCategory::add_morphism(int src, int tgt, std::string tag) {
  morphisms.push_back({src, tgt, std::move(tag)});
  return static_cast<int>(morphisms.size()) - 1;
}

void AcyclicCategory::set_composite(int f, int g, int h) { composition[{f, g}] = h; }

std::optional<int> AcyclicCategory::composite(int f, int g) const {
  auto it = composition.find({f, g});
  if (it == composition.end()) return std::nullopt;
  return it->second;
}

std::vector<int> AcyclicCategory::morphisms_between(int x, int y) const {
  std::vector<int> out;
  for (size_t m = 0; m < morphisms.size(); ++m)
    if (morphisms[m].src == x && morphisms[m].tgt == y) out.push_back(static_cast<int>(m));
  return out;
}

std::optional<int> AcyclicCategory::find_morphism(int src, int tgt, const std::string& tag) const {
  for (size_t m = 0; m < morphisms.size(); ++m)
    if (morphisms[m].src == src && morphisms[m].tgt == tgt && morphisms[m].tag == tag)
      return static_cast<int>(m);
  return std::nullopt;
}

int AcyclicCategory::max_rank() const {
  int r = 0;
  for (const auto& o : objects) r = std::max(r, o.rank);
  return r;
}

bool AcyclicCategory::is_poset() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& m : morphisms)
    if (!seen.insert({m.src, m.tgt}).second) return false;
  return true;
}

std::vector<bool> AcyclicCategory::indecomposable_mask() const {
  std::vector<bool> indec(morphisms.size(), true);
  for (const auto& [pair, h] : composition) indec[h] = false;
  return indec;
}

ValidationReport validate(const AcyclicCategory& cat) {
  ValidationReport rep;
  const size_t n = cat.objects.size();
  const size_t m = cat.morphisms.size();

  for (size_t i = 0; i < m; ++i) {
    const auto& mor = cat.morphisms[i];
    if (mor.src < 0 || mor.src >= static_cast<int>(n) || mor.tgt < 0 ||
        mor.tgt >= static_cast<int>(n)) {
      rep.violations.push_back("morphism " + std::to_string(i) + ": endpoint out of range");
      return rep;
    }
    if (mor.src == mor.tgt)
      rep.violations.push_back("morphism " + std::to_string(i) + ": endomorphism (cycle)");
  }

  std::set<std::tuple<int, int, std::string>> keys;
  for (size_t i = 0; i < m; ++i) {
    const auto& mor = cat.morphisms[i];
    if (!keys.insert({mor.src, mor.tgt, mor.tag}).second)
      rep.violations.push_back("morphism " + std::to_string(i) +
                               ": duplicate (source, target, tag)");
  }

  // Acyclicity of the object reachability relation.
  {
    std::vector<std::vector<int>> adj(n);
    for (const auto& mor : cat.morphisms)
      if (mor.src != mor.tgt) adj[mor.src].push_back(mor.tgt);
    std::vector<int> state(n, 0);
    std::vector<std::pair<int, size_t>> stack;
    for (size_t root = 0; root < n; ++root) {
      if (state[root] != 0) continue;
      stack.push_back({static_cast<int>(root), 0});
      state[root] = 1;
      while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < adj[v].size()) {
          int w = adj[v][idx++];
          if (state[w] == 1) {
            rep.violations.push_back("directed cycle through object " + std::to_string(w));
            stack.clear();
            break;
          }
          if (state[w] == 0) {
            state[w] = 1;
            stack.push_back({w, 0});
          }
        } else {
          state[v] = 2;
          stack.pop_back();
        }
      }
      if (!rep.violations.empty() &&
          rep.violations.back().rfind("directed cycle", 0) == 0)
        break;
    }
  }

  // Composition total on composable pairs, with matching endpoints.
  std::vector<std::vector<int>> out_of(n);
  for (size_t i = 0; i < m; ++i) out_of[cat.morphisms[i].src].push_back(static_cast<int>(i));
  for (size_t f = 0; f < m; ++f) {
    for (int g : out_of[cat.morphisms[f].tgt]) {
      auto h = cat.composite(static_cast<int>(f), g);
      if (!h) {
        rep.violations.push_back("missing composite of morphisms " + std::to_string(f) + "," +
                                 std::to_string(g));
        continue;
      }
      const auto& hh = cat.morphisms[*h];
      if (hh.src != cat.morphisms[f].src || hh.tgt != cat.morphisms[g].tgt)
        rep.violations.push_back("composite of " + std::to_string(f) + "," + std::to_string(g) +
                                 " has wrong endpoints");
    }
  }
  for (const auto& [pair, h] : cat.composition) {
    auto [f, g] = pair;
    if (f < 0 || g < 0 || f >= static_cast<int>(m) || g >= static_cast<int>(m) || h < 0 ||
        h >= static_cast<int>(m)) {
      rep.violations.push_back("composition entry out of range");
      continue;
    }
    if (cat.morphisms[f].tgt != cat.morphisms[g].src)
      rep.violations.push_back("composition entry on non-composable pair " + std::to_string(f) +
                               "," + std::to_string(g));
  }

  // Associativity on every composable triple.
  if (rep.ok()) {
    for (size_t f = 0; f < m; ++f)
      for (int g : out_of[cat.morphisms[f].tgt]) {
        auto fg = cat.composite(static_cast<int>(f), g);
        if (!fg) continue;
        for (int h : out_of[cat.morphisms[g].tgt]) {
          auto gh = cat.composite(g, h);
          auto lhs = fg ? cat.composite(*fg, h) : std::nullopt;
          auto rhs = gh ? cat.composite(static_cast<int>(f), *gh) : std::nullopt;
          if (!lhs || !rhs || *lhs != *rhs) {
            rep.violations.push_back("associativity fails on triple " + std::to_string(f) + "," +
                                     std::to_string(g) + "," + std::to_string(h));
            break;
          }
        }
      }
  }

  // Ranked axiom: indecomposables raise rank by exactly 1; min rank 0.
  auto indec = cat.indecomposable_mask();
  for (size_t i = 0; i < m; ++i) {
    if (!indec[i]) continue;
    const auto& mor = cat.morphisms[i];
    if (cat.objects[mor.tgt].rank != cat.objects[mor.src].rank + 1)
      rep.violations.push_back("indecomposable morphism " + std::to_string(i) +
                               " does not raise rank by 1");
  }
  if (!cat.objects.empty()) {
    int minr = cat.objects[0].rank;
    for (const auto& o : cat.objects) minr = std::min(minr, o.rank);
    if (minr != 0) rep.violations.push_back("minimum rank is not 0");
  }
  return rep;
}

AcyclicCategory opposite(const AcyclicCategory& cat) {
  AcyclicCategory out;
  int maxr = cat.max_rank();
  for (const auto& o : cat.objects) out.add_object(maxr - o.rank, o.label);
  for (const auto& m : cat.morphisms) out.add_morphism(m.tgt, m.src, m.tag);
  for (const auto& [pair, h] : cat.composition) out.set_composite(pair.second, pair.first, h);
  return out;
}

namespace {

// A morphism-or-identity component of a product morphism.
struct Part {
  bool ident;
  int idx;  // object index if ident, morphism index otherwise
  bool operator<(const Part& o) const {
    return std::tie(ident, idx) < std::tie(o.ident, o.idx);
  }
};

int part_src(const AcyclicCategory& c, const Part& p) {
  return p.ident ? p.idx : c.morphisms[p.idx].src;
}
int part_tgt(const AcyclicCategory& c, const Part& p) {
  return p.ident ? p.idx : c.morphisms[p.idx].tgt;
}

// Composite of two composable parts; nullopt if the category lacks the entry.
std::optional<Part> part_compose(const AcyclicCategory& c, const Part& a, const Part& b) {
  if (a.ident) return b;
  if (b.ident) return a;
  auto h = c.composite(a.idx, b.idx);
  if (!h) return std::nullopt;
  return Part{false, *h};
}

}  // namespace

AcyclicCategory product(const AcyclicCategory& a, const AcyclicCategory& b) {
  AcyclicCategory out;
  const int nb = static_cast<int>(b.objects.size());
  auto obj_id = [&](int i, int j) { return i * nb + j; };
  for (size_t i = 0; i < a.objects.size(); ++i)
    for (size_t j = 0; j < b.objects.size(); ++j)
      out.add_object(a.objects[i].rank + b.objects[j].rank,
                     "(" + a.objects[i].label + "*" + b.objects[j].label + ")");

  std::vector<Part> parts_a, parts_b;
  for (size_t i = 0; i < a.objects.size(); ++i) parts_a.push_back({true, static_cast<int>(i)});
  for (size_t m = 0; m < a.morphisms.size(); ++m) parts_a.push_back({false, static_cast<int>(m)});
  for (size_t j = 0; j < b.objects.size(); ++j) parts_b.push_back({true, static_cast<int>(j)});
  for (size_t m = 0; m < b.morphisms.size(); ++m) parts_b.push_back({false, static_cast<int>(m)});

  auto part_tag = [](const AcyclicCategory& c, const Part& p) {
    return p.ident ? std::string("*") : c.morphisms[p.idx].tag;
  };
  std::map<std::pair<Part, Part>, int> mor_id;
  std::vector<std::pair<Part, Part>> mor_parts;
  for (const Part& pa : parts_a)
    for (const Part& pb : parts_b) {
      if (pa.ident && pb.ident) continue;
      int id = out.add_morphism(obj_id(part_src(a, pa), part_src(b, pb)),
                                obj_id(part_tgt(a, pa), part_tgt(b, pb)),
                                "(" + part_tag(a, pa) + ";" + part_tag(b, pb) + ")");
      mor_id[{pa, pb}] = id;
      mor_parts.push_back({pa, pb});
    }
  for (size_t f = 0; f < mor_parts.size(); ++f)
    for (size_t g = 0; g < mor_parts.size(); ++g) {
      const auto& [fa, fb] = mor_parts[f];
      const auto& [ga, gb] = mor_parts[g];
      if (part_tgt(a, fa) != part_src(a, ga) || part_tgt(b, fb) != part_src(b, gb)) continue;
      auto ca = part_compose(a, fa, ga);
      auto cb = part_compose(b, fb, gb);
      if (!ca || !cb) continue;
      if (ca->ident && cb->ident) continue;  // cannot happen for non-identity factors
      out.set_composite(static_cast<int>(f), static_cast<int>(g), mor_id.at({*ca, *cb}));
    }
  return out;
}

AcyclicCategory full_subcategory(const AcyclicCategory& cat, const std::vector<int>& keep) {
  AcyclicCategory out;
  std::vector<int> obj_map(cat.objects.size(), -1);
  for (int o : keep) obj_map[o] = out.add_object(cat.objects[o].rank, cat.objects[o].label);
  std::vector<int> mor_map(cat.morphisms.size(), -1);
  for (size_t m = 0; m < cat.morphisms.size(); ++m) {
    const auto& mor = cat.morphisms[m];
    if (obj_map[mor.src] >= 0 && obj_map[mor.tgt] >= 0)
      mor_map[m] = out.add_morphism(obj_map[mor.src], obj_map[mor.tgt], mor.tag);
  }
  for (const auto& [pair, h] : cat.composition)
    if (mor_map[pair.first] >= 0 && mor_map[pair.second] >= 0 && mor_map[h] >= 0)
      out.set_composite(mor_map[pair.first], mor_map[pair.second], mor_map[h]);
  return out;
}

AcyclicCategory slice(const AcyclicCategory& cat, int x) {
  AcyclicCategory out;
  // Object 0 is id_x; object per stored morphism into x.
  std::map<int, int> obj_of_mor;  // morphism into x -> slice object
  std::vector<int> pre_rank;
  int id_obj = out.add_object(0, "id");
  pre_rank.push_back(cat.objects[x].rank);
  for (size_t m = 0; m < cat.morphisms.size(); ++m) {
    if (cat.morphisms[m].tgt != x) continue;
    int o = out.add_object(0, cat.objects[cat.morphisms[m].src].label + "|" +
                                  cat.morphisms[m].tag);
    obj_of_mor[static_cast<int>(m)] = o;
    pre_rank.push_back(cat.objects[cat.morphisms[m].src].rank);
  }
  int minr = pre_rank.empty() ? 0 : *std::min_element(pre_rank.begin(), pre_rank.end());
  for (size_t o = 0; o < out.objects.size(); ++o) out.objects[o].rank = pre_rank[o] - minr;

  // Slice morphism mu_zeta : phi -> psi whenever zeta.psi = phi.
  std::map<std::tuple<int, int, int>, int> slice_mor;  // (src obj, zeta, tgt obj)
  struct SEntry {
    int src_obj, zeta, tgt_obj;
  };
  std::vector<SEntry> entries;
  for (size_t z = 0; z < cat.morphisms.size(); ++z) {
    const auto& zm = cat.morphisms[z];
    // psi = id_x:
    if (zm.tgt == x) {
      int so = obj_of_mor.at(static_cast<int>(z));
      int id = out.add_morphism(so, id_obj, "z" + std::to_string(z));
      slice_mor[{so, static_cast<int>(z), id_obj}] = id;
      entries.push_back({so, static_cast<int>(z), id_obj});
    }
    // psi stored with src(psi) = tgt(zeta):
    for (const auto& [psi, psi_obj] : obj_of_mor) {
      if (cat.morphisms[psi].src != zm.tgt) continue;
      auto phi = cat.composite(static_cast<int>(z), psi);
      if (!phi) continue;
      auto it = obj_of_mor.find(*phi);
      if (it == obj_of_mor.end()) continue;
      int so = it->second;
      int id = out.add_morphism(so, psi_obj, "z" + std::to_string(z));
      slice_mor[{so, static_cast<int>(z), psi_obj}] = id;
      entries.push_back({so, static_cast<int>(z), psi_obj});
    }
  }
  for (size_t f = 0; f < entries.size(); ++f)
    for (size_t g = 0; g < entries.size(); ++g) {
      if (out.morphisms[f].tgt != out.morphisms[g].src) continue;
      auto z12 = cat.composite(entries[f].zeta, entries[g].zeta);
      if (!z12) continue;
      auto it = slice_mor.find({entries[f].src_obj, *z12, entries[g].tgt_obj});
      if (it != slice_mor.end())
        out.set_composite(static_cast<int>(f), static_cast<int>(g), it->second);
    }
  return out;
}

namespace {

std::string perm_key(const CatAutomorphism& a) {
  std::string key;
  for (int v : a.obj) key += std::to_string(v) + ",";
  key += "|";
  for (int v : a.mor) key += std::to_string(v) + ",";
  return key;
}

CatAutomorphism compose_auto(const CatAutomorphism& a, const CatAutomorphism& b) {
  CatAutomorphism c;
  c.obj.resize(a.obj.size());
  c.mor.resize(a.mor.size());
  for (size_t i = 0; i < a.obj.size(); ++i) c.obj[i] = a.obj[b.obj[i]];
  for (size_t i = 0; i < a.mor.size(); ++i) c.mor[i] = a.mor[b.mor[i]];
  return c;
}

bool is_identity(const CatAutomorphism& a) {
  for (size_t i = 0; i < a.obj.size(); ++i)
    if (a.obj[i] != static_cast<int>(i)) return false;
  for (size_t i = 0; i < a.mor.size(); ++i)
    if (a.mor[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace

AcyclicCategory quotient_by_free_action(const AcyclicCategory& cat,
                                        const std::vector<CatAutomorphism>& generators,
                                        size_t* group_order) {
  const size_t n = cat.objects.size(), m = cat.morphisms.size();
  for (const auto& g : generators) {
    if (g.obj.size() != n || g.mor.size() != m)
      throw std::runtime_error("automorphism size mismatch");
    std::vector<bool> seen_o(n, false), seen_m(m, false);
    for (int v : g.obj) {
      if (v < 0 || v >= static_cast<int>(n) || seen_o[v])
        throw std::runtime_error("object map is not a permutation");
      seen_o[v] = true;
    }
    for (int v : g.mor) {
      if (v < 0 || v >= static_cast<int>(m) || seen_m[v])
        throw std::runtime_error("morphism map is not a permutation");
      seen_m[v] = true;
    }
  }

  // Close the generators into the full group.
  CatAutomorphism ident;
  ident.obj.resize(n);
  ident.mor.resize(m);
  std::iota(ident.obj.begin(), ident.obj.end(), 0);
  std::iota(ident.mor.begin(), ident.mor.end(), 0);
  std::vector<CatAutomorphism> group{ident};
  std::set<std::string> seen{perm_key(ident)};
  std::queue<CatAutomorphism> work;
  work.push(ident);
  while (!work.empty()) {
    CatAutomorphism cur = work.front();
    work.pop();
    for (const auto& g : generators) {
      CatAutomorphism nxt = compose_auto(g, cur);
      if (seen.insert(perm_key(nxt)).second) {
        group.push_back(nxt);
        work.push(nxt);
        if (group.size() > 10000) throw std::runtime_error("group closure too large");
      }
    }
  }
  if (group_order) *group_order = group.size();

  for (const auto& g : group) {
    for (size_t o = 0; o < n; ++o)
      if (cat.objects[g.obj[o]].rank != cat.objects[o].rank)
        throw std::runtime_error("action is not rank-preserving");
    for (size_t i = 0; i < m; ++i) {
      const auto& src_mor = cat.morphisms[i];
      const auto& img = cat.morphisms[g.mor[i]];
      if (img.src != g.obj[src_mor.src] || img.tgt != g.obj[src_mor.tgt])
        throw std::runtime_error("action is not functorial on endpoints");
    }
    for (const auto& [pair, h] : cat.composition) {
      auto img = cat.composite(g.mor[pair.first], g.mor[pair.second]);
      if (!img || *img != g.mor[h])
        throw std::runtime_error("action is not functorial on composition");
    }
    if (!is_identity(g)) {
      for (size_t o = 0; o < n; ++o)
        if (g.obj[o] == static_cast<int>(o))
          throw std::runtime_error("action is not free on objects");
    }
  }

  // Orbits, with minimum-index representatives.
  std::vector<int> obj_rep(n), mor_rep(m);
  for (size_t o = 0; o < n; ++o) {
    int rep = static_cast<int>(o);
    for (const auto& g : group) rep = std::min(rep, g.obj[o]);
    obj_rep[o] = rep;
  }
  for (size_t i = 0; i < m; ++i) {
    int rep = static_cast<int>(i);
    for (const auto& g : group) rep = std::min(rep, g.mor[i]);
    mor_rep[i] = rep;
  }

  AcyclicCategory out;
  std::map<int, int> obj_q, mor_q;
  for (size_t o = 0; o < n; ++o)
    if (obj_rep[o] == static_cast<int>(o))
      obj_q[static_cast<int>(o)] = out.add_object(cat.objects[o].rank, cat.objects[o].label);
  std::set<std::tuple<int, int, std::string>> used_keys;
  for (size_t i = 0; i < m; ++i) {
    if (mor_rep[i] != static_cast<int>(i)) continue;
    int src = obj_q.at(obj_rep[cat.morphisms[i].src]);
    int tgt = obj_q.at(obj_rep[cat.morphisms[i].tgt]);
    std::string tag = cat.morphisms[i].tag;
    if (!used_keys.insert({src, tgt, tag}).second) {
      tag += "@" + std::to_string(i);
      used_keys.insert({src, tgt, tag});
    }
    mor_q[static_cast<int>(i)] = out.add_morphism(src, tgt, tag);
  }
  // Induced composition: translate the second factor so sources line up.
  for (const auto& [f0, qf] : mor_q)
    for (const auto& [g0, qg] : mor_q) {
      if (out.morphisms[qf].tgt != out.morphisms[qg].src) continue;
      int want_src = cat.morphisms[f0].tgt;
      std::optional<int> g_shift;
      for (const auto& g : group) {
        if (cat.morphisms[g.mor[g0]].src == want_src) {
          g_shift = g.mor[g0];
          break;
        }
      }
      if (!g_shift) throw std::runtime_error("quotient: no composable orbit member");
      auto h = cat.composite(f0, *g_shift);
      if (!h) throw std::runtime_error("quotient: missing composite");
      out.set_composite(qf, qg, mor_q.at(mor_rep[*h]));
    }
  return out;
}

ChainBasis nerve_chains(const AcyclicCategory& cat, int max_dim) {
  ChainBasis basis;
  basis.chains.emplace_back();
  for (size_t o = 0; o < cat.objects.size(); ++o)
    basis.chains[0].push_back({static_cast<int>(o)});
  std::vector<std::vector<int>> out_of(cat.objects.size());
  for (size_t m = 0; m < cat.morphisms.size(); ++m)
    out_of[cat.morphisms[m].src].push_back(static_cast<int>(m));
  int d = 1;
  while (max_dim < 0 || d <= max_dim) {
    std::vector<std::vector<int>> level;
    if (d == 1) {
      for (size_t m = 0; m < cat.morphisms.size(); ++m) level.push_back({static_cast<int>(m)});
    } else {
      for (const auto& chain : basis.chains[d - 1]) {
        int last_tgt = cat.morphisms[chain.back()].tgt;
        for (int m : out_of[last_tgt]) {
          auto ext = chain;
          ext.push_back(m);
          level.push_back(std::move(ext));
        }
      }
    }
    if (level.empty()) break;
    basis.chains.push_back(std::move(level));
    ++d;
    if (d > static_cast<int>(cat.objects.size()) + 1)
      throw std::runtime_error("nerve chain enumeration did not terminate");
  }
  return basis;
}

long long euler_characteristic_nerve(const AcyclicCategory& cat) {
  auto basis = nerve_chains(cat, -1);
  long long chi = 0;
  for (size_t d = 0; d < basis.chains.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(basis.chains[d].size());
  return chi;
}

long long euler_characteristic_cells(const AcyclicCategory& cat) {
  long long chi = 0;
  for (const auto& o : cat.objects) chi += (o.rank % 2 == 0) ? 1 : -1;
  return chi;
}

namespace {

// Color refinement shared across both categories so colors are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const AcyclicCategory& a,
                                                            const AcyclicCategory& b) {
  std::vector<int> ca(a.objects.size()), cb(b.objects.size());
  for (size_t i = 0; i < a.objects.size(); ++i) ca[i] = a.objects[i].rank;
  for (size_t i = 0; i < b.objects.size(); ++i) cb[i] = b.objects[i].rank;
  size_t prev_classes = 0;
  for (size_t round = 0; round < a.objects.size() + b.objects.size() + 1; ++round) {
    std::map<std::string, int> sig_id;
    auto signature = [](const AcyclicCategory& c, const std::vector<int>& col, size_t x) {
      std::vector<int> outs, ins;
      for (const auto& m : c.morphisms) {
        if (m.src == static_cast<int>(x)) outs.push_back(col[m.tgt]);
        if (m.tgt == static_cast<int>(x)) ins.push_back(col[m.src]);
      }
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      std::string s = std::to_string(col[x]) + "#";
      for (int v : outs) s += std::to_string(v) + ",";
      s += "#";
      for (int v : ins) s += std::to_string(v) + ",";
      return s;
    };
    std::vector<int> na(ca.size()), nb(cb.size());
    auto id_of = [&](const std::string& s) {
      auto [it, inserted] = sig_id.insert({s, static_cast<int>(sig_id.size())});
      return it->second;
    };
    for (size_t i = 0; i < ca.size(); ++i) na[i] = id_of(signature(a, ca, i));
    for (size_t i = 0; i < cb.size(); ++i) nb[i] = id_of(signature(b, cb, i));
    ca = na;
    cb = nb;
    // Refinement only splits classes; stable once the class count stops growing.
    if (sig_id.size() == prev_classes) break;
    prev_classes = sig_id.size();
  }
  return {ca, cb};
}

struct IsoSearch {
  const AcyclicCategory& a;
  const AcyclicCategory& b;
  std::vector<int> obj_map, obj_used;
  std::vector<int> color_a, color_b;
  std::map<std::pair<int, int>, std::vector<int>> mors_a, mors_b;

  IsoSearch(const AcyclicCategory& a_, const AcyclicCategory& b_) : a(a_), b(b_) {}

  bool compatible(size_t x, int y) {
    if (color_a[x] != color_b[y]) return false;
    for (size_t z = 0; z < x; ++z) {
      int w = obj_map[z];
      auto cnt = [](const std::map<std::pair<int, int>, std::vector<int>>& m, int p, int q) {
        auto it = m.find({p, q});
        return it == m.end() ? size_t(0) : it->second.size();
      };
      if (cnt(mors_a, static_cast<int>(x), static_cast<int>(z)) != cnt(mors_b, y, w)) return false;
      if (cnt(mors_a, static_cast<int>(z), static_cast<int>(x)) != cnt(mors_b, w, y)) return false;
    }
    return true;
  }

  bool search_objects(size_t x) {
    if (x == a.objects.size()) return match_morphisms();
    for (size_t y = 0; y < b.objects.size(); ++y) {
      if (obj_used[y]) continue;
      if (!compatible(x, static_cast<int>(y))) continue;
      obj_map[x] = static_cast<int>(y);
      obj_used[y] = 1;
      if (search_objects(x + 1)) return true;
      obj_used[y] = 0;
    }
    return false;
  }

  // After the object bijection, match morphisms one at a time.  Whenever f
  // and g of a composable pair are mapped, the composite h is forced to
  // composite_b(F, G); forcing propagates recursively so conflicts surface
  // long before whole groups are enumerated.
  std::vector<int> mor_map;
  std::vector<char> mor_used;
  std::vector<std::vector<int>> candidates;  // per a-morphism: its b-group
  std::vector<std::vector<std::tuple<int, int, int>>> triples_of;  // (f,g,h) lists per morphism

  bool force(int f, int val, std::vector<int>& trail) {
    if (mor_map[f] >= 0) return mor_map[f] == val;
    if (mor_used[val]) return false;
    if (b.morphisms[val].src != obj_map[a.morphisms[f].src] ||
        b.morphisms[val].tgt != obj_map[a.morphisms[f].tgt])
      return false;
    mor_map[f] = val;
    mor_used[val] = 1;
    trail.push_back(f);
    for (const auto& [x, y, h] : triples_of[f]) {
      if (mor_map[x] < 0 || mor_map[y] < 0) continue;
      auto c = b.composite(mor_map[x], mor_map[y]);
      if (!c) return false;
      if (!force(h, *c, trail)) return false;
    }
    return true;
  }

  void undo(std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
      int f = trail.back();
      trail.pop_back();
      mor_used[mor_map[f]] = 0;
      mor_map[f] = -1;
    }
  }

  bool search_morphisms(std::vector<int>& trail) {
    int best = -1;
    size_t best_options = SIZE_MAX;
    for (size_t f = 0; f < a.morphisms.size(); ++f) {
      if (mor_map[f] >= 0) continue;
      size_t options = 0;
      for (int v : candidates[f]) options += !mor_used[v];
      if (options < best_options) {
        best_options = options;
        best = static_cast<int>(f);
      }
    }
    if (best < 0) return true;
    if (best_options == 0) return false;
    for (int v : candidates[best]) {
      if (mor_used[v]) continue;
      size_t mark = trail.size();
      if (force(best, v, trail) && search_morphisms(trail)) return true;
      undo(trail, mark);
    }
    return false;
  }

  bool match_morphisms() {
    mor_map.assign(a.morphisms.size(), -1);
    mor_used.assign(b.morphisms.size(), 0);
    candidates.assign(a.morphisms.size(), {});
    triples_of.assign(a.morphisms.size(), {});
    for (const auto& [pair, h] : a.composition) {
      auto t = std::make_tuple(pair.first, pair.second, h);
      triples_of[pair.first].push_back(t);
      triples_of[pair.second].push_back(t);
      triples_of[h].push_back(t);
    }
    for (const auto& [key, list_a] : mors_a) {
      auto it = mors_b.find({obj_map[key.first], obj_map[key.second]});
      if (it == mors_b.end() || it->second.size() != list_a.size()) return false;
      for (int f : list_a) candidates[f] = it->second;
    }
    size_t total_b = 0;
    for (const auto& [key, list_b] : mors_b) total_b += list_b.size();
    if (total_b != a.morphisms.size()) return false;
    std::vector<int> trail;
    if (search_morphisms(trail)) return true;
    undo(trail, 0);
    return false;
  }
};

}  // namespace

std::optional<CatIso> categories_isomorphic(const AcyclicCategory& a, const AcyclicCategory& b) {
  if (a.objects.size() != b.objects.size() || a.morphisms.size() != b.morphisms.size())
    return std::nullopt;
  IsoSearch s(a, b);
  auto [ca, cb] = refine_colors(a, b);
  s.color_a = ca;
  s.color_b = cb;
  for (size_t m = 0; m < a.morphisms.size(); ++m)
    s.mors_a[{a.morphisms[m].src, a.morphisms[m].tgt}].push_back(static_cast<int>(m));
  for (size_t m = 0; m < b.morphisms.size(); ++m)
    s.mors_b[{b.morphisms[m].src, b.morphisms[m].tgt}].push_back(static_cast<int>(m));
  s.obj_map.assign(a.objects.size(), -1);
  s.obj_used.assign(b.objects.size(), 0);
  if (!s.search_objects(0)) return std::nullopt;
  CatIso iso;
  iso.obj_map = s.obj_map;
  iso.mor_map = s.mor_map;
  return iso;
}

AcyclicCategory canonicalize(const AcyclicCategory& cat) {
  std::vector<int> obj_order(cat.objects.size());
  std::iota(obj_order.begin(), obj_order.end(), 0);
  std::sort(obj_order.begin(), obj_order.end(), [&](int i, int j) {
    return std::tie(cat.objects[i].rank, cat.objects[i].label) <
           std::tie(cat.objects[j].rank, cat.objects[j].label);
  });
  std::vector<int> obj_new(cat.objects.size());
  for (size_t i = 0; i < obj_order.size(); ++i) obj_new[obj_order[i]] = static_cast<int>(i);

  std::vector<int> mor_order(cat.morphisms.size());
  std::iota(mor_order.begin(), mor_order.end(), 0);
  std::sort(mor_order.begin(), mor_order.end(), [&](int i, int j) {
    return std::tie(obj_new[cat.morphisms[i].src], obj_new[cat.morphisms[i].tgt],
                    cat.morphisms[i].tag) < std::tie(obj_new[cat.morphisms[j].src],
                                                     obj_new[cat.morphisms[j].tgt],
                                                     cat.morphisms[j].tag);
  });
  std::vector<int> mor_new(cat.morphisms.size());
  for (size_t i = 0; i < mor_order.size(); ++i) mor_new[mor_order[i]] = static_cast<int>(i);

  AcyclicCategory out;
  for (int o : obj_order) out.add_object(cat.objects[o].rank, cat.objects[o].label);
  for (int m : mor_order)
    out.add_morphism(obj_new[cat.morphisms[m].src], obj_new[cat.morphisms[m].tgt],
                     cat.morphisms[m].tag);
  for (const auto& [pair, h] : cat.composition)
    out.set_composite(mor_new[pair.first], mor_new[pair.second], mor_new[h]);
  return out;
}

nlohmann::json category_to_json(const AcyclicCategory& cat) {
  AcyclicCategory c = canonicalize(cat);
  nlohmann::json j;
  j["objects"] = nlohmann::json::array();
  for (size_t i = 0; i < c.objects.size(); ++i)
    j["objects"].push_back(
        {{"index", i}, {"rank", c.objects[i].rank}, {"label", c.objects[i].label}});
  j["morphisms"] = nlohmann::json::array();
  for (size_t i = 0; i < c.morphisms.size(); ++i)
    j["morphisms"].push_back({{"index", i},
                              {"source", c.morphisms[i].src},
                              {"target", c.morphisms[i].tgt},
                              {"tag", c.morphisms[i].tag}});
  j["composition"] = nlohmann::json::array();
  for (const auto& [pair, h] : c.composition)
    j["composition"].push_back({pair.first, pair.second, h});
  return j;
}

AcyclicCategory category_from_json(const nlohmann::json& j) {
  AcyclicCategory cat;
  for (const auto& o : j.at("objects"))
    cat.add_object(o.at("rank").get<int>(), o.at("label").get<std::string>());
  for (const auto& m : j.at("morphisms"))
    cat.add_morphism(m.at("source").get<int>(), m.at("target").get<int>(),
                     m.at("tag").get<std::string>());
  for (const auto& t : j.at("composition"))
    cat.set_composite(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>());
  return cat;
}

}  // namespace ellarr
