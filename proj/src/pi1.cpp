#include "ellarr/pi1.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ellarr {

namespace {

bool qvec_less(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

}  // namespace

ChamberTree spanning_tree_chambers(const ToricBundle& bundle, const ChamberGraph& graph) {
  if (graph.chambers.empty()) throw std::runtime_error("spanning_tree_chambers: no chambers");
  ChamberTree tree;
  tree.root_chamber = graph.chambers[0];
  for (int c : graph.chambers) {
    if (qvec_less(bundle.geom[c].barycenter, bundle.geom[tree.root_chamber].barycenter))
      tree.root_chamber = c;
  }
  std::set<int> visited{tree.root_chamber};
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t e = 0; e < graph.edges.size(); ++e) {
      int a = bundle.cat.morphisms[graph.edges[e].inc_tail].tgt;
      int b = bundle.cat.morphisms[graph.edges[e].inc_head].tgt;
      bool ha = visited.count(a) > 0, hb = visited.count(b) > 0;
      if (ha == hb) continue;
      visited.insert(ha ? b : a);
      tree.edges.push_back(static_cast<int>(e));
      grew = true;
    }
  }
  if (visited.size() != graph.chambers.size())
    throw std::runtime_error("spanning_tree_chambers: chamber graph is disconnected");
  return tree;
}

std::vector<int> model_tree(const EllipticModel& model, const ChamberGraph& graph,
                            const ChamberTree& tree) {
  std::map<std::pair<int, int>, int> obj_of;
  for (size_t i = 0; i < model.pairs.size(); ++i) obj_of[model.pairs[i]] = static_cast<int>(i);

  std::set<int> tree_walls;
  for (int e : tree.edges) tree_walls.insert(graph.edges[e].wall);

  std::vector<int> cells;
  for (int t : tree_walls) cells.push_back(obj_of.at({t, tree.root_chamber}));
  for (int c : graph.chambers)
    for (int t : tree_walls) cells.push_back(obj_of.at({c, t}));
  std::sort(cells.begin(), cells.end());

  // The tree cells must span the rank-0 skeleton without cycles.
  size_t fd = graph.chambers.size();
  if (cells.size() != fd * fd - 1) throw std::runtime_error("model_tree: wrong tree size");
  std::map<int, int> wall_edge;
  for (size_t e = 0; e < graph.edges.size(); ++e) wall_edge[graph.edges[e].wall] = static_cast<int>(e);
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    while (parent.count(x) && parent[x] != x) x = parent[x] = parent[parent[x]];
    if (!parent.count(x)) parent[x] = x;
    return x;
  };
  for (int cell : cells) {
    auto [f, g] = model.pairs[cell];
    int d = model.bundle.spec.d;
    bool first_wall = model.bundle.geom[f].dim == d - 1;
    const auto& edge = graph.edges[wall_edge.at(first_wall ? f : g)];
    int c0 = model.bundle.cat.morphisms[edge.inc_tail].tgt;
    int c1 = model.bundle.cat.morphisms[edge.inc_head].tgt;
    int u = obj_of.at(first_wall ? std::pair{c0, g} : std::pair{f, c0});
    int v = obj_of.at(first_wall ? std::pair{c1, g} : std::pair{f, c1});
    int ru = find(u), rv = find(v);
    if (ru == rv) throw std::runtime_error("model_tree: tree cells contain a cycle");
    parent[ru] = rv;
  }
  return cells;
}

Presentation presentation(const EllipticModel& model, const ChamberGraph& graph,
                          const ChamberTree& tree, bool certify) {
  if (certify) {
    CWReport report = verify_cw(model);
    if (!report.all_pass)
      throw std::runtime_error("presentation: model failed CW certification");
  }
  const ToricBundle& bundle = model.bundle;
  int d = bundle.spec.d;

  std::map<std::pair<int, int>, int> obj_of;
  for (size_t i = 0; i < model.pairs.size(); ++i) obj_of[model.pairs[i]] = static_cast<int>(i);
  std::map<int, int> wall_edge;
  for (size_t e = 0; e < graph.edges.size(); ++e) wall_edge[graph.edges[e].wall] = static_cast<int>(e);
  auto tail_of = [&](int wall) {
    return bundle.cat.morphisms[graph.edges[wall_edge.at(wall)].inc_tail].tgt;
  };
  auto head_of = [&](int wall) {
    return bundle.cat.morphisms[graph.edges[wall_edge.at(wall)].inc_head].tgt;
  };

  std::vector<int> tree_cells = model_tree(model, graph, tree);
  std::set<int> in_tree(tree_cells.begin(), tree_cells.end());

  Presentation pres;
  std::map<int, int> gen_of;  // model object -> generator index
  for (size_t i = 0; i < model.cat.objects.size(); ++i) {
    if (model.cat.objects[i].rank != 1 || in_tree.count(static_cast<int>(i))) continue;
    gen_of[static_cast<int>(i)] = static_cast<int>(pres.generators.size());
    pres.generators.push_back(model.cat.objects[i].label);
  }

  auto push = [&](std::vector<std::pair<int, int>>& word, int f, int g, int exp) {
    int cell = obj_of.at({f, g});
    if (in_tree.count(cell)) return;  // tree generators are the identity
    word.emplace_back(gen_of.at(cell), exp);
  };
  auto star_word = [&](int p, int chamber, bool chamber_first) {
    std::vector<std::pair<int, int>> word;
    for (const StarEntry& s : codim2_star(bundle, graph, p)) {
      if (!s.is_wall) continue;
      int w = bundle.cat.morphisms[s.mor].tgt;
      if (chamber_first)
        push(word, chamber, w, s.sign);
      else
        push(word, w, chamber, s.sign);
    }
    return word;
  };

  for (size_t i = 0; i < model.cat.objects.size(); ++i) {
    if (model.cat.objects[i].rank != 2) continue;
    auto [f, g] = model.pairs[i];
    int df = bundle.geom[f].dim, dg = bundle.geom[g].dim;
    std::vector<std::pair<int, int>> word;
    if (df == d - 1 && dg == d - 1) {
      // (A0,b)(a,B1) = (a,B0)(A1,b) for a: A0 -> A1 and b: B0 -> B1
      int a0 = tail_of(f), a1 = head_of(f), b0 = tail_of(g), b1 = head_of(g);
      push(word, a0, g, +1);
      push(word, f, b1, +1);
      push(word, a1, g, -1);
      push(word, f, b0, -1);
    } else if (df == d - 2 && dg == d) {
      word = star_word(f, g, false);
    } else if (df == d && dg == d - 2) {
      word = star_word(g, f, true);
    } else {
      throw std::runtime_error("presentation: unexpected rank-2 cell shape");
    }
    pres.relators.push_back(std::move(word));
  }
  return pres;
}

namespace {

using Word = std::vector<std::pair<int, int>>;

void free_reduce(Word& w) {
  Word out;
  for (const auto& f : w) {
    if (!out.empty() && out.back().first == f.first && out.back().second == -f.second)
      out.pop_back();
    else
      out.push_back(f);
  }
  // cyclic reduction
  while (out.size() >= 2 && out.front().first == out.back().first &&
         out.front().second == -out.back().second) {
    out.erase(out.begin());
    out.pop_back();
  }
  w = std::move(out);
}

Word inverse_word(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
  return out;
}

std::string cyclic_key(const Word& w) {
  auto encode = [](const Word& v) {
    std::ostringstream ss;
    for (const auto& f : v) ss << f.first << (f.second > 0 ? "+" : "-") << " ";
    return ss.str();
  };
  std::string best;
  for (const Word& v : {w, inverse_word(w)}) {
    for (size_t r = 0; r < std::max<size_t>(v.size(), 1); ++r) {
      Word rot(v.begin() + r, v.end());
      rot.insert(rot.end(), v.begin(), v.begin() + r);
      std::string k = encode(rot);
      if (best.empty() || k < best) best = k;
    }
  }
  return best;
}

}  // namespace

Presentation tietze_simplify(const Presentation& p) {
  Presentation q = p;
  for (int pass = 0; pass < 200; ++pass) {
    bool changed = false;
    for (auto& r : q.relators) {
      size_t before = r.size();
      free_reduce(r);
      if (r.size() != before) changed = true;
    }
    // drop trivial and duplicate relators
    std::set<std::string> seen;
    std::vector<Word> kept;
    for (auto& r : q.relators) {
      if (r.empty()) {
        changed = true;
        continue;
      }
      std::string key = cyclic_key(r);
      if (!seen.insert(key).second) {
        changed = true;
        continue;
      }
      kept.push_back(std::move(r));
    }
    q.relators = std::move(kept);

    // eliminate a generator occurring exactly once in some relator
    int rel = -1, pos = -1;
    for (size_t i = 0; i < q.relators.size() && rel < 0; ++i) {
      for (size_t j = 0; j < q.relators[i].size(); ++j) {
        int g = q.relators[i][j].first;
        int count = 0;
        for (const auto& f : q.relators[i]) count += (f.first == g);
        if (count == 1) {
          rel = static_cast<int>(i);
          pos = static_cast<int>(j);
          break;
        }
      }
    }
    if (rel >= 0) {
      const Word& r = q.relators[rel];
      int g = r[pos].first, e = r[pos].second;
      Word u(r.begin(), r.begin() + pos), v(r.begin() + pos + 1, r.end());
      // u g^e v = 1, so g^e = u^-1 v^-1
      Word repl = inverse_word(u);
      Word vinv = inverse_word(v);
      repl.insert(repl.end(), vinv.begin(), vinv.end());
      if (e < 0) repl = inverse_word(repl);
      std::vector<Word> rest;
      for (size_t i = 0; i < q.relators.size(); ++i) {
        if (static_cast<int>(i) == rel) continue;
        Word out;
        for (const auto& f : q.relators[i]) {
          if (f.first != g) {
            out.push_back(f);
            continue;
          }
          Word w = f.second > 0 ? repl : inverse_word(repl);
          out.insert(out.end(), w.begin(), w.end());
        }
        free_reduce(out);
        rest.push_back(std::move(out));
      }
      q.relators = std::move(rest);
      q.generators.erase(q.generators.begin() + g);
      for (auto& w : q.relators)
        for (auto& f : w)
          if (f.first > g) --f.first;
      changed = true;
    }
    if (!changed) break;
  }
  return q;
}

AbelianInvariants abelianization(const Presentation& p) {
  AbelianInvariants inv;
  size_t n = p.generators.size();
  if (p.relators.empty() || n == 0) {
    inv.free_rank = static_cast<long long>(n);
    return inv;
  }
  ZMat m(p.relators.size(), std::vector<Int>(n, 0));
  for (size_t i = 0; i < p.relators.size(); ++i)
    for (const auto& f : p.relators[i]) m[i][f.first] += f.second;
  SNFResult s = snf(m);
  inv.free_rank = static_cast<long long>(n) - s.rank;
  for (const Int& f : s.invariant_factors)
    if (f > 1) inv.torsion.push_back(f);
  return inv;
}

std::string presentation_to_text(const Presentation& p) {
  std::ostringstream ss;
  ss << "gens:";
  for (size_t i = 0; i < p.generators.size(); ++i) ss << " g" << (i + 1);
  ss << "\n";
  for (const auto& r : p.relators) {
    if (r.empty()) {
      ss << "1\n";
      continue;
    }
    for (size_t j = 0; j < r.size(); ++j) {
      if (j) ss << " ";
      ss << "g" << (r[j].first + 1);
      if (r[j].second < 0) ss << "^-1";
    }
    ss << "\n";
  }
  return ss.str();
}

nlohmann::json presentation_to_json(const Presentation& p) {
  nlohmann::json j;
  j["generators"] = p.generators;
  j["relators"] = nlohmann::json::array();
  for (const auto& r : p.relators) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& f : r) w.push_back({f.first, f.second});
    j["relators"].push_back(w);
  }
  j["text"] = presentation_to_text(p);
  return j;
}

}  // namespace ellarr
