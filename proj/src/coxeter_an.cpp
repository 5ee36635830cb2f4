#include "ellarr/coxeter_an.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ellarr {

CyclicPartition cp_canonical(CyclicPartition p) {
  for (auto& b : p.blocks) std::sort(b.begin(), b.end());
  size_t zero = 0;
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    if (!p.blocks[i].empty() && p.blocks[i][0] == 0) zero = i;
  }
  std::rotate(p.blocks.begin(), p.blocks.begin() + zero, p.blocks.end());
  return p;
}

std::string cp_label(const CyclicPartition& p) {
  std::ostringstream ss;
  for (const auto& b : p.blocks) {
    for (int e : b) ss << e;
    ss << "|";
  }
  return ss.str();
}

bool operator==(const CyclicPartition& a, const CyclicPartition& b) {
  return a.blocks == b.blocks;
}

std::vector<CyclicPartition> all_cyclic_partitions(int n) {
  // set partitions via restricted growth strings, then all cyclic orders
  std::vector<CyclicPartition> out;
  std::vector<int> rg(n + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (i == n + 1) {
      std::vector<std::vector<int>> blocks(maxb);
      for (int e = 0; e <= n; ++e) blocks[rg[e]].push_back(e);
      std::vector<int> order(maxb - 1);
      for (int j = 1; j < maxb; ++j) order[j - 1] = j;
      do {
        CyclicPartition p;
        p.blocks.push_back(blocks[0]);
        for (int j : order) p.blocks.push_back(blocks[j]);
        out.push_back(std::move(p));
      } while (std::next_permutation(order.begin(), order.end()));
      return;
    }
    for (int b = 0; b <= maxb; ++b) {
      rg[i] = b;
      rec(i + 1, std::max(maxb, b + 1));
    }
  };
  rec(1, 1);
  for (auto& p : out) p = cp_canonical(p);
  return out;
}

namespace {

// Remove from p all separators except those in `keep` (gap i follows block i).
// Returns the merged partition and, per separator of the result, the index of
// the surviving separator of p.
std::pair<CyclicPartition, std::vector<int>> merge_keeping(const CyclicPartition& p,
                                                           const std::vector<int>& keep) {
  int h = static_cast<int>(p.blocks.size());
  int k = static_cast<int>(keep.size());
  std::vector<std::vector<int>> blocks(k);
  for (int j = 0; j < k; ++j) {
    int from = (keep[(j - 1 + k) % k] + 1) % h;
    for (int b = from;; b = (b + 1) % h) {
      blocks[j].insert(blocks[j].end(), p.blocks[b].begin(), p.blocks[b].end());
      if (b == keep[j]) break;
    }
  }
  int zero = 0;
  for (int j = 0; j < k; ++j) {
    std::sort(blocks[j].begin(), blocks[j].end());
    if (blocks[j][0] == 0) zero = j;
  }
  CyclicPartition q;
  std::vector<int> gapmap;
  for (int j = 0; j < k; ++j) {
    q.blocks.push_back(blocks[(zero + j) % k]);
    gapmap.push_back(keep[(zero + j) % k]);
  }
  return {q, gapmap};
}

std::string keep_tag(const std::vector<int>& keep) {
  std::ostringstream ss;
  ss << "k";
  for (size_t i = 0; i < keep.size(); ++i) ss << (i ? "," : "") << keep[i];
  return ss.str();
}

}  // namespace

AcyclicCategory cyclic_partitions_category(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_partitions_category: n must be >= 1");
  auto parts = all_cyclic_partitions(n);
  std::sort(parts.begin(), parts.end(), [](const CyclicPartition& a, const CyclicPartition& b) {
    if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
    return cp_label(a) < cp_label(b);
  });
  AcyclicCategory cat;
  std::map<std::string, int> idx;
  for (const auto& p : parts) {
    std::string l = cp_label(p);
    idx[l] = cat.add_object(static_cast<int>(p.blocks.size()) - 1, l);
  }
  struct MorData {
    std::vector<int> keep;    // kept separators of the target
    std::vector<int> gapmap;  // separator of the source -> separator of the target
  };
  std::vector<MorData> data;
  for (size_t y = 0; y < parts.size(); ++y) {
    int h = static_cast<int>(parts[y].blocks.size());
    for (int mask = 1; mask < (1 << h) - 1; ++mask) {
      std::vector<int> keep;
      for (int i = 0; i < h; ++i)
        if (mask & (1 << i)) keep.push_back(i);
      auto [src, gapmap] = merge_keeping(parts[y], keep);
      cat.add_morphism(idx.at(cp_label(src)), static_cast<int>(y), keep_tag(keep));
      data.push_back({keep, gapmap});
    }
  }
  for (size_t f = 0; f < cat.morphisms.size(); ++f) {
    for (size_t g = 0; g < cat.morphisms.size(); ++g) {
      if (cat.morphisms[f].tgt != cat.morphisms[g].src) continue;
      std::vector<int> kept;
      for (int s : data[f].keep) kept.push_back(data[g].gapmap[s]);
      std::sort(kept.begin(), kept.end());
      auto h = cat.find_morphism(cat.morphisms[f].src, cat.morphisms[g].tgt, keep_tag(kept));
      if (!h) throw std::runtime_error("cyclic_partitions_category: missing composite");
      cat.set_composite(static_cast<int>(f), static_cast<int>(g), *h);
    }
  }
  auto report = validate(cat);
  if (!report.ok())
    throw std::runtime_error("cyclic_partitions_category: " + report.violations.front());
  return cat;
}

ArrangementSpec an_spec(int n) {
  ArrangementSpec s;
  s.d = n;
  for (int i = 0; i < n; ++i) {
    IVec c(n, Int(0));
    c[i] = 1;
    s.columns.push_back(c);
    s.offsets.push_back(Rat(0));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      IVec c(n, Int(0));
      c[i] = 1;
      c[j] = -1;
      s.columns.push_back(c);
      s.offsets.push_back(Rat(0));
    }
  }
  return s;
}

CatIso verify_an_iso(int n) {
  auto combinatorial = cyclic_partitions_category(n);
  auto geometric = toric_face_category(an_spec(n));
  auto iso = categories_isomorphic(combinatorial, geometric.cat);
  if (!iso) throw std::runtime_error("verify_an_iso: categories are not isomorphic");
  return *iso;
}

std::vector<int> lex_first_reduced_word(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  std::vector<int> pos(n + 2, 0), line = sigma;
  for (int i = 0; i < n; ++i) pos[line[i]] = i;
  std::vector<int> word;
  for (;;) {
    int letter = 0;
    for (int i = 1; i < n; ++i) {
      if (pos[i] > pos[i + 1]) {
        letter = i;
        break;
      }
    }
    if (!letter) break;
    word.push_back(letter);
    std::swap(line[pos[letter]], line[pos[letter + 1]]);
    std::swap(pos[letter], pos[letter + 1]);
  }
  return word;
}

WallLabel wall_label(const CyclicPartition& wall) {
  WallLabel w;
  w.wall = wall;
  int bi = -1;
  for (size_t i = 0; i < wall.blocks.size(); ++i)
    if (wall.blocks[i].size() == 2) bi = static_cast<int>(i);
  if (bi < 0) throw std::invalid_argument("wall_label: no doubleton block");
  int i0 = wall.blocks[bi][0], i1 = wall.blocks[bi][1];
  auto split = [&](int a, int b) {
    CyclicPartition p;
    for (size_t i = 0; i < wall.blocks.size(); ++i) {
      if (static_cast<int>(i) == bi) {
        p.blocks.push_back({a});
        p.blocks.push_back({b});
      } else {
        p.blocks.push_back(wall.blocks[i]);
      }
    }
    return cp_canonical(p);
  };
  w.source = split(i0, i1);
  w.target = split(i1, i0);
  return w;
}

std::vector<CyclicPartition> an_walls(int n) {
  std::vector<CyclicPartition> out;
  for (auto& p : all_cyclic_partitions(n))
    if (static_cast<int>(p.blocks.size()) == n) out.push_back(p);
  std::sort(out.begin(), out.end(), [](const CyclicPartition& a, const CyclicPartition& b) {
    return cp_label(a) < cp_label(b);
  });
  return out;
}

std::vector<CyclicPartition> an_chambers(int n) {
  std::vector<CyclicPartition> out;
  for (auto& p : all_cyclic_partitions(n))
    if (static_cast<int>(p.blocks.size()) == n + 1) out.push_back(p);
  std::sort(out.begin(), out.end(), [](const CyclicPartition& a, const CyclicPartition& b) {
    return cp_label(a) < cp_label(b);
  });
  return out;
}

std::vector<CyclicPartition> an_tree(int n) {
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  std::set<std::string> seen;
  std::vector<CyclicPartition> tree;
  do {
    auto word = lex_first_reduced_word(line);
    if (word.empty()) continue;
    int last = word.back();  // sigma = tau * s_last, swapping positions last, last+1
    CyclicPartition w;
    w.blocks.push_back({0});
    for (int i = 0; i < n; ++i) {
      if (i + 1 == last) {
        w.blocks.push_back({line[i], line[i + 1]});
        ++i;
      } else {
        w.blocks.push_back({line[i]});
      }
    }
    w = cp_canonical(w);
    if (seen.insert(cp_label(w)).second) tree.push_back(w);
  } while (std::next_permutation(line.begin(), line.end()));
  long long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  if (static_cast<long long>(tree.size()) != fact - 1)
    throw std::runtime_error("an_tree: wrong tree size");
  return tree;
}

std::pair<std::vector<CyclicPartition>, std::vector<CyclicPartition>> classify_codim2(int n) {
  std::vector<CyclicPartition> p2, p11;
  for (auto& p : all_cyclic_partitions(n)) {
    if (static_cast<int>(p.blocks.size()) != n - 1) continue;
    int triples = 0, doubles = 0;
    for (const auto& b : p.blocks) {
      triples += (b.size() == 3);
      doubles += (b.size() == 2);
    }
    if (triples == 1)
      p2.push_back(p);
    else if (doubles == 2)
      p11.push_back(p);
    else
      throw std::runtime_error("classify_codim2: unexpected block pattern");
  }
  auto by_label = [](const CyclicPartition& a, const CyclicPartition& b) {
    return cp_label(a) < cp_label(b);
  };
  std::sort(p2.begin(), p2.end(), by_label);
  std::sort(p11.begin(), p11.end(), by_label);
  return {p2, p11};
}

namespace {

CyclicPartition replace_block(const CyclicPartition& p, int idx,
                              std::vector<std::vector<int>> sub) {
  CyclicPartition q;
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    if (static_cast<int>(i) == idx)
      for (auto& b : sub) q.blocks.push_back(b);
    else
      q.blocks.push_back(p.blocks[i]);
  }
  return cp_canonical(q);
}

}  // namespace

Presentation an_presentation(int n) {
  auto chambers = an_chambers(n);
  auto walls = an_walls(n);
  std::set<std::string> tree;
  for (const auto& w : an_tree(n)) tree.insert(cp_label(w));
  CyclicPartition cid;
  for (int e = 0; e <= n; ++e) cid.blocks.push_back({e});
  std::string id_label = cp_label(cid);

  Presentation pres;
  std::map<std::string, int> gen;
  // family (W, C): identity when W is a tree wall and C the reference chamber
  for (const auto& w : walls) {
    for (const auto& c : chambers) {
      if (tree.count(cp_label(w)) && cp_label(c) == id_label) continue;
      std::string l = "(" + cp_label(w) + "," + cp_label(c) + ")";
      gen[l] = static_cast<int>(pres.generators.size());
      pres.generators.push_back(l);
    }
  }
  // family (C, W): identity for every tree wall
  for (const auto& c : chambers) {
    for (const auto& w : walls) {
      if (tree.count(cp_label(w))) continue;
      std::string l = "(" + cp_label(c) + "," + cp_label(w) + ")";
      gen[l] = static_cast<int>(pres.generators.size());
      pres.generators.push_back(l);
    }
  }

  using Word = std::vector<std::pair<int, int>>;
  auto push = [&](Word& word, const CyclicPartition& a, const CyclicPartition& b, int e) {
    auto it = gen.find("(" + cp_label(a) + "," + cp_label(b) + ")");
    if (it != gen.end()) word.emplace_back(it->second, e);
  };

  // walls with distinct supports: (t(V),W)(V,s(W)) = (V,t(W))(s(V),W)
  for (const auto& v : walls) {
    for (const auto& w : walls) {
      auto dbl = [](const CyclicPartition& p) {
        for (const auto& b : p.blocks)
          if (b.size() == 2) return b;
        return std::vector<int>{};
      };
      if (dbl(v) == dbl(w)) continue;
      WallLabel lv = wall_label(v), lw = wall_label(w);
      Word word;
      push(word, lv.target, w, +1);
      push(word, v, lw.source, +1);
      push(word, lv.source, w, -1);
      push(word, v, lw.target, -1);
      pres.relators.push_back(std::move(word));
    }
  }

  auto [p2, p11] = classify_codim2(n);
  // triple-block faces: (U,C)(V,C)(W,C) = (W',C)(V',C)(U',C)
  for (const auto& p : p2) {
    int ti = -1;
    for (size_t i = 0; i < p.blocks.size(); ++i)
      if (p.blocks[i].size() == 3) ti = static_cast<int>(i);
    int i = p.blocks[ti][0], j = p.blocks[ti][1], k = p.blocks[ti][2];
    CyclicPartition u = replace_block(p, ti, {{k}, {i, j}});
    CyclicPartition v = replace_block(p, ti, {{i, k}, {j}});
    CyclicPartition w = replace_block(p, ti, {{i}, {j, k}});
    CyclicPartition up = replace_block(p, ti, {{i, j}, {k}});
    CyclicPartition vp = replace_block(p, ti, {{j}, {i, k}});
    CyclicPartition wp = replace_block(p, ti, {{j, k}, {i}});
    for (const auto& c : chambers) {
      Word a;
      push(a, u, c, +1);
      push(a, v, c, +1);
      push(a, w, c, +1);
      push(a, up, c, -1);
      push(a, vp, c, -1);
      push(a, wp, c, -1);
      pres.relators.push_back(std::move(a));
      Word b;
      push(b, c, u, +1);
      push(b, c, v, +1);
      push(b, c, w, +1);
      push(b, c, up, -1);
      push(b, c, vp, -1);
      push(b, c, wp, -1);
      pres.relators.push_back(std::move(b));
    }
  }
  // two-doubleton faces: (W,C)(V,C) = (V',C)(W',C)
  for (const auto& p : p11) {
    int d1 = -1, d2 = -1;
    for (size_t i = 0; i < p.blocks.size(); ++i) {
      if (p.blocks[i].size() != 2) continue;
      if (d1 < 0)
        d1 = static_cast<int>(i);
      else
        d2 = static_cast<int>(i);
    }
    if (p.blocks[d2][0] < p.blocks[d1][0]) std::swap(d1, d2);
    int i = p.blocks[d1][0], j = p.blocks[d1][1];
    int k = p.blocks[d2][0], h = p.blocks[d2][1];
    CyclicPartition v = replace_block(p, d1, {{i}, {j}});
    CyclicPartition vp = replace_block(p, d1, {{j}, {i}});
    CyclicPartition w = replace_block(p, d2, {{h}, {k}});
    CyclicPartition wp = replace_block(p, d2, {{k}, {h}});
    for (const auto& c : chambers) {
      Word a;
      push(a, w, c, +1);
      push(a, v, c, +1);
      push(a, wp, c, -1);
      push(a, vp, c, -1);
      pres.relators.push_back(std::move(a));
      Word b;
      push(b, c, w, +1);
      push(b, c, v, +1);
      push(b, c, wp, -1);
      push(b, c, vp, -1);
      pres.relators.push_back(std::move(b));
    }
  }
  return pres;
}

}  // namespace ellarr
