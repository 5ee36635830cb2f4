#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ellarr/coxeter_an.hpp"
#include "ellarr/homology.hpp"

using namespace ellarr;

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<int> apply_word(const std::vector<int>& word, int n) {
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  // evaluate left to right: each letter acts by swapping the values i, i+1
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int a = -1, b = -1;
    for (int p = 0; p < n; ++p) {
      if (line[p] == *it) a = p;
      if (line[p] == *it + 1) b = p;
    }
    std::swap(line[a], line[b]);
  }
  return line;
}

long long inversions(const std::vector<int>& line) {
  long long inv = 0;
  for (size_t i = 0; i < line.size(); ++i)
    for (size_t j = i + 1; j < line.size(); ++j) inv += (line[i] > line[j]);
  return inv;
}

}  // namespace

TEST_CASE("cyclic partition canonical form and labels") {
  CyclicPartition p{{{2}, {0, 1}}};
  CHECK(cp_label(cp_canonical(p)) == "01|2|");
  CyclicPartition q{{{1}, {2}, {0}}};
  CHECK(cp_label(cp_canonical(q)) == "0|1|2|");
}

TEST_CASE("cyclic partitions category") {
  auto c1 = cyclic_partitions_category(1);
  CHECK(c1.objects.size() == 2);

  auto c2 = cyclic_partitions_category(2);
  CHECK(c2.objects.size() == 6);
  std::set<std::string> labels;
  for (const auto& o : c2.objects) labels.insert(o.label);
  CHECK(labels == std::set<std::string>{"012|", "01|2|", "02|1|", "0|12|", "0|1|2|", "0|2|1|"});

  int vertex = -1, top = -1;
  for (size_t i = 0; i < c2.objects.size(); ++i) {
    if (c2.objects[i].label == "012|") vertex = static_cast<int>(i);
    if (c2.objects[i].label == "0|1|2|") top = static_cast<int>(i);
  }
  CHECK(c2.morphisms_between(vertex, top).size() == 3);
  CHECK(validate(c2).ok());

  CHECK(cyclic_partitions_category(3).objects.size() == 26);
}

TEST_CASE("combinatorial and geometric face categories agree") {
  for (int n : {1, 2, 3}) {
    CHECK_NOTHROW(verify_an_iso(n));
  }
}

TEST_CASE("lex-first reduced words") {
  CHECK(lex_first_reduced_word({1, 2, 3}).empty());
  CHECK(lex_first_reduced_word({2, 1}) == std::vector<int>{1});
  // the transposition exchanging 1 and 3 in S3
  CHECK(lex_first_reduced_word({3, 2, 1}) == std::vector<int>{1, 2, 1});

  std::vector<int> line{1, 2, 3, 4};
  do {
    auto word = lex_first_reduced_word(line);
    CHECK(static_cast<long long>(word.size()) == inversions(line));
    CHECK(apply_word(word, 4) == line);
  } while (std::next_permutation(line.begin(), line.end()));
}

TEST_CASE("wall labels and counts") {
  for (int n : {1, 2, 3}) {
    CHECK(static_cast<long long>(an_walls(n).size()) == factorial(n + 1) / 2);
    CHECK(static_cast<long long>(an_chambers(n).size()) == factorial(n));
    CHECK(static_cast<long long>(an_tree(n).size()) == factorial(n) - 1);
  }
  auto w = wall_label(cp_canonical(CyclicPartition{{{0, 1}, {2}}}));
  CHECK(cp_label(w.source) == "0|1|2|");
  CHECK(cp_label(w.target) == "0|2|1|");
}

TEST_CASE("codim-2 classification") {
  auto [p2a, p11a] = classify_codim2(2);
  CHECK(p2a.size() == 1);
  CHECK(cp_label(p2a[0]) == "012|");
  CHECK(p11a.empty());

  auto [p2b, p11b] = classify_codim2(3);
  CHECK(p2b.size() == 4);
  CHECK(p11b.size() == 3);
}

TEST_CASE("presentation for one point on the curve") {
  auto p = an_presentation(1);
  CHECK(p.generators.size() == 2);
  CHECK(p.relators.empty());
}

TEST_CASE("presentation cross-check against the geometric model") {
  for (int n : {2, 3}) {
    auto p = an_presentation(n);
    if (n == 2) CHECK(p.generators.size() == 9);

    auto model = build_model(toric_face_category(an_spec(n)));
    auto graph = chamber_graph(model.bundle);
    auto tree = spanning_tree_chambers(model.bundle, graph);
    auto q = presentation(model, graph, tree, /*certify=*/n <= 2);
    CHECK(p.relators.size() == q.relators.size());
    CHECK(p.generators.size() == q.generators.size());

    auto ia = abelianization(p);
    auto ib = abelianization(q);
    CHECK(ia.free_rank == ib.free_rank);
    CHECK(ia.torsion == ib.torsion);
    if (n == 2) {
      auto h = homology(model.cat, 2);
      CHECK(ia.free_rank == h.betti[1]);
      CHECK(ia.torsion == h.torsion[1]);
    }
  }
}

TEST_CASE("weak-order tree drives the general presentation") {
  int n = 2;
  auto model = build_model(toric_face_category(an_spec(n)));
  auto graph = chamber_graph(model.bundle);
  auto iso = verify_an_iso(n);
  auto comb = cyclic_partitions_category(n);

  auto geo_object = [&](const CyclicPartition& p) {
    for (size_t i = 0; i < comb.objects.size(); ++i)
      if (comb.objects[i].label == cp_label(p)) return iso.obj_map[i];
    throw std::runtime_error("label not found");
  };

  CyclicPartition cid{{{0}, {1}, {2}}};
  ChamberTree tree;
  tree.root_chamber = geo_object(cid);
  std::set<int> tree_walls;
  for (const auto& w : an_tree(n)) tree_walls.insert(geo_object(w));
  for (size_t e = 0; e < graph.edges.size(); ++e)
    if (tree_walls.count(graph.edges[e].wall)) tree.edges.push_back(static_cast<int>(e));
  CHECK(tree.edges.size() == graph.chambers.size() - 1);

  auto p = presentation(model, graph, tree);
  auto inv = abelianization(p);
  auto ref = abelianization(an_presentation(n));
  CHECK(inv.free_rank == ref.free_rank);
  CHECK(inv.torsion == ref.torsion);
}
