#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellarr/homology.hpp"
#include "ellarr/pi1.hpp"

using namespace ellarr;

namespace {

ArrangementSpec a2() {
  ArrangementSpec s;
  s.d = 2;
  s.columns = {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(-1)}};
  s.offsets = {Rat(0), Rat(0), Rat(0)};
  return s;
}

ArrangementSpec circle_points(int n) {
  ArrangementSpec s;
  s.d = 1;
  for (int i = 0; i < n; ++i) {
    s.columns.push_back({Int(1)});
    Rat o(i, n);
    o.canonicalize();
    s.offsets.push_back(o);
  }
  return s;
}

struct Setup {
  EllipticModel model;
  ChamberGraph graph;
  ChamberTree tree;
};

Setup setup(const ArrangementSpec& spec) {
  Setup s{build_model(toric_face_category(spec)), {}, {}};
  s.graph = chamber_graph(s.model.bundle);
  s.tree = spanning_tree_chambers(s.model.bundle, s.graph);
  return s;
}

long long rank2_count(const EllipticModel& model) {
  long long n = 0;
  for (const auto& o : model.cat.objects) n += (o.rank == 2);
  return n;
}

void check_abelianization_matches_h1(const Setup& s, const Presentation& p) {
  auto inv = abelianization(p);
  auto h = homology(s.model.cat, 2);
  CHECK(inv.free_rank == h.betti[1]);
  CHECK(inv.torsion == h.torsion[1]);
}

}  // namespace

TEST_CASE("once-punctured curve: free of rank 2") {
  auto s = setup(circle_points(1));
  CHECK(s.tree.edges.empty());
  CHECK(model_tree(s.model, s.graph, s.tree).empty());
  auto p = presentation(s.model, s.graph, s.tree);
  CHECK(p.generators.size() == 2);
  CHECK(p.relators.empty());
  check_abelianization_matches_h1(s, p);
}

TEST_CASE("twice-punctured curve: simplifies to a free group of rank 3") {
  auto s = setup(circle_points(2));
  CHECK(s.tree.edges.size() == 1);
  CHECK(model_tree(s.model, s.graph, s.tree).size() == 3);
  auto p = presentation(s.model, s.graph, s.tree);
  CHECK(p.generators.size() == 5);
  CHECK(p.relators.size() == 2);
  CHECK(p.relators.size() == static_cast<size_t>(rank2_count(s.model)));
  check_abelianization_matches_h1(s, p);

  auto q = tietze_simplify(p);
  CHECK(q.generators.size() == 3);
  CHECK(q.relators.empty());
  auto inv = abelianization(q);
  CHECK(inv.free_rank == 3);
  CHECK(inv.torsion.empty());
}

TEST_CASE("three points on the curve") {
  auto s = setup(circle_points(3));
  CHECK(model_tree(s.model, s.graph, s.tree).size() == 8);
  auto p = presentation(s.model, s.graph, s.tree);
  CHECK(p.relators.size() == static_cast<size_t>(rank2_count(s.model)));
  check_abelianization_matches_h1(s, p);
  check_abelianization_matches_h1(s, tietze_simplify(p));
}

TEST_CASE("braid-like rank-2 arrangement") {
  auto s = setup(a2());
  CHECK(model_tree(s.model, s.graph, s.tree).size() == 3);
  auto p = presentation(s.model, s.graph, s.tree);
  // 2 generators (a,C0), 3 generators (a,C1), 4 generators (Ci,a)
  CHECK(p.generators.size() == 9);
  CHECK(p.relators.size() == 10);
  CHECK(p.relators.size() == static_cast<size_t>(rank2_count(s.model)));
  check_abelianization_matches_h1(s, p);
  check_abelianization_matches_h1(s, tietze_simplify(p));
}

TEST_CASE("shifted rank-2 arrangement") {
  auto spec = a2();
  spec.offsets[2] = Rat(1, 2);
  auto s = setup(spec);
  auto p = presentation(s.model, s.graph, s.tree);
  CHECK(p.relators.size() == static_cast<size_t>(rank2_count(s.model)));
  check_abelianization_matches_h1(s, p);
  check_abelianization_matches_h1(s, tietze_simplify(p));
}

TEST_CASE("simplification removes trivial and redundant relators") {
  Presentation p;
  p.generators = {"x"};
  p.relators = {{{0, 1}}};
  auto q = tietze_simplify(p);
  CHECK(q.generators.empty());
  CHECK(q.relators.empty());

  Presentation r;
  r.generators = {"x", "y"};
  r.relators = {{{1, 1}}, {{0, 1}, {0, -1}}};
  auto t = tietze_simplify(r);
  CHECK(t.generators.size() == 1);
  CHECK(t.relators.empty());
}

TEST_CASE("text export") {
  Presentation p;
  p.generators = {"a", "b"};
  p.relators = {{{0, 1}, {1, -1}, {0, -1}, {1, 1}}};
  CHECK(presentation_to_text(p) == "gens: g1 g2\ng1 g2^-1 g1^-1 g2\n");
  auto j = presentation_to_json(p);
  CHECK(j["generators"].size() == 2);
  CHECK(j["relators"].size() == 1);
}
