#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellarr/scwol.hpp"

using namespace ellarr;

namespace {

// Closed interval: two vertices and one edge.
AcyclicCategory segment() {
  AcyclicCategory c;
  int v0 = c.add_object(0, "v0");
  int v1 = c.add_object(0, "v1");
  int e = c.add_object(1, "e");
  c.add_morphism(v0, e, "l");
  c.add_morphism(v1, e, "r");
  return c;
}

// Chain 0 -> 1 -> 2 with the composite present.
AcyclicCategory chain3() {
  AcyclicCategory c;
  int c0 = c.add_object(0, "c0");
  int c1 = c.add_object(1, "c1");
  int c2 = c.add_object(2, "c2");
  int f = c.add_morphism(c0, c1, "f");
  int g = c.add_morphism(c1, c2, "g");
  int h = c.add_morphism(c0, c2, "h");
  c.set_composite(f, g, h);
  return c;
}

// Cycle subdivided into n vertices and n edges (n >= 3).
AcyclicCategory polygon(int n) {
  AcyclicCategory c;
  std::vector<int> v(n), e(n);
  for (int i = 0; i < n; ++i) v[i] = c.add_object(0, "v" + std::to_string(i));
  for (int i = 0; i < n; ++i) e[i] = c.add_object(1, "e" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    c.add_morphism(v[i], e[i], "s");
    c.add_morphism(v[(i + 1) % n], e[i], "t");
  }
  return c;
}

// Rotation of polygon(n) by k steps as a category automorphism.
CatAutomorphism polygon_rotation(int n, int k) {
  CatAutomorphism a;
  a.obj.resize(2 * n);
  a.mor.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    a.obj[i] = (i + k) % n;              // vertices occupy 0..n-1
    a.obj[n + i] = n + (i + k) % n;      // edges occupy n..2n-1
    a.mor[2 * i] = 2 * ((i + k) % n);    // morphism "s" of edge i
    a.mor[2 * i + 1] = 2 * ((i + k) % n) + 1;
  }
  return a;
}

}  // namespace

TEST_CASE("validation accepts good categories") {
  CHECK(validate(segment()).ok());
  CHECK(validate(chain3()).ok());
  CHECK(validate(polygon(6)).ok());
}

TEST_CASE("validation rejects broken categories") {
  {
    AcyclicCategory c = segment();
    c.add_morphism(2, 2, "loop");
    CHECK(!validate(c).ok());
  }
  {
    AcyclicCategory c = chain3();
    c.composition.clear();  // composite now missing
    CHECK(!validate(c).ok());
  }
  {
    AcyclicCategory c;
    int a = c.add_object(0, "a");
    int b = c.add_object(2, "b");  // rank jump of 2
    c.add_morphism(a, b, "f");
    CHECK(!validate(c).ok());
  }
  {
    AcyclicCategory c;
    c.add_object(1, "a");  // minimum rank not 0
    CHECK(!validate(c).ok());
  }
  {
    AcyclicCategory c = segment();
    c.add_morphism(0, 2, "l");  // duplicate (source, target, tag)
    CHECK(!validate(c).ok());
  }
}

TEST_CASE("opposite is an involution up to isomorphism") {
  for (const auto& c : {segment(), chain3(), polygon(4)}) {
    auto op = opposite(c);
    CHECK(validate(op).ok());
    CHECK(categories_isomorphic(opposite(op), c).has_value());
  }
  // On the chain the opposite reverses ranks.
  auto op = opposite(chain3());
  CHECK(op.objects[0].rank == 2);
  CHECK(op.objects[2].rank == 0);
}

TEST_CASE("product counts and validity") {
  auto s = segment();
  auto p = product(s, s);
  CHECK(validate(p).ok());
  CHECK(p.objects.size() == 9);
  // (|obj|+|mor|)^2 - |obj|^2 non-identity morphism pairs
  CHECK(p.morphisms.size() == 25 - 9);
  CHECK(euler_characteristic_cells(p) == 1);
  CHECK(euler_characteristic_nerve(p) == 1);

  // Product with the terminal category is the identity.
  AcyclicCategory pt;
  pt.add_object(0, "pt");
  CHECK(categories_isomorphic(product(s, pt), s).has_value());
  CHECK(categories_isomorphic(product(pt, chain3()), chain3()).has_value());
}

TEST_CASE("full subcategory") {
  auto c = chain3();
  auto sub = full_subcategory(c, {0, 2});
  CHECK(sub.objects.size() == 2);
  CHECK(sub.morphisms.size() == 1);  // only the composite survives
  auto sub2 = full_subcategory(c, {0, 1, 2});
  CHECK(categories_isomorphic(sub2, c).has_value());
}

TEST_CASE("slice of a chain is the chain") {
  auto c = chain3();
  auto sl = slice(c, 2);
  CHECK(validate(sl).ok());
  CHECK(sl.objects.size() == 3);
  CHECK(sl.morphisms.size() == 3);
  CHECK(sl.is_poset());
  CHECK(categories_isomorphic(sl, c).has_value());

  // Slice at a rank-0 object is the point.
  auto sl0 = slice(c, 0);
  CHECK(sl0.objects.size() == 1);
  CHECK(sl0.morphisms.empty());
}

TEST_CASE("nerve chains and Euler characteristics") {
  auto s = segment();
  auto basis = nerve_chains(s, -1);
  REQUIRE(basis.chains.size() == 2);
  CHECK(basis.count(0) == 3);
  CHECK(basis.count(1) == 2);
  CHECK(euler_characteristic_nerve(s) == 1);
  CHECK(euler_characteristic_cells(s) == 1);

  auto c = chain3();
  auto b3 = nerve_chains(c, -1);
  REQUIRE(b3.chains.size() == 3);
  CHECK(b3.count(0) == 3);
  CHECK(b3.count(1) == 3);
  CHECK(b3.count(2) == 1);
  CHECK(euler_characteristic_nerve(c) == 1);

  CHECK(euler_characteristic_nerve(polygon(5)) == 0);
  CHECK(euler_characteristic_cells(polygon(5)) == 0);
}

TEST_CASE("isomorphism search") {
  CHECK(categories_isomorphic(polygon(4), polygon(4)).has_value());
  CHECK(!categories_isomorphic(polygon(4), polygon(5)).has_value());
  CHECK(!categories_isomorphic(segment(), chain3()).has_value());
  // Same counts, different structure: two parallel morphisms vs a segment.
  AcyclicCategory par;
  int a = par.add_object(0, "a");
  par.add_object(0, "b");
  int e = par.add_object(1, "e");
  par.add_morphism(a, e, "x");
  par.add_morphism(a, e, "y");
  CHECK(!categories_isomorphic(par, segment()).has_value());

  // Iso commutes with composition: relabelled chain.
  AcyclicCategory c2;
  int q2 = c2.add_object(2, "top");
  int q0 = c2.add_object(0, "bot");
  int q1 = c2.add_object(1, "mid");
  int g = c2.add_morphism(q1, q2, "gg");
  int h = c2.add_morphism(q0, q2, "hh");
  int f = c2.add_morphism(q0, q1, "ff");
  c2.set_composite(f, g, h);
  auto iso = categories_isomorphic(chain3(), c2);
  REQUIRE(iso.has_value());
  CHECK(iso->obj_map == std::vector<int>{1, 2, 0});
}

TEST_CASE("quotient by free rotation actions") {
  // Hexagon by Z/3: two vertices, two edges, four morphisms.
  {
    auto hex = polygon(6);
    size_t order = 0;
    auto q = quotient_by_free_action(hex, {polygon_rotation(6, 2)}, &order);
    CHECK(order == 3);
    CHECK(validate(q).ok());
    CHECK(q.objects.size() == 4);
    CHECK(q.morphisms.size() == 4);
    CHECK(euler_characteristic_cells(hex) ==
          static_cast<long long>(order) * euler_characteristic_cells(q));
  }
  // Square by Z/2 (antipodal): same shape of quotient.
  {
    auto sq = polygon(4);
    size_t order = 0;
    auto q = quotient_by_free_action(sq, {polygon_rotation(4, 2)}, &order);
    CHECK(order == 2);
    CHECK(validate(q).ok());
    CHECK(q.objects.size() == 4);
    CHECK(q.morphisms.size() == 4);
    CHECK(euler_characteristic_nerve(q) == 0);
  }
  // A non-free action must be rejected.
  {
    auto sq = polygon(4);
    CatAutomorphism refl;  // swap v1<->v3, e0<->e3, e1<->e2; fixes v0, v2
    refl.obj = {0, 3, 2, 1, 7, 6, 5, 4};
    refl.mor = {7, 6, 5, 4, 3, 2, 1, 0};
    CHECK_THROWS(quotient_by_free_action(sq, {refl}, nullptr));
  }
}

TEST_CASE("serialization round trip and determinism") {
  for (const auto& c : {segment(), chain3(), polygon(6)}) {
    auto j = category_to_json(c);
    auto back = category_from_json(j);
    CHECK(validate(back).ok());
    CHECK(categories_isomorphic(back, c).has_value());
    CHECK(category_to_json(back).dump() == j.dump());
  }
}
