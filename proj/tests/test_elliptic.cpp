#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellarr/elliptic.hpp"
#include "ellarr/homology.hpp"

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

}  // namespace

TEST_CASE("model of the once-punctured curve") {
  auto model = build_model(toric_face_category(circle_points(1)));
  CHECK(f_vector(model) == std::vector<long long>{1, 2});
  CHECK(model_euler_characteristic(model) == -1);
  // figure eight: Betti (1, 2), no torsion
  auto h = homology(model.cat);
  CHECK(h.betti == std::vector<long long>{1, 2});
  CHECK(h.torsion[0].empty());
}

TEST_CASE("model f-vectors and Euler characteristics on the curve") {
  std::vector<std::vector<long long>> expect_f = {{1, 2}, {4, 8, 2}};
  for (int n = 1; n <= 5; ++n) {
    auto model = build_model(toric_face_category(circle_points(n)));
    auto f = f_vector(model);
    if (n <= 2) CHECK(f == expect_f[n - 1]);
    // rank-0 objects = #chambers^2, rank-1 = 2 * #chambers * #walls
    CHECK(f[0] == static_cast<long long>(n) * n);
    CHECK(f[1] == 2ll * n * n);
    CHECK(model_euler_characteristic(model) == -n);
    CHECK(model_euler_characteristic(model) == euler_characteristic_nerve(model.cat));
    auto h = homology(model.cat);
    CHECK(h.betti[0] == 1);
    CHECK(h.betti[1] == n + 1);
    for (size_t d = 2; d < h.betti.size(); ++d) CHECK(h.betti[d] == 0);
    for (const auto& t : h.torsion) CHECK(t.empty());
  }
}

TEST_CASE("model of A_2") {
  auto bundle = toric_face_category(a2());
  auto model = build_model(bundle);
  CHECK(f_vector(model) == std::vector<long long>{4, 12, 10});
  CHECK(model_euler_characteristic(model) == 2);
  CHECK(model_euler_characteristic(model) == euler_characteristic_nerve(model.cat));
  // no pair with overlapping supports
  for (auto [f, g] : model.pairs) {
    for (int x : bundle.geom[f].support)
      for (int y : bundle.geom[g].support) CHECK(x != y);
  }
}

TEST_CASE("direct model agrees with the product construction") {
  for (int n = 1; n <= 2; ++n) {
    auto bundle = toric_face_category(circle_points(n));
    auto model = build_model(bundle);
    CHECK(categories_isomorphic(model.cat, model_via_product(bundle)).has_value());
  }
  auto bundle = toric_face_category(a2());
  auto model = build_model(bundle);
  auto ref = model_via_product(bundle);
  CHECK(model.cat.objects.size() == ref.objects.size());
  CHECK(model.cat.morphisms.size() == ref.morphisms.size());
  CHECK(categories_isomorphic(model.cat, ref).has_value());
}

TEST_CASE("CW certification via slice/zonotope oracle") {
  {
    auto model = build_model(toric_face_category(a2()));
    auto rep = verify_cw(model);
    CHECK(rep.all_pass);
    CHECK(rep.entries.size() == 26);
  }
  for (int n = 1; n <= 3; ++n) {
    auto model = build_model(toric_face_category(circle_points(n)));
    CHECK(verify_cw(model).all_pass);
  }
}

TEST_CASE("specific slices of the A_2 model") {
  auto bundle = toric_face_category(a2());
  auto model = build_model(bundle);
  int d = bundle.spec.d;
  auto hexagon =
      zonotope_face_poset({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(-1)}}, 2);
  auto square_cat = poset_to_category(
      poset_product(zonotope_face_poset({{Int(1), Int(0)}}, 2),
                    zonotope_face_poset({{Int(0), Int(1)}}, 2)));
  for (size_t x = 0; x < model.cat.objects.size(); ++x) {
    auto [f, g] = model.pairs[x];
    int df = bundle.cat.objects[f].rank, dg = bundle.cat.objects[g].rank;
    if (df == 0 && dg == d) {
      // (vertex, chamber): hexagon
      auto sl = slice(model.cat, static_cast<int>(x));
      CHECK(sl.objects.size() == 13);
      CHECK(categories_isomorphic(sl, poset_to_category(hexagon)).has_value());
    }
    if (df == 1 && dg == 1 && bundle.geom[f].support == std::vector<int>{0} &&
        bundle.geom[g].support == std::vector<int>{1}) {
      // (wall, wall) with independent normals: square
      auto sl = slice(model.cat, static_cast<int>(x));
      CHECK(sl.objects.size() == 9);
      CHECK(categories_isomorphic(sl, square_cat).has_value());
    }
    if (model.cat.objects[x].rank == 0)
      CHECK(slice(model.cat, static_cast<int>(x)).objects.size() == 1);
  }
}
