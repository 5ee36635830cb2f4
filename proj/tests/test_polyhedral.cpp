#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellarr/polyhedral.hpp"

using namespace ellarr;

namespace {

std::vector<int> f_vector(const FacePoset& p) {
  std::vector<int> f;
  for (int r : p.ranks) {
    if (r >= static_cast<int>(f.size())) f.resize(r + 1, 0);
    f[r]++;
  }
  return f;
}

}  // namespace

TEST_CASE("covectors of small arrangements") {
  // one line in R^1: the three signs
  CHECK(covectors({{Int(1)}}, 1).size() == 3);
  // coordinate arrangement in R^2: all nine sign vectors
  CHECK(covectors({{Int(1), Int(0)}, {Int(0), Int(1)}}, 2).size() == 9);
  // three generic lines in R^2: 6 topes + 6 half-lines + origin
  CHECK(covectors({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}}, 2).size() == 13);
  // parallel (dependent) generators: signs must agree
  CHECK(covectors({{Int(1)}, {Int(2)}}, 1).size() == 3);
  // opposite generators: signs must be opposite
  CHECK(covectors({{Int(1)}, {Int(-1)}}, 1).size() == 3);
  // no generators: the empty sign vector
  CHECK(covectors({}, 2).size() == 1);
}

TEST_CASE("zonotope face posets") {
  auto seg = zonotope_face_poset({{Int(1)}}, 1);
  CHECK(f_vector(seg) == std::vector<int>{2, 1});

  auto square = zonotope_face_poset({{Int(1), Int(0)}, {Int(0), Int(1)}}, 2);
  CHECK(f_vector(square) == std::vector<int>{4, 4, 1});
  CHECK(validate(poset_to_category(square)).ok());

  auto hexagon =
      zonotope_face_poset({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}}, 2);
  CHECK(f_vector(hexagon) == std::vector<int>{6, 6, 1});
  CHECK(validate(poset_to_category(hexagon)).ok());

  auto cube = zonotope_face_poset(
      {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}}, 3);
  CHECK(f_vector(cube) == std::vector<int>{8, 12, 6, 1});

  auto point = zonotope_face_poset({}, 2);
  CHECK(f_vector(point) == std::vector<int>{1});
}

TEST_CASE("poset products and isomorphism") {
  auto seg = zonotope_face_poset({{Int(1)}}, 1);
  auto square = zonotope_face_poset({{Int(1), Int(0)}, {Int(0), Int(1)}}, 2);
  auto hexagon =
      zonotope_face_poset({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}}, 2);
  auto cube = zonotope_face_poset(
      {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}}, 3);

  CHECK(poset_isomorphic(poset_product(seg, seg), square));
  CHECK(poset_isomorphic(poset_product(square, seg), cube));
  CHECK(poset_isomorphic(poset_product(seg, square), cube));
  CHECK(!poset_isomorphic(square, hexagon));
  CHECK(!poset_isomorphic(poset_product(seg, seg), hexagon));

  auto point = zonotope_face_poset({}, 1);
  CHECK(poset_isomorphic(poset_product(point, hexagon), hexagon));
}

TEST_CASE("poset to category produces valid posetal categories") {
  auto hexagon =
      zonotope_face_poset({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(1)}}, 2);
  auto cat = poset_to_category(hexagon);
  CHECK(validate(cat).ok());
  CHECK(cat.is_poset());
  CHECK(cat.objects.size() == 13);
  // 6 vertex<edge*2 and 6 vertex<top, 6 edge<top
  CHECK(cat.morphisms.size() == 24);
  CHECK(euler_characteristic_cells(cat) == 1);
}
