// Covector enumeration for central hyperplane arrangements, zonotope face
// posets, poset products, and poset <-> acyclic-category conversion.
#pragma once

#include <string>
#include <vector>

#include "ellarr/linalg.hpp"
#include "ellarr/scwol.hpp"

namespace ellarr {

using IVec = std::vector<Int>;

// All sign vectors v in {-1,0,+1}^k realizable as (sign(g_j . x))_j for some
// x in R^d, found by exact feasibility over the 3^k candidates.
std::vector<std::vector<int>> covectors(const std::vector<IVec>& gens, int d);

// Finite graded poset; leq is the full order relation (reflexive, transitive).
struct FacePoset {
  std::vector<int> ranks;
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;
  size_t size() const { return ranks.size(); }
};

// Face poset of the zonotope spanned by the generators: one face per
// covector, ordered by v <= w iff every nonzero coordinate of w agrees
// with v; the rank of a face is the rank of its zero set of generators.
FacePoset zonotope_face_poset(const std::vector<IVec>& gens, int d);

FacePoset poset_product(const FacePoset& a, const FacePoset& b);

// The poset as an acyclic category: one morphism per strict relation.
AcyclicCategory poset_to_category(const FacePoset& p);

bool poset_isomorphic(const FacePoset& a, const FacePoset& b);

}  // namespace ellarr
