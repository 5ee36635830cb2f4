// Finite acyclic categories (scwols): storage, validation, the categorical
// operations (opposite, product, full subcategory, slice, quotient), nerve
// chain enumeration, and isomorphism search.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace ellarr {

struct ObjectRec {
  int rank = 0;
  std::string label;
};

struct MorphismRec {
  int src = -1;
  int tgt = -1;
  std::string tag;  // distinguishes parallel morphisms
};

class AcyclicCategory {
 public:
  std::vector<ObjectRec> objects;
  std::vector<MorphismRec> morphisms;
  // (f, g) -> g o f, keyed on "f then g"; defined exactly when tgt(f) == src(g).
  std::map<std::pair<int, int>, int> composition;

  int add_object(int rank, std::string label);
  int add_morphism(int src, int tgt, std::string tag);
  void set_composite(int f, int g, int h);
  std::optional<int> composite(int f, int g) const;

  std::vector<int> morphisms_between(int x, int y) const;
  std::optional<int> find_morphism(int src, int tgt, const std::string& tag) const;
  int max_rank() const;
  bool is_poset() const;  // at most one morphism per ordered object pair

  // Morphisms that admit no factorization through stored morphisms.
  std::vector<bool> indecomposable_mask() const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const AcyclicCategory& cat);

AcyclicCategory opposite(const AcyclicCategory& cat);
AcyclicCategory product(const AcyclicCategory& a, const AcyclicCategory& b);
AcyclicCategory full_subcategory(const AcyclicCategory& cat, const std::vector<int>& keep);
// Slice C/x: objects are morphisms into x plus id_x; ranks renormalized to min 0.
AcyclicCategory slice(const AcyclicCategory& cat, int x);

struct CatAutomorphism {
  std::vector<int> obj;  // object permutation
  std::vector<int> mor;  // morphism permutation
};

// Quotient by the group generated by the given automorphisms; the action must
// be rank-preserving, functorial and free on objects (else throws).
AcyclicCategory quotient_by_free_action(const AcyclicCategory& cat,
                                        const std::vector<CatAutomorphism>& generators,
                                        size_t* group_order = nullptr);

struct ChainBasis {
  // chains[0][i] = {object}; chains[d][i] = sequence of d composable morphisms.
  std::vector<std::vector<std::vector<int>>> chains;
  size_t count(size_t dim) const { return dim < chains.size() ? chains[dim].size() : 0; }
};

ChainBasis nerve_chains(const AcyclicCategory& cat, int max_dim = -1);

long long euler_characteristic_nerve(const AcyclicCategory& cat);
long long euler_characteristic_cells(const AcyclicCategory& cat);

struct CatIso {
  std::vector<int> obj_map;
  std::vector<int> mor_map;
};

std::optional<CatIso> categories_isomorphic(const AcyclicCategory& a, const AcyclicCategory& b);

// Order-canonical serialization: objects sorted by (rank, label), morphisms by
// (source, target, tag). Round-trip stable.
nlohmann::json category_to_json(const AcyclicCategory& cat);
AcyclicCategory category_from_json(const nlohmann::json& j);
AcyclicCategory canonicalize(const AcyclicCategory& cat);

}  // namespace ellarr
