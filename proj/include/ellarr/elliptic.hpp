// The model category of an elliptic arrangement complement: objects are
// pairs of faces with disjoint supports, morphisms are componentwise
// opposite-face-category morphisms, rank is total codimension.  Includes the
// slice/zonotope certification of the polyhedral CW structure.
#pragma once

#include <vector>

#include "ellarr/arrangement.hpp"
#include "ellarr/polyhedral.hpp"
#include "ellarr/scwol.hpp"

namespace ellarr {

struct EllipticModel {
  ToricBundle bundle;                       // the underlying face category + geometry
  AcyclicCategory cat;                      // the model
  std::vector<std::pair<int, int>> pairs;   // model object -> (F, G) face objects
};

EllipticModel build_model(const ToricBundle& bundle);

std::vector<long long> f_vector(const EllipticModel& model);
long long model_euler_characteristic(const EllipticModel& model);

// For every object (F,G): slice of the model there must be a poset
// isomorphic to the product of the face posets of the zonotopes spanned by
// the hypersurface normals through F and through G.
struct CWReport {
  struct Entry {
    int object;
    bool pass;
  };
  std::vector<Entry> entries;
  bool all_pass = false;
};
CWReport verify_cw(const EllipticModel& model);

// Reference construction of the model as a full subcategory of the product
// of two opposite face categories; used to cross-validate build_model.
AcyclicCategory model_via_product(const ToricBundle& bundle);

}  // namespace ellarr
