// Toric arrangements: exact lifted face enumeration with margin
// stabilization, the face category with translation-vector tags, chamber
// graphs with deterministic wall orientation, and cyclic codim-2 stars.
#pragma once

#include <string>
#include <vector>

#include "ellarr/linalg.hpp"
#include "ellarr/polyhedral.hpp"
#include "ellarr/scwol.hpp"

namespace ellarr {

struct ArrangementSpec {
  int d = 0;
  std::vector<IVec> columns;  // a_j in Z^d
  std::vector<Rat> offsets;   // b_j in [0,1)
};

ArrangementSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const ArrangementSpec& spec);

// Throws with a diagnostic (including a reduction hint for non-essential
// input) when the spec violates its invariants.
void validate_spec(const ArrangementSpec& spec);

struct FaceOrbit {
  int id = 0;
  int dim = 0;
  std::vector<QVec> vertices;  // of the canonical bounded representative
  QVec barycenter;             // in [0,1)^d
  std::vector<int> support;    // 0-based hypersurface indices
};

struct ToricBundle {
  ArrangementSpec spec;
  AcyclicCategory cat;          // object i described by geom[i]
  std::vector<FaceOrbit> geom;  // parallel to cat.objects
  int margin_used = 0;
};

// Face category of the toric arrangement; objects are Z^d-orbits of lifted
// faces, morphisms are integer translation vectors, rank = dimension.
ToricBundle toric_face_category(const ArrangementSpec& spec, int margin_cap = 64);

// Bounded faces of a finite affine arrangement (the lift at a given margin)
// whose barycenter lies in [0,1)^d; exposed for direct inspection.
struct AffineFace {
  int dim = 0;
  std::vector<QVec> vertices;
  QVec barycenter;
};
std::vector<AffineFace> affine_face_complex(const ArrangementSpec& spec, int margin);

struct ChamberGraph {
  std::vector<int> chambers;  // object ids of rank d
  struct Edge {
    int wall;      // object id of rank d-1
    int inc_tail;  // wall->chamber morphism out of which the edge points
    int inc_head;  // the other wall->chamber morphism
  };
  std::vector<Edge> edges;
};
ChamberGraph chamber_graph(const ToricBundle& bundle);

// One incidence of the cyclic star around a codim-2 face: a morphism from
// the face to a wall (with crossing sign) or to a chamber (sign 0).
struct StarEntry {
  int mor;  // morphism id with source p
  bool is_wall;
  int sign;  // for walls: +1 iff the ccw crossing agrees with the edge orientation
};
std::vector<StarEntry> codim2_star(const ToricBundle& bundle, const ChamberGraph& graph, int p);

// Integer translation vector of a face-category morphism tag "(v1,...,vd)".
IVec tag_vector(const std::string& tag);
std::string vector_tag(const IVec& v);

nlohmann::json bundle_to_json(const ToricBundle& bundle);
ToricBundle bundle_from_json(const nlohmann::json& j);

}  // namespace ellarr
