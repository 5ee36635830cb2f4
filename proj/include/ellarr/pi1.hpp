// Fundamental group presentations from the 2-skeleton of the model: chamber
// spanning tree, model spanning tree, square and star relators, Tietze
// simplification, abelianization, and plain-text export.
#pragma once

#include <string>
#include <vector>

#include "ellarr/elliptic.hpp"
#include "ellarr/homology.hpp"

namespace ellarr {

struct ChamberTree {
  int root_chamber = -1;     // object id; lexicographically smallest barycenter
  std::vector<int> edges;    // indices into ChamberGraph::edges
};
ChamberTree spanning_tree_chambers(const ToricBundle& bundle, const ChamberGraph& graph);

// Rank-1 objects of the model forming the tree T_K = {(t,C0)} u {(C,t)};
// checked to be a spanning tree of the rank-0 skeleton.
std::vector<int> model_tree(const EllipticModel& model, const ChamberGraph& graph,
                            const ChamberTree& tree);

struct Presentation {
  std::vector<std::string> generators;                    // labels of non-tree 1-cells
  std::vector<std::vector<std::pair<int, int>>> relators; // (generator, exponent +-1)
};

// One relator per rank-2 object: the square relation for wall-wall cells and
// the cyclic star relation for (codim-2, chamber) cells; tree generators are
// substituted by the identity.  Certifies the CW structure first unless told
// otherwise.
Presentation presentation(const EllipticModel& model, const ChamberGraph& graph,
                          const ChamberTree& tree, bool certify = true);

// Free/cyclic reduction, removal of trivial and duplicate relators, and
// elimination of generators occurring exactly once in some relator.
Presentation tietze_simplify(const Presentation& p);

struct AbelianInvariants {
  long long free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};
AbelianInvariants abelianization(const Presentation& p);

std::string presentation_to_text(const Presentation& p);
nlohmann::json presentation_to_json(const Presentation& p);

}  // namespace ellarr
