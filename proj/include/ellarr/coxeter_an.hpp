// Type A_n support: cyclic partitions and their acyclic category, the
// isomorphism with the geometric face category, lex-first reduced words and
// the weak-order spanning tree, the codim-2 classification, and the explicit
// seven-family presentation of the fundamental group.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellarr/arrangement.hpp"
#include "ellarr/pi1.hpp"
#include "ellarr/scwol.hpp"

namespace ellarr {

// Partition of {0,...,n} with cyclically ordered blocks; canonical form puts
// the block containing 0 first and sorts each block internally.
struct CyclicPartition {
  std::vector<std::vector<int>> blocks;
};
CyclicPartition cp_canonical(CyclicPartition p);
std::string cp_label(const CyclicPartition& p);
bool operator==(const CyclicPartition& a, const CyclicPartition& b);

std::vector<CyclicPartition> all_cyclic_partitions(int n);

// Objects: cyclic partitions of n, ranked by #blocks - 1.  A morphism into y
// is a nonempty proper subset of kept separators of y; composition takes the
// union of the removed sets.
AcyclicCategory cyclic_partitions_category(int n);

// The arrangement with hypersurfaces x_i = 0 (1 <= i <= n) and x_i = x_j
// (1 <= i < j <= n).
ArrangementSpec an_spec(int n);

// Isomorphism between the combinatorial and the geometric face category;
// throws when none is found.
CatIso verify_an_iso(int n);

// Letters 1..n-1; greedy smallest left descent.  Length = inversion number.
std::vector<int> lex_first_reduced_word(const std::vector<int>& sigma);

// A wall is a cyclic partition with one doubleton {i0 < i1} and singletons
// otherwise; the edge runs from i0|i1|... to i1|i0|...
struct WallLabel {
  CyclicPartition wall, source, target;
};
WallLabel wall_label(const CyclicPartition& wall);
std::vector<CyclicPartition> an_walls(int n);
std::vector<CyclicPartition> an_chambers(int n);

// Walls of the coverings from lex-first reduced words; a spanning tree of the
// chamber graph with n! - 1 elements.
std::vector<CyclicPartition> an_tree(int n);

// Codim-2 faces split by block type: one triple block vs two doubletons.
std::pair<std::vector<CyclicPartition>, std::vector<CyclicPartition>> classify_codim2(int n);

// The seven-family presentation; tree generators are removed.
Presentation an_presentation(int n);

}  // namespace ellarr
