// Integral chain complexes of nerves, Smith normal form with verified
// change-of-basis certificates, Betti numbers and torsion.
#pragma once

#include <vector>

#include "ellarr/linalg.hpp"
#include "ellarr/scwol.hpp"

namespace ellarr {

using ZMat = std::vector<std::vector<Int>>;

// Smith normal form S = U * M * V with U, V unimodular; the factorization
// and the unimodularity of U and V are re-checked before returning.
struct SNFResult {
  ZMat u, s, v;
  std::vector<Int> invariant_factors;  // positive diagonal entries of S
  int rank = 0;
};
SNFResult snf(const ZMat& m);

// Boundary matrices of the nerve; d[k] maps k-chains to (k-1)-chains,
// entry (row, col) = coefficient of basis (k-1)-chain `row` in the boundary
// of basis k-chain `col`.  d[0] is the zero map.  The identity dd = 0 is
// checked on every basis chain.
struct ChainComplex {
  ChainBasis basis;
  std::vector<ZMat> d;
};
ChainComplex boundary_matrices(const AcyclicCategory& cat, int max_dim = -1);

struct HomologySummary {
  std::vector<long long> betti;
  std::vector<std::vector<Int>> torsion;  // invariant factors > 1, per degree
};
HomologySummary homology(const AcyclicCategory& cat, int max_dim = -1);

}  // namespace ellarr
