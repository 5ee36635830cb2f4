// Exact rational linear algebra used throughout: Gaussian elimination,
// nullspaces, and Fourier-Motzkin feasibility for sign-vector enumeration.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace ellarr {

using Int = mpz_class;
using Rat = mpq_class;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

int sign_of(const Rat& r);

QVec vec_add(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
Rat dot(const QVec& a, const QVec& b);
bool is_integer_vector(const QVec& v);

// Rank of a matrix given by rows.
int mat_rank(QMat rows);

// Solve A x = b for square A; nullopt if A is singular.
std::optional<QVec> solve_square(QMat a, QVec b);

// Basis of { x : rows * x = 0 }.
QMat nullspace(QMat rows, int ncols);

// Affine dimension of a point set.
int affine_dim(const std::vector<QVec>& points);

// One linear constraint  coeffs . x  (>=|=)  rhs.
struct LinConstraint {
  QVec coeffs;
  Rat rhs;
  bool equality = false;
};

// Exact feasibility of a system of equalities and >= inequalities via
// Gaussian elimination of the equalities followed by Fourier-Motzkin.
// Strict homogeneous constraints are expected to be pre-encoded as ">= 1".
bool feasible(const std::vector<LinConstraint>& constraints, int nvars);

}  // namespace ellarr
