#pragma once

#include <optional>
#include <vector>

#include "hartoric/numeric.hpp"

namespace hartoric {

// Dense exact-rational matrices.  Everything here is desk scale (dimensions
// in the tens at most), so plain Gaussian elimination is the right tool.
using QMat = std::vector<std::vector<Rat>>;
using QVec = std::vector<Rat>;

// Reduces A to reduced row echelon form in place.  Returns the pivot column
// indices in increasing order.  Deterministic: the pivot for each column is
// the first nonzero row at or below the current one.
std::vector<int> rref(QMat& A);

int rank(QMat A);

// Determinant of a square matrix.
Rat det(QMat A);

// Unique solution of A x = b where A is square and nonsingular; nullopt if
// singular.
std::optional<QVec> solve_square(QMat A, QVec b);

// Unique solution of a (possibly overdetermined) consistent system A x = b.
// nullopt if inconsistent or if the solution is not unique.
std::optional<QVec> solve_unique(QMat A, const QVec& b);

// Basis of the right kernel of A.
std::vector<QVec> nullspace(QMat A);

// Scales a nonzero rational vector to a primitive integer vector pointing the
// same way (multiply by the lcm of denominators, divide by the gcd).
std::vector<Int> primitive_integer(const QVec& v);

// Basis of the rank n-1 lattice { x in Z^n : <w, x> = 0 } for primitive w.
// Columns of the result, as a d x (d-1) list of column vectors.
std::vector<std::vector<Int>> hyperplane_lattice_basis(const std::vector<Int>& w);

}  // namespace hartoric
