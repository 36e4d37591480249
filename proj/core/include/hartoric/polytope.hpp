#pragma once

#include <utility>
#include <vector>

#include "hartoric/fan.hpp"
#include "hartoric/numeric.hpp"

namespace hartoric {

// The exponent support of a Laurent polynomial.  Exponents live on the M
// side.  Coefficients play no geometric role but are kept (nonzero, merged)
// so output can echo the input faithfully.
struct LaurentSupport {
    int dim = 0;
    std::vector<std::pair<MVector, Rat>> terms;  // sorted by exponent, coeffs nonzero

    static LaurentSupport from_points(const std::vector<MVector>& pts);
    static LaurentSupport from_terms(int dim, std::vector<std::pair<MVector, Rat>> terms);

    std::vector<MVector> points() const;
    bool operator==(const LaurentSupport& o) const { return dim == o.dim && terms == o.terms; }
};

// Convex hull of finitely many lattice points, stored by its vertex set
// (sorted, so equal polytopes compare equal).  May have any dimension from 0
// up to the ambient rank.
class LatticePolytope {
  public:
    static LatticePolytope hull(const std::vector<MVector>& pts);

    const std::vector<MVector>& vertices() const { return verts_; }
    int ambient_dim() const { return ambient_; }
    bool operator==(const LatticePolytope& o) const { return verts_ == o.verts_; }

  private:
    int ambient_ = 0;
    std::vector<MVector> verts_;
};

LatticePolytope newton_polytope(const LaurentSupport& s);

// min over vertices of <u, m>: the support function evaluated at u.
Int support_function(const LatticePolytope& P, const NVector& u);

// Dimension of the affine hull (0 for a point).
int dim(const LatticePolytope& P);

// All lattice points of P, sorted.  Full-dimensional polytopes are tested
// against their facet description; degenerate ones fall back to an exact
// membership linear program.
std::vector<MVector> lattice_points(const LatticePolytope& P);

// n! times the Euclidean volume, as an integer; 0 when dim P < ambient.
Int normalized_volume(const LatticePolytope& P);

LatticePolytope minkowski_sum(const LatticePolytope& A, const LatticePolytope& B);

// Mixed volume of n polytopes in rank n, normalized so that
// mixed_volume(P, ..., P) == normalized_volume(P).  Computed by
// inclusion-exclusion over Minkowski sums of subsets.
Rat mixed_volume(const std::vector<LatticePolytope>& Ps);

// Exact membership test: is p a convex combination of pts?
bool in_convex_hull(const std::vector<Rat>& p, const std::vector<std::vector<Rat>>& pts);

// Inequality description <w, x> >= c of a full-dimensional polytope.
std::vector<std::pair<std::vector<Int>, Int>> facet_description(const LatticePolytope& P);

}  // namespace hartoric
