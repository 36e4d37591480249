#pragma once

#include <vector>

#include "hartoric/fan.hpp"
#include "hartoric/polytope.hpp"

namespace hartoric {

// A torus-invariant divisor: one integer coefficient per ray of the fan.
struct TDivisor {
    FanPtr fan;
    std::vector<Int> coeffs;

    static TDivisor make(FanPtr fan, std::vector<Int> coeffs);
    bool operator==(const TDivisor& o) const;
};

TDivisor operator+(const TDivisor& a, const TDivisor& b);
TDivisor operator-(const TDivisor& a, const TDivisor& b);
TDivisor operator-(const TDivisor& a);
TDivisor operator*(const Int& k, const TDivisor& d);

// The divisor cut out at infinity by the closure of { f = 0 }: coefficient
// -l(u_i) on ray i, where l is the support function of the Newton polytope
// (minimum of <u_i, m> over the support).
TDivisor divisor_at_infinity(FanPtr fan, const LaurentSupport& s);

// div of the character with exponent m: coefficient <m, u_i> on ray i.
TDivisor principal_divisor(FanPtr fan, const MVector& m);

// Minus the sum of all ray divisors.
TDivisor canonical_divisor(FanPtr fan);

bool is_effective(const TDivisor& d);

// Per maximal cone, the unique m with <m, u_i> = -a_i on the cone's rays.
// Requires unimodular cones; the solutions are then integral.
struct ConeFunctionals {
    std::vector<MVector> m;  // indexed like Fan::max_cones
};

ConeFunctionals cone_functionals(const TDivisor& d);

struct NefCertificate {
    bool nef = false;
    ConeFunctionals functionals;
    struct Violation {
        int cone;  // index into Fan::max_cones
        int ray;   // ray index where <m_cone, u_ray> < -a_ray
    };
    std::vector<Violation> violations;
};

// Global comparison test: d is nef iff every cone functional dominates the
// divisor's support data on every ray of the fan.
NefCertificate nef_certificate(const TDivisor& d);
bool is_nef(const TDivisor& d);

// { m : <m, u_i> >= -a_i for all i }, a bounded rational polytope (possibly
// empty) once the fan is complete.  Vertices are enumerated exactly as the
// feasible solutions of rank-n subsets of the defining inequalities.
struct DivisorPolytope {
    bool empty = true;
    std::vector<std::vector<Rat>> vertices;
    FanPtr fan;
    std::vector<Int> coeffs;

    int dim() const;  // affine dimension; polytope must be nonempty
    bool contains(const std::vector<Rat>& p) const;
    bool contains(const MVector& m) const;
};

DivisorPolytope polytope_of_divisor(const TDivisor& d);

std::vector<MVector> lattice_points(const DivisorPolytope& P);

// Hull of the cone functionals.  For nef divisors this equals the divisor
// polytope and has integral vertices.
LatticePolytope nef_polytope(const TDivisor& d);

}  // namespace hartoric
