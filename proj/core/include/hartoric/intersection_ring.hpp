#pragma once

#include <optional>
#include <vector>

#include "hartoric/divisor.hpp"
#include "hartoric/fan.hpp"

namespace hartoric {

// An element of the even cohomology ring in a fixed degree, written in the
// ring's monomial basis for that degree.
struct CohomologyClass {
    int degree = 0;
    std::vector<Rat> coords;

    bool is_zero() const {
        for (const Rat& c : coords)
            if (c != 0) return false;
        return true;
    }
    bool operator==(const CohomologyClass& o) const {
        return degree == o.degree && coords == o.coords;
    }
};

// The even cohomology ring of a smooth complete toric manifold, presented as
// rationals modulo the squarefree non-cone monomials and the linear relations
// coming from characters.  Each graded piece is reduced once at build time;
// the surviving monomials (lexicographically smallest choice) form the basis.
class GradedRing {
  public:
    static GradedRing build(FanPtr fan);

    const FanPtr& fan() const { return fan_; }
    int dim() const { return n_; }

    // Basis monomials of one degree as exponent vectors over the rays.
    const std::vector<std::vector<int>>& basis(int degree) const;
    std::vector<int> dims() const;

    CohomologyClass zero(int degree) const;
    CohomologyClass class_of(const TDivisor& d) const;
    CohomologyClass monomial_class(const std::vector<int>& exponents) const;
    CohomologyClass multiply(const CohomologyClass& a, const CohomologyClass& b) const;

    // Evaluation of a top-degree class against the fundamental class,
    // normalized so the ray-product monomial of any maximal cone gives 1.
    Rat degree_eval(const CohomologyClass& c) const;

    // Product of exactly dim() divisor classes, evaluated in top degree.
    Int intersection_number(const std::vector<TDivisor>& ds) const;

    bool self_square_is_zero(const TDivisor& d) const;

    // [D] . [V(facet)] for a wall: degree of the divisor on the wall curve.
    Rat curve_intersection(const TDivisor& d, const Wall& w) const;

    // Nef test by nonnegativity against every wall curve.
    bool nef_via_curves(const TDivisor& d) const;

  private:
    struct Degree {
        std::vector<std::vector<int>> monomials;  // lex-descending exponent vectors
        std::vector<int> monomial_index_of_basis;
        std::vector<std::vector<int>> basis;  // the non-pivot monomials
        // Reduced relation rows (RREF) with their pivot columns.
        std::vector<std::vector<Rat>> rows;
        std::vector<int> pivots;
        std::vector<int> index_in_basis;  // monomial index -> basis position or -1
    };

    std::vector<Rat> normal_form(int degree, std::vector<Rat> monomial_coords) const;
    void check_fan(const TDivisor& d) const;

    FanPtr fan_;
    int n_ = 0;
    std::vector<Degree> degrees_;
    Rat top_unit_;  // image of a maximal-cone monomial in the top-degree basis
};

GradedRing build_ring(FanPtr fan);

// Even Betti numbers from the cone counts alone; independent of the ring.
std::vector<Int> betti_numbers(const Fan& fan);

// Runs both nef tests (cone functionals and wall curves) and demands
// agreement; disagreement raises internal_error.
bool nef_checked(const GradedRing& ring, const TDivisor& d);

// degree_eval([D]^2 . [A]^(dim-2)); positivity for ample A is a volume-style
// cross-check for nonvanishing of [D]^2 when D is nef.
Rat square_ample_pairing(const GradedRing& ring, const TDivisor& d, const TDivisor& ample);

// Strict convexity of the support data: nef with all out-of-cone comparisons
// strict.
bool is_ample(const TDivisor& d);

// Small search for an ample divisor with coefficients in {0, 1, 2}.
std::optional<TDivisor> find_ample(FanPtr fan);

}  // namespace hartoric
