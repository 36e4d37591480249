#pragma once

#include <optional>
#include <vector>

#include "hartoric/divisor.hpp"
#include "hartoric/fan.hpp"
#include "hartoric/intersection_ring.hpp"
#include "hartoric/numeric.hpp"

namespace hartoric {

// Axis-aligned integer box of characters, inclusive on both ends.
struct Box {
    std::vector<Int> lo;
    std::vector<Int> hi;

    Int side() const;          // largest extent over all coordinates
    bool contains(const MVector& m) const;
};

// Reduced rational Betti numbers of the full subcomplex of the fan's ray
// complex spanned by the selected rays, shifted so that entry p is the
// contribution to h^p: entry 0 counts reduced H^{-1} (which is 1 exactly
// when no ray is selected), entry p counts reduced H^{p-1}.
std::vector<Int> reduced_betti(const Fan& fan, const std::vector<bool>& selected);

// The full subcomplex of the fan's ray complex induced on the rays whose
// divisor inequality the character m violates: S = { i : <m, u_i> < -a_i }.
// Its reduced homology is the character's contribution to cohomology.
struct SupportComplex {
    std::vector<int> vertices;              // selected rays, sorted
    std::vector<std::vector<int>> faces;    // every face as a sorted ray list
    std::vector<Int> reduced;               // reduced_betti of the complex
};

SupportComplex support_complex(const TDivisor& d, const MVector& m);

// One character's contribution to the cohomology of a divisor.
struct CharacterContribution {
    MVector m;
    std::vector<Int> h;  // h^0..h^n pieces at this character
};

struct CohomologyTable {
    std::vector<Int> h;  // total h^0..h^n
    std::vector<CharacterContribution> characters;  // nonzero rows, sorted by m
    Box box;             // region of characters actually scanned
    bool widened = false;  // true if the automatic box had to grow
};

// Cohomology of the line bundle attached to a divisor, computed character by
// character: h^p picks up reduced homology of the subcomplex of rays whose
// inequality the character violates.  Without an explicit box the scan covers
// every intersection point of the divisor's wall hyperplanes (all bounded
// regions of that arrangement lie in their convex hull, and only bounded
// regions can contribute).  In dimension 2 the total is cross-checked against
// the Riemann-Roch count and the box grows if they disagree.
CohomologyTable cohomology_table(const GradedRing& ring, const TDivisor& d,
                                 const std::optional<Box>& box = std::nullopt);
CohomologyTable cohomology_table(const TDivisor& d,
                                 const std::optional<Box>& box = std::nullopt);

// Alternating sum h^0 - h^1 + ... of a computed table.
Int euler_characteristic(const CohomologyTable& t);

// Euler characteristic predicted by Riemann-Roch on a surface:
// 1 + D.(D - K)/2 with K the canonical divisor.  Dimension 2 only.
Int riemann_roch_chi(const GradedRing& ring, const TDivisor& d);

// Combinatorial Euler characteristic next to the Riemann-Roch prediction.
// Surface only; `equal` must hold whenever the implementation is correct.
struct EulerCheck {
    Int chi_cohomology;    // h^0 - h^1 + h^2 from the character sweep
    Int chi_riemann_roch;  // 1 + D.(D - K)/2
    bool equal = false;
};

EulerCheck euler_rr_check(const GradedRing& ring, const TDivisor& d);

// Vanishing check for negative multiples of a surface divisor that is
// effective, nef and has nonzero self-intersection: h^0(-m*D) and h^1(-m*D)
// must both vanish for 1 <= m <= m_max.  Each precondition failure throws an
// invalid_argument naming the failed hypothesis.  A recorded violation means
// the cohomology engine itself is wrong, not that the input is bad.
struct VanishingViolation {
    int m = 0;  // multiple at which the failure happened
    int p = 0;  // cohomology degree (0 or 1)
    Int value;  // the nonzero dimension found
};

struct VanishingReport {
    int m_max = 0;
    bool all_vanish = false;
    std::vector<std::vector<Int>> tables;  // row m-1 holds h^0..h^n of -m*D
    std::vector<VanishingViolation> violations;
};

VanishingReport verify_negative_multiple_vanishing(const GradedRing& ring,
                                                   const TDivisor& d, int m_max);

}  // namespace hartoric
