#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hartoric/divisor.hpp"
#include "hartoric/fan.hpp"
#include "hartoric/intersection_ring.hpp"
#include "hartoric/numeric.hpp"
#include "hartoric/polytope.hpp"

namespace hartoric {

// Outcome of the extension test for the complement of a hypersurface closure:
// HARTOGS     - holomorphic functions extend across compact holes;
// NO_HARTOGS  - the criterion applies and rules the extension out;
// INAPPLICABLE - the divisor at infinity is not effective or not nef, so the
//                self-intersection criterion does not decide the question.
enum class Decision { HARTOGS, NO_HARTOGS, INAPPLICABLE };

std::string to_string(Decision d);

struct HartogsReport {
    std::vector<Int> divisor;  // coefficients of the divisor at infinity
    bool effective = false;
    bool nef = false;
    bool square_zero = false;  // self-intersection class vanishes in the ring
    bool polytope_empty = false;
    int polytope_dim = -1;     // -1 when the section polytope is empty
    Decision decision = Decision::INAPPLICABLE;
    std::string basis;         // one-line reason for the decision
    std::vector<std::string> caveats;
};

// Decision for an explicit divisor on the ring's fan.  Internally the nef
// test, the self-intersection, the section polytope dimension and (depending
// on the dimension) a mixed-volume or ample-pairing route are all computed
// and cross-checked; disagreement between routes throws internal_error.
HartogsReport decide_divisor(const GradedRing& ring, const TDivisor& d);

// Decision for the hypersurface cut out by a Laurent polynomial with the
// given support: builds the divisor at infinity from the Newton polytope's
// support function and delegates to decide_divisor.
HartogsReport decide(FanPtr fan, const LaurentSupport& s);

// The equivalent formulations of the criterion for an effective nef divisor,
// each computed by its own route.  `consistent` records whether they agree;
// callers treating this as a self-test should assert it.
struct EquivalenceReport {
    bool square_nonzero = false;
    int polytope_dim = -1;
    bool polytope_dim_at_least_2 = false;
    std::optional<Rat> self_mixed_volume;  // surfaces only: MV(P, P)
    std::optional<Rat> ample_pairing;      // dim >= 3 when an ample divisor exists
    bool consistent = false;
};

EquivalenceReport equivalence_report(const GradedRing& ring, const TDivisor& d);

// Closed-form evaluation on a Hirzebruch surface with parameter r, rays
// (-1,r), (0,1), (1,0), (0,-1).  l[i] is the Newton polytope's support
// function at ray i; the divisor at infinity has coefficients -l[i].
//
// Two sign variants of the closed-form extension test are evaluated:
//   plus:  (all l_i <= 0) and (l_0 + l_2 + r*l_3 <= 0)
//   minus: (all l_i <= 0) and (l_0 + l_2 - r*l_3 <= 0)
// The plus variant provably equals "effective and nef" for support-function
// values; where the minus variant differs it is listed in `discrepancies`.
// The factored square (l_1 + l_3) * (2*l_0 + 2*l_2 - r*l_1 + r*l_3) must
// match the ring computation exactly (internal_error otherwise).
struct HirzebruchEvaluation {
    Int r;
    std::array<Int, 4> l;
    bool closed_form_plus = false;
    bool closed_form_minus = false;
    Int factored_square;
    bool factored_square_nonzero = false;
    bool generic_effective = false;
    bool generic_nef = false;
    Int generic_square;
    std::vector<std::string> discrepancies;
};

HirzebruchEvaluation hirzebruch_closed_forms(const Int& r, const LaurentSupport& s);

}  // namespace hartoric
