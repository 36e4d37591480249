#include "hartoric/hartogs.hpp"

#include <algorithm>

namespace hartoric {

std::string to_string(Decision d) {
    switch (d) {
        case Decision::HARTOGS: return "HARTOGS";
        case Decision::NO_HARTOGS: return "NO_HARTOGS";
        case Decision::INAPPLICABLE: return "INAPPLICABLE";
    }
    throw std::logic_error("unreachable decision value");
}

namespace {

const char* kConnectednessCaveat =
    "assumes the complement of the hypersurface closure is connected";

void cross_check_nef_divisor(const GradedRing& ring, const TDivisor& d, bool square_zero,
                             bool polytope_dim_at_least_2) {
    // For a nef divisor the self-intersection class vanishes exactly when the
    // section polytope has dimension at most 1.
    if (polytope_dim_at_least_2 == square_zero)
        throw internal_error(
            "section polytope dimension and self-intersection disagree for a nef divisor");

    const int n = ring.dim();
    if (n == 2) {
        // Dual route on surfaces: the self-intersection number equals the
        // mixed volume of the section polytope with itself.
        const LatticePolytope P = nef_polytope(d);
        const Int square = ring.intersection_number({d, d});
        const Int mv = to_int(mixed_volume({P, P}));
        if (mv != square)
            throw internal_error("self-intersection " + square.str() +
                                 " does not match mixed volume " + mv.str());
    } else if (n >= 3) {
        // Dual route in higher dimension: pair the square against an ample
        // class; nef squares are nonzero exactly when the pairing is positive.
        const auto ample = find_ample(d.fan);
        if (ample) {
            const Rat pr = square_ample_pairing(ring, d, *ample);
            if (square_zero && pr != 0)
                throw internal_error("vanishing square pairs nonzero against an ample class");
            if (!square_zero && pr <= 0)
                throw internal_error("nonzero nef square pairs nonpositive against an ample class");
        }
    }
}

}  // namespace

HartogsReport decide_divisor(const GradedRing& ring, const TDivisor& d) {
    if (!(d.fan == ring.fan() || (d.fan && *d.fan == *ring.fan())))
        throw std::invalid_argument("divisor lives on a different fan than the ring");

    HartogsReport rep;
    rep.divisor = d.coeffs;
    rep.effective = is_effective(d);
    rep.nef = nef_checked(ring, d);
    rep.square_zero = ring.self_square_is_zero(d);

    const DivisorPolytope P = polytope_of_divisor(d);
    rep.polytope_empty = P.empty;
    rep.polytope_dim = P.empty ? -1 : P.dim();

    if (rep.nef) cross_check_nef_divisor(ring, d, rep.square_zero, rep.polytope_dim >= 2);

    if (!rep.effective && !rep.nef) {
        rep.decision = Decision::INAPPLICABLE;
        rep.basis = "divisor at infinity is neither effective nor nef";
    } else if (!rep.effective) {
        rep.decision = Decision::INAPPLICABLE;
        rep.basis = "divisor at infinity is not effective";
    } else if (!rep.nef) {
        rep.decision = Decision::INAPPLICABLE;
        rep.basis = "divisor at infinity is not nef";
    } else if (rep.square_zero) {
        rep.decision = Decision::NO_HARTOGS;
        rep.basis = "effective nef divisor at infinity with vanishing self-intersection class";
    } else {
        rep.decision = Decision::HARTOGS;
        rep.basis = "effective nef divisor at infinity with nonzero self-intersection class";
    }
    rep.caveats.push_back(kConnectednessCaveat);
    return rep;
}

HartogsReport decide(FanPtr fan, const LaurentSupport& s) {
    if (!fan) throw std::invalid_argument("decision needs a fan");
    if (s.dim != fan->dim)
        throw std::invalid_argument("polynomial variable count does not match the fan dimension");
    const TDivisor d = divisor_at_infinity(fan, s);
    const GradedRing ring = build_ring(fan);
    return decide_divisor(ring, d);
}

EquivalenceReport equivalence_report(const GradedRing& ring, const TDivisor& d) {
    if (!is_effective(d))
        throw std::invalid_argument("equivalence report requires an effective divisor");
    if (!nef_checked(ring, d))
        throw std::invalid_argument("equivalence report requires a nef divisor");

    EquivalenceReport rep;
    rep.square_nonzero = !ring.self_square_is_zero(d);

    const DivisorPolytope P = polytope_of_divisor(d);
    rep.polytope_dim = P.empty ? -1 : P.dim();
    rep.polytope_dim_at_least_2 = rep.polytope_dim >= 2;

    bool ok = rep.square_nonzero == rep.polytope_dim_at_least_2;
    const int n = ring.dim();
    if (n == 2) {
        const LatticePolytope NP = nef_polytope(d);
        rep.self_mixed_volume = mixed_volume({NP, NP});
        ok = ok && (*rep.self_mixed_volume != 0) == rep.square_nonzero &&
             to_int(*rep.self_mixed_volume) == ring.intersection_number({d, d});
    } else if (n >= 3) {
        const auto ample = find_ample(d.fan);
        if (ample) {
            rep.ample_pairing = square_ample_pairing(ring, d, *ample);
            ok = ok && (*rep.ample_pairing > 0) == rep.square_nonzero;
        }
    }
    rep.consistent = ok;
    return rep;
}

HirzebruchEvaluation hirzebruch_closed_forms(const Int& r, const LaurentSupport& s) {
    if (s.dim != 2)
        throw std::invalid_argument("Hirzebruch evaluation needs a polynomial in 2 variables");
    const FanPtr fan = share(hirzebruch(r));
    const LatticePolytope NP = newton_polytope(s);

    HirzebruchEvaluation ev;
    ev.r = r;
    for (int i = 0; i < 4; ++i) ev.l[i] = support_function(NP, fan->rays[i]);
    const Int &l0 = ev.l[0], &l1 = ev.l[1], &l2 = ev.l[2], &l3 = ev.l[3];

    const bool all_nonpos = l0 <= 0 && l1 <= 0 && l2 <= 0 && l3 <= 0;
    ev.closed_form_plus = all_nonpos && l0 + l2 + r * l3 <= 0;
    ev.closed_form_minus = all_nonpos && l0 + l2 - r * l3 <= 0;
    ev.factored_square = (l1 + l3) * (2 * l0 + 2 * l2 - r * l1 + r * l3);
    ev.factored_square_nonzero = ev.factored_square != 0;

    const TDivisor d = divisor_at_infinity(fan, s);
    const GradedRing ring = build_ring(fan);
    ev.generic_effective = is_effective(d);
    ev.generic_nef = nef_checked(ring, d);
    ev.generic_square = ring.intersection_number({d, d});

    if (ev.factored_square != ev.generic_square)
        throw internal_error("factored Hirzebruch square " + ev.factored_square.str() +
                             " does not match the ring square " + ev.generic_square.str());
    if (ev.closed_form_plus != (ev.generic_effective && ev.generic_nef))
        throw internal_error(
            "closed-form effective+nef test disagrees with cone functionals and wall curves");
    if (ev.closed_form_minus != ev.closed_form_plus)
        ev.discrepancies.push_back(
            "minus-sign variant of the closed form disagrees with the computed effective+nef "
            "result");
    return ev;
}

}  // namespace hartoric
