#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hartoric/divisor.hpp"
#include "hartoric/fan.hpp"
#include "hartoric/hartogs.hpp"
#include "hartoric/intersection_ring.hpp"
#include "hartoric/laurent.hpp"

using namespace hartoric;

namespace {

std::vector<Int> coeffs(std::initializer_list<int> v) {
    std::vector<Int> out;
    for (int x : v) out.emplace_back(x);
    return out;
}

LaurentSupport translated(const LaurentSupport& s, const MVector& m) {
    std::vector<std::pair<MVector, Rat>> terms;
    for (const auto& [p, c] : s.terms) terms.emplace_back(p + m, c);
    return LaurentSupport::from_terms(s.dim, std::move(terms));
}

}  // namespace

TEST_CASE("end-to-end decisions on pinned inputs") {
    struct Case {
        const char* fan;
        const char* poly;
        Decision decision;
        bool square_zero;
    };
    const Case cases[] = {
        {"P2", "1+z1+z2", Decision::HARTOGS, false},
        {"P1xP1", "1+z1", Decision::NO_HARTOGS, true},
        {"Hirzebruch:1", "1+z1+z2", Decision::HARTOGS, false},
        {"Hirzebruch:1", "1+1/z2", Decision::HARTOGS, false},
        {"Hirzebruch:1", "z2", Decision::INAPPLICABLE, true},
        {"P2", "1", Decision::NO_HARTOGS, true},
        {"P2", "z1*z2", Decision::INAPPLICABLE, true},
        {"P3", "1+z1+z2+z3", Decision::HARTOGS, false},
    };
    for (const Case& c : cases) {
        const FanPtr fan = share(builtin_fan(c.fan));
        const HartogsReport rep = decide(fan, parse_polynomial(c.poly, fan->dim));
        CAPTURE(c.fan);
        CAPTURE(c.poly);
        CHECK(rep.decision == c.decision);
        CHECK(rep.square_zero == c.square_zero);
        CHECK_FALSE(rep.caveats.empty());
        CHECK_FALSE(rep.basis.empty());
        // Positive decisions require all three hypotheses.
        if (rep.decision == Decision::HARTOGS) {
            CHECK(rep.effective);
            CHECK(rep.nef);
            CHECK_FALSE(rep.square_zero);
            CHECK(rep.polytope_dim >= 2);
        }
        if (rep.decision == Decision::NO_HARTOGS) {
            CHECK(rep.effective);
            CHECK(rep.nef);
            CHECK(rep.square_zero);
            CHECK(rep.polytope_dim <= 1);
        }
        if (rep.decision == Decision::INAPPLICABLE) CHECK_FALSE(rep.effective);
    }
}

TEST_CASE("decide and decide_divisor agree") {
    const FanPtr h2 = share(hirzebruch(Int(2)));
    const GradedRing ring = build_ring(h2);
    const LaurentSupport s = parse_polynomial("1 + z1*z2 + z1^-1*z2^-1", 2);
    const HartogsReport via_poly = decide(h2, s);
    const HartogsReport via_divisor = decide_divisor(ring, divisor_at_infinity(h2, s));
    CHECK(via_poly.decision == via_divisor.decision);
    CHECK(via_poly.divisor == via_divisor.divisor);
    CHECK(via_poly.effective == via_divisor.effective);
    CHECK(via_poly.nef == via_divisor.nef);
    CHECK(via_poly.square_zero == via_divisor.square_zero);
    CHECK(via_poly.polytope_dim == via_divisor.polytope_dim);
    CHECK(via_poly.basis == via_divisor.basis);
}

TEST_CASE("dimension mismatches are rejected") {
    const FanPtr p2 = share(projective_space(2));
    CHECK_THROWS_AS(decide(p2, parse_polynomial("1+z1", 1)), std::invalid_argument);
    CHECK_THROWS_AS(decide(p2, parse_polynomial("1+z1+z2+z3", 3)), std::invalid_argument);
}

TEST_CASE("decision depends only on the support, not the coefficients") {
    const FanPtr p2 = share(projective_space(2));
    const HartogsReport a = decide(p2, parse_polynomial("1+z1+z2", 2));
    const HartogsReport b = decide(p2, parse_polynomial("7 - 3*z1 + 11*z2", 2));
    CHECK(a.decision == b.decision);
    CHECK(a.divisor == b.divisor);
}

TEST_CASE("equivalence of the intersection and polytope routes") {
    const FanPtr p2 = share(projective_space(2));
    const GradedRing ring = build_ring(p2);

    const EquivalenceReport line = equivalence_report(ring, TDivisor::make(p2, coeffs({0, 0, 1})));
    CHECK(line.square_nonzero);
    CHECK(line.polytope_dim == 2);
    CHECK(line.polytope_dim_at_least_2);
    REQUIRE(line.self_mixed_volume.has_value());
    CHECK(*line.self_mixed_volume == Rat(1));
    CHECK(line.consistent);

    const EquivalenceReport zero = equivalence_report(ring, TDivisor::make(p2, coeffs({0, 0, 0})));
    CHECK_FALSE(zero.square_nonzero);
    CHECK(zero.polytope_dim == 0);
    CHECK_FALSE(zero.polytope_dim_at_least_2);
    CHECK(zero.consistent);

    const FanPtr h2 = share(hirzebruch(Int(2)));
    const GradedRing ring2 = build_ring(h2);
    const EquivalenceReport fiber =
        equivalence_report(ring2, TDivisor::make(h2, coeffs({0, 0, 1, 0})));
    CHECK_FALSE(fiber.square_nonzero);
    CHECK(fiber.polytope_dim == 1);
    CHECK(fiber.consistent);

    // Dimension 3 uses the ample-pairing route instead of mixed volumes.
    const FanPtr p3 = share(projective_space(3));
    const GradedRing ring3 = build_ring(p3);
    const EquivalenceReport plane =
        equivalence_report(ring3, TDivisor::make(p3, coeffs({0, 0, 0, 1})));
    CHECK(plane.square_nonzero);
    CHECK(plane.polytope_dim == 3);
    REQUIRE(plane.ample_pairing.has_value());
    CHECK(*plane.ample_pairing > 0);
    CHECK_FALSE(plane.self_mixed_volume.has_value());
    CHECK(plane.consistent);

    CHECK_THROWS_WITH_AS(equivalence_report(ring, TDivisor::make(p2, coeffs({-1, 0, 0}))),
                         "equivalence report requires an effective divisor",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(equivalence_report(ring2, TDivisor::make(h2, coeffs({0, 1, 0, 0}))),
                         "equivalence report requires a nef divisor", std::invalid_argument);
}

TEST_CASE("closed forms on Hirzebruch surfaces") {
    // Worked example: the plus variant and the intersection square agree.
    const HirzebruchEvaluation e1 = hirzebruch_closed_forms(Int(1), parse_polynomial("1+z1+z2", 2));
    CHECK(e1.l == std::array<Int, 4>{Int(-1), Int(0), Int(0), Int(-1)});
    CHECK(e1.factored_square == 3);
    CHECK(e1.generic_square == 3);
    CHECK(e1.closed_form_plus);
    CHECK(e1.closed_form_minus);
    CHECK(e1.generic_effective);
    CHECK(e1.generic_nef);
    CHECK(e1.discrepancies.empty());

    const HirzebruchEvaluation e2 = hirzebruch_closed_forms(Int(1), parse_polynomial("1+1/z2", 2));
    CHECK(e2.l == std::array<Int, 4>{Int(-1), Int(-1), Int(0), Int(0)});
    CHECK(e2.factored_square == 1);
    CHECK(e2.closed_form_plus);
    CHECK(e2.discrepancies.empty());

    // The sign-flipped variant misclassifies this support for every r >= 1.
    for (int r = 1; r <= 4; ++r) {
        const HirzebruchEvaluation e = hirzebruch_closed_forms(Int(r), parse_polynomial("1+z2", 2));
        CAPTURE(r);
        CHECK(e.l == std::array<Int, 4>{Int(0), Int(0), Int(0), Int(-1)});
        CHECK(e.generic_effective);
        CHECK(e.generic_nef);
        CHECK(e.closed_form_plus);
        CHECK_FALSE(e.closed_form_minus);
        CHECK_FALSE(e.discrepancies.empty());
        CHECK(e.generic_square == r);
    }

    // With r = 0 the two variants coincide.
    const HirzebruchEvaluation e0 = hirzebruch_closed_forms(Int(0), parse_polynomial("1+z2", 2));
    CHECK(e0.closed_form_plus == e0.closed_form_minus);
    CHECK(e0.discrepancies.empty());

    CHECK_THROWS_AS(hirzebruch_closed_forms(Int(-1), parse_polynomial("1+z2", 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(hirzebruch_closed_forms(Int(1), parse_polynomial("1+z1", 1)),
                    std::invalid_argument);
}

TEST_CASE("translation of the polynomial changes nothing essential") {
    struct Pair {
        const char* fan;
        const char* poly;
    };
    const Pair pairs[] = {
        {"P2", "1+z1+z2"},     {"P2", "1"},
        {"P1xP1", "1+z1"},     {"Hirzebruch:1", "1+1/z2"},
        {"Hirzebruch:2", "1+z1+z2"},
        {"Hirzebruch:1", "z2"},
    };
    const MVector shifts[] = {MVector{Int(1), Int(0)}, MVector{Int(0), Int(-2)},
                              MVector{Int(-3), Int(5)}};
    for (const Pair& pr : pairs) {
        const FanPtr fan = share(builtin_fan(pr.fan));
        const GradedRing ring = build_ring(fan);
        const LaurentSupport s = parse_polynomial(pr.poly, 2);
        const HartogsReport base = decide_divisor(ring, divisor_at_infinity(fan, s));
        for (const MVector& m : shifts) {
            const LaurentSupport ts = translated(s, m);
            const TDivisor d = divisor_at_infinity(fan, ts);
            const HartogsReport rep = decide_divisor(ring, d);
            CAPTURE(pr.fan);
            CAPTURE(pr.poly);

            // The divisor moves by a principal divisor only.
            const TDivisor base_d = divisor_at_infinity(fan, s);
            CHECK(ring.class_of(d - base_d).is_zero());

            // Class-level facts are invariant.
            CHECK(rep.nef == base.nef);
            CHECK(rep.square_zero == base.square_zero);
            CHECK(rep.polytope_empty == base.polytope_empty);
            CHECK(rep.polytope_dim == base.polytope_dim);

            // The decision survives exactly when effectivity does; for
            // effective translates it is literally the same decision.
            if (rep.effective == base.effective) CHECK(rep.decision == base.decision);
        }
    }
}
