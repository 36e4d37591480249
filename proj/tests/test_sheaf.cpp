#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hartoric/divisor.hpp"
#include "hartoric/fan.hpp"
#include "hartoric/intersection_ring.hpp"
#include "hartoric/numeric.hpp"
#include "hartoric/sheaf_cohomology.hpp"

using namespace hartoric;

namespace {

std::vector<Int> coeffs(std::initializer_list<int> v) {
    std::vector<Int> out;
    for (int x : v) out.emplace_back(x);
    return out;
}

std::vector<Int> ints(std::initializer_list<int> v) { return coeffs(v); }

}  // namespace

TEST_CASE("structure sheaf and canonical sheaf on the plane") {
    const FanPtr p2 = share(projective_space(2));
    const GradedRing ring = build_ring(p2);

    const CohomologyTable o = cohomology_table(ring, TDivisor::make(p2, coeffs({0, 0, 0})));
    CHECK(o.h == ints({1, 0, 0}));
    REQUIRE(o.characters.size() == 1);
    CHECK(o.characters[0].m == MVector{Int(0), Int(0)});

    const CohomologyTable k = cohomology_table(ring, canonical_divisor(p2));
    CHECK(k.h == ints({0, 0, 1}));

    // Positive line bundles: h^0(dH) = (d+1)(d+2)/2.
    for (int d = 1; d <= 4; ++d) {
        const CohomologyTable t =
            cohomology_table(ring, TDivisor::make(p2, coeffs({0, 0, d})));
        CHECK(t.h == std::vector<Int>{Int((d + 1) * (d + 2) / 2), Int(0), Int(0)});
    }
}

TEST_CASE("negative line bundles on the projective line") {
    const FanPtr p1 = share(projective_space(1));
    for (int d = 1; d <= 6; ++d) {
        const TDivisor neg = TDivisor::make(p1, {Int(-d), Int(0)});
        const CohomologyTable t = cohomology_table(neg);
        CAPTURE(d);
        CHECK(t.h == std::vector<Int>{Int(0), Int(d - 1)});
    }
    // Degree -1 has no cohomology at all; degree 0 is the structure sheaf.
    CHECK(cohomology_table(TDivisor::make(p1, {Int(-1), Int(0)})).h ==
          std::vector<Int>{Int(0), Int(0)});
    CHECK(cohomology_table(TDivisor::make(p1, {Int(0), Int(0)})).h ==
          std::vector<Int>{Int(1), Int(0)});
}

TEST_CASE("violation complexes behind a character") {
    const FanPtr p1 = share(projective_space(1));
    const TDivisor neg = TDivisor::make(p1, {Int(-3), Int(0)});
    // Characters strictly between the two bounds violate both rays: the
    // complex is two isolated points, contributing to h^1.
    const SupportComplex sc = support_complex(neg, MVector{Int(1)});
    CHECK(sc.vertices == std::vector<int>{0, 1});
    CHECK(sc.faces == std::vector<std::vector<int>>{{0}, {1}});
    CHECK(sc.reduced == ints({0, 1}));

    // At m = 3 only the second ray's inequality -m >= 0 fails: a single
    // vertex, which is contractible and contributes nothing.
    const SupportComplex one = support_complex(neg, MVector{Int(3)});
    CHECK(one.vertices == std::vector<int>{1});
    CHECK(one.faces == std::vector<std::vector<int>>{{1}});
    CHECK(one.reduced == ints({0, 0}));

    // A character inside the section polytope violates nothing: the empty
    // complex carries reduced H^{-1} and contributes to h^0.
    const TDivisor triv = TDivisor::make(p1, {Int(0), Int(0)});
    const SupportComplex none = support_complex(triv, MVector{Int(0)});
    CHECK(none.vertices.empty());
    CHECK(none.faces.empty());
    CHECK(none.reduced == ints({1, 0}));

    // Full violation on a Hirzebruch surface: the whole boundary 4-cycle.
    const FanPtr h2 = share(hirzebruch(Int(2)));
    const TDivisor k = canonical_divisor(h2);
    const SupportComplex cyc = support_complex(k, MVector{Int(0), Int(0)});
    CHECK(cyc.vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(cyc.faces.size() == 8);  // 4 vertices + 4 edges
    CHECK(cyc.reduced == ints({0, 0, 1}));
}

TEST_CASE("exhaustive surface checks: sections, duality, Euler, vanishing") {
    for (const char* sel : {"P2", "Hirzebruch:0", "Hirzebruch:1"}) {
        const FanPtr fan = share(builtin_fan(sel));
        const GradedRing ring = build_ring(fan);
        const TDivisor k = canonical_divisor(fan);
        const int nrays = static_cast<int>(fan->rays.size());
        std::vector<int> a(nrays, -2);
        while (true) {
            std::vector<Int> c;
            for (int x : a) c.emplace_back(x);
            const TDivisor d = TDivisor::make(fan, c);
            const CohomologyTable t = cohomology_table(ring, d);
            CAPTURE(sel);

            // h^0 counts the lattice points of the section polytope.
            CHECK(t.h[0] == Int(lattice_points(polytope_of_divisor(d)).size()));

            // Serre duality h^p(D) = h^{2-p}(K - D).
            const CohomologyTable dual = cohomology_table(ring, k - d);
            CHECK(t.h[0] == dual.h[2]);
            CHECK(t.h[1] == dual.h[1]);
            CHECK(t.h[2] == dual.h[0]);

            // Combinatorial Euler characteristic equals Riemann-Roch.
            const EulerCheck ec = euler_rr_check(ring, d);
            CHECK(ec.equal);

            // Nef surface divisors have no higher cohomology.
            if (is_nef(d)) {
                CHECK(t.h[1] == 0);
                CHECK(t.h[2] == 0);
            }

            // The per-character rows add up to the totals.
            std::vector<Int> sums(t.h.size(), Int(0));
            for (const auto& row : t.characters) {
                REQUIRE(row.h.size() == t.h.size());
                for (size_t p = 0; p < row.h.size(); ++p) {
                    CHECK(row.h[p] >= 0);
                    sums[p] += row.h[p];
                }
            }
            CHECK(sums == t.h);

            int tix = 0;
            while (tix < nrays && a[tix] == 2) a[tix++] = -2;
            if (tix == nrays) break;
            ++a[tix];
        }
    }
}

TEST_CASE("three-dimensional sanity") {
    const FanPtr p3 = share(projective_space(3));
    const GradedRing ring = build_ring(p3);
    CHECK(cohomology_table(ring, TDivisor::make(p3, coeffs({0, 0, 0, 0}))).h ==
          ints({1, 0, 0, 0}));
    CHECK(cohomology_table(ring, canonical_divisor(p3)).h == ints({0, 0, 0, 1}));
    CHECK(cohomology_table(ring, TDivisor::make(p3, coeffs({0, 0, 0, -1}))).h ==
          ints({0, 0, 0, 0}));
    CHECK(cohomology_table(ring, TDivisor::make(p3, coeffs({0, 0, 0, 2}))).h ==
          ints({10, 0, 0, 0}));

    const FanPtr p5 = share(projective_space(5));
    CHECK_THROWS_AS(cohomology_table(TDivisor::make(p5, coeffs({0, 0, 0, 0, 0, 1}))),
                    std::invalid_argument);
}

TEST_CASE("explicit search boxes are honored") {
    const FanPtr p2 = share(projective_space(2));
    const GradedRing ring = build_ring(p2);
    const TDivisor h = TDivisor::make(p2, coeffs({0, 0, 1}));

    Box box;
    box.lo = {Int(-2), Int(-2)};
    box.hi = {Int(2), Int(2)};
    const CohomologyTable t = cohomology_table(ring, h, box);
    CHECK(t.h == ints({3, 0, 0}));
    CHECK_FALSE(t.widened);
    for (const auto& row : t.characters) CHECK(box.contains(row.m));

    // A deliberately misplaced box sees nothing; the caller owns the choice.
    Box far;
    far.lo = {Int(50), Int(50)};
    far.hi = {Int(60), Int(60)};
    CHECK(cohomology_table(ring, h, far).h == ints({0, 0, 0}));

    Box bad;
    bad.lo = {Int(0)};
    bad.hi = {Int(0)};
    CHECK_THROWS_AS(cohomology_table(ring, h, bad), std::invalid_argument);
}

TEST_CASE("negative multiples of positive surface divisors have no sections") {
    const FanPtr h1 = share(hirzebruch(Int(1)));
    const GradedRing ring1 = build_ring(h1);
    const TDivisor d = TDivisor::make(h1, coeffs({0, 0, 1, 1}));
    const VanishingReport rep = verify_negative_multiple_vanishing(ring1, d, 3);
    CHECK(rep.all_vanish);
    CHECK(rep.violations.empty());
    REQUIRE(rep.tables.size() == 3);
    for (const auto& row : rep.tables) {
        CHECK(row[0] == 0);
        CHECK(row[1] == 0);
    }

    const FanPtr p2 = share(projective_space(2));
    const GradedRing ring2 = build_ring(p2);
    const TDivisor h = TDivisor::make(p2, coeffs({0, 0, 1}));
    const VanishingReport rep2 = verify_negative_multiple_vanishing(ring2, h, 5);
    CHECK(rep2.all_vanish);
    for (int m = 1; m <= 5; ++m) {
        // h^2(-mH) = C(m-1, 2) by duality with O((m-3)H).
        CHECK(rep2.tables[m - 1][2] == binomial(m - 1, 2));
    }
}

TEST_CASE("vanishing check rejects unmet hypotheses") {
    const FanPtr h2 = share(hirzebruch(Int(2)));
    const GradedRing ring = build_ring(h2);

    // Fiber class: nef and effective but with square zero.
    CHECK_THROWS_WITH_AS(
        verify_negative_multiple_vanishing(ring, TDivisor::make(h2, coeffs({0, 0, 1, 0})), 2),
        "vanishing check requires nonzero self-intersection", std::invalid_argument);

    // Effective but not nef.
    CHECK_THROWS_WITH_AS(
        verify_negative_multiple_vanishing(ring, TDivisor::make(h2, coeffs({0, 1, 0, 0})), 2),
        "vanishing check requires a nef divisor", std::invalid_argument);

    // Not effective.
    CHECK_THROWS_WITH_AS(
        verify_negative_multiple_vanishing(ring, TDivisor::make(h2, coeffs({-1, 0, 0, 0})), 2),
        "vanishing check requires an effective divisor", std::invalid_argument);

    CHECK_THROWS_AS(
        verify_negative_multiple_vanishing(ring, TDivisor::make(h2, coeffs({0, 0, 1, 1})), 0),
        std::invalid_argument);

    // Dimension restriction.
    const FanPtr p3 = share(projective_space(3));
    const GradedRing ring3 = build_ring(p3);
    CHECK_THROWS_WITH_AS(
        verify_negative_multiple_vanishing(ring3, TDivisor::make(p3, coeffs({0, 0, 0, 1})), 2),
        "vanishing check requires a surface", std::invalid_argument);
}

TEST_CASE("Euler characteristic check on pinned examples") {
    const FanPtr p2 = share(projective_space(2));
    const GradedRing ring = build_ring(p2);

    const EulerCheck zero = euler_rr_check(ring, TDivisor::make(p2, coeffs({0, 0, 0})));
    CHECK(zero.chi_cohomology == 1);
    CHECK(zero.chi_riemann_roch == 1);
    CHECK(zero.equal);

    const EulerCheck line = euler_rr_check(ring, TDivisor::make(p2, coeffs({0, 0, 1})));
    CHECK(line.chi_cohomology == 3);
    CHECK(line.chi_riemann_roch == 3);
    CHECK(line.equal);

    const FanPtr h1 = share(hirzebruch(Int(1)));
    const GradedRing ring1 = build_ring(h1);
    const TDivisor md = -TDivisor::make(h1, coeffs({0, 0, 1, 1}));
    CHECK(euler_rr_check(ring1, md).equal);

    const FanPtr p3 = share(projective_space(3));
    const GradedRing ring3 = build_ring(p3);
    CHECK_THROWS_AS(euler_rr_check(ring3, canonical_divisor(p3)), std::invalid_argument);
}

TEST_CASE("oversized automatic boxes are refused") {
    const FanPtr p2 = share(projective_space(2));
    const GradedRing ring = build_ring(p2);
    const TDivisor huge = TDivisor::make(p2, coeffs({20000, 0, 0}));
    CHECK_THROWS_AS(cohomology_table(ring, huge), std::runtime_error);
}
