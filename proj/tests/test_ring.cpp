#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hartoric/divisor.hpp"
#include "hartoric/fan.hpp"
#include "hartoric/intersection_ring.hpp"
#include "hartoric/polytope.hpp"

using namespace hartoric;

namespace {

std::vector<Int> coeffs(std::initializer_list<int> v) {
    std::vector<Int> out;
    for (int x : v) out.emplace_back(x);
    return out;
}

TDivisor ray_divisor(const FanPtr& fan, int i) {
    std::vector<Int> c(fan->rays.size(), Int(0));
    c[i] = 1;
    return TDivisor::make(fan, std::move(c));
}

std::vector<Int> betti_of(const std::vector<Int>& v) { return v; }

}  // namespace

TEST_CASE("graded dimensions match the combinatorial Betti numbers") {
    for (const char* sel :
         {"P1", "P2", "P3", "P4", "P1xP1", "Hirzebruch:0", "Hirzebruch:1", "Hirzebruch:3"}) {
        const FanPtr fan = share(builtin_fan(sel));
        const GradedRing ring = build_ring(fan);
        const std::vector<Int> betti = betti_numbers(*fan);
        const std::vector<int> dims = ring.dims();
        CAPTURE(sel);
        REQUIRE(dims.size() == betti.size());
        for (size_t k = 0; k < dims.size(); ++k) CHECK(Int(dims[k]) == betti[k]);
    }
    CHECK(betti_numbers(projective_space(2)) == betti_of({Int(1), Int(1), Int(1)}));
    CHECK(betti_numbers(projective_space(4)) ==
          betti_of({Int(1), Int(1), Int(1), Int(1), Int(1)}));
    CHECK(betti_numbers(product_p1_p1()) == betti_of({Int(1), Int(2), Int(1)}));
    CHECK(betti_numbers(hirzebruch(Int(5))) == betti_of({Int(1), Int(2), Int(1)}));
}

TEST_CASE("intersection numbers on the projective plane and space") {
    const FanPtr p2 = share(projective_space(2));
    const GradedRing ring = build_ring(p2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(ring.intersection_number({ray_divisor(p2, i), ray_divisor(p2, j)}) == 1);

    const TDivisor h = ray_divisor(p2, 2);
    CHECK(ring.intersection_number({Int(2) * h, Int(3) * h}) == 6);

    const FanPtr p3 = share(projective_space(3));
    const GradedRing ring3 = build_ring(p3);
    CHECK(ring3.intersection_number(
              {ray_divisor(p3, 0), ray_divisor(p3, 1), ray_divisor(p3, 2)}) == 1);
    CHECK(ring3.intersection_number(
              {ray_divisor(p3, 3), ray_divisor(p3, 3), ray_divisor(p3, 3)}) == 1);
    CHECK_THROWS_AS(ring3.intersection_number({ray_divisor(p3, 0)}), std::invalid_argument);
}

TEST_CASE("product of lines intersection matrix") {
    const FanPtr pp = share(product_p1_p1());
    const GradedRing ring = build_ring(pp);
    const int expected[4][4] = {{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(ring.intersection_number({ray_divisor(pp, i), ray_divisor(pp, j)}) ==
                  expected[i][j]);
}

TEST_CASE("Hirzebruch intersection tables") {
    for (int r = 0; r <= 4; ++r) {
        const FanPtr h = share(hirzebruch(Int(r)));
        const GradedRing ring = build_ring(h);
        CAPTURE(r);
        const Int R(r);
        const Int expected[4][4] = {{0, 1, 0, 1},
                                    {1, -R, 1, 0},
                                    {0, 1, 0, 1},
                                    {1, 0, 1, R}};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(ring.intersection_number({ray_divisor(h, i), ray_divisor(h, j)}) ==
                      expected[i][j]);

        // The two fiber classes agree in cohomology.
        const CohomologyClass d0 = ring.class_of(ray_divisor(h, 0));
        const CohomologyClass d2 = ring.class_of(ray_divisor(h, 2));
        CHECK(d0 == d2);
    }
}

TEST_CASE("principal divisor classes vanish") {
    for (const char* sel : {"P2", "P3", "P1xP1", "Hirzebruch:2"}) {
        const FanPtr fan = share(builtin_fan(sel));
        const GradedRing ring = build_ring(fan);
        CAPTURE(sel);
        std::vector<MVector> ms;
        if (fan->dim == 2) {
            ms = {MVector{Int(1), Int(0)}, MVector{Int(0), Int(1)}, MVector{Int(3), Int(-2)}};
        } else {
            ms = {MVector{Int(1), Int(0), Int(0)}, MVector{Int(-1), Int(2), Int(5)}};
        }
        for (const MVector& m : ms) {
            CHECK(ring.class_of(principal_divisor(fan, m)).is_zero());
            // Linear equivalence: shifting by a principal divisor does not
            // change any intersection number.
            const TDivisor d = ray_divisor(fan, 0);
            const TDivisor shifted = d + principal_divisor(fan, m);
            std::vector<TDivisor> a(fan->dim, d), b(fan->dim, shifted);
            CHECK(ring.intersection_number(a) == ring.intersection_number(b));
        }
    }
}

TEST_CASE("non-cone monomials vanish in the ring") {
    const FanPtr pp = share(product_p1_p1());
    const GradedRing ring = build_ring(pp);
    // Opposite rays never span a cone.
    CHECK(ring.monomial_class({1, 1, 0, 0}).is_zero());
    CHECK(ring.monomial_class({0, 0, 1, 1}).is_zero());
    CHECK_FALSE(ring.monomial_class({1, 0, 1, 0}).is_zero());

    const FanPtr h2 = share(hirzebruch(Int(2)));
    const GradedRing ring2 = build_ring(h2);
    CHECK(ring2.monomial_class({1, 0, 1, 0}).is_zero());
    CHECK(ring2.monomial_class({0, 1, 0, 1}).is_zero());
    CHECK_FALSE(ring2.monomial_class({1, 1, 0, 0}).is_zero());

    CHECK_THROWS_AS(ring.monomial_class({1, 1, 1, 0}), std::invalid_argument);
}

TEST_CASE("multiplication respects bilinearity on samples") {
    const FanPtr h1 = share(hirzebruch(Int(1)));
    const GradedRing ring = build_ring(h1);
    const CohomologyClass a = ring.class_of(TDivisor::make(h1, coeffs({1, 2, 0, 1})));
    const CohomologyClass b = ring.class_of(TDivisor::make(h1, coeffs({0, 1, 3, 2})));
    const CohomologyClass c = ring.class_of(TDivisor::make(h1, coeffs({2, 0, 1, 0})));

    const CohomologyClass ab = ring.multiply(a, b);
    const CohomologyClass ba = ring.multiply(b, a);
    CHECK(ab == ba);

    // (a+c) * b == a*b + c*b, compared through top-degree evaluation.
    const CohomologyClass ac = ring.class_of(TDivisor::make(h1, coeffs({3, 2, 1, 1})));
    const CohomologyClass lhs = ring.multiply(ac, b);
    const CohomologyClass cb = ring.multiply(c, b);
    REQUIRE(lhs.degree == 2);
    const Rat left = ring.degree_eval(lhs);
    const Rat right = ring.degree_eval(ab) + ring.degree_eval(cb);
    CHECK(left == right);
}

TEST_CASE("self-intersection against the mixed-volume oracle, exhaustively") {
    // For every effective nef divisor with small coefficients, [D]^2 equals
    // the mixed volume of the section polytope with itself.
    for (const char* sel : {"P2", "Hirzebruch:0", "Hirzebruch:1", "Hirzebruch:2"}) {
        const FanPtr fan = share(builtin_fan(sel));
        const GradedRing ring = build_ring(fan);
        const int k = static_cast<int>(fan->rays.size());
        std::vector<int> a(k, 0);
        while (true) {
            std::vector<Int> c;
            for (int x : a) c.emplace_back(x);
            const TDivisor d = TDivisor::make(fan, c);
            if (nef_checked(ring, d)) {
                const LatticePolytope P = nef_polytope(d);
                const Rat mv = mixed_volume({P, P});
                const Int square = ring.intersection_number({d, d});
                CAPTURE(sel);
                CHECK(Rat(square) == mv);
                CHECK(ring.self_square_is_zero(d) == (square == 0));
                CHECK(square >= 0);
            }
            int t = 0;
            while (t < k && a[t] == 3) a[t++] = 0;
            if (t == k) break;
            ++a[t];
        }
    }
}

TEST_CASE("ampleness") {
    const FanPtr p2 = share(projective_space(2));
    CHECK(is_ample(ray_divisor(p2, 0)));
    CHECK_FALSE(is_ample(TDivisor::make(p2, coeffs({0, 0, 0}))));

    const FanPtr h2 = share(hirzebruch(Int(2)));
    CHECK_FALSE(is_ample(ray_divisor(h2, 2)));  // fiber: nef but not ample
    CHECK(is_nef(ray_divisor(h2, 2)));

    for (const char* sel : {"P2", "P3", "P1xP1", "Hirzebruch:0", "Hirzebruch:2"}) {
        const FanPtr fan = share(builtin_fan(sel));
        const auto ample = find_ample(fan);
        CAPTURE(sel);
        REQUIRE(ample.has_value());
        CHECK(is_ample(*ample));
        CHECK(is_nef(*ample));
    }

    // Pairing [D]^2 . [A]^(n-2) with an ample A detects nonzero nef squares
    // in dimension 3.
    const FanPtr p3 = share(projective_space(3));
    const GradedRing ring3 = build_ring(p3);
    const auto a3 = find_ample(p3);
    REQUIRE(a3.has_value());
    const TDivisor h = ray_divisor(p3, 0);
    CHECK(square_ample_pairing(ring3, h, *a3) > 0);
    const TDivisor zero = TDivisor::make(p3, {Int(0), Int(0), Int(0), Int(0)});
    CHECK(square_ample_pairing(ring3, zero, *a3) == 0);
}

TEST_CASE("ring accepts content-equal fans and rejects different ones") {
    const GradedRing ring = build_ring(share(projective_space(2)));

    // A distinct fan object with identical content is fine.
    const FanPtr same = share(projective_space(2));
    const TDivisor d = TDivisor::make(same, coeffs({0, 0, 1}));
    CHECK(ring.intersection_number({d, d}) == 1);

    // A genuinely different fan is not.
    const FanPtr other = share(product_p1_p1());
    const TDivisor e = TDivisor::make(other, coeffs({0, 0, 1, 0}));
    CHECK_THROWS_AS(ring.intersection_number({e, e}), std::invalid_argument);
}
