#include "hartoric/sheaf_cohomology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "hartoric/linalg.hpp"

namespace hartoric {

Int Box::side() const {
    Int s = 0;
    for (size_t j = 0; j < lo.size(); ++j) s = std::max(s, Int(hi[j] - lo[j]));
    return s;
}

bool Box::contains(const MVector& m) const {
    for (size_t j = 0; j < lo.size(); ++j)
        if (m.c[j] < lo[j] || m.c[j] > hi[j]) return false;
    return true;
}

std::vector<Int> reduced_betti(const Fan& fan, const std::vector<bool>& selected) {
    const int n = fan.dim;
    std::vector<Int> rb(n + 1, Int(0));

    // Faces of the selected subcomplex, grouped by dimension.  Every face is
    // a subset of some maximal cone's (sorted) ray list, so subsets stay
    // sorted and the set dedupes shared faces.
    std::vector<std::set<std::vector<int>>> faces(n);
    for (const Cone& cone : fan.max_cones) {
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> face;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                if (!(mask >> i & 1)) continue;
                if (!selected[cone.rays[i]])
                    ok = false;
                else
                    face.push_back(cone.rays[i]);
            }
            if (ok) faces[face.size() - 1].insert(std::move(face));
        }
    }
    if (faces[0].empty()) {
        rb[0] = 1;  // reduced H^{-1} of the empty complex
        return rb;
    }

    // bd_rank[k] = rank of the boundary map from k-faces to (k-1)-faces;
    // bd_rank[0] is the augmentation onto the empty face.
    std::vector<int> bd_rank(n + 1, 0);
    bd_rank[0] = 1;
    for (int k = 1; k < n; ++k) {
        if (faces[k].empty()) continue;
        std::map<std::vector<int>, int> row_of;
        int rows = 0;
        for (const auto& f : faces[k - 1]) row_of[f] = rows++;
        QMat B(rows, QVec(faces[k].size(), Rat(0)));
        int col = 0;
        for (const auto& f : faces[k]) {
            for (size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> sub;
                for (size_t i = 0; i < f.size(); ++i)
                    if (i != drop) sub.push_back(f[i]);
                B[row_of.at(sub)][col] = (drop % 2 == 0) ? 1 : -1;
            }
            ++col;
        }
        bd_rank[k] = rank(std::move(B));
    }
    for (int k = 0; k < n; ++k)
        rb[k + 1] = Int(faces[k].size()) - bd_rank[k] - bd_rank[k + 1];
    return rb;
}

SupportComplex support_complex(const TDivisor& d, const MVector& m) {
    const Fan& fan = *d.fan;
    require_valid(fan);
    if (m.dim() != fan.dim)
        throw std::invalid_argument("character dimension does not match the fan");
    const int r = static_cast<int>(fan.rays.size());
    std::vector<bool> selected(r, false);
    SupportComplex sc;
    for (int i = 0; i < r; ++i) {
        if (pairing(m, fan.rays[i]) < -d.coeffs[i]) {
            selected[i] = true;
            sc.vertices.push_back(i);
        }
    }
    std::set<std::vector<int>> faces;
    for (const Cone& cone : fan.max_cones) {
        for (unsigned mask = 1; mask < (1u << fan.dim); ++mask) {
            std::vector<int> face;
            bool ok = true;
            for (int i = 0; i < fan.dim && ok; ++i) {
                if (!(mask >> i & 1)) continue;
                if (!selected[cone.rays[i]])
                    ok = false;
                else
                    face.push_back(cone.rays[i]);
            }
            if (ok) faces.insert(std::move(face));
        }
    }
    sc.faces.assign(faces.begin(), faces.end());
    std::sort(sc.faces.begin(), sc.faces.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    sc.reduced = reduced_betti(fan, selected);
    return sc;
}

namespace {

// Bounding box of every point where dim-many wall hyperplanes with
// independent normals meet.  Bounded sign-regions of the arrangement are
// spanned by these points, and characters in unbounded regions cannot
// contribute (the total would be infinite), so this box sees everything.
Box arrangement_box(const TDivisor& d, const Int& margin) {
    const Fan& fan = *d.fan;
    const int n = fan.dim;
    const int r = static_cast<int>(fan.rays.size());
    std::vector<Rat> mn(n), mx(n);
    bool first = true;

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    auto advance = [&]() {
        int i = n - 1;
        while (i >= 0 && idx[i] == r - n + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    };
    do {
        QMat A(n, QVec(n));
        QVec b(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) A[i][j] = Rat(fan.rays[idx[i]].c[j]);
            b[i] = Rat(-d.coeffs[idx[i]]);
        }
        const auto m = solve_square(std::move(A), std::move(b));
        if (!m) continue;
        for (int j = 0; j < n; ++j) {
            if (first || (*m)[j] < mn[j]) mn[j] = (*m)[j];
            if (first || (*m)[j] > mx[j]) mx[j] = (*m)[j];
        }
        first = false;
    } while (advance());
    if (first) throw internal_error("complete fan without an independent ray subset");

    Box box;
    box.lo.resize(n);
    box.hi.resize(n);
    for (int j = 0; j < n; ++j) {
        box.lo[j] = rat_floor(mn[j]) - margin;
        box.hi[j] = rat_ceil(mx[j]) + margin;
    }
    return box;
}

CohomologyTable sweep(const TDivisor& d, const Box& box) {
    const Fan& fan = *d.fan;
    const int n = fan.dim;
    const int r = static_cast<int>(fan.rays.size());

    CohomologyTable t;
    t.box = box;
    t.h.assign(n + 1, Int(0));

    // The subcomplex only depends on which inequalities the character
    // violates, so homology is memoized per violation mask.
    std::map<std::uint64_t, std::vector<Int>> memo;

    std::vector<Int> x = box.lo;
    for (;;) {
        MVector m;
        m.c = x;
        std::uint64_t mask = 0;
        for (int i = 0; i < r; ++i)
            if (pairing(m, fan.rays[i]) < -d.coeffs[i]) mask |= std::uint64_t(1) << i;
        auto it = memo.find(mask);
        if (it == memo.end()) {
            std::vector<bool> sel(r, false);
            for (int i = 0; i < r; ++i) sel[i] = (mask >> i & 1) != 0;
            it = memo.emplace(mask, reduced_betti(fan, sel)).first;
        }
        bool any = false;
        for (const Int& v : it->second)
            if (v != 0) any = true;
        if (any) {
            for (int p = 0; p <= n; ++p) t.h[p] += it->second[p];
            t.characters.push_back({m, it->second});
        }
        int j = 0;
        while (j < n && x[j] == box.hi[j]) {
            x[j] = box.lo[j];
            ++j;
        }
        if (j == n) break;
        ++x[j];
    }
    std::sort(t.characters.begin(), t.characters.end(),
              [](const CharacterContribution& a, const CharacterContribution& b) {
                  return a.m < b.m;
              });
    return t;
}

CohomologyTable table_impl(const GradedRing* ring, const TDivisor& d,
                           const std::optional<Box>& user_box) {
    if (!d.fan) throw std::invalid_argument("divisor has no fan");
    const Fan& fan = *d.fan;
    require_valid(fan);
    const int n = fan.dim;
    if (n > 4) throw std::invalid_argument("cohomology is implemented for dimension at most 4");
    if (fan.rays.size() > 63)
        throw std::invalid_argument("too many rays for the cohomology scan");

    if (user_box) {
        if (static_cast<int>(user_box->lo.size()) != n ||
            static_cast<int>(user_box->hi.size()) != n)
            throw std::invalid_argument("box needs one bound per coordinate");
        for (int j = 0; j < n; ++j)
            if (user_box->lo[j] > user_box->hi[j])
                throw std::invalid_argument("box bounds are inconsistent");
        return sweep(d, *user_box);
    }

    const Int limit = 10000;
    Int margin = 1;
    for (;;) {
        const Box box = arrangement_box(d, margin);
        if (box.side() > limit) {
            if (margin == 1)
                throw std::runtime_error(
                    "cohomology character box exceeds side 10000; coefficients too large");
            throw internal_error(
                "character sweep disagrees with Riemann-Roch within a box of side 10000");
        }
        CohomologyTable t = sweep(d, box);
        t.widened = margin > 1;
        if (n == 2 && ring && euler_characteristic(t) != riemann_roch_chi(*ring, d)) {
            margin *= 2;
            continue;
        }
        return t;
    }
}

}  // namespace

CohomologyTable cohomology_table(const GradedRing& ring, const TDivisor& d,
                                 const std::optional<Box>& box) {
    if (!(d.fan == ring.fan() || (d.fan && *d.fan == *ring.fan())))
        throw std::invalid_argument("divisor lives on a different fan than the ring");
    return table_impl(&ring, d, box);
}

CohomologyTable cohomology_table(const TDivisor& d, const std::optional<Box>& box) {
    if (d.fan && d.fan->dim == 2) {
        const GradedRing ring = build_ring(d.fan);
        return table_impl(&ring, d, box);
    }
    return table_impl(nullptr, d, box);
}

Int euler_characteristic(const CohomologyTable& t) {
    Int chi = 0;
    for (size_t p = 0; p < t.h.size(); ++p) chi += (p % 2 == 0) ? t.h[p] : -t.h[p];
    return chi;
}

Int riemann_roch_chi(const GradedRing& ring, const TDivisor& d) {
    if (ring.dim() != 2)
        throw std::invalid_argument("Riemann-Roch count is implemented for surfaces only");
    const TDivisor k = canonical_divisor(d.fan);
    const Int dd = ring.intersection_number({d, d});
    const Int dk = ring.intersection_number({d, k});
    return to_int(Rat(1) + Rat(dd - dk) / 2);
}

EulerCheck euler_rr_check(const GradedRing& ring, const TDivisor& d) {
    EulerCheck c;
    c.chi_riemann_roch = riemann_roch_chi(ring, d);  // also enforces dim == 2
    c.chi_cohomology = euler_characteristic(cohomology_table(ring, d));
    c.equal = c.chi_cohomology == c.chi_riemann_roch;
    return c;
}

VanishingReport verify_negative_multiple_vanishing(const GradedRing& ring,
                                                   const TDivisor& d, int m_max) {
    if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
    if (ring.dim() != 2)
        throw std::invalid_argument("vanishing check requires a surface");
    if (!(d.fan == ring.fan() || (d.fan && ring.fan() && *d.fan == *ring.fan())))
        throw std::invalid_argument("divisor and ring live on different fans");
    if (!is_effective(d))
        throw std::invalid_argument("vanishing check requires an effective divisor");
    if (!nef_checked(ring, d))
        throw std::invalid_argument("vanishing check requires a nef divisor");
    if (ring.self_square_is_zero(d))
        throw std::invalid_argument("vanishing check requires nonzero self-intersection");
    VanishingReport rep;
    rep.m_max = m_max;
    rep.all_vanish = true;
    for (int m = 1; m <= m_max; ++m) {
        const TDivisor md = Int(-m) * d;
        const CohomologyTable t = cohomology_table(ring, md);
        rep.tables.push_back(t.h);
        for (int p = 0; p <= 1; ++p) {
            if (t.h[p] != 0) {
                rep.all_vanish = false;
                rep.violations.push_back({m, p, t.h[p]});
            }
        }
    }
    return rep;
}

}  // namespace hartoric
