#include "hartoric/intersection_ring.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hartoric/linalg.hpp"

namespace hartoric {

namespace {

// All exponent vectors over r variables with the given total degree, in
// lexicographically descending order.  With that column order the RREF
// pivots eat the lex-largest monomials, so the surviving basis is the
// lexicographically smallest independent choice.
void enumerate_monomials(int r, int degree, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    const int pos = static_cast<int>(cur.size());
    if (pos == r - 1) {
        cur.push_back(degree);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur.push_back(e);
        enumerate_monomials(r, degree - e, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> monomials_of_degree(int r, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (r == 1) {
        out.push_back({degree});
        return out;
    }
    enumerate_monomials(r, degree, cur, out);
    return out;
}

bool is_face(const Fan& fan, const std::vector<int>& subset) {
    for (const Cone& cone : fan.max_cones) {
        if (std::includes(cone.rays.begin(), cone.rays.end(), subset.begin(), subset.end()))
            return true;
    }
    return false;
}

// Minimal non-faces of the fan's ray complex; these generate the squarefree
// monomial relations.  A minimal non-face has at most dim+1 rays.
std::vector<std::vector<int>> minimal_non_faces(const Fan& fan) {
    const int r = static_cast<int>(fan.rays.size());
    std::vector<std::vector<int>> gens;
    const int max_size = std::min(r, fan.dim + 1);
    for (int size = 2; size <= max_size; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        auto advance = [&]() {
            int i = size - 1;
            while (i >= 0 && idx[i] == r - size + i) --i;
            if (i < 0) return false;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        };
        do {
            if (is_face(fan, idx)) continue;
            bool minimal = true;
            for (int drop = 0; drop < size && minimal; ++drop) {
                std::vector<int> sub;
                for (int i = 0; i < size; ++i)
                    if (i != drop) sub.push_back(idx[i]);
                minimal = is_face(fan, sub);
            }
            if (minimal) gens.push_back(idx);
        } while (advance());
    }
    return gens;
}

}  // namespace

std::vector<Int> betti_numbers(const Fan& fan) {
    const int n = fan.dim;
    // d[j] = number of j-dimensional cones; simplicial fans make every
    // subset of a maximal cone's rays a face.
    std::vector<Int> d(n + 1, Int(0));
    d[0] = 1;
    for (int j = 1; j <= n; ++j) {
        std::set<std::vector<int>> faces;
        for (const Cone& cone : fan.max_cones) {
            std::vector<int> idx(j);
            for (int i = 0; i < j; ++i) idx[i] = i;
            auto advance = [&]() {
                int i = j - 1;
                while (i >= 0 && idx[i] == n - j + i) --i;
                if (i < 0) return false;
                ++idx[i];
                for (int t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
                return true;
            };
            do {
                std::vector<int> sub(j);
                for (int i = 0; i < j; ++i) sub[i] = cone.rays[idx[i]];
                faces.insert(std::move(sub));
            } while (advance());
        }
        d[j] = Int(faces.size());
    }
    std::vector<Int> b(n + 1, Int(0));
    for (int k = 0; k <= n; ++k) {
        for (int j = k; j <= n; ++j) {
            const Int term = binomial(j, k) * d[n - j];
            b[k] += ((j - k) % 2 == 0) ? term : -term;
        }
    }
    return b;
}

GradedRing GradedRing::build(FanPtr fan) {
    if (!fan) throw std::invalid_argument("ring needs a fan");
    require_valid(*fan);

    GradedRing ring;
    ring.fan_ = fan;
    ring.n_ = fan->dim;
    const int n = fan->dim;
    const int r = static_cast<int>(fan->rays.size());

    const auto sr_gens = minimal_non_faces(*fan);

    for (int k = 0; k <= n; ++k) {
        Degree deg;
        deg.monomials = monomials_of_degree(r, k);
        std::map<std::vector<int>, int> index;
        for (size_t i = 0; i < deg.monomials.size(); ++i)
            index[deg.monomials[i]] = static_cast<int>(i);
        const int cols = static_cast<int>(deg.monomials.size());

        QMat rel;
        for (const auto& gen : sr_gens) {
            const int gdeg = static_cast<int>(gen.size());
            if (gdeg > k) continue;
            for (const auto& m : monomials_of_degree(r, k - gdeg)) {
                std::vector<int> prod = m;
                for (int ray : gen) ++prod[ray];
                QVec row(cols, Rat(0));
                row[index.at(prod)] = 1;
                rel.push_back(std::move(row));
            }
        }
        if (k >= 1) {
            for (int t = 0; t < n; ++t) {
                for (const auto& m : monomials_of_degree(r, k - 1)) {
                    QVec row(cols, Rat(0));
                    for (int i = 0; i < r; ++i) {
                        std::vector<int> prod = m;
                        ++prod[i];
                        row[index.at(prod)] += Rat(fan->rays[i].c[t]);
                    }
                    rel.push_back(std::move(row));
                }
            }
        }

        deg.pivots = rref(rel);
        rel.resize(deg.pivots.size());
        deg.rows = std::move(rel);
        deg.index_in_basis.assign(cols, -1);
        std::vector<bool> is_piv(cols, false);
        for (int p : deg.pivots) is_piv[p] = true;
        for (int c = 0; c < cols; ++c) {
            if (is_piv[c]) continue;
            deg.index_in_basis[c] = static_cast<int>(deg.basis.size());
            deg.basis.push_back(deg.monomials[c]);
            deg.monomial_index_of_basis.push_back(c);
        }
        ring.degrees_.push_back(std::move(deg));
    }

    // The graded dimensions must reproduce the Betti numbers computed from
    // cone counts alone; a mismatch means the relation set is wrong.
    const std::vector<Int> b = betti_numbers(*fan);
    for (int k = 0; k <= n; ++k) {
        if (Int(ring.degrees_[k].basis.size()) != b[k])
            throw internal_error("graded dimension " + std::to_string(k) + " is " +
                                 std::to_string(ring.degrees_[k].basis.size()) +
                                 " but the Betti number is " + b[k].str());
    }

    // Normalize top degree: the ray product of every maximal cone must map to
    // the same nonzero multiple of the single basis monomial.
    bool first = true;
    for (const Cone& cone : fan->max_cones) {
        std::vector<Rat> v(ring.degrees_[n].monomials.size(), Rat(0));
        std::vector<int> exps(r, 0);
        for (int ray : cone.rays) ++exps[ray];
        int idx = -1;
        for (size_t i = 0; i < ring.degrees_[n].monomials.size(); ++i)
            if (ring.degrees_[n].monomials[i] == exps) idx = static_cast<int>(i);
        v[idx] = 1;
        const std::vector<Rat> nf = ring.normal_form(n, std::move(v));
        if (nf.size() != 1 || nf[0] == 0)
            throw internal_error("maximal cone monomial vanishes in top degree");
        if (first) {
            ring.top_unit_ = nf[0];
            first = false;
        } else if (nf[0] != ring.top_unit_) {
            throw internal_error("top-degree normalization depends on the maximal cone");
        }
    }
    return ring;
}

GradedRing build_ring(FanPtr fan) { return GradedRing::build(std::move(fan)); }

std::vector<Rat> GradedRing::normal_form(int degree, std::vector<Rat> v) const {
    const Degree& deg = degrees_[degree];
    for (size_t i = 0; i < deg.rows.size(); ++i) {
        const Rat c = v[deg.pivots[i]];
        if (c == 0) continue;
        for (size_t j = 0; j < v.size(); ++j) v[j] -= c * deg.rows[i][j];
    }
    std::vector<Rat> out(deg.basis.size());
    for (size_t b = 0; b < deg.basis.size(); ++b) out[b] = v[deg.monomial_index_of_basis[b]];
    return out;
}

const std::vector<std::vector<int>>& GradedRing::basis(int degree) const {
    if (degree < 0 || degree > n_) throw std::invalid_argument("degree out of range");
    return degrees_[degree].basis;
}

std::vector<int> GradedRing::dims() const {
    std::vector<int> d;
    for (const Degree& deg : degrees_) d.push_back(static_cast<int>(deg.basis.size()));
    return d;
}

CohomologyClass GradedRing::zero(int degree) const {
    if (degree < 0 || degree > n_) throw std::invalid_argument("degree out of range");
    CohomologyClass c;
    c.degree = degree;
    c.coords.assign(degrees_[degree].basis.size(), Rat(0));
    return c;
}

void GradedRing::check_fan(const TDivisor& d) const {
    if (d.fan == fan_) return;
    if (d.fan && *d.fan == *fan_) return;
    throw std::invalid_argument("divisor lives on a different fan than the ring");
}

CohomologyClass GradedRing::class_of(const TDivisor& d) const {
    check_fan(d);
    const int r = static_cast<int>(fan_->rays.size());
    std::vector<Rat> v(degrees_[1].monomials.size(), Rat(0));
    for (int i = 0; i < r; ++i) {
        std::vector<int> exps(r, 0);
        exps[i] = 1;
        for (size_t m = 0; m < degrees_[1].monomials.size(); ++m)
            if (degrees_[1].monomials[m] == exps) v[m] += Rat(d.coeffs[i]);
    }
    CohomologyClass c;
    c.degree = 1;
    c.coords = normal_form(1, std::move(v));
    return c;
}

CohomologyClass GradedRing::monomial_class(const std::vector<int>& exponents) const {
    if (static_cast<int>(exponents.size()) != static_cast<int>(fan_->rays.size()))
        throw std::invalid_argument("monomial needs one exponent per ray");
    int degree = 0;
    for (int e : exponents) {
        if (e < 0) throw std::invalid_argument("negative exponent in ring monomial");
        degree += e;
    }
    if (degree > n_) throw std::invalid_argument("product degree exceeds the ring dimension");
    std::vector<Rat> v(degrees_[degree].monomials.size(), Rat(0));
    for (size_t m = 0; m < degrees_[degree].monomials.size(); ++m)
        if (degrees_[degree].monomials[m] == exponents) v[m] = 1;
    CohomologyClass c;
    c.degree = degree;
    c.coords = normal_form(degree, std::move(v));
    return c;
}

CohomologyClass GradedRing::multiply(const CohomologyClass& a, const CohomologyClass& b) const {
    const int degree = a.degree + b.degree;
    if (degree > n_) throw std::invalid_argument("product degree exceeds the ring dimension");
    const Degree& da = degrees_[a.degree];
    const Degree& db = degrees_[b.degree];
    const Degree& dp = degrees_[degree];
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < dp.monomials.size(); ++i) index[dp.monomials[i]] = static_cast<int>(i);

    std::vector<Rat> v(dp.monomials.size(), Rat(0));
    for (size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        for (size_t j = 0; j < b.coords.size(); ++j) {
            if (b.coords[j] == 0) continue;
            std::vector<int> prod = da.basis[i];
            for (size_t t = 0; t < prod.size(); ++t) prod[t] += db.basis[j][t];
            v[index.at(prod)] += a.coords[i] * b.coords[j];
        }
    }
    CohomologyClass c;
    c.degree = degree;
    c.coords = normal_form(degree, std::move(v));
    return c;
}

Rat GradedRing::degree_eval(const CohomologyClass& c) const {
    if (c.degree != n_) throw std::invalid_argument("degree evaluation needs a top-degree class");
    if (c.coords.empty()) return 0;
    return c.coords[0] / top_unit_;
}

Int GradedRing::intersection_number(const std::vector<TDivisor>& ds) const {
    if (static_cast<int>(ds.size()) != n_)
        throw std::invalid_argument("intersection number needs exactly dim divisors");
    CohomologyClass prod = class_of(ds[0]);
    for (size_t i = 1; i < ds.size(); ++i) prod = multiply(prod, class_of(ds[i]));
    return to_int(degree_eval(prod));
}

bool GradedRing::self_square_is_zero(const TDivisor& d) const {
    check_fan(d);
    if (n_ < 2) return true;  // the degree-2 graded piece is trivial
    const CohomologyClass c = class_of(d);
    return multiply(c, c).is_zero();
}

Rat GradedRing::curve_intersection(const TDivisor& d, const Wall& w) const {
    check_fan(d);
    std::vector<int> exps(fan_->rays.size(), 0);
    for (int ray : w.facet) ++exps[ray];
    const CohomologyClass curve = monomial_class(exps);
    return degree_eval(multiply(class_of(d), curve));
}

bool GradedRing::nef_via_curves(const TDivisor& d) const {
    for (const Wall& w : walls(*fan_))
        if (curve_intersection(d, w) < 0) return false;
    return true;
}

bool nef_checked(const GradedRing& ring, const TDivisor& d) {
    const bool by_functionals = is_nef(d);
    const bool by_curves = ring.nef_via_curves(d);
    if (by_functionals != by_curves)
        throw internal_error("nef tests disagree: cone functionals say " +
                             std::string(by_functionals ? "nef" : "not nef") +
                             ", wall curves say " + std::string(by_curves ? "nef" : "not nef"));
    return by_functionals;
}

Rat square_ample_pairing(const GradedRing& ring, const TDivisor& d, const TDivisor& ample) {
    if (ring.dim() < 2) throw std::invalid_argument("pairing needs dimension at least 2");
    const CohomologyClass cd = ring.class_of(d);
    CohomologyClass prod = ring.multiply(cd, cd);
    for (int i = 0; i < ring.dim() - 2; ++i) prod = ring.multiply(prod, ring.class_of(ample));
    return ring.degree_eval(prod);
}

bool is_ample(const TDivisor& d) {
    const Fan& fan = *d.fan;
    const NefCertificate cert = nef_certificate(d);
    if (!cert.nef) return false;
    for (size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
        const Cone& cone = fan.max_cones[ci];
        for (size_t ri = 0; ri < fan.rays.size(); ++ri) {
            if (std::find(cone.rays.begin(), cone.rays.end(), static_cast<int>(ri)) !=
                cone.rays.end())
                continue;
            if (pairing(cert.functionals.m[ci], fan.rays[ri]) <= -d.coeffs[ri]) return false;
        }
    }
    return true;
}

std::optional<TDivisor> find_ample(FanPtr fan) {
    const int r = static_cast<int>(fan->rays.size());
    std::vector<Int> a(r, Int(0));
    for (;;) {
        TDivisor d = TDivisor::make(fan, a);
        if (is_ample(d)) return d;
        int i = 0;
        while (i < r && a[i] == 2) {
            a[i] = 0;
            ++i;
        }
        if (i == r) return std::nullopt;
        ++a[i];
    }
}

}  // namespace hartoric
