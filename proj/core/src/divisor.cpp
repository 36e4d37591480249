#include "hartoric/divisor.hpp"

#include <algorithm>
#include <set>

#include "hartoric/linalg.hpp"

namespace hartoric {

namespace {

void check_same_fan(const TDivisor& a, const TDivisor& b) {
    if (a.fan == b.fan) return;
    if (a.fan && b.fan && *a.fan == *b.fan) return;
    throw std::invalid_argument("divisors live on different fans");
}

}  // namespace

TDivisor TDivisor::make(FanPtr fan, std::vector<Int> coeffs) {
    if (!fan) throw std::invalid_argument("divisor needs a fan");
    if (coeffs.size() != fan->rays.size())
        throw std::invalid_argument("divisor needs one coefficient per ray");
    TDivisor d;
    d.fan = std::move(fan);
    d.coeffs = std::move(coeffs);
    return d;
}

bool TDivisor::operator==(const TDivisor& o) const {
    return coeffs == o.coeffs && (fan == o.fan || (fan && o.fan && *fan == *o.fan));
}

TDivisor operator+(const TDivisor& a, const TDivisor& b) {
    check_same_fan(a, b);
    TDivisor r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

TDivisor operator-(const TDivisor& a, const TDivisor& b) {
    check_same_fan(a, b);
    TDivisor r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

TDivisor operator-(const TDivisor& a) {
    TDivisor r = a;
    for (Int& c : r.coeffs) c = -c;
    return r;
}

TDivisor operator*(const Int& k, const TDivisor& d) {
    TDivisor r = d;
    for (Int& c : r.coeffs) c *= k;
    return r;
}

TDivisor divisor_at_infinity(FanPtr fan, const LaurentSupport& s) {
    if (!fan) throw std::invalid_argument("divisor needs a fan");
    if (s.dim != fan->dim)
        throw std::invalid_argument("polynomial rank does not match the fan dimension");
    const LatticePolytope P = newton_polytope(s);
    std::vector<Int> coeffs(fan->rays.size());
    for (size_t i = 0; i < fan->rays.size(); ++i)
        coeffs[i] = -support_function(P, fan->rays[i]);
    return TDivisor::make(std::move(fan), std::move(coeffs));
}

TDivisor principal_divisor(FanPtr fan, const MVector& m) {
    if (!fan) throw std::invalid_argument("divisor needs a fan");
    if (m.dim() != fan->dim) throw std::invalid_argument("character rank does not match the fan");
    std::vector<Int> coeffs(fan->rays.size());
    for (size_t i = 0; i < fan->rays.size(); ++i) coeffs[i] = pairing(m, fan->rays[i]);
    return TDivisor::make(std::move(fan), std::move(coeffs));
}

TDivisor canonical_divisor(FanPtr fan) {
    if (!fan) throw std::invalid_argument("divisor needs a fan");
    std::vector<Int> coeffs(fan->rays.size(), Int(-1));
    return TDivisor::make(std::move(fan), std::move(coeffs));
}

bool is_effective(const TDivisor& d) {
    for (const Int& c : d.coeffs)
        if (c < 0) return false;
    return true;
}

ConeFunctionals cone_functionals(const TDivisor& d) {
    const Fan& fan = *d.fan;
    const int n = fan.dim;
    ConeFunctionals out;
    for (const Cone& cone : fan.max_cones) {
        QMat A(n, QVec(n));
        QVec b(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) A[i][j] = Rat(fan.rays[cone.rays[i]].c[j]);
            b[i] = Rat(-d.coeffs[cone.rays[i]]);
        }
        const auto m = solve_square(std::move(A), std::move(b));
        if (!m) throw std::invalid_argument("maximal cone is degenerate (rays not independent)");
        MVector mv;
        mv.c.resize(n);
        for (int i = 0; i < n; ++i) {
            if (!is_integer((*m)[i]))
                throw std::invalid_argument("cone functional is not integral (fan not smooth)");
            mv.c[i] = num((*m)[i]);
        }
        out.m.push_back(std::move(mv));
    }
    return out;
}

NefCertificate nef_certificate(const TDivisor& d) {
    const Fan& fan = *d.fan;
    NefCertificate cert;
    cert.functionals = cone_functionals(d);
    cert.nef = true;
    for (size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
        for (size_t ri = 0; ri < fan.rays.size(); ++ri) {
            if (pairing(cert.functionals.m[ci], fan.rays[ri]) < -d.coeffs[ri]) {
                cert.nef = false;
                cert.violations.push_back({static_cast<int>(ci), static_cast<int>(ri)});
            }
        }
    }
    return cert;
}

bool is_nef(const TDivisor& d) { return nef_certificate(d).nef; }

int DivisorPolytope::dim() const {
    if (empty) throw std::invalid_argument("dimension of an empty polytope");
    if (vertices.size() <= 1) return 0;
    QMat diffs(vertices.size() - 1, QVec(vertices[0].size()));
    for (size_t i = 1; i < vertices.size(); ++i)
        for (size_t j = 0; j < vertices[0].size(); ++j)
            diffs[i - 1][j] = vertices[i][j] - vertices[0][j];
    return rank(std::move(diffs));
}

bool DivisorPolytope::contains(const std::vector<Rat>& p) const {
    const Fan& f = *fan;
    for (size_t i = 0; i < f.rays.size(); ++i) {
        Rat s = 0;
        for (int j = 0; j < f.dim; ++j) s += p[j] * Rat(f.rays[i].c[j]);
        if (s < Rat(-coeffs[i])) return false;
    }
    return true;
}

bool DivisorPolytope::contains(const MVector& m) const {
    const Fan& f = *fan;
    for (size_t i = 0; i < f.rays.size(); ++i)
        if (pairing(m, f.rays[i]) < -coeffs[i]) return false;
    return true;
}

DivisorPolytope polytope_of_divisor(const TDivisor& d) {
    const Fan& fan = *d.fan;
    const int n = fan.dim;
    const int r = static_cast<int>(fan.rays.size());

    DivisorPolytope P;
    P.fan = d.fan;
    P.coeffs = d.coeffs;

    // Completeness bounds the polytope, so every vertex is the unique
    // solution of n of the inequalities made tight.
    std::set<QVec> verts;
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
    if (r < n) throw std::invalid_argument("fan has fewer rays than its dimension");
    do {
        QMat A(n, QVec(n));
        QVec b(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) A[i][j] = Rat(fan.rays[idx[i]].c[j]);
            b[i] = Rat(-d.coeffs[idx[i]]);
        }
        const auto m = solve_square(std::move(A), std::move(b));
        if (!m) continue;
        if (P.contains(*m)) verts.insert(*m);
    } while (advance());

    P.empty = verts.empty();
    P.vertices.assign(verts.begin(), verts.end());
    return P;
}

std::vector<MVector> lattice_points(const DivisorPolytope& P) {
    if (P.empty) return {};
    const int n = P.fan->dim;
    std::vector<Int> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        // floor/ceil of the rational vertex coordinates bound the scan box
        Rat mn = P.vertices[0][j], mx = P.vertices[0][j];
        for (const auto& v : P.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        Int fl = num(mn) / den(mn);
        if (Rat(fl) > mn) fl -= 1;
        Int ce = num(mx) / den(mx);
        if (Rat(ce) < mx) ce += 1;
        lo[j] = fl;
        hi[j] = ce;
    }
    std::vector<MVector> out;
    std::vector<Int> x = lo;
    for (;;) {
        MVector m;
        m.c = x;
        if (P.contains(m)) out.push_back(m);
        int j = 0;
        while (j < n && x[j] == hi[j]) {
            x[j] = lo[j];
            ++j;
        }
        if (j == n) break;
        ++x[j];
    }
    std::sort(out.begin(), out.end());
    return out;
}

LatticePolytope nef_polytope(const TDivisor& d) {
    const ConeFunctionals fs = cone_functionals(d);
    return LatticePolytope::hull(fs.m);
}

}  // namespace hartoric
