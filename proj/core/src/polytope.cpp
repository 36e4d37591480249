#include "hartoric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hartoric/linalg.hpp"

namespace hartoric {

namespace {

// Phase-1 simplex feasibility for { lambda >= 0 : A lambda = b }.
// Bland's rule (smallest entering index, smallest basis index on ties)
// guarantees termination; the arithmetic is exact throughout.
bool lp_feasible(QMat A, QVec b) {
    const int m = static_cast<int>(A.size());
    const int k = m ? static_cast<int>(A[0].size()) : 0;
    for (int i = 0; i < m; ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (int j = 0; j < k; ++j) A[i][j] = -A[i][j];
        }
    }
    const int cols = k + m;
    QMat T(m + 1, QVec(cols + 1, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) T[i][j] = A[i][j];
        T[i][k + i] = 1;
        T[i][cols] = b[i];
    }
    // Reduced-cost row for "minimize sum of artificials" with the artificial
    // basis; T[m][cols] tracks minus the objective value.
    for (int j = 0; j <= cols; ++j) {
        Rat s = 0;
        for (int i = 0; i < m; ++i) s += T[i][j];
        T[m][j] = (j >= k && j < cols ? Rat(1) : Rat(0)) - s;
    }
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = k + i;
    for (;;) {
        int enter = -1;
        for (int j = 0; j < cols; ++j) {
            if (T[m][j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) break;
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            const Rat ratio = T[i][cols] / T[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) throw internal_error("phase-1 simplex claims an unbounded objective");
        const Rat piv = T[leave][enter];
        for (int j = 0; j <= cols; ++j) T[leave][j] /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            const Rat f = T[i][enter];
            for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    return T[m][cols] == 0;
}

QVec to_qvec(const MVector& m) {
    QVec v(m.c.size());
    for (size_t i = 0; i < m.c.size(); ++i) v[i] = Rat(m.c[i]);
    return v;
}

using IPoints = std::vector<std::vector<Int>>;

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Inequality description <w, x> >= c of the hull of V, assumed full
// dimensional in rank d.  Every facet hyperplane is affinely spanned by d of
// the vertices, so enumerating d-subsets finds them all.
std::vector<std::pair<std::vector<Int>, Int>> facets_raw(const IPoints& V, int d) {
    std::set<std::pair<std::vector<Int>, Int>> found;
    if (d == 1) {
        Int lo = V[0][0], hi = V[0][0];
        for (const auto& v : V) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        found.insert({{Int(1)}, lo});
        found.insert({{Int(-1)}, -hi});
        return {found.begin(), found.end()};
    }
    const int k = static_cast<int>(V.size());
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    auto advance = [&]() {
        int i = d - 1;
        while (i >= 0 && idx[i] == k - d + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
        return true;
    };
    do {
        QMat diffs(d - 1, QVec(d));
        for (int i = 1; i < d; ++i)
            for (int j = 0; j < d; ++j) diffs[i - 1][j] = Rat(V[idx[i]][j] - V[idx[0]][j]);
        const std::vector<QVec> ns = nullspace(diffs);
        if (ns.size() != 1) continue;  // subset does not span a hyperplane
        std::vector<Int> w = primitive_integer(ns[0]);
        const Int c = dot(w, V[idx[0]]);
        bool above = true, below = true;
        for (const auto& v : V) {
            const Int s = dot(w, v);
            above = above && s >= c;
            below = below && s <= c;
        }
        if (above) {
            found.insert({w, c});
        } else if (below) {
            for (Int& x : w) x = -x;
            found.insert({std::move(w), -c});
        }
    } while (advance());
    return {found.begin(), found.end()};
}

// n! vol of the hull of V, full dimensional in rank d: peel pyramids over the
// facets avoiding a base vertex.  Lattice heights against primitive facet
// normals make the recursion exact and integral.
Int nvol_raw(const IPoints& V, int d) {
    if (d == 1) {
        Int lo = V[0][0], hi = V[0][0];
        for (const auto& v : V) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        return hi - lo;
    }
    const auto facets = facets_raw(V, d);
    const std::vector<Int>& v0 = V[0];
    Int total = 0;
    for (const auto& [w, c] : facets) {
        const Int h = dot(w, v0) - c;
        if (h == 0) continue;
        IPoints F;
        for (const auto& v : V)
            if (dot(w, v) == c) F.push_back(v);
        // Coordinates of F inside the hyperplane lattice spanned by B.
        const auto B = hyperplane_lattice_basis(w);
        QMat Bq(d, QVec(d - 1));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d - 1; ++j) Bq[i][j] = Rat(B[j][i]);
        IPoints Fp;
        for (const auto& f : F) {
            QVec rhs(d);
            for (int i = 0; i < d; ++i) rhs[i] = Rat(f[i] - F[0][i]);
            const auto y = solve_unique(Bq, rhs);
            if (!y) throw internal_error("facet point outside its hyperplane lattice");
            std::vector<Int> yi(d - 1);
            for (int i = 0; i < d - 1; ++i) yi[i] = to_int((*y)[i]);
            Fp.push_back(std::move(yi));
        }
        total += boost::multiprecision::abs(h) * nvol_raw(Fp, d - 1);
    }
    return total;
}

IPoints raw_vertices(const LatticePolytope& P) {
    IPoints V;
    for (const MVector& v : P.vertices()) V.push_back(v.c);
    return V;
}

}  // namespace

LaurentSupport LaurentSupport::from_points(const std::vector<MVector>& pts) {
    if (pts.empty()) throw std::invalid_argument("empty Laurent support");
    std::vector<std::pair<MVector, Rat>> terms;
    for (const MVector& p : pts) {
        if (p.dim() != pts[0].dim()) throw std::invalid_argument("support points of mixed rank");
        terms.emplace_back(p, Rat(1));
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    terms.erase(std::unique(terms.begin(), terms.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                terms.end());
    LaurentSupport s;
    s.dim = pts[0].dim();
    s.terms = std::move(terms);
    return s;
}

LaurentSupport LaurentSupport::from_terms(int dim, std::vector<std::pair<MVector, Rat>> terms) {
    std::map<MVector, Rat> merged;
    for (auto& [e, c] : terms) {
        if (e.dim() != dim) throw std::invalid_argument("support points of mixed rank");
        merged[e] += c;
    }
    LaurentSupport s;
    s.dim = dim;
    for (auto& [e, c] : merged)
        if (c != 0) s.terms.emplace_back(e, c);
    if (s.terms.empty())
        throw std::invalid_argument("polynomial support is empty after cancellation");
    return s;
}

std::vector<MVector> LaurentSupport::points() const {
    std::vector<MVector> pts;
    pts.reserve(terms.size());
    for (const auto& [e, c] : terms) pts.push_back(e);
    return pts;
}

bool in_convex_hull(const std::vector<Rat>& p, const std::vector<std::vector<Rat>>& pts) {
    if (pts.empty()) return false;
    const int n = static_cast<int>(p.size());
    const int k = static_cast<int>(pts.size());
    QMat A(n + 1, QVec(k));
    QVec b(n + 1);
    for (int j = 0; j < k; ++j) {
        if (static_cast<int>(pts[j].size()) != n)
            throw std::invalid_argument("hull points of mixed rank");
        for (int i = 0; i < n; ++i) A[i][j] = pts[j][i];
        A[n][j] = 1;
    }
    for (int i = 0; i < n; ++i) b[i] = p[i];
    b[n] = 1;
    return lp_feasible(std::move(A), std::move(b));
}

LatticePolytope LatticePolytope::hull(const std::vector<MVector>& pts) {
    if (pts.empty()) throw std::invalid_argument("hull of an empty point set");
    std::vector<MVector> uniq = pts;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (const MVector& p : uniq)
        if (p.dim() != uniq[0].dim()) throw std::invalid_argument("hull points of mixed rank");

    LatticePolytope P;
    P.ambient_ = uniq[0].dim();
    if (uniq.size() == 1) {
        P.verts_ = std::move(uniq);
        return P;
    }
    for (size_t i = 0; i < uniq.size(); ++i) {
        std::vector<std::vector<Rat>> others;
        for (size_t j = 0; j < uniq.size(); ++j)
            if (j != i) others.push_back(to_qvec(uniq[j]));
        if (!in_convex_hull(to_qvec(uniq[i]), others)) P.verts_.push_back(uniq[i]);
    }
    return P;
}

LatticePolytope newton_polytope(const LaurentSupport& s) { return LatticePolytope::hull(s.points()); }

Int support_function(const LatticePolytope& P, const NVector& u) {
    if (u.dim() != P.ambient_dim()) throw std::invalid_argument("support direction has wrong rank");
    bool first = true;
    Int best = 0;
    for (const MVector& v : P.vertices()) {
        const Int s = pairing(v, u);
        if (first || s < best) best = s;
        first = false;
    }
    return best;
}

int dim(const LatticePolytope& P) {
    const auto& V = P.vertices();
    if (V.size() <= 1) return 0;
    QMat diffs(V.size() - 1, QVec(P.ambient_dim()));
    for (size_t i = 1; i < V.size(); ++i)
        for (int j = 0; j < P.ambient_dim(); ++j) diffs[i - 1][j] = Rat(V[i].c[j] - V[0].c[j]);
    return rank(std::move(diffs));
}

std::vector<std::pair<std::vector<Int>, Int>> facet_description(const LatticePolytope& P) {
    if (dim(P) != P.ambient_dim())
        throw std::invalid_argument("facet description requires a full-dimensional polytope");
    return facets_raw(raw_vertices(P), P.ambient_dim());
}

std::vector<MVector> lattice_points(const LatticePolytope& P) {
    const int n = P.ambient_dim();
    const auto& V = P.vertices();
    std::vector<Int> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        lo[j] = hi[j] = V[0].c[j];
        for (const MVector& v : V) {
            lo[j] = std::min(lo[j], v.c[j]);
            hi[j] = std::max(hi[j], v.c[j]);
        }
    }
    const bool full = dim(P) == n;
    std::vector<std::pair<std::vector<Int>, Int>> facets;
    std::vector<std::vector<Rat>> vq;
    if (full) {
        facets = facets_raw(raw_vertices(P), n);
    } else {
        for (const MVector& v : V) vq.push_back(to_qvec(v));
    }

    std::vector<MVector> out;
    std::vector<Int> x = lo;
    for (;;) {
        bool inside = true;
        if (full) {
            for (const auto& [w, c] : facets) {
                if (dot(w, x) < c) {
                    inside = false;
                    break;
                }
            }
        } else {
            QVec p(n);
            for (int j = 0; j < n; ++j) p[j] = Rat(x[j]);
            inside = in_convex_hull(p, vq);
        }
        if (inside) out.emplace_back(x);
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

Int normalized_volume(const LatticePolytope& P) {
    if (dim(P) < P.ambient_dim()) return 0;
    return nvol_raw(raw_vertices(P), P.ambient_dim());
}

LatticePolytope minkowski_sum(const LatticePolytope& A, const LatticePolytope& B) {
    if (A.ambient_dim() != B.ambient_dim())
        throw std::invalid_argument("Minkowski sum of polytopes of different rank");
    std::vector<MVector> sums;
    for (const MVector& a : A.vertices())
        for (const MVector& b : B.vertices()) sums.push_back(a + b);
    return LatticePolytope::hull(sums);
}

Rat mixed_volume(const std::vector<LatticePolytope>& Ps) {
    if (Ps.empty()) throw std::invalid_argument("mixed volume of no polytopes");
    const int n = Ps[0].ambient_dim();
    if (static_cast<int>(Ps.size()) != n)
        throw std::invalid_argument("mixed volume needs exactly rank-many polytopes");
    for (const auto& P : Ps)
        if (P.ambient_dim() != n) throw std::invalid_argument("mixed volume of mixed-rank polytopes");

    Int total = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::optional<LatticePolytope> S;
        int count = 0;
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            ++count;
            S = S ? minkowski_sum(*S, Ps[i]) : Ps[i];
        }
        const Int v = normalized_volume(*S);
        total += ((n - count) % 2 == 0) ? v : -v;
    }
    Int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return Rat(total) / Rat(fact);
}

}  // namespace hartoric
