// Slow, independent reference implementations used to cross-check the
// library's answers in tests.  Everything here favours obviousness over
// speed.
#pragma once

#include <vector>

#include "hartoric/fan.hpp"
#include "hartoric/linalg.hpp"
#include "hartoric/numeric.hpp"
#include "hartoric/polytope.hpp"

namespace hartoric::testing {

// Carathéodory-style hull membership: p is in the convex hull of pts iff it
// is a convex combination of at most dim+1 of them.  Each candidate simplex
// is checked by solving the barycentric system exactly.
inline bool hull_contains_bruteforce(const MVector& p, const std::vector<MVector>& pts) {
    const int n = p.dim();
    const int k = static_cast<int>(pts.size());

    // Subsets of size up to n+1, via an odometer over sorted index tuples.
    for (int size = 1; size <= n + 1 && size <= k; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            // Solve sum_j w_j * pts[idx[j]] = p, sum_j w_j = 1, w_j >= 0 by
            // Gaussian elimination on the (n+1) x size system.
            QMat A(n + 1, QVec(size, Rat(0)));
            QVec b(n + 1, Rat(0));
            for (int j = 0; j < size; ++j) {
                for (int t = 0; t < n; ++t) A[t][j] = Rat(pts[idx[j]].c[t]);
                A[n][j] = 1;
            }
            for (int t = 0; t < n; ++t) b[t] = Rat(p.c[t]);
            b[n] = 1;
            if (const auto w = solve_unique(A, b)) {
                bool nonneg = true;
                for (const Rat& wj : *w)
                    if (wj < 0) nonneg = false;
                if (nonneg) return true;
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == k - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

}  // namespace hartoric::testing
