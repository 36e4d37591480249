#include "hartoric/linalg.hpp"

#include <cstdlib>

namespace hartoric {

std::vector<int> rref(QMat& A) {
    std::vector<int> pivots;
    if (A.empty()) return pivots;
    const int rows = static_cast<int>(A.size());
    const int cols = static_cast<int>(A[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (A[i][c] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(A[r], A[p]);
        const Rat inv = A[r][c];
        for (int j = c; j < cols; ++j) A[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            const Rat f = A[i][c];
            for (int j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(QMat A) { return static_cast<int>(rref(A).size()); }

Rat det(QMat A) {
    const int n = static_cast<int>(A.size());
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i) {
            if (A[i][c] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) return 0;
        if (p != c) {
            std::swap(A[p], A[c]);
            d = -d;
        }
        d *= A[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (A[i][c] == 0) continue;
            const Rat f = A[i][c] / A[c][c];
            for (int j = c; j < n; ++j) A[i][j] -= f * A[c][j];
        }
    }
    return d;
}

std::optional<QVec> solve_square(QMat A, QVec b) {
    const int n = static_cast<int>(A.size());
    for (int i = 0; i < n; ++i) A[i].push_back(b[i]);
    const std::vector<int> piv = rref(A);
    if (static_cast<int>(piv.size()) != n || (n > 0 && piv.back() == n)) return std::nullopt;
    QVec x(n);
    for (int i = 0; i < n; ++i) x[i] = A[i][n];
    return x;
}

std::optional<QVec> solve_unique(QMat A, const QVec& b) {
    if (A.empty()) return QVec{};
    const int rows = static_cast<int>(A.size());
    const int cols = static_cast<int>(A[0].size());
    for (int i = 0; i < rows; ++i) A[i].push_back(b[i]);
    const std::vector<int> piv = rref(A);
    for (int p : piv)
        if (p == cols) return std::nullopt;  // inconsistent
    if (static_cast<int>(piv.size()) != cols) return std::nullopt;  // underdetermined
    QVec x(cols);
    for (int i = 0; i < static_cast<int>(piv.size()); ++i) x[piv[i]] = A[i][cols];
    return x;
}

std::vector<QVec> nullspace(QMat A) {
    if (A.empty()) return {};
    const int cols = static_cast<int>(A[0].size());
    const std::vector<int> piv = rref(A);
    std::vector<bool> is_piv(cols, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<QVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        QVec v(cols, Rat(0));
        v[f] = 1;
        for (int i = 0; i < static_cast<int>(piv.size()); ++i) v[piv[i]] = -A[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Int> primitive_integer(const QVec& v) {
    Int l = 1;
    for (const Rat& q : v) l = boost::multiprecision::lcm(l, den(q));
    std::vector<Int> w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = num(v[i]) * (l / den(v[i]));
        g = boost::multiprecision::gcd(g, w[i]);
    }
    if (g == 0) throw std::invalid_argument("no primitive direction for the zero vector");
    for (Int& x : w) x /= g;
    return w;
}

std::vector<std::vector<Int>> hyperplane_lattice_basis(const std::vector<Int>& w) {
    const int d = static_cast<int>(w.size());
    // Column-reduce w to a single unit entry while mirroring the operations
    // on an identity matrix; the untouched columns then span the kernel
    // lattice exactly because the full matrix stays unimodular.
    std::vector<Int> a = w;
    std::vector<std::vector<Int>> U(d, std::vector<Int>(d, Int(0)));
    for (int i = 0; i < d; ++i) U[i][i] = 1;

    auto nonzeros = [&]() {
        std::vector<int> idx;
        for (int i = 0; i < d; ++i)
            if (a[i] != 0) idx.push_back(i);
        return idx;
    };
    for (;;) {
        std::vector<int> nz = nonzeros();
        if (nz.empty()) throw std::invalid_argument("no primitive direction for the zero vector");
        if (nz.size() == 1) {
            const int p = nz[0];
            if (boost::multiprecision::abs(a[p]) != 1)
                throw std::invalid_argument("hyperplane normal is not primitive");
            std::vector<std::vector<Int>> basis;
            for (int c = 0; c < d; ++c) {
                if (c == p) continue;
                std::vector<Int> col(d);
                for (int i = 0; i < d; ++i) col[i] = U[i][c];
                basis.push_back(std::move(col));
            }
            return basis;
        }
        // Reduce the largest entry by the smallest nonzero one.
        int i = nz[0], j = nz[1];
        for (int k : nz) {
            if (boost::multiprecision::abs(a[k]) < boost::multiprecision::abs(a[j])) j = k;
        }
        i = -1;
        for (int k : nz) {
            if (k == j) continue;
            if (i < 0 || boost::multiprecision::abs(a[k]) > boost::multiprecision::abs(a[i])) i = k;
        }
        const Int q = a[i] / a[j];
        a[i] -= q * a[j];
        for (int rr = 0; rr < d; ++rr) U[rr][i] -= q * U[rr][j];
    }
}

}  // namespace hartoric
