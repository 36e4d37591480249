#include "hartoric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "hartoric/linalg.hpp"

namespace hartoric {

namespace {

std::string join_indices(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

}  // namespace

MVector operator+(const MVector& a, const MVector& b) {
    MVector r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

MVector operator-(const MVector& a, const MVector& b) {
    MVector r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

MVector operator-(const MVector& a) {
    MVector r = a;
    for (Int& x : r.c) x = -x;
    return r;
}

Int pairing(const MVector& m, const NVector& u) {
    if (m.dim() != u.dim()) throw std::invalid_argument("pairing of vectors of different rank");
    Int s = 0;
    for (int i = 0; i < m.dim(); ++i) s += m.c[i] * u.c[i];
    return s;
}

NVector primitive(const NVector& v) {
    Int g = 0;
    for (const Int& x : v.c) g = boost::multiprecision::gcd(g, x);
    if (g == 0) throw std::invalid_argument("no primitive direction for the zero vector");
    NVector r = v;
    for (Int& x : r.c) x /= g;
    return r;
}

Fan Fan::make(int dim, std::vector<NVector> rays, std::vector<Cone> max_cones) {
    if (dim < 1) throw std::invalid_argument("fan dimension must be at least 1");
    if (rays.empty()) throw std::invalid_argument("fan needs at least one ray");
    for (size_t i = 0; i < rays.size(); ++i) {
        if (rays[i].dim() != dim)
            throw std::invalid_argument("ray " + std::to_string(i) + " has wrong dimension");
        bool zero = true;
        for (const Int& x : rays[i].c) zero = zero && x == 0;
        if (zero) throw std::invalid_argument("ray " + std::to_string(i) + " is the zero vector");
    }
    for (const Cone& cone : max_cones) {
        if (static_cast<int>(cone.rays.size()) != dim)
            throw std::invalid_argument("maximal cone " + join_indices(cone.rays) +
                                        " does not have exactly dim rays");
        if (!std::is_sorted(cone.rays.begin(), cone.rays.end()))
            throw std::invalid_argument("cone ray indices must be sorted: " + join_indices(cone.rays));
        for (size_t i = 0; i + 1 < cone.rays.size(); ++i)
            if (cone.rays[i] == cone.rays[i + 1])
                throw std::invalid_argument("cone has repeated ray: " + join_indices(cone.rays));
        for (int idx : cone.rays)
            if (idx < 0 || idx >= static_cast<int>(rays.size()))
                throw std::invalid_argument("cone ray index out of range: " + join_indices(cone.rays));
    }
    Fan f;
    f.dim = dim;
    f.rays = std::move(rays);
    f.max_cones = std::move(max_cones);
    return f;
}

FanPtr share(Fan fan) { return std::make_shared<const Fan>(std::move(fan)); }

namespace {

// Facet key -> indices of the maximal cones containing it.
std::map<std::vector<int>, std::vector<int>> facet_incidence(const Fan& fan) {
    std::map<std::vector<int>, std::vector<int>> inc;
    for (size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
        const std::vector<int>& rays = fan.max_cones[ci].rays;
        for (size_t drop = 0; drop < rays.size(); ++drop) {
            std::vector<int> facet;
            for (size_t k = 0; k < rays.size(); ++k)
                if (k != drop) facet.push_back(rays[k]);
            inc[facet].push_back(static_cast<int>(ci));
        }
    }
    return inc;
}

}  // namespace

ValidationReport validate_fan(const Fan& fan) {
    ValidationReport rep;
    rep.smooth = true;

    for (size_t i = 0; i < fan.rays.size(); ++i) {
        if (!(primitive(fan.rays[i]) == fan.rays[i])) {
            rep.failures.push_back("ray " + std::to_string(i) + " is not primitive");
        }
    }

    std::vector<bool> used(fan.rays.size(), false);
    for (const Cone& cone : fan.max_cones)
        for (int idx : cone.rays) used[idx] = true;
    for (size_t i = 0; i < fan.rays.size(); ++i)
        if (!used[i]) rep.failures.push_back("ray " + std::to_string(i) + " is not used by any maximal cone");

    for (const Cone& cone : fan.max_cones) {
        QMat m(fan.dim, QVec(fan.dim));
        for (int i = 0; i < fan.dim; ++i)
            for (int j = 0; j < fan.dim; ++j) m[i][j] = Rat(fan.rays[cone.rays[i]].c[j]);
        const Rat d = det(m);
        if (d != 1 && d != -1) {
            rep.smooth = false;
            rep.failures.push_back("maximal cone " + join_indices(cone.rays) +
                                   " has determinant " + rat_str(d) + " (not unimodular)");
        }
    }

    rep.complete = !fan.max_cones.empty();
    const auto inc = facet_incidence(fan);
    for (const auto& [facet, cones] : inc) {
        if (cones.size() != 2) {
            rep.complete = false;
            rep.failures.push_back("facet " + join_indices(facet) + " lies in " +
                                   std::to_string(cones.size()) + " maximal cones (want 2)");
        }
    }
    if (rep.complete && fan.max_cones.size() > 1) {
        // Adjacency across shared facets must connect all maximal cones.
        std::vector<int> comp(fan.max_cones.size(), -1);
        std::vector<int> stack{0};
        comp[0] = 0;
        std::multimap<int, int> nbr;
        for (const auto& [facet, cones] : inc) {
            nbr.insert({cones[0], cones[1]});
            nbr.insert({cones[1], cones[0]});
        }
        while (!stack.empty()) {
            const int c = stack.back();
            stack.pop_back();
            auto [lo, hi] = nbr.equal_range(c);
            for (auto it = lo; it != hi; ++it) {
                if (comp[it->second] < 0) {
                    comp[it->second] = 0;
                    stack.push_back(it->second);
                }
            }
        }
        for (int c : comp) {
            if (c < 0) {
                rep.complete = false;
                rep.failures.push_back("maximal cone adjacency graph is disconnected");
                break;
            }
        }
    }
    return rep;
}

void require_valid(const Fan& fan) {
    const ValidationReport rep = validate_fan(fan);
    if (rep.ok()) return;
    std::string msg = "fan is not smooth and complete:";
    for (const std::string& f : rep.failures) msg += "\n  " + f;
    if (rep.failures.empty()) msg += " validation failed";
    throw std::invalid_argument(msg);
}

Fan projective_space(int n) {
    if (n < 1) throw std::invalid_argument("projective space needs dimension >= 1");
    std::vector<NVector> rays;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0));
        e[i] = 1;
        rays.emplace_back(std::move(e));
    }
    std::vector<Int> last(n, Int(-1));
    rays.emplace_back(std::move(last));
    // Maximal cones: all n-subsets of the n+1 rays.
    std::vector<Cone> cones;
    for (int skip = n; skip >= 0; --skip) {
        std::vector<int> idx;
        for (int i = 0; i <= n; ++i)
            if (i != skip) idx.push_back(i);
        cones.emplace_back(std::move(idx));
    }
    return Fan::make(n, std::move(rays), std::move(cones));
}

Fan product_p1_p1() {
    std::vector<NVector> rays = {NVector{Int(1), Int(0)}, NVector{Int(-1), Int(0)},
                                 NVector{Int(0), Int(1)}, NVector{Int(0), Int(-1)}};
    std::vector<Cone> cones = {Cone{0, 2}, Cone{1, 2}, Cone{1, 3}, Cone{0, 3}};
    return Fan::make(2, std::move(rays), std::move(cones));
}

Fan hirzebruch(const Int& r) {
    if (r < 0) throw std::invalid_argument("hirzebruch parameter must be nonnegative");
    std::vector<NVector> rays = {NVector{Int(-1), r}, NVector{Int(0), Int(1)},
                                 NVector{Int(1), Int(0)}, NVector{Int(0), Int(-1)}};
    std::vector<Cone> cones = {Cone{0, 1}, Cone{1, 2}, Cone{2, 3}, Cone{0, 3}};
    return Fan::make(2, std::move(rays), std::move(cones));
}

Fan builtin_fan(const std::string& selector) {
    if (selector == "P1xP1") return product_p1_p1();
    if (selector.rfind("Hirzebruch:", 0) == 0) {
        const std::string arg = selector.substr(11);
        if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad Hirzebruch parameter in selector '" + selector + "'");
        return hirzebruch(Int(arg));
    }
    if (selector.size() >= 2 && selector[0] == 'P' &&
        selector.find_first_not_of("0123456789", 1) == std::string::npos) {
        const int n = std::stoi(selector.substr(1));
        return projective_space(n);
    }
    throw std::invalid_argument("unknown builtin fan selector '" + selector + "'");
}

std::vector<Wall> walls(const Fan& fan) {
    const ValidationReport rep = validate_fan(fan);
    if (!rep.complete) throw std::invalid_argument("walls are only defined for complete fans");
    std::vector<Wall> out;
    for (const auto& [facet, cones] : facet_incidence(fan)) {
        Wall w;
        w.facet = facet;
        w.cone_a = cones[0];
        w.cone_b = cones[1];
        out.push_back(std::move(w));
    }
    return out;
}

bool cone_contains(const Fan& fan, const Cone& cone, const std::vector<Rat>& v) {
    const int n = fan.dim;
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("direction has wrong dimension");
    QMat A(n, QVec(cone.rays.size()));
    for (int i = 0; i < n; ++i)
        for (size_t j = 0; j < cone.rays.size(); ++j) A[i][j] = Rat(fan.rays[cone.rays[j]].c[i]);
    const auto lambda = solve_unique(A, v);
    if (!lambda) return false;
    for (const Rat& l : *lambda)
        if (l < 0) return false;
    return true;
}

}  // namespace hartoric
