#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hartoric/numeric.hpp"

namespace hartoric {

// Lattice vectors carry a side tag.  N holds ray generators (one-parameter
// subgroups), M holds monomial exponents (characters).  Keeping them as
// distinct types makes it impossible to pair two vectors from the same side.
struct NVector {
    std::vector<Int> c;

    NVector() = default;
    explicit NVector(std::vector<Int> coords) : c(std::move(coords)) {}
    NVector(std::initializer_list<Int> coords) : c(coords) {}

    int dim() const { return static_cast<int>(c.size()); }
    bool operator==(const NVector& o) const { return c == o.c; }
    bool operator<(const NVector& o) const { return c < o.c; }
};

struct MVector {
    std::vector<Int> c;

    MVector() = default;
    explicit MVector(std::vector<Int> coords) : c(std::move(coords)) {}
    MVector(std::initializer_list<Int> coords) : c(coords) {}

    int dim() const { return static_cast<int>(c.size()); }
    bool operator==(const MVector& o) const { return c == o.c; }
    bool operator<(const MVector& o) const { return c < o.c; }
};

MVector operator+(const MVector& a, const MVector& b);
MVector operator-(const MVector& a, const MVector& b);
MVector operator-(const MVector& a);

// The canonical dual pairing <m, u>.  Dimensions must agree.
Int pairing(const MVector& m, const NVector& u);

// v divided by the gcd of its entries; direction is preserved.
// Throws std::invalid_argument on the zero vector.
NVector primitive(const NVector& v);

// A cone is identified by the sorted list of its ray indices.
struct Cone {
    std::vector<int> rays;

    Cone() = default;
    Cone(std::initializer_list<int> r) : rays(r) {}
    explicit Cone(std::vector<int> r) : rays(std::move(r)) {}

    bool operator==(const Cone& o) const { return rays == o.rays; }
};

// A rational fan given by its rays and maximal cones.  Construction via
// make() checks structural shape only (index ranges, sizes, duplicates);
// smoothness and completeness are the business of validate_fan.
struct Fan {
    int dim = 0;
    std::vector<NVector> rays;
    std::vector<Cone> max_cones;

    static Fan make(int dim, std::vector<NVector> rays, std::vector<Cone> max_cones);

    bool operator==(const Fan& o) const {
        return dim == o.dim && rays == o.rays && max_cones == o.max_cones;
    }
};

// Fans are shared immutably between divisors, rings, and reports.
using FanPtr = std::shared_ptr<const Fan>;

FanPtr share(Fan fan);

struct ValidationReport {
    bool smooth = false;
    bool complete = false;
    std::vector<std::string> failures;

    bool ok() const { return smooth && complete && failures.empty(); }
};

// Checks primitivity of rays, ray coverage, unimodularity of every maximal
// cone, and completeness (facet pairing plus connected adjacency).
ValidationReport validate_fan(const Fan& fan);

// Throws std::invalid_argument listing every validation failure.
void require_valid(const Fan& fan);

// Builtin fans.
Fan projective_space(int n);
Fan product_p1_p1();
Fan hirzebruch(const Int& r);  // r >= 0

// Selector strings: "P1", "P2", ... "P9", "P1xP1", "Hirzebruch:r".
Fan builtin_fan(const std::string& selector);

// A wall is a codimension-one cone: a facet shared by exactly two maximal
// cones.  Walls index the torus-invariant curves used by nef tests.
struct Wall {
    std::vector<int> facet;  // sorted ray indices, size dim-1
    int cone_a = 0;
    int cone_b = 0;
};

// All walls of a complete simplicial fan; throws if the fan is not complete.
std::vector<Wall> walls(const Fan& fan);

// True when v lies in the cone spanned by the given maximal cone's rays,
// i.e. has nonnegative coordinates in the cone's generator basis.
bool cone_contains(const Fan& fan, const Cone& cone, const std::vector<Rat>& v);

}  // namespace hartoric
