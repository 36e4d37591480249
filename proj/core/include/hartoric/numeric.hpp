#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hartoric {

// All lattice and ring arithmetic is exact.  Determinants and intersection
// pairings can exceed 64 bits long before inputs look suspicious, so the
// whole library runs on arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when two internal computation routes that must agree do not.
// Seeing this exception always means an implementation bug, never bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// Exact conversion; throws if q has a nontrivial denominator.
inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw internal_error("expected integral rational, got " + q.str());
    return num(q);
}

// Renders "p" for integers and "p/q" otherwise.  Used for all human- and
// machine-readable output; the library never prints floating point.
inline std::string rat_str(const Rat& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// Largest integer <= q.  cpp_rational keeps denominators positive, so only
// the numerator's sign needs care.
inline Int rat_floor(const Rat& q) {
    const Int n = num(q), d = den(q);
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

}  // namespace hartoric
