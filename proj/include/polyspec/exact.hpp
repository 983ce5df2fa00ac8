#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "polyspec/errors.hpp"

namespace polyspec {

// All arithmetic in this library is exact; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline Int rat_floor(const Rat& r) {
    Int q = rat_num(r) / rat_den(r);
    if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

// Fractional part, always in [0, 1).
inline Rat rat_frac(const Rat& r) { return r - Rat(rat_floor(r)); }

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    return Rat(num, den);
}

inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
    check_internal(a.size() == b.size(), "dot: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    check_internal(a.size() == b.size(), "dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace polyspec
