#pragma once

// 2x2 matrices over Z (arbitrary precision) and over Z/pZ.
//
// Everything in this library is a product of a handful of small integer
// matrices; Mat2 is the universal carrier. Entries over Z are GMP big
// integers since products of length ~1000 reach ~1000-bit entries.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cayley {

using Int = mpz_class;

// Ring-operation tally for a hashing session. A modular addition
// (add plus the conditional correction) counts as one addition.
struct OpCounter {
    std::uint64_t additions = 0;
    std::uint64_t multiplications = 0;
};

template <typename T>
struct Mat2 {
    T a{}, b{}, c{}, d{};  // row-major [[a,b],[c,d]]

    bool operator==(const Mat2&) const = default;

    static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

    T det() const { return a * d - b * c; }
};

using Mat2Z = Mat2<Int>;

template <typename T>
Mat2<T> mat_mul(const Mat2<T>& lhs, const Mat2<T>& rhs) {
    return {lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
            lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d};
}

// Canonicalize an integer matrix to residues in [0, p).
inline Mat2Z reduce_mod(const Mat2Z& m, const Int& p) {
    auto red = [&p](const Int& x) {
        Int r = x % p;
        if (r < 0) r += p;
        return r;
    };
    return {red(m.a), red(m.b), red(m.c), red(m.d)};
}

inline Mat2Z mat_mul_mod(const Mat2Z& lhs, const Mat2Z& rhs, const Int& p) {
    return reduce_mod(mat_mul(lhs, rhs), p);
}

inline Int max_abs_entry(const Mat2Z& m) {
    Int r = abs(m.a);
    for (const Int* e : {&m.b, &m.c, &m.d}) {
        Int v = abs(*e);
        if (v > r) r = v;
    }
    return r;
}

inline Int entry_abs_sum(const Mat2Z& m) {
    return abs(m.a) + abs(m.b) + abs(m.c) + abs(m.d);
}

inline bool all_entries_nonnegative(const Mat2Z& m) {
    return m.a >= 0 && m.b >= 0 && m.c >= 0 && m.d >= 0;
}

inline std::string to_string(const Mat2Z& m) {
    return "[[" + m.a.get_str() + "," + m.b.get_str() + "],[" + m.c.get_str() +
           "," + m.d.get_str() + "]]";
}

// Unique key for collision maps (entries separated by a char that cannot
// appear in a decimal representation).
inline std::string entry_key(const Mat2Z& m) {
    return m.a.get_str() + '|' + m.b.get_str() + '|' + m.c.get_str() + '|' +
           m.d.get_str();
}

}  // namespace cayley
