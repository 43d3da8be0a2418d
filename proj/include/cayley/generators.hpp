#pragma once

// Generator matrices and named generator sets.
//
// The production hash uses the triple
//   A = [[1,2],[0,1]], B = [[1,0],[2,1]], C = [[2,1],[1,1]],
// all with determinant 1. Other presets (Zemor's X/Y pair, the A(k)/B(m)
// families) exist for growth and freeness experiments only.

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cayley/mat2.hpp"

namespace cayley {

inline Mat2Z gen_A() { return {1, 2, 0, 1}; }
inline Mat2Z gen_B() { return {1, 0, 2, 1}; }
inline Mat2Z gen_C() { return {2, 1, 1, 1}; }

// A(k) = [[1,k],[0,1]], B(m) = [[1,0],[m,1]]
inline Mat2Z gen_Ak(long k) { return {1, Int(k), 0, 1}; }
inline Mat2Z gen_Bm(long m) { return {1, 0, Int(m), 1}; }

struct GeneratorSet {
    std::string name;
    std::vector<std::pair<char, Mat2Z>> members;

    GeneratorSet(std::string set_name,
                 std::vector<std::pair<char, Mat2Z>> gens)
        : name(std::move(set_name)), members(std::move(gens)) {
        for (const auto& [label, m] : members) {
            Int det = m.det();
            if (det != 1 && det != -1)
                throw std::invalid_argument("generator " + std::string(1, label) +
                                            " in set " + name +
                                            " has determinant != +-1");
        }
    }

    const Mat2Z& matrix(char label) const {
        for (const auto& [l, m] : members)
            if (l == label) return m;
        throw std::invalid_argument("unknown generator label " +
                                    std::string(1, label));
    }

    std::size_t size() const { return members.size(); }
};

inline GeneratorSet cookie_set() {
    return {"cookie-ABC", {{'A', gen_A()}, {'B', gen_B()}, {'C', gen_C()}}};
}

inline GeneratorSet a2b2_set() {
    return {"A2-B2", {{'A', gen_Ak(2)}, {'B', gen_Bm(2)}}};
}

inline GeneratorSet a2bm2_set() {
    return {"A2-Bm2", {{'A', gen_Ak(2)}, {'B', gen_Bm(-2)}}};
}

inline GeneratorSet a1b1_set() {
    return {"A1-B1", {{'A', gen_Ak(1)}, {'B', gen_Bm(1)}}};
}

inline GeneratorSet xy_set() {
    return {"X-Y", {{'X', gen_Ak(1)}, {'Y', gen_Bm(1)}}};
}

inline GeneratorSet set_by_name(const std::string& name) {
    if (name == "cookie-ABC") return cookie_set();
    if (name == "A2-B2") return a2b2_set();
    if (name == "A2-Bm2") return a2bm2_set();
    if (name == "A1-B1") return a1b1_set();
    if (name == "X-Y") return xy_set();
    throw std::invalid_argument("unknown generator set: " + name);
}

// Exact integer inverse of a determinant +-1 matrix (adjugate over det).
inline Mat2Z mat_inverse_unimodular(const Mat2Z& m) {
    Int det = m.det();
    if (det == 1) return {m.d, -m.b, -m.c, m.a};
    if (det == -1) return {-m.d, m.b, m.c, -m.a};
    throw std::invalid_argument("matrix is not unimodular");
}

inline Mat2Z generator_inverse(char label, const GeneratorSet& set) {
    return mat_inverse_unimodular(set.matrix(label));
}

namespace detail {
// x + y mod p with a conditional correction; counted as one addition.
inline void add_mod(Int& out, const Int& x, const Int& y, const Int& p,
                    OpCounter& counter) {
    out = x + y;
    if (out >= p) out -= p;
    ++counter.additions;
}
}  // namespace detail

// Right-multiplication of a mod-p state by one of the recommended
// generators A, B, C, using additions only (each generator has one entry
// equal to 2 and the rest 0 or 1, and 2x = x + x). Reusing the sum a+b
// makes each call cost 4 counted additions, within the contract's bound
// of 5. The multiplication counter is never touched.
inline Mat2Z mul_by_generator(const Mat2Z& state, char gen, const Int& p,
                              OpCounter& counter) {
    using detail::add_mod;
    Mat2Z r;
    Int t;
    switch (gen) {
        case 'A':
            // W*A = [[a, 2a+b],[c, 2c+d]]
            r.a = state.a;
            add_mod(t, state.a, state.a, p, counter);
            add_mod(r.b, t, state.b, p, counter);
            r.c = state.c;
            add_mod(t, state.c, state.c, p, counter);
            add_mod(r.d, t, state.d, p, counter);
            return r;
        case 'B':
            // W*B = [[a+2b, b],[c+2d, d]]
            r.b = state.b;
            add_mod(t, state.b, state.b, p, counter);
            add_mod(r.a, t, state.a, p, counter);
            r.d = state.d;
            add_mod(t, state.d, state.d, p, counter);
            add_mod(r.c, t, state.c, p, counter);
            return r;
        case 'C':
            // W*C = [[2a+b, a+b],[2c+d, c+d]]
            add_mod(r.b, state.a, state.b, p, counter);
            add_mod(r.a, state.a, r.b, p, counter);
            add_mod(r.d, state.c, state.d, p, counter);
            add_mod(r.c, state.c, r.d, p, counter);
            return r;
        default:
            throw std::invalid_argument("unknown generator label " +
                                        std::string(1, gen));
    }
}

}  // namespace cayley
