#pragma once

// The cookie hash: a streaming bit consumer over F_p.
//
// Bits are consumed left to right and each bit right-multiplies the
// running product: 0 maps to A, 1 maps to B — until three consecutive
// 1-bits arm cookie mode, after which further 1-bits map to C until three
// consecutive 0-bits disarm it. The third 1 of the trigger is itself
// hashed with B (the worked trace of 10011110001 is B A A B B B C A A A B).
//
// finalize_padded appends exactly three 0-bits, which resets the mode and
// makes concatenation homomorphic:
//   padded(u ++ 000 ++ v) = padded(u) * padded(v).

#include <array>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/generators.hpp"
#include "cayley/mat2.hpp"
#include "cayley/params.hpp"

namespace cayley {

enum class HashMode : std::uint8_t { kNormal, kCookie };

// The generator-selection automaton, independent of any arithmetic.
struct CookieAutomaton {
    HashMode mode = HashMode::kNormal;
    std::uint32_t ones_run = 0;
    std::uint32_t zeros_run = 0;

    // Consumes one bit, returns the generator label it hashes to.
    char step(int bit) {
        if (bit) {
            zeros_run = 0;
            ++ones_run;
            char gen = (mode == HashMode::kCookie) ? 'C' : 'B';
            if (mode == HashMode::kNormal && ones_run >= 3)
                mode = HashMode::kCookie;
            return gen;
        }
        ones_run = 0;
        ++zeros_run;
        if (mode == HashMode::kCookie && zeros_run >= 3)
            mode = HashMode::kNormal;
        return 'A';
    }
};

// Letter sequence a bit string hashes to, e.g. "10011110001" -> BAABBBCAAAB.
inline std::string generator_sequence(const std::vector<std::uint8_t>& bits) {
    CookieAutomaton automaton;
    std::string letters;
    letters.reserve(bits.size());
    for (auto bit : bits) letters.push_back(automaton.step(bit));
    return letters;
}

// Cookie-rule product over Z (no reduction); the pre-reduction hash used
// by the freeness and growth experiments.
inline Mat2Z integer_hash(const std::vector<std::uint8_t>& bits) {
    CookieAutomaton automaton;
    Mat2Z product = Mat2Z::identity();
    for (auto bit : bits) {
        switch (automaton.step(bit)) {
            case 'A': product = mat_mul(product, gen_A()); break;
            case 'B': product = mat_mul(product, gen_B()); break;
            default:  product = mat_mul(product, gen_C()); break;
        }
    }
    return product;
}

struct Digest {
    Int a, b, c, d;  // residues in [0, p)
    Int p;

    bool operator==(const Digest&) const = default;

    Mat2Z matrix() const { return {a, b, c, d}; }

    std::size_t field_bits() const { return mpz_sizeinbase(p.get_mpz_t(), 2); }
    std::size_t total_bits() const { return 4 * field_bits(); }

    // Row-major entries, each a fixed-width big-endian field of
    // bit-length(p) bits. A 256-bit p gives a 1024-bit digest.
    std::vector<std::uint8_t> to_bits() const {
        std::size_t width = field_bits();
        std::vector<std::uint8_t> bits;
        bits.reserve(4 * width);
        for (const Int* e : {&a, &b, &c, &d})
            for (std::size_t i = width; i-- > 0;)
                bits.push_back(static_cast<std::uint8_t>(
                    mpz_tstbit(e->get_mpz_t(), i)));
        return bits;
    }

    // Same bits in 4-bit groups; length is always a multiple of 4.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        auto bits = to_bits();
        std::string hex;
        hex.reserve(bits.size() / 4);
        for (std::size_t i = 0; i + 3 < bits.size(); i += 4) {
            int v = bits[i] << 3 | bits[i + 1] << 2 | bits[i + 2] << 1 |
                    bits[i + 3];
            hex.push_back(digits[v]);
        }
        return hex;
    }

    static Digest from_hex(const std::string& hex, const HashParams& params) {
        std::size_t width = mpz_sizeinbase(params.p.get_mpz_t(), 2);
        if (hex.size() * 4 != 4 * width)
            throw std::invalid_argument("digest hex has wrong width for modulus");
        Int packed = 0;
        for (char ch : hex) {
            int v;
            if (ch >= '0' && ch <= '9') v = ch - '0';
            else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
            else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
            else throw std::invalid_argument("invalid hex digit in digest");
            packed = (packed << 4) + v;
        }
        Int mask = (Int(1) << width) - 1;
        Digest digest;
        digest.p = params.p;
        digest.d = packed & mask;
        digest.c = (packed >> width) & mask;
        digest.b = (packed >> (2 * width)) & mask;
        digest.a = (packed >> (3 * width)) & mask;
        for (const Int* e : {&digest.a, &digest.b, &digest.c, &digest.d})
            if (*e >= params.p)
                throw std::invalid_argument("digest entry >= modulus");
        return digest;
    }
};

// H(uv) = H(u)H(v): entry-wise matrix product of the digests.
inline Digest combine(const Digest& d1, const Digest& d2) {
    if (d1.p != d2.p)
        throw std::invalid_argument("combine: digests use different moduli");
    Mat2Z m = mat_mul_mod(d1.matrix(), d2.matrix(), d1.p);
    return {m.a, m.b, m.c, m.d, d1.p};
}

class CookieHasher {
   public:
    explicit CookieHasher(HashParams params)
        : params_(std::move(params)), product_(Mat2Z::identity()) {}

    void absorb_bit(int bit) {
        char gen = automaton_.step(bit);
        if (bits_absorbed_ == 0) {
            // Seed the product with the first generator instead of
            // multiplying the identity; total cost is then 4(n-1) <= 5(n-1)
            // additions for n bits.
            product_ = generator_matrix(gen);
        } else {
            product_ = mul_by_generator(product_, gen, params_.p, counters_);
        }
        ++bits_absorbed_;
    }

    void absorb_bits(const std::vector<std::uint8_t>& bits) {
        for (auto bit : bits) absorb_bit(bit);
    }

    // MSB-first within each byte.
    void absorb_bytes(const std::uint8_t* data, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i)
            for (int k = 7; k >= 0; --k) absorb_bit((data[i] >> k) & 1);
    }

    Digest finalize_raw() const {
        return {product_.a, product_.b, product_.c, product_.d, params_.p};
    }

    // Appends the 000 pad; leaves the hasher in NORMAL mode so that any
    // continuation hashes like a fresh stream.
    Digest finalize_padded() {
        absorb_bit(0);
        absorb_bit(0);
        absorb_bit(0);
        return finalize_raw();
    }

    HashMode mode() const { return automaton_.mode; }
    std::uint64_t bits_absorbed() const { return bits_absorbed_; }
    const OpCounter& counters() const { return counters_; }
    const HashParams& params() const { return params_; }

   private:
    const Mat2Z& generator_matrix(char gen) const {
        switch (gen) {
            case 'A': return params_.A;
            case 'B': return params_.B;
            default: return params_.C;
        }
    }

    HashParams params_;
    CookieAutomaton automaton_;
    Mat2Z product_;
    std::uint64_t bits_absorbed_ = 0;
    OpCounter counters_;
};

inline Digest hash_bits_padded(const std::vector<std::uint8_t>& bits,
                               const HashParams& params) {
    CookieHasher hasher(params);
    hasher.absorb_bits(bits);
    return hasher.finalize_padded();
}

inline Digest hash_bits_raw(const std::vector<std::uint8_t>& bits,
                            const HashParams& params) {
    CookieHasher hasher(params);
    hasher.absorb_bits(bits);
    return hasher.finalize_raw();
}

// The 2-generator baseline H1: plain fold of A for 0 and B for 1, no
// cookie rule, no padding. Coincides with the raw cookie hash exactly on
// 111-free strings.
inline Digest h1_hash(const std::vector<std::uint8_t>& bits,
                      const HashParams& params) {
    Mat2Z product = Mat2Z::identity();
    for (auto bit : bits)
        product = mat_mul_mod(product, bit ? params.B : params.A, params.p);
    return {product.a, product.b, product.c, product.d, params.p};
}

inline Mat2Z h1_integer_hash(const std::vector<std::uint8_t>& bits) {
    Mat2Z product = Mat2Z::identity();
    for (auto bit : bits)
        product = mat_mul(product, bit ? gen_B() : gen_A());
    return product;
}

}  // namespace cayley
