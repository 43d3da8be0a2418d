#pragma once

// Hash parameters: the prime modulus and the reduced generator triple.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cayley/generators.hpp"
#include "cayley/mat2.hpp"
#include "cayley/rng.hpp"

namespace cayley {

// Published suggested moduli.
inline const char* kPaperPrime256 =
    "11213019353385680997044300082282941457293378"
    "0556534369189742044710202716867171";
inline const char* kPaperPrime512 =
    "125967099140123813315752220780255508336665456536865562994"
    "12073058759112539196792509169699422775197821869177859263195"
    "184957153059906758380302238329723774073";

inline bool is_probable_prime(const Int& n, int rounds = 64) {
    return mpz_probab_prime_p(n.get_mpz_t(), rounds) != 0;
}

struct HashParams {
    Int p;
    std::string preset;  // empty for ad-hoc primes
    Mat2Z A, B, C;       // cookie generators reduced mod p

    // p must exceed 13 so the small-entry generators stay distinct and
    // nonsingular mod p.
    static HashParams create(Int modulus, std::string preset_name = "",
                             bool assume_prime = false) {
        if (modulus <= 13)
            throw std::invalid_argument("modulus must be a prime > 13");
        if (!assume_prime && !is_probable_prime(modulus))
            throw std::invalid_argument("modulus is not prime");
        HashParams params;
        params.p = std::move(modulus);
        params.preset = std::move(preset_name);
        params.A = reduce_mod(gen_A(), params.p);
        params.B = reduce_mod(gen_B(), params.p);
        params.C = reduce_mod(gen_C(), params.p);
        return params;
    }

    static HashParams preset_by_name(const std::string& name) {
        if (name == "paper-256")
            return create(Int(kPaperPrime256), name, /*assume_prime=*/true);
        if (name == "paper-512")
            return create(Int(kPaperPrime512), name, /*assume_prime=*/true);
        throw std::invalid_argument("unknown preset: " + name);
    }

    std::size_t p_bits() const { return mpz_sizeinbase(p.get_mpz_t(), 2); }

    bool operator==(const HashParams& o) const { return p == o.p; }
};

// Random probable prime with exactly `bits` bits, reproducible from the seed.
inline Int generate_prime(unsigned bits, std::uint64_t seed,
                          int rounds = 64) {
    if (bits < 5) throw std::invalid_argument("need at least 5 bits");
    auto rng = make_rng(seed);
    while (true) {
        Int candidate = 0;
        for (unsigned i = 0; i < bits; i += 64) {
            candidate <<= 64;
            candidate += Int(static_cast<unsigned long>(rng()));
        }
        // trim to width, force top and low bit
        Int mask = (Int(1) << bits) - 1;
        candidate &= mask;
        mpz_setbit(candidate.get_mpz_t(), bits - 1);
        mpz_setbit(candidate.get_mpz_t(), 0);
        if (mpz_probab_prime_p(candidate.get_mpz_t(), rounds)) return candidate;
    }
}

}  // namespace cayley
