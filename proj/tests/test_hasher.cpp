#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "cayley/bitio.hpp"
#include "cayley/hasher.hpp"
#include "cayley/params.hpp"
#include "cayley/rng.hpp"

using namespace cayley;

namespace {

const HashParams& p256() {
    static const HashParams params = HashParams::preset_by_name("paper-256");
    return params;
}

Digest raw_hash(const std::string& bits, const HashParams& params) {
    return hash_bits_raw(parse_bit_string(bits), params);
}

}  // namespace

TEST_CASE("hash params validation") {
    CHECK_THROWS_AS(HashParams::create(Int(13)), std::invalid_argument);
    CHECK_THROWS_AS(HashParams::create(Int(100)), std::invalid_argument);
    CHECK(HashParams::create(Int(1009)).p == 1009);
    CHECK(p256().p_bits() == 256);
    CHECK(HashParams::preset_by_name("paper-512").p_bits() == 512);
    CHECK(is_probable_prime(Int(kPaperPrime256)));
    CHECK(is_probable_prime(Int(kPaperPrime512)));
}

TEST_CASE("cookie generator sequences") {
    CHECK(generator_sequence(parse_bit_string("10011110001")) == "BAABBBCAAAB");
    CHECK(generator_sequence(parse_bit_string("111111")) == "BBBCCC");
    // cookie mode re-arms after a reset
    CHECK(generator_sequence(parse_bit_string("1110001110")) == "BBBAAABBBA");
    // one reset zero is not enough to leave cookie mode
    CHECK(generator_sequence(parse_bit_string("11100011101")) == "BBBAAABBBAC");
}

TEST_CASE("fresh hasher") {
    CookieHasher hasher(HashParams::create(Int(1009)));
    CHECK(hasher.mode() == HashMode::kNormal);
    Digest d = hasher.finalize_raw();
    CHECK(d.a == 1);
    CHECK(d.b == 0);
    CHECK(d.c == 0);
    CHECK(d.d == 1);
}

TEST_CASE("raw hash worked examples") {
    Digest d0 = raw_hash("0", p256());
    CHECK(d0.matrix() == Mat2Z{1, 2, 0, 1});
    CHECK(raw_hash("10", p256()).matrix() == Mat2Z{1, 2, 2, 5});
    CHECK(raw_hash("1111", p256()).matrix() == Mat2Z{2, 1, 13, 7});
}

TEST_CASE("padded finalize") {
    CookieHasher empty(p256());
    CHECK(empty.finalize_padded().matrix() == Mat2Z{1, 6, 0, 1});  // A^3

    CookieHasher one(p256());
    one.absorb_bit(1);
    CHECK(one.finalize_padded().matrix() == Mat2Z{1, 6, 2, 13});  // B * A^3
    CHECK(one.mode() == HashMode::kNormal);

    // padded(u) = raw(u ++ 000)
    auto rng = make_rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        auto u = random_bits(rng, rng() % 100);
        CookieHasher h(p256());
        h.absorb_bits(u);
        auto padded = u;
        padded.insert(padded.end(), {0, 0, 0});
        CHECK(h.finalize_padded() == hash_bits_raw(padded, p256()));
    }
}

TEST_CASE("byte absorption is MSB-first") {
    CookieHasher h(p256());
    std::uint8_t zero = 0x00;
    h.absorb_bytes(&zero, 1);
    CHECK(h.finalize_raw() == raw_hash("00000000", p256()));

    CookieHasher h97(p256());
    std::uint8_t x97 = 0x97;  // 10010111
    h97.absorb_bytes(&x97, 1);
    CHECK(h97.finalize_raw() == raw_hash("10010111", p256()));
    CHECK(h97.mode() == HashMode::kCookie);

    CookieHasher fresh(p256());
    fresh.absorb_bytes(nullptr, 0);
    CHECK(fresh.finalize_raw().matrix() == Mat2Z::identity());
}

TEST_CASE("chunking does not matter") {
    auto rng = make_rng(5);
    std::vector<std::uint8_t> bytes(64);
    for (auto& b : bytes) b = std::uint8_t(rng());

    CookieHasher whole(p256());
    whole.absorb_bytes(bytes.data(), bytes.size());

    CookieHasher bitwise(p256());
    bitwise.absorb_bits(bytes_to_bits(bytes));

    CookieHasher split(p256());
    split.absorb_bytes(bytes.data(), 17);
    split.absorb_bytes(bytes.data() + 17, bytes.size() - 17);

    CHECK(whole.finalize_raw() == bitwise.finalize_raw());
    CHECK(whole.finalize_raw() == split.finalize_raw());
}

TEST_CASE("streaming product equals the fold oracle") {
    auto params = HashParams::create(Int(1009));
    auto rng = make_rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        auto bits = random_bits(rng, 1 + rng() % (1 << 14));
        Mat2Z fold = Mat2Z::identity();
        for (char gen : generator_sequence(bits))
            fold = mat_mul_mod(fold,
                               gen == 'A'   ? params.A
                               : gen == 'B' ? params.B
                                            : params.C,
                               params.p);
        CHECK(hash_bits_raw(bits, params).matrix() == fold);
    }
}

TEST_CASE("homomorphic law with padding") {
    // the worked example pair
    auto u = parse_bit_string("10011110001");
    auto v = parse_bit_string("101");
    auto glued = u;
    glued.insert(glued.end(), {0, 0, 0});
    glued.insert(glued.end(), v.begin(), v.end());
    CHECK(hash_bits_padded(glued, p256()) ==
          combine(hash_bits_padded(u, p256()), hash_bits_padded(v, p256())));

    CHECK(combine(Digest{1, 0, 0, 1, p256().p},
                  hash_bits_padded(u, p256())) ==
          hash_bits_padded(u, p256()));

    auto rng = make_rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_bits(rng, rng() % 200);
        auto b = random_bits(rng, rng() % 200);
        auto ab = a;
        ab.insert(ab.end(), {0, 0, 0});
        ab.insert(ab.end(), b.begin(), b.end());
        CHECK(hash_bits_padded(ab, p256()) ==
              combine(hash_bits_padded(a, p256()),
                      hash_bits_padded(b, p256())));
    }
}

TEST_CASE("combine rejects mismatched moduli") {
    Digest d1{1, 0, 0, 1, Int(1009)};
    Digest d2{1, 0, 0, 1, Int(100003)};
    CHECK_THROWS_AS(combine(d1, d2), std::invalid_argument);
}

TEST_CASE("post-padding state is observationally fresh") {
    auto rng = make_rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto u = random_bits(rng, rng() % 64);
        auto v = random_bits(rng, rng() % 64);
        CookieHasher resumed(p256());
        resumed.absorb_bits(u);
        resumed.finalize_padded();
        CHECK(resumed.mode() == HashMode::kNormal);

        auto prefix = u;
        prefix.insert(prefix.end(), {0, 0, 0});
        auto glued = prefix;
        glued.insert(glued.end(), v.begin(), v.end());
        std::string continued =
            generator_sequence(glued).substr(prefix.size());
        CHECK(continued == generator_sequence(v));
    }
}

TEST_CASE("digest serialization") {
    Digest identity{1, 0, 0, 1, p256().p};
    auto bits = identity.to_bits();
    REQUIRE(bits.size() == 1024);
    for (std::size_t i = 0; i < 1024; ++i) {
        bool expect_one = (i == 255) || (i == 1023);
        CHECK(bits[i] == (expect_one ? 1 : 0));
    }

    auto rng = make_rng(42);
    auto d = hash_bits_padded(random_bits(rng, 500), p256());
    CHECK(Digest::from_hex(d.to_hex(), p256()) == d);

    // uppercase-insensitive on parse
    std::string hex = d.to_hex();
    for (char& ch : hex) ch = std::toupper(static_cast<unsigned char>(ch));
    CHECK(Digest::from_hex(hex, p256()) == d);

    auto params512 = HashParams::preset_by_name("paper-512");
    CHECK(hash_bits_padded({1, 0, 1}, params512).to_bits().size() == 2048);

    CHECK_THROWS_AS(Digest::from_hex("ff", p256()), std::invalid_argument);
}

TEST_CASE("h1 baseline") {
    CHECK(h1_hash(parse_bit_string("01"), p256()).matrix() == Mat2Z{5, 2, 2, 1});
    CHECK(h1_hash({}, p256()).matrix() == Mat2Z::identity());

    // 111-free strings hash identically under both functions; in general
    // the hashes agree exactly when the cookie never fires (no C emitted)
    auto rng = make_rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto bits = random_bits(rng, 1 + rng() % 40);
        bool has_111 =
            format_bit_string(bits).find("111") != std::string::npos;
        bool emits_c =
            generator_sequence(bits).find('C') != std::string::npos;
        bool equal = h1_hash(bits, p256()) == hash_bits_raw(bits, p256());
        if (!has_111) CHECK(equal);
        // short products over a 256-bit p are collision-free, so equality
        // is exactly "no C in the generator sequence"
        CHECK(equal == !emits_c);
    }
}

TEST_CASE("operation counters") {
    auto rng = make_rng(55);
    std::size_t n = 4096;
    CookieHasher hasher(p256());
    hasher.absorb_bits(random_bits(rng, n));
    CHECK(hasher.counters().multiplications == 0);
    CHECK(hasher.counters().additions <= 5 * (n - 1));
    CHECK(hasher.counters().additions == 4 * (n - 1));
}

TEST_CASE("bit string parsing") {
    CHECK(parse_bit_string(" 10 \n1\t") == std::vector<std::uint8_t>{1, 0, 1});
    CHECK(parse_bit_string("").empty());
    CHECK_THROWS_AS(parse_bit_string("10x1"), std::invalid_argument);
}
