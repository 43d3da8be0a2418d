#pragma once

// Exact-integer experiments on the generator semigroups: freeness at
// bounded length, maximal and generic entry growth, and the resulting
// collision-length (girth) lower bounds.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley/errors.hpp"
#include "cayley/generators.hpp"
#include "cayley/hasher.hpp"
#include "cayley/mat2.hpp"
#include "cayley/rng.hpp"

namespace cayley {

// Enumerations refuse to start if they would exceed this many matrix
// multiplications, unless the caller raises the budget.
inline constexpr std::uint64_t kDefaultEnumBudget = 100'000'000;

inline double log2_mpz(const Int& x) {
    signed long exp = 0;
    double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

// ---------------------------------------------------------------------
// Freeness

struct CollisionWitness {
    std::string word1, word2;  // distinct words with equal integer products
};

struct FreenessResult {
    bool free = true;
    int max_len = 0;
    std::uint64_t words_checked = 0;
    std::optional<CollisionWitness> witness;
};

namespace detail {

inline std::uint64_t words_up_to(std::size_t alphabet, int max_len) {
    std::uint64_t total = 0, level = 1;
    for (int n = 1; n <= max_len; ++n) {
        level *= alphabet;
        total += level;
    }
    return total;
}

}  // namespace detail

// Enumerates all nonempty words of length <= max_len over the set's
// labels; reports the first pair of distinct words with equal products.
inline FreenessResult freeness_check(
    const GeneratorSet& set, int max_len,
    std::uint64_t budget = kDefaultEnumBudget) {
    if (max_len > 30 || detail::words_up_to(set.size(), max_len) > budget)
        throw ResourceLimitError("freeness_check: enumeration exceeds budget");

    FreenessResult result;
    result.max_len = max_len;
    std::unordered_map<std::string, std::string> seen;
    seen.reserve(detail::words_up_to(set.size(), max_len));

    std::string word;
    auto dfs = [&](auto&& self, const Mat2Z& product, int depth) -> bool {
        if (depth > 0) {
            ++result.words_checked;
            auto [it, inserted] = seen.emplace(entry_key(product), word);
            if (!inserted) {
                result.free = false;
                result.witness = CollisionWitness{it->second, word};
                return true;
            }
        }
        if (depth == max_len) return false;
        for (const auto& [label, m] : set.members) {
            word.push_back(label);
            if (self(self, mat_mul(product, m), depth + 1)) return true;
            word.pop_back();
        }
        return false;
    };
    dfs(dfs, Mat2Z::identity(), 0);
    return result;
}

// ---------------------------------------------------------------------
// Maximal growth

struct MaxGrowthResult {
    Int max_entry;
    std::string word;  // lexicographically least maximizer
};

// Exact maximum of max_abs_entry over all length-n products of the set.
inline MaxGrowthResult exhaustive_max_growth(
    const GeneratorSet& set, int n,
    std::uint64_t budget = kDefaultEnumBudget) {
    std::uint64_t leaves = 1;
    for (int i = 0; i < n; ++i) {
        if (leaves > budget / set.size())
            throw ResourceLimitError(
                "exhaustive_max_growth: enumeration exceeds budget");
        leaves *= set.size();
    }

    MaxGrowthResult best{Int(-1), ""};
    std::string word;
    auto dfs = [&](auto&& self, const Mat2Z& product, int depth) -> void {
        if (depth == n) {
            Int entry = max_abs_entry(product);
            if (entry > best.max_entry) {  // strict: keeps the lex-least word
                best.max_entry = entry;
                best.word = word;
            }
            return;
        }
        for (const auto& [label, m] : set.members) {
            word.push_back(label);
            self(self, mat_mul(product, m), depth + 1);
            word.pop_back();
        }
    };
    dfs(dfs, Mat2Z::identity(), 0);
    return best;
}

// Largest entry of (A(2)B(2))^(n/2), the maximizer over all length-n words
// in A(2), B(2): e_0 = 1, e_1 = 2, e_n = 2 e_{n-1} + e_{n-2}
// (characteristic roots 1 +- sqrt(2), matching the known closed form).
inline Int exact_largest_entry_a2b2(int n) {
    if (n < 0 || n % 2 != 0)
        throw std::invalid_argument(
            "exact_largest_entry_a2b2: n must be even and >= 0");
    Int prev = 1, cur = 2;  // e_0, e_1
    if (n == 0) return prev;
    for (int i = 2; i <= n; ++i) {
        Int next = 2 * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Max |entry| of the integer cookie hash of the all-ones string of length
// n, i.e. of B^3 C^(n-3) once the cookie fires (n >= 4); shorter strings
// are plain products.
inline Int cookie_max_entry(int n) {
    if (n < 0) throw std::invalid_argument("cookie_max_entry: n >= 0");
    return max_abs_entry(integer_hash(std::vector<std::uint8_t>(n, 1)));
}

struct Proposition2Result {
    bool holds = true;
    int max_len = 0;
    std::optional<int> counterexample_len;
    std::optional<std::string> counterexample;  // a string beating all-ones
    // lengths n < 4 where some other string wins; no cookie can fire
    // there, so the fastest-growth claim does not apply
    std::vector<int> degenerate_lens;
};

// Checks that for every 4 <= n <= max_len the all-ones string attains the
// maximum entry of the integer cookie hash over all 2^n inputs (ties
// allowed). Lengths 1..3 are degenerate (the cookie cannot fire before
// the fourth bit) and are reported, not failed.
inline Proposition2Result proposition2_check(
    int max_len, std::uint64_t budget = kDefaultEnumBudget) {
    if (max_len > 62 || (std::uint64_t(1) << (max_len + 1)) > budget)
        throw ResourceLimitError(
            "proposition2_check: enumeration exceeds budget");

    Proposition2Result result;
    result.max_len = max_len;
    const Mat2Z gen_a = gen_A(), gen_b = gen_B(), gen_c = gen_C();

    std::vector<Int> best(max_len + 1, Int(-1));
    std::vector<std::string> best_word(max_len + 1);
    std::string word;
    auto dfs = [&](auto&& self, const Mat2Z& product, CookieAutomaton state,
                   int depth) -> void {
        if (depth > 0) {
            Int entry = max_abs_entry(product);
            if (entry > best[depth]) {
                best[depth] = entry;
                best_word[depth] = word;
            }
        }
        if (depth == max_len) return;
        for (int bit : {0, 1}) {
            CookieAutomaton next = state;
            char gen = next.step(bit);
            const Mat2Z& m = gen == 'A' ? gen_a : gen == 'B' ? gen_b : gen_c;
            word.push_back(bit ? '1' : '0');
            self(self, mat_mul(product, m), next, depth + 1);
            word.pop_back();
        }
    };
    dfs(dfs, Mat2Z::identity(), CookieAutomaton{}, 0);

    for (int n = 1; n <= max_len; ++n) {
        Int all_ones = cookie_max_entry(n);
        if (all_ones >= best[n]) continue;
        if (n < 4) {
            result.degenerate_lens.push_back(n);
        } else if (result.holds) {
            result.holds = false;
            result.counterexample_len = n;
            result.counterexample = best_word[n];
        }
    }
    return result;
}

// Max |entry| of (A(2) B(-2) B(-2) A(2))^(n/4), the experimentally
// observed maximizer for the A(2), B(-2) pair.
inline Int abba_growth_check(int n) {
    if (n <= 0 || n % 4 != 0)
        throw std::invalid_argument("abba_growth_check: n must be a positive "
                                    "multiple of 4");
    Mat2Z a = gen_Ak(2), b = gen_Bm(-2);
    Mat2Z abba = mat_mul(mat_mul(a, b), mat_mul(b, a));
    Mat2Z product = Mat2Z::identity();
    for (int i = 0; i < n / 4; ++i) product = mat_mul(product, abba);
    return max_abs_entry(product);
}

// ---------------------------------------------------------------------
// Generic (random-word) growth

struct GrowthReport {
    std::string set_name;
    std::string mode;  // "exhaustive-max" or "random"
    std::vector<int> lengths;
    std::vector<double> stat;  // max_entry_bits or mean_log2_per_letter
    double fitted_base = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

// Uniform random words of length n; reports the mean of log2(max entry)/n
// and the fitted growth base 2^mean. Trial i uses derive_seed(seed, i),
// so the result is independent of evaluation order.
inline GrowthReport random_growth(const GeneratorSet& set, int n,
                                  std::uint64_t trials, std::uint64_t seed) {
    double sum_log2_per_letter = 0.0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        auto rng = make_rng(derive_seed(seed, trial));
        Mat2Z product = Mat2Z::identity();
        for (int i = 0; i < n; ++i) {
            const auto& [label, m] =
                set.members[rng() % set.members.size()];
            product = mat_mul(product, m);
        }
        sum_log2_per_letter += log2_mpz(max_abs_entry(product)) / n;
    }
    GrowthReport report;
    report.set_name = set.name;
    report.mode = "random";
    report.lengths = {n};
    report.stat = {sum_log2_per_letter / trials};
    report.fitted_base = std::exp2(report.stat[0]);
    report.trials = trials;
    report.seed = seed;
    return report;
}

// Exhaustive per-length maxima up to max_n; fitted base is the least
// squares slope of log2(max entry) against length.
inline GrowthReport exhaustive_growth_report(
    const GeneratorSet& set, int max_n,
    std::uint64_t budget = kDefaultEnumBudget) {
    GrowthReport report;
    report.set_name = set.name;
    report.mode = "exhaustive-max";
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int n = 1; n <= max_n; ++n) {
        double bits = log2_mpz(exhaustive_max_growth(set, n, budget).max_entry);
        report.lengths.push_back(n);
        report.stat.push_back(bits);
        sx += n;
        sy += bits;
        sxx += double(n) * n;
        sxy += double(n) * bits;
    }
    double k = static_cast<double>(max_n);
    double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    report.fitted_base = std::exp2(slope);
    return report;
}

inline std::string growth_report_csv(const GrowthReport& report) {
    std::ostringstream out;
    const char* stat_col = report.mode == "random" ? "mean_log2_per_letter"
                                                   : "max_entry_bits";
    out << "length,trials," << stat_col << ",fitted_base\n";
    out.precision(10);
    for (std::size_t i = 0; i < report.lengths.size(); ++i)
        out << report.lengths[i] << ',' << report.trials << ','
            << report.stat[i] << ',' << report.fitted_base << '\n';
    return out.str();
}

// ---------------------------------------------------------------------
// Collision-length (girth) lower bound

enum class GrowthRate {
    kCookie,  // (3+sqrt(5))/2 ~ 2.618 per bit, the cookie hash
    kRate193  // sqrt(2+sqrt(3)) ~ 1.93 per bit, the A(2), B(-2) pair
};

// floor(log_base p), computed exactly with integer linear recurrences.
//
// kCookie: base^n = phi^(2n) = L(2n) - phi^(-2n) with L the Lucas
// sequence and 0 < phi^(-2n) < 1, so base^n <= p iff L(2n) <= p.
// kRate193: base^(2n) = (2+sqrt(3))^n = V(n) - (2-sqrt(3))^n with
// V(0)=2, V(1)=4, V(n)=4V(n-1)-V(n-2), so base^n <= p iff V(n) <= p^2.
inline long collision_bound(const Int& p, GrowthRate rate = GrowthRate::kCookie) {
    if (p < 2) throw std::invalid_argument("collision_bound: p >= 2 required");
    long n = 0;
    if (rate == GrowthRate::kCookie) {
        // Lucas numbers stepped two at a time: L(2n) from L(k), L(k+1).
        Int lk = 2, lk1 = 1;  // L(0), L(1)
        while (true) {
            Int l2 = lk + lk1, l3 = lk1 + l2;
            if (l2 > p) return n;
            lk = std::move(l2);
            lk1 = std::move(l3);
            ++n;
        }
    }
    Int pp = p * p;
    Int prev = 2, cur = 4;  // V(0), V(1)
    if (cur > pp) return 0;
    n = 1;
    while (true) {
        Int next = 4 * cur - prev;
        if (next > pp) return n;
        prev = std::move(cur);
        cur = std::move(next);
        ++n;
    }
}

// Bound for p on the order of 2^p_bits.
inline long collision_bound_bits(unsigned p_bits,
                                 GrowthRate rate = GrowthRate::kCookie) {
    return collision_bound(Int(1) << p_bits, rate);
}

}  // namespace cayley
