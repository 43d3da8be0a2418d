#pragma once

// Preimage searches against the integer (pre-reduction) hashes: greedy
// entry-sum descent for the 2-generator hash, backtracking descent for
// the 3-generator cookie hash, and a brute-force baseline over F_p.
//
// All searches verify a recovered word by re-hashing before returning it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayley/analysis.hpp"
#include "cayley/errors.hpp"
#include "cayley/generators.hpp"
#include "cayley/hasher.hpp"
#include "cayley/mat2.hpp"

namespace cayley {

enum class SearchOutcome { kFound, kExhausted, kBudget };

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t backtracks = 0;
    std::uint64_t max_depth = 0;
    // Descent steps where two or more options decreased the entry sum.
    std::uint64_t branching_steps = 0;
    std::uint64_t descent_steps = 0;
    SearchOutcome outcome = SearchOutcome::kExhausted;
};

struct PreimageResult {
    std::optional<std::string> bits;  // '0'/'1' word on success
    SearchStats stats;
};

// Greedy inversion of W = w(A(2), B(2)) over Z: at each step exactly one
// of W*A^-1, W*B^-1 has a smaller sum of absolute entry values; peel that
// generator and repeat until the identity. Fails (not in the semigroup)
// when neither or both options decrease the sum.
inline PreimageResult greedy_preimage_2gen(Mat2Z w,
                                           std::uint64_t max_steps = 1'000'000) {
    const Mat2Z a_inv = mat_inverse_unimodular(gen_Ak(2));
    const Mat2Z b_inv = mat_inverse_unimodular(gen_Bm(2));

    PreimageResult result;
    std::string reversed;
    Int sum = entry_abs_sum(w);
    while (!(w == Mat2Z::identity())) {
        if (result.stats.nodes++ >= max_steps) {
            result.stats.outcome = SearchOutcome::kBudget;
            return result;
        }
        Mat2Z wa = mat_mul(w, a_inv);
        Mat2Z wb = mat_mul(w, b_inv);
        Int sa = entry_abs_sum(wa), sb = entry_abs_sum(wb);
        bool a_down = sa < sum && all_entries_nonnegative(wa);
        bool b_down = sb < sum && all_entries_nonnegative(wb);
        if (a_down == b_down) {  // neither or both: not a semigroup element
            result.stats.outcome = SearchOutcome::kExhausted;
            return result;
        }
        if (a_down) {
            reversed.push_back('0');
            w = std::move(wa);
            sum = std::move(sa);
        } else {
            reversed.push_back('1');
            w = std::move(wb);
            sum = std::move(sb);
        }
    }
    std::reverse(reversed.begin(), reversed.end());
    result.stats.max_depth = reversed.size();
    result.stats.outcome = SearchOutcome::kFound;
    result.bits = std::move(reversed);
    return result;
}

namespace detail {

// The cookie automaton has a small state space once run counters are
// saturated at 3 (behaviour only depends on reaching three in a row).
// States are enumerated so the backtracking search can track, as a
// bitmask, which automaton states are consistent with the suffix of the
// word recovered so far.
struct AutomatonStateTable {
    struct State {
        HashMode mode;
        std::uint32_t ones_run, zeros_run;
    };
    std::vector<State> states;
    // next_state[s][bit], emitted letter letter[s][bit]
    std::vector<std::array<int, 2>> next;
    std::vector<std::array<char, 2>> letter;
    int initial = -1;

    AutomatonStateTable() {
        // Normal mode: ones_run in 0..2 (three ones flips the mode
        // immediately), zeros_run saturated at 3 and irrelevant.
        for (std::uint32_t z : {0u, 1u, 2u, 3u})
            states.push_back({HashMode::kNormal, 0, z});
        for (std::uint32_t o : {1u, 2u})
            states.push_back({HashMode::kNormal, o, 0});
        // Cookie mode: zeros_run in 0..2 (three zeros resets), ones_run
        // saturated at 3.
        for (std::uint32_t o : {1u, 2u, 3u})
            states.push_back({HashMode::kCookie, o, 0});
        for (std::uint32_t z : {1u, 2u})
            states.push_back({HashMode::kCookie, 0, z});

        next.resize(states.size());
        letter.resize(states.size());
        for (std::size_t s = 0; s < states.size(); ++s)
            for (int bit : {0, 1}) {
                auto [q, gen] = step(states[s], bit);
                next[s][bit] = find(q);
                letter[s][bit] = gen;
            }
        initial = find({HashMode::kNormal, 0, 0});
    }

    static std::pair<State, char> step(State q, int bit) {
        char gen;
        if (bit) {
            q.zeros_run = 0;
            q.ones_run = std::min<std::uint32_t>(q.ones_run + 1, 3);
            gen = (q.mode == HashMode::kCookie) ? 'C' : 'B';
            if (q.mode == HashMode::kNormal && q.ones_run >= 3)
                q.mode = HashMode::kCookie;
        } else {
            q.ones_run = 0;
            q.zeros_run = std::min<std::uint32_t>(q.zeros_run + 1, 3);
            gen = 'A';
            if (q.mode == HashMode::kCookie && q.zeros_run >= 3) {
                q.mode = HashMode::kNormal;
                q.zeros_run = 3;
            }
        }
        return {q, gen};
    }

    int find(const State& q) const {
        for (std::size_t i = 0; i < states.size(); ++i)
            if (states[i].mode == q.mode && states[i].ones_run == q.ones_run &&
                states[i].zeros_run == q.zeros_run)
                return static_cast<int>(i);
        return -1;
    }

    std::uint32_t all_mask() const {
        return (std::uint32_t(1) << states.size()) - 1;
    }
};

inline const AutomatonStateTable& automaton_table() {
    static const AutomatonStateTable table;
    return table;
}

}  // namespace detail

// Depth-first preimage search for the 3-generator cookie hash over Z.
// Letters are peeled from the right; a candidate letter must shrink the
// entry sum, keep entries nonnegative, and remain realizable as the
// generator sequence of some bit string (tracked as the set of automaton
// states consistent with the suffix so far). Ties between decreasing
// options are explored in the order A, B, C.
inline PreimageResult backtrack_preimage_3gen(
    const Mat2Z& target, std::size_t max_len,
    std::uint64_t max_nodes = 1'000'000) {
    const auto& table = detail::automaton_table();
    const Mat2Z inverses[3] = {mat_inverse_unimodular(gen_A()),
                               mat_inverse_unimodular(gen_B()),
                               mat_inverse_unimodular(gen_C())};
    const char letters[3] = {'A', 'B', 'C'};
    const int bits_of[3] = {0, 1, 1};

    PreimageResult result;
    std::string reversed_bits;
    bool budget_hit = false;

    // mask: states q such that running the automaton from q over the
    // suffix recovered so far emits exactly the peeled letters.
    auto dfs = [&](auto&& self, const Mat2Z& w, const Int& sum,
                   std::uint32_t mask, std::size_t depth) -> bool {
        if (result.stats.nodes++ >= max_nodes) {
            budget_hit = true;
            return false;
        }
        result.stats.max_depth = std::max<std::uint64_t>(
            result.stats.max_depth, depth);
        if (w == Mat2Z::identity())
            return (mask >> table.initial) & 1u;
        if (depth == max_len) return false;

        int decreasing = 0;
        struct Cand {
            Mat2Z m;
            Int sum;
            std::uint32_t mask;
            int bit;
        };
        std::vector<Cand> cands;
        for (int g = 0; g < 3; ++g) {
            Mat2Z peeled = mat_mul(w, inverses[g]);
            Int s = entry_abs_sum(peeled);
            if (!(s < sum)) continue;
            ++decreasing;  // branching metric: entry-sum descent only
            if (!all_entries_nonnegative(peeled)) continue;
            int bit = bits_of[g];
            std::uint32_t pre = 0;
            for (std::size_t q = 0; q < table.states.size(); ++q)
                if (table.letter[q][bit] == letters[g] &&
                    ((mask >> table.next[q][bit]) & 1u))
                    pre |= std::uint32_t(1) << q;
            if (pre == 0) continue;
            cands.push_back({std::move(peeled), std::move(s), pre, bit});
        }
        ++result.stats.descent_steps;
        if (decreasing >= 2) ++result.stats.branching_steps;

        for (auto& cand : cands) {
            reversed_bits.push_back(cand.bit ? '1' : '0');
            if (self(self, cand.m, cand.sum, cand.mask, depth + 1)) return true;
            reversed_bits.pop_back();
            ++result.stats.backtracks;
            if (budget_hit) return false;
        }
        return false;
    };

    Int sum = entry_abs_sum(target);
    bool found = dfs(dfs, target, sum, table.all_mask(), 0);
    if (budget_hit) {
        result.stats.outcome = SearchOutcome::kBudget;
        return result;
    }
    if (!found) {
        result.stats.outcome = SearchOutcome::kExhausted;
        return result;
    }
    std::string bits(reversed_bits.rbegin(), reversed_bits.rend());
    // soundness: re-hash before returning
    std::vector<std::uint8_t> word;
    word.reserve(bits.size());
    for (char ch : bits) word.push_back(ch == '1');
    if (!(integer_hash(word) == target)) {
        result.stats.outcome = SearchOutcome::kExhausted;
        return result;
    }
    result.stats.outcome = SearchOutcome::kFound;
    result.bits = std::move(bits);
    return result;
}

// Tries all bit strings of length 0..max_len in shortest-then-lex order
// against a raw mod-p digest. Meant for tiny p; refuses max_len > 24
// unless the budget is raised.
inline PreimageResult brute_force_preimage(const Digest& digest,
                                           int max_len,
                                           const HashParams& params,
                                           std::uint64_t budget = std::uint64_t(1)
                                               << 25) {
    if (max_len > 62 || (std::uint64_t(1) << (max_len + 1)) > budget)
        throw ResourceLimitError("brute_force_preimage: 2^max_len exceeds budget");

    PreimageResult result;
    const Mat2Z target = digest.matrix();
    std::string word;

    for (int len = 0; len <= max_len; ++len) {
        auto dfs = [&](auto&& self, const Mat2Z& product, CookieAutomaton state,
                       int depth) -> bool {
            if (depth == len) {
                ++result.stats.nodes;
                return product == target;
            }
            for (int bit : {0, 1}) {
                CookieAutomaton next = state;
                char gen = next.step(bit);
                const Mat2Z& m = gen == 'A'   ? params.A
                                 : gen == 'B' ? params.B
                                              : params.C;
                word.push_back(bit ? '1' : '0');
                if (self(self, mat_mul_mod(product, m, params.p), next,
                         depth + 1))
                    return true;
                word.pop_back();
            }
            return false;
        };
        if (dfs(dfs, Mat2Z::identity(), CookieAutomaton{}, 0)) {
            result.stats.outcome = SearchOutcome::kFound;
            result.stats.max_depth = len;
            result.bits = word;
            return result;
        }
    }
    result.stats.outcome = SearchOutcome::kExhausted;
    return result;
}

}  // namespace cayley
