#pragma once

// Built-in subset of the NIST statistical test suite (frequency, block
// frequency, runs, longest run of ones, cumulative sums) plus generation
// of digest streams and an ASCII export format for running the full
// external suite on the same bits.
//
// Verdicts use alpha = 0.01: a sequence passes iff P >= 0.01.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cayley/hasher.hpp"
#include "cayley/params.hpp"
#include "cayley/rng.hpp"
#include "cayley/special_functions.hpp"

namespace cayley {

using BitSequence = std::vector<std::uint8_t>;

inline constexpr double kAlpha = 0.01;

struct TestReport {
    std::string test;
    std::string param;  // e.g. "M=128" or "direction=forward"
    double statistic = 0.0;
    double p_value = 0.0;
    bool pass = false;
    std::string note;  // nonempty when a prerequisite failed

    std::string csv() const {
        std::ostringstream out;
        out.precision(6);
        out << std::fixed << test << ',' << param << ',' << statistic << ','
            << p_value << ',' << (pass ? "pass" : "fail");
        return out.str();
    }
};

namespace detail {

inline TestReport make_report(std::string test, std::string param,
                              double statistic, double p) {
    TestReport r;
    r.test = std::move(test);
    r.param = std::move(param);
    r.statistic = statistic;
    r.p_value = p;
    r.pass = p >= kAlpha;
    return r;
}

inline void require_length(const BitSequence& seq, std::size_t min,
                           const char* test) {
    if (seq.size() < min)
        throw std::invalid_argument(std::string(test) + ": sequence shorter "
                                    "than " + std::to_string(min) + " bits");
}

}  // namespace detail

// Frequency (monobit): P = erfc(|S_n| / sqrt(2n)), S_n = sum(2b - 1).
inline TestReport monobit(const BitSequence& seq) {
    detail::require_length(seq, 100, "monobit");
    long long s = 0;
    for (auto b : seq) s += b ? 1 : -1;
    double s_obs = std::fabs(double(s)) / std::sqrt(double(seq.size()));
    double p = std::erfc(s_obs / std::sqrt(2.0));
    return detail::make_report("frequency", "", s_obs, p);
}

// Block frequency: chi^2 = 4M sum (pi_i - 1/2)^2 over N = n/M blocks;
// P = Q(N/2, chi^2/2).
inline TestReport block_frequency(const BitSequence& seq, std::size_t M = 128) {
    detail::require_length(seq, 100, "block_frequency");
    if (M == 0 || seq.size() / M == 0)
        throw std::invalid_argument("block_frequency: block size too large");
    std::size_t N = seq.size() / M;
    double chi2 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < M; ++j) ones += seq[i * M + j];
        double pi = double(ones) / M;
        chi2 += (pi - 0.5) * (pi - 0.5);
    }
    chi2 *= 4.0 * M;
    double p = igamc(double(N) / 2.0, chi2 / 2.0);
    return detail::make_report("block_frequency", "M=" + std::to_string(M),
                               chi2, p);
}

// Runs: total number of runs V; prerequisite |pi - 1/2| < 2/sqrt(n).
inline TestReport runs_test(const BitSequence& seq) {
    detail::require_length(seq, 100, "runs");
    double n = double(seq.size());
    std::size_t ones = 0;
    for (auto b : seq) ones += b;
    double pi = double(ones) / n;
    if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(n)) {
        TestReport r = detail::make_report("runs", "", 0.0, 0.0);
        r.note = "frequency-prerequisite-failed";
        return r;
    }
    std::uint64_t v = 1;
    for (std::size_t i = 1; i < seq.size(); ++i) v += seq[i] != seq[i - 1];
    double num = std::fabs(double(v) - 2.0 * n * pi * (1.0 - pi));
    double p = std::erfc(num / (2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi)));
    return detail::make_report("runs", "", double(v), p);
}

// Cumulative sums: z = max |partial sum of +-1|; STS normal-CDF series.
enum class CusumDirection { kForward, kBackward };

inline TestReport cumulative_sums(const BitSequence& seq,
                                  CusumDirection direction) {
    detail::require_length(seq, 100, "cumulative_sums");
    double n = double(seq.size());
    long long s = 0, z = 0;
    if (direction == CusumDirection::kForward) {
        for (auto b : seq) {
            s += b ? 1 : -1;
            z = std::max(z, std::llabs(s));
        }
    } else {
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            s += *it ? 1 : -1;
            z = std::max(z, std::llabs(s));
        }
    }
    double zz = double(z), sqn = std::sqrt(n);
    double sum1 = 0.0;
    for (long k = long((-n / zz + 1.0) / 4.0); k <= long((n / zz - 1.0) / 4.0);
         ++k)
        sum1 += normal_cdf((4 * k + 1) * zz / sqn) -
                normal_cdf((4 * k - 1) * zz / sqn);
    double sum2 = 0.0;
    for (long k = long((-n / zz - 3.0) / 4.0); k <= long((n / zz - 1.0) / 4.0);
         ++k)
        sum2 += normal_cdf((4 * k + 3) * zz / sqn) -
                normal_cdf((4 * k + 1) * zz / sqn);
    double p = 1.0 - sum1 + sum2;
    const char* dir =
        direction == CusumDirection::kForward ? "forward" : "backward";
    return detail::make_report("cumulative_sums",
                               std::string("direction=") + dir, zz, p);
}

// Longest run of ones in M-bit blocks, standard K/M parameterization.
inline TestReport longest_run_of_ones(const BitSequence& seq) {
    detail::require_length(seq, 128, "longest_run_of_ones");
    std::size_t n = seq.size();
    std::size_t M;
    int K;
    std::vector<double> pi;
    int v_min, v_max;
    if (n < 6272) {
        M = 8, K = 3;
        pi = {0.2148, 0.3672, 0.2305, 0.1875};
        v_min = 1, v_max = 4;
    } else if (n < 750000) {
        M = 128, K = 5;
        pi = {0.1174, 0.2430, 0.2493, 0.1752, 0.1027, 0.1124};
        v_min = 4, v_max = 9;
    } else {
        M = 10000, K = 6;
        pi = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
        v_min = 10, v_max = 16;
    }
    std::size_t N = n / M;
    std::vector<std::uint64_t> nu(K + 1, 0);
    for (std::size_t i = 0; i < N; ++i) {
        int longest = 0, run = 0;
        for (std::size_t j = 0; j < M; ++j) {
            run = seq[i * M + j] ? run + 1 : 0;
            longest = std::max(longest, run);
        }
        int cls = std::clamp(longest, v_min, v_max) - v_min;
        ++nu[cls];
    }
    double chi2 = 0.0;
    for (int i = 0; i <= K; ++i) {
        double expect = double(N) * pi[i];
        chi2 += (double(nu[i]) - expect) * (double(nu[i]) - expect) / expect;
    }
    double p = igamc(double(K) / 2.0, chi2 / 2.0);
    return detail::make_report("longest_run_of_ones",
                               "M=" + std::to_string(M), chi2, p);
}

// All built-in tests on one sequence (cumulative sums in both directions).
inline std::vector<TestReport> run_builtin_tests(const BitSequence& seq,
                                                 std::size_t block_m = 128) {
    return {monobit(seq),
            block_frequency(seq, block_m),
            runs_test(seq),
            longest_run_of_ones(seq),
            cumulative_sums(seq, CusumDirection::kForward),
            cumulative_sums(seq, CusumDirection::kBackward)};
}

// ---------------------------------------------------------------------
// Digest streams

struct HashStream {
    std::vector<BitSequence> sequences;  // chopped to target_bits
    std::vector<BitSequence> digests;    // raw digest bits, one per input
};

// Hashes `count` seeded random inputs of `input_bits` bits each (with
// padding) and concatenates the serialized digests. With target_bits == 0
// each digest is its own sequence; otherwise the concatenation is split
// into sequences of exactly target_bits (any remainder dropped). Input i
// is drawn from derive_seed(seed, i), so output is byte-identical across
// runs and schedulings.
inline HashStream hash_stream_generate(const HashParams& params,
                                       std::size_t count,
                                       std::size_t input_bits,
                                       std::uint64_t seed,
                                       std::size_t target_bits = 0) {
    HashStream stream;
    stream.digests.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto rng = make_rng(derive_seed(seed, i));
        auto input = random_bits(rng, input_bits);
        stream.digests.push_back(hash_bits_padded(input, params).to_bits());
    }
    if (target_bits == 0) {
        stream.sequences = stream.digests;
        return stream;
    }
    BitSequence all;
    for (const auto& d : stream.digests)
        all.insert(all.end(), d.begin(), d.end());
    for (std::size_t off = 0; off + target_bits <= all.size();
         off += target_bits)
        stream.sequences.emplace_back(all.begin() + off,
                                      all.begin() + off + target_bits);
    return stream;
}

// Writes one file per sequence as ASCII '0'/'1' plus a final newline,
// named data_<index>.txt under dir. Returns the paths written.
inline std::vector<std::string> sts_export(
    const std::vector<BitSequence>& sequences, const std::string& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> paths;
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        std::string path =
            (std::filesystem::path(dir) / ("data_" + std::to_string(i) + ".txt"))
                .string();
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path);
        for (auto b : sequences[i]) out.put(b ? '1' : '0');
        out.put('\n');
        paths.push_back(path);
    }
    return paths;
}

}  // namespace cayley
