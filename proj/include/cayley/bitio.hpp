#pragma once

// Bit-string input/output helpers shared by the CLI and the export code.

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayley {

// ASCII '0'/'1' with whitespace ignored; anything else is an error.
inline std::vector<std::uint8_t> parse_bit_string(const std::string& text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch == '0') bits.push_back(0);
        else if (ch == '1') bits.push_back(1);
        else if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' ||
                 ch == '\v' || ch == '\f')
            continue;
        else
            throw std::invalid_argument(
                std::string("invalid character in bit string: '") + ch + "'");
    }
    return bits;
}

inline std::string format_bit_string(const std::vector<std::uint8_t>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

// MSB-first within each byte.
inline std::vector<std::uint8_t> bytes_to_bits(
    const std::vector<std::uint8_t>& bytes) {
    std::vector<std::uint8_t> bits;
    bits.reserve(bytes.size() * 8);
    for (auto byte : bytes)
        for (int k = 7; k >= 0; --k)
            bits.push_back(static_cast<std::uint8_t>((byte >> k) & 1));
    return bits;
}

inline std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                     std::istreambuf_iterator<char>());
}

inline std::string read_file_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

}  // namespace cayley
