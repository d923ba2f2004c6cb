// system.hpp
// Level indexing for a qudit standing in for N qubits: D = 2^N computational
// levels plus one ancillary level at index D. Qubit positions are 1-based and
// q_1 is the most significant bit of the level index, so |15>_16 = |1111>.

#pragma once

#include <stdexcept>
#include <string>

namespace quditc {

struct SystemShape {
    int n;  // equivalent qubit count
    int d;  // computational levels, 2^n

    explicit SystemShape(int qubits) : n(qubits), d(0) {
        if (qubits < 1) throw std::domain_error("SystemShape: qubit count must be >= 1");
        if (qubits > 24) throw std::domain_error("SystemShape: qubit count too large for dense simulation");
        d = 1 << qubits;
    }

    int total_levels() const { return d + 1; }
    int ancilla() const { return d; }

    bool operator==(const SystemShape&) const = default;
};

// Value of q_target (1-based) in the binary expansion of a level index.
inline bool qubit_bit(int level, int target, int n) {
    return ((level >> (n - target)) & 1) != 0;
}

inline std::string index_to_bits(int level, int n) {
    if (n < 1) throw std::domain_error("index_to_bits: qubit count must be >= 1");
    if (level < 0 || level >= (1 << n))
        throw std::domain_error("index_to_bits: level index out of range");
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int i = 1; i <= n; ++i)
        if (qubit_bit(level, i, n)) bits[static_cast<std::size_t>(i - 1)] = '1';
    return bits;
}

inline int bits_to_index(const std::string& bits) {
    if (bits.empty()) throw std::domain_error("bits_to_index: empty bit string");
    int value = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::domain_error("bits_to_index: malformed bit string");
        value = (value << 1) | (c == '1' ? 1 : 0);
    }
    return value;
}

// The level identical to `level` except with q_target flipped. The two levels
// of such a pair differ by 2^(N-t).
inline int pair_partner(int level, int target, const SystemShape& shape) {
    if (level < 0 || level >= shape.d) throw std::domain_error("pair_partner: level out of range");
    if (target < 1 || target > shape.n) throw std::domain_error("pair_partner: target out of range");
    return level ^ (1 << (shape.n - target));
}

}  // namespace quditc
