#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "icode/gf2.hpp"

namespace icode {

/// A concrete codeword. Position 1 is the most significant bit.
class Codeword {
public:
    Codeword() = default;
    explicit Codeword(std::vector<bool> bits) : bits_(std::move(bits)) {}
    /// Parses '0'/'1' text; throws std::invalid_argument otherwise.
    static Codeword from_string(std::string_view bits);

    [[nodiscard]] std::size_t length() const { return bits_.size(); }
    /// 1-indexed from the most significant position.
    [[nodiscard]] bool bit(std::size_t position) const { return bits_.at(position - 1); }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Codeword&, const Codeword&) = default;

private:
    std::vector<bool> bits_;
};

/// A codeword kept symbolically: position k is the linear form `rows[k-1]`
/// over the message bits. Concrete and symbolic codewords obey the same
/// XOR and slicing rules, so constructions are written once.
class LinearCodeword {
public:
    LinearCodeword() = default;
    /// Codeword of zero length over `columns` message bits.
    explicit LinearCodeword(std::size_t columns) : columns_(columns) {}
    LinearCodeword(std::vector<BitVector> rows, std::size_t columns);

    [[nodiscard]] std::size_t length() const { return rows_.size(); }
    [[nodiscard]] std::size_t columns() const { return columns_; }
    [[nodiscard]] const std::vector<BitVector>& rows() const { return rows_; }
    [[nodiscard]] const BitVector& row(std::size_t position) const { return rows_.at(position - 1); }

    friend bool operator==(const LinearCodeword&, const LinearCodeword&) = default;

private:
    std::size_t columns_ = 0;
    std::vector<BitVector> rows_;
};

/// Bitwise XOR after zero-padding the shorter operand at its least
/// significant (trailing) positions. 1010 xor 110 is 0110.
[[nodiscard]] Codeword xor_pad(const Codeword& a, const Codeword& b);
/// Same rule on linear forms. Throws std::invalid_argument when both operands
/// are non-empty and their column counts differ.
[[nodiscard]] LinearCodeword xor_pad(const LinearCodeword& a, const LinearCodeword& b);

/// Positions a..b inclusive, 1-indexed from the most significant position.
/// Throws std::out_of_range unless 1 <= a <= b <= length.
[[nodiscard]] Codeword slice(const Codeword& c, std::size_t a, std::size_t b);
[[nodiscard]] LinearCodeword slice(const LinearCodeword& c, std::size_t a, std::size_t b);

/// Evaluates a linear codeword on a concrete message assignment (one bit per column).
[[nodiscard]] Codeword evaluate(const LinearCodeword& c, const BitVector& messages);

}  // namespace icode
