#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace icode {

/// Fixed-length vector over GF(2), packed 64 entries per word.
///
/// Position 0 is the first (most significant) position when printed, so
/// "110" has positions 0 and 1 set. For message vectors position j-1 holds
/// message x_j.
class BitVector {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitVector() = default;
    explicit BitVector(std::size_t size);

    /// Parses a string of '0'/'1' characters; throws std::invalid_argument otherwise.
    static BitVector from_string(std::string_view bits);
    static BitVector unit(std::size_t size, std::size_t position);

    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] bool empty() const { return size_ == 0; }

    [[nodiscard]] bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    /// XOR in place; operands must have equal length.
    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

    /// Clears every position set in `mask`; operands must have equal length.
    BitVector& clear_masked(const BitVector& mask);

    [[nodiscard]] bool any() const;
    [[nodiscard]] bool none() const { return !any(); }
    [[nodiscard]] std::size_t count() const;
    /// Lowest set position, or npos for the zero vector.
    [[nodiscard]] std::size_t first_set() const;
    /// True iff every set position of this vector is also set in `mask`.
    [[nodiscard]] bool subset_of(const BitVector& mask) const;

    [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;
    friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense rows x cols matrix over GF(2), stored row-major.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    /// All rows must have length `cols`.
    static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
    /// Rows given as '0'/'1' strings of equal length.
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BitMatrix from_strings(std::span<const std::string> rows, std::size_t cols);
    static BitMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return data_.size(); }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return data_.empty(); }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }

    [[nodiscard]] const BitVector& row(std::size_t r) const { return data_[r]; }
    [[nodiscard]] const std::vector<BitVector>& row_vectors() const { return data_; }

    void append_row(BitVector row);

    [[nodiscard]] std::vector<std::string> to_strings() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

struct RowEchelon {
    BitMatrix reduced;                 ///< nonzero rows of the reduced row echelon form
    std::vector<std::size_t> pivots;   ///< pivot column of each reduced row
};

/// Reduced row echelon form. Pivots are taken at the first nonzero column,
/// from the lowest-indexed remaining row that has a one there.
[[nodiscard]] RowEchelon rref(const BitMatrix& m);

[[nodiscard]] std::size_t rank(const BitMatrix& m);

/// True iff `v` is a GF(2) combination of the rows of `basis`.
/// Throws std::invalid_argument when v.size() != basis.cols().
[[nodiscard]] bool in_span(const BitVector& v, const BitMatrix& basis);

/// Vertical concatenation; throws std::invalid_argument on a column mismatch.
/// An empty 0-row operand is accepted whatever its column count.
[[nodiscard]] BitMatrix stack(const BitMatrix& top, const BitMatrix& bottom);

[[nodiscard]] BitMatrix transpose(const BitMatrix& m);

/// Incremental row basis over at most 64 columns, kept in echelon form keyed
/// by the highest set bit. Used by the search routines where rows fit in a word.
class XorBasis {
public:
    /// Reduces `v` against the basis; the result is a canonical coset representative.
    [[nodiscard]] std::uint64_t reduce(std::uint64_t v) const;
    /// Adds `v` if independent; returns whether the dimension grew.
    bool insert(std::uint64_t v);
    [[nodiscard]] bool contains(std::uint64_t v) const { return reduce(v) == 0; }
    [[nodiscard]] std::size_t dimension() const { return rows_.size(); }
    [[nodiscard]] const std::vector<std::uint64_t>& rows() const { return rows_; }

private:
    std::vector<std::uint64_t> rows_;  // sorted by decreasing leading bit
};

/// Basis of the vectors of span(rows) whose support lies inside `allowed`.
[[nodiscard]] std::vector<std::uint64_t> restricted_subspace(const std::vector<std::uint64_t>& rows,
                                                             std::uint64_t allowed);

}  // namespace icode
