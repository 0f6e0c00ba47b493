#include "icode/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace icode {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

void require_same_size(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("bit vector length mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    }
}

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("invalid bit character '" + std::string(1, bits[i]) +
                                        "' in \"" + std::string(bits) + "\"");
        }
    }
    return v;
}

BitVector BitVector::unit(std::size_t size, std::size_t position) {
    BitVector v(size);
    v.set(position);
    return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    require_same_size(*this, other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector& BitVector::clear_masked(const BitVector& mask) {
    require_same_size(*this, mask);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= ~mask.words_[w];
    }
    return *this;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const {
    std::size_t n = 0;
    for (auto w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

std::size_t BitVector::first_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
    }
    return npos;
}

bool BitVector::subset_of(const BitVector& mask) const {
    require_same_size(*this, mask);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~mask.words_[w]) != 0) {
            return false;
        }
    }
    return true;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) {
        return c;
    }
    // Lexicographic on the printed string: position 0 is most significant.
    for (std::size_t i = 0; i < a.size_; ++i) {
        if (a.get(i) != b.get(i)) {
            return a.get(i) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw std::invalid_argument("row length " + std::to_string(r.size()) +
                                        " does not match column count " + std::to_string(cols));
        }
    }
    BitMatrix m;
    m.cols_ = cols;
    m.data_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<BitVector> data;
    std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    for (auto r : rows) {
        data.push_back(BitVector::from_string(r));
    }
    return from_rows(std::move(data), cols);
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows, std::size_t cols) {
    std::vector<BitVector> data;
    data.reserve(rows.size());
    for (const auto& r : rows) {
        data.push_back(BitVector::from_string(r));
    }
    return from_rows(std::move(data), cols);
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != cols_) {
        throw std::invalid_argument("row length " + std::to_string(row.size()) +
                                    " does not match column count " + std::to_string(cols_));
    }
    data_.push_back(std::move(row));
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(data_.size());
    for (const auto& r : data_) {
        out.push_back(r.to_string());
    }
    return out;
}

RowEchelon rref(const BitMatrix& m) {
    std::vector<BitVector> rows = m.row_vectors();
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < m.cols() && next < rows.size(); ++col) {
        std::size_t pivot_row = next;
        while (pivot_row < rows.size() && !rows[pivot_row].get(col)) {
            ++pivot_row;
        }
        if (pivot_row == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[pivot_row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != next && rows[r].get(col)) {
                rows[r] ^= rows[next];
            }
        }
        pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    return {BitMatrix::from_rows(std::move(rows), m.cols()), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

bool in_span(const BitVector& v, const BitMatrix& basis) {
    if (v.size() != basis.cols()) {
        throw std::invalid_argument("in_span: vector length " + std::to_string(v.size()) +
                                    " does not match basis column count " +
                                    std::to_string(basis.cols()));
    }
    const RowEchelon e = rref(basis);
    BitVector rest = v;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (rest.get(e.pivots[r])) {
            rest ^= e.reduced.row(r);
        }
    }
    return rest.none();
}

BitMatrix stack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.rows() == 0) {
        return bottom;
    }
    if (bottom.rows() == 0) {
        return top;
    }
    if (top.cols() != bottom.cols()) {
        throw std::invalid_argument("stack: column mismatch " + std::to_string(top.cols()) +
                                    " vs " + std::to_string(bottom.cols()));
    }
    std::vector<BitVector> rows = top.row_vectors();
    rows.insert(rows.end(), bottom.row_vectors().begin(), bottom.row_vectors().end());
    return BitMatrix::from_rows(std::move(rows), top.cols());
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) {
                t.set(c, r);
            }
        }
    }
    return t;
}

std::uint64_t XorBasis::reduce(std::uint64_t v) const {
    for (auto b : rows_) {
        v = std::min(v, v ^ b);
    }
    return v;
}

bool XorBasis::insert(std::uint64_t v) {
    v = reduce(v);
    if (v == 0) {
        return false;
    }
    auto pos = std::find_if(rows_.begin(), rows_.end(), [v](std::uint64_t b) { return b < v; });
    rows_.insert(pos, v);
    return true;
}

std::vector<std::uint64_t> restricted_subspace(const std::vector<std::uint64_t>& rows, std::uint64_t allowed) {
    // Eliminate on the disallowed coordinates while carrying the full
    // vectors; rows whose disallowed part vanishes span the restriction.
    const std::uint64_t forbidden = ~allowed;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> work;
    for (auto r : rows) {
        work.emplace_back(r & forbidden, r);
    }
    std::vector<std::uint64_t> out;
    while (!work.empty()) {
        auto pivot = std::find_if(work.begin(), work.end(), [](const auto& w) { return w.first != 0; });
        if (pivot == work.end()) {
            break;
        }
        const auto p = *pivot;
        work.erase(pivot);
        const std::uint64_t bit = p.first & (~p.first + 1);
        for (auto& w : work) {
            if (w.first & bit) {
                w.first ^= p.first;
                w.second ^= p.second;
            }
        }
    }
    for (const auto& w : work) {
        if (w.second != 0) {
            out.push_back(w.second);
        }
    }
    return out;
}

}  // namespace icode
