#include "icode/codeword.hpp"

#include <algorithm>
#include <stdexcept>

namespace icode {

namespace {

void check_slice(std::size_t length, std::size_t a, std::size_t b) {
    if (a < 1 || a > b || b > length) {
        throw std::out_of_range("slice [" + std::to_string(a) + ":" + std::to_string(b) +
                                "] outside a codeword of length " + std::to_string(length));
    }
}

}  // namespace

Codeword Codeword::from_string(std::string_view bits) {
    std::vector<bool> out;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("codeword must be a string of 0/1, got '" + std::string(bits) + "'");
        }
        out.push_back(c == '1');
    }
    return Codeword(std::move(out));
}

std::string Codeword::to_string() const {
    std::string s;
    for (bool b : bits_) {
        s += b ? '1' : '0';
    }
    return s;
}

LinearCodeword::LinearCodeword(std::vector<BitVector> rows, std::size_t columns)
    : columns_(columns), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.size() != columns_) {
            throw std::invalid_argument("linear codeword row has " + std::to_string(r.size()) + " columns, expected " +
                                        std::to_string(columns_));
        }
    }
}

Codeword xor_pad(const Codeword& a, const Codeword& b) {
    const std::size_t n = std::max(a.length(), b.length());
    std::vector<bool> out(n, false);
    for (std::size_t k = 1; k <= n; ++k) {
        const bool x = k <= a.length() && a.bit(k);
        const bool y = k <= b.length() && b.bit(k);
        out[k - 1] = x != y;
    }
    return Codeword(std::move(out));
}

LinearCodeword xor_pad(const LinearCodeword& a, const LinearCodeword& b) {
    if (a.length() > 0 && b.length() > 0 && a.columns() != b.columns()) {
        throw std::invalid_argument("cannot XOR codewords over " + std::to_string(a.columns()) + " and " +
                                    std::to_string(b.columns()) + " message bits");
    }
    if (b.length() == 0) {
        return a;
    }
    if (a.length() == 0) {
        return b;
    }
    const auto& longer = a.length() >= b.length() ? a : b;
    const auto& shorter = a.length() >= b.length() ? b : a;
    auto rows = longer.rows();
    for (std::size_t k = 0; k < shorter.length(); ++k) {
        rows[k] ^= shorter.rows()[k];
    }
    return LinearCodeword(std::move(rows), longer.columns());
}

Codeword slice(const Codeword& c, std::size_t a, std::size_t b) {
    check_slice(c.length(), a, b);
    std::vector<bool> out;
    for (std::size_t k = a; k <= b; ++k) {
        out.push_back(c.bit(k));
    }
    return Codeword(std::move(out));
}

LinearCodeword slice(const LinearCodeword& c, std::size_t a, std::size_t b) {
    check_slice(c.length(), a, b);
    return LinearCodeword(std::vector<BitVector>(c.rows().begin() + static_cast<std::ptrdiff_t>(a - 1),
                                                 c.rows().begin() + static_cast<std::ptrdiff_t>(b)),
                          c.columns());
}

Codeword evaluate(const LinearCodeword& c, const BitVector& messages) {
    std::vector<bool> out;
    for (const auto& r : c.rows()) {
        auto masked = r;
        masked.clear_masked(masked ^ messages);
        out.push_back(masked.count() % 2 == 1);
    }
    return Codeword(std::move(out));
}

}  // namespace icode
