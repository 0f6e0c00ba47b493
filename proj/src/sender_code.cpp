#include "icode/sender_code.hpp"

#include <algorithm>

namespace icode {

std::size_t SenderCode::total_length() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) {
        n += b.rows.rows();
    }
    return n;
}

void SenderCode::add_row(std::size_t sender, BitVector row) {
    auto it = std::lower_bound(blocks_.begin(), blocks_.end(), sender,
                               [](const CodeBlock& b, std::size_t s) { return b.sender < s; });
    if (it == blocks_.end() || it->sender != sender) {
        it = blocks_.insert(it, CodeBlock{sender, BitMatrix(0, columns_)});
    }
    it->rows.append_row(std::move(row));
}

void SenderCode::add_rows(std::size_t sender, const BitMatrix& rows) {
    for (const auto& r : rows.row_vectors()) {
        add_row(sender, r);
    }
}

BitMatrix SenderCode::stacked() const {
    BitMatrix out(0, columns_);
    for (const auto& b : blocks_) {
        for (const auto& r : b.rows.row_vectors()) {
            out.append_row(r);
        }
    }
    return out;
}

BitVector message_columns(const IndexSet& messages, std::size_t num_messages, std::size_t block_size) {
    BitVector mask(num_messages * block_size);
    for (auto j : messages) {
        for (std::size_t b = 0; b < block_size; ++b) {
            mask.set((j - 1) * block_size + b);
        }
    }
    return mask;
}

std::optional<std::string> sender_violation(const SenderCode& code, const std::vector<IndexSet>& senders,
                                            std::size_t block_size) {
    if (block_size == 0 || code.columns() % block_size != 0) {
        return "code width " + std::to_string(code.columns()) + " is not a multiple of t = " +
               std::to_string(block_size);
    }
    const std::size_t m = code.columns() / block_size;
    for (const auto& block : code.blocks()) {
        if (block.sender < 1 || block.sender > senders.size()) {
            return "block for unknown sender " + std::to_string(block.sender);
        }
        const auto allowed = message_columns(senders[block.sender - 1], m, block_size);
        for (std::size_t r = 0; r < block.rows.rows(); ++r) {
            const auto& row = block.rows.row(r);
            if (row.size() != code.columns()) {
                return "sender " + std::to_string(block.sender) + " row " + std::to_string(r + 1) + " has " +
                       std::to_string(row.size()) + " columns, expected " + std::to_string(code.columns());
            }
            if (!row.subset_of(allowed)) {
                auto outside = row;
                outside.clear_masked(allowed);
                const std::size_t col = outside.first_set();
                return "sender " + std::to_string(block.sender) + " row " + std::to_string(r + 1) + " uses x" +
                       std::to_string(col / block_size + 1) + ", which it does not hold";
            }
        }
    }
    return std::nullopt;
}

std::string expression(const BitVector& row, std::size_t block_size) {
    std::string out;
    for (std::size_t c = 0; c < row.size(); ++c) {
        if (!row.get(c)) {
            continue;
        }
        if (!out.empty()) {
            out += '+';
        }
        out += 'x' + std::to_string(c / block_size + 1);
        if (block_size > 1) {
            out += '[' + std::to_string(c % block_size + 1) + ']';
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace icode
