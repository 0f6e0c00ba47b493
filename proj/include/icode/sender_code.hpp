#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "icode/gf2.hpp"
#include "icode/instance.hpp"

namespace icode {

/// Rows transmitted by one sender. Columns follow the message bits: with
/// t-bit messages, column (j-1)*t + b carries bit b of x_j.
struct CodeBlock {
    std::size_t sender = 0;
    BitMatrix rows;

    friend bool operator==(const CodeBlock&, const CodeBlock&) = default;
};

/// A multi-sender linear code: one block per transmitting sender.
class SenderCode {
public:
    SenderCode() = default;
    /// Empty code over `columns` message bits.
    explicit SenderCode(std::size_t columns) : columns_(columns) {}

    [[nodiscard]] std::size_t columns() const { return columns_; }
    [[nodiscard]] const std::vector<CodeBlock>& blocks() const { return blocks_; }
    [[nodiscard]] std::size_t total_length() const;

    /// Appends a row to `sender`'s block, creating it if needed. Blocks stay sorted by sender.
    void add_row(std::size_t sender, BitVector row);
    void add_rows(std::size_t sender, const BitMatrix& rows);

    /// All rows, blocks in sender order.
    [[nodiscard]] BitMatrix stacked() const;

    friend bool operator==(const SenderCode&, const SenderCode&) = default;

private:
    std::size_t columns_ = 0;
    std::vector<CodeBlock> blocks_;
};

/// First violation of the sender structure: a block for an unknown sender,
/// a row of the wrong width, or a nonzero column outside the sender's
/// messages. std::nullopt when the code respects every sender.
[[nodiscard]] std::optional<std::string> sender_violation(const SenderCode& code, const std::vector<IndexSet>& senders,
                                                          std::size_t block_size);

/// Column mask of the bits of the listed messages.
[[nodiscard]] BitVector message_columns(const IndexSet& messages, std::size_t num_messages, std::size_t block_size);

/// Human-readable XOR expression of a row, e.g. "x1+x2+x6". Bits of t-bit
/// messages print as x1[2]. The zero row prints as "0".
[[nodiscard]] std::string expression(const BitVector& row, std::size_t block_size);

}  // namespace icode
