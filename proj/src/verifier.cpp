#include "icode/verifier.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <unordered_map>

#include "icode/errors.hpp"

namespace icode {

namespace {

void check_width(const SenderCode& code, const ValidatedInstance& instance) {
    const std::size_t expected = instance.num_messages() * instance.block_size();
    if (code.columns() != expected) {
        throw InvalidInput("code has " + std::to_string(code.columns()) + " columns, expected m*t = " +
                           std::to_string(expected));
    }
    for (const auto& block : code.blocks()) {
        for (const auto& row : block.rows.row_vectors()) {
            if (row.size() != expected) {
                throw InvalidInput("code row of sender " + std::to_string(block.sender) + " has " +
                                   std::to_string(row.size()) + " columns, expected " + std::to_string(expected));
            }
        }
    }
}

std::string bit_name(std::size_t receiver, std::size_t bit, std::size_t t) {
    std::string name = "x" + std::to_string(receiver);
    if (t > 1) {
        name += "[" + std::to_string(bit + 1) + "]";
    }
    return name;
}

}  // namespace

std::string to_string(VerificationMethod method) {
    return method == VerificationMethod::linear ? "linear" : "exhaustive";
}

VerificationReport verify_linear(const SenderCode& code, const ValidatedInstance& instance) {
    check_width(code, instance);
    const std::size_t m = instance.num_messages();
    const std::size_t t = instance.block_size();
    const BitMatrix all = code.stacked();

    VerificationReport report;
    report.method = VerificationMethod::linear;
    for (std::size_t i = 1; i <= m; ++i) {
        // e_c has no support on K_i (i is not in K_i), so clearing the known
        // columns from every row is equivalent to adding their unit vectors.
        const auto known = message_columns(instance.side_info(i), m, t);
        BitMatrix projected(0, m * t);
        for (const auto& row : all.row_vectors()) {
            auto r = row;
            r.clear_masked(known);
            projected.append_row(std::move(r));
        }
        for (std::size_t b = 0; b < t; ++b) {
            const auto target = BitVector::unit(m * t, (i - 1) * t + b);
            if (!in_span(target, projected)) {
                report.failures.push_back(
                    {i, bit_name(i, b, t) + " is not in the span of the transmissions and the side information"});
                break;
            }
        }
    }
    report.ok = report.failures.empty();
    return report;
}

VerificationReport verify_exhaustive(const SenderCode& code, const ValidatedInstance& instance, std::size_t max_bits) {
    check_width(code, instance);
    const std::size_t m = instance.num_messages();
    const std::size_t t = instance.block_size();
    const std::size_t n = m * t;
    if (n > max_bits || n > 20) {
        throw BudgetExceeded("exhaustive verification needs 2^" + std::to_string(n) + " assignments; limit is 2^" +
                             std::to_string(std::min<std::size_t>(max_bits, 20)));
    }

    const BitMatrix all = code.stacked();
    std::vector<std::uint32_t> rows;
    for (const auto& row : all.row_vectors()) {
        rows.push_back(static_cast<std::uint32_t>(row.words().empty() ? 0 : row.words()[0]));
    }
    const std::size_t words = std::max<std::size_t>(1, (rows.size() + 63) / 64);
    const std::uint32_t assignments = std::uint32_t{1} << n;

    // Transmitted bits for every assignment, packed `words` per assignment.
    std::vector<std::uint64_t> sent(static_cast<std::size_t>(assignments) * words, 0);
    for (std::uint32_t a = 0; a < assignments; ++a) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (std::popcount(rows[r] & a) & 1) {
                sent[a * words + r / 64] |= std::uint64_t{1} << (r % 64);
            }
        }
    }

    auto mask_of = [&](const IndexSet& messages) {
        std::uint32_t mask = 0;
        for (auto j : messages) {
            for (std::size_t b = 0; b < t; ++b) {
                mask |= std::uint32_t{1} << ((j - 1) * t + b);
            }
        }
        return mask;
    };

    VerificationReport report;
    report.method = VerificationMethod::exhaustive;
    std::string key(words * sizeof(std::uint64_t) + sizeof(std::uint32_t), '\0');
    for (std::size_t i = 1; i <= m; ++i) {
        const std::uint32_t known = mask_of(instance.side_info(i));
        const std::uint32_t demand = mask_of({i});
        std::unordered_map<std::string, std::uint32_t> seen;
        seen.reserve(assignments);
        for (std::uint32_t a = 0; a < assignments; ++a) {
            const std::uint32_t k = a & known;
            std::memcpy(key.data(), &sent[a * words], words * sizeof(std::uint64_t));
            std::memcpy(key.data() + words * sizeof(std::uint64_t), &k, sizeof(k));
            auto [it, inserted] = seen.emplace(key, a & demand);
            if (!inserted && it->second != (a & demand)) {
                report.failures.push_back({i, "two message assignments agree on the transmissions and K_" +
                                                  std::to_string(i) + " but differ in x" + std::to_string(i)});
                break;
            }
        }
    }
    report.ok = report.failures.empty();
    return report;
}

VerificationReport verify(const SenderCode& code, const ValidatedInstance& instance, VerificationMethod method) {
    return method == VerificationMethod::linear ? verify_linear(code, instance) : verify_exhaustive(code, instance);
}

}  // namespace icode
