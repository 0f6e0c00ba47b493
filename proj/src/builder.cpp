#include "icode/builder.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "icode/digraph.hpp"
#include "icode/errors.hpp"
#include "icode/interaction.hpp"
#include "icode/verifier.hpp"

namespace icode {

namespace {

const SenderSet kOne = SenderSet::of({1});
const SenderSet kTwo = SenderSet::of({2});
const SenderSet kBoth = SenderSet::of({1, 2});

LinearCodeword sub_code(const SubCodes& codes, SenderSet s, std::size_t m, std::size_t t) {
    auto it = codes.find(s);
    return it == codes.end() ? LinearCodeword(m * t) : embed(it->second, m, t);
}

// C[a:b] with the empty codeword for an empty range.
LinearCodeword part(const LinearCodeword& c, std::size_t a, std::size_t b) {
    if (a > b || a < 1) {
        return LinearCodeword(c.columns());
    }
    return slice(c, a, b);
}

void send(SenderCode& code, std::size_t sender, const LinearCodeword& c) {
    for (const auto& r : c.rows()) {
        code.add_row(sender, r);
    }
}

void check(const SenderCode& code, const ValidatedInstance& instance) {
    if (auto violation = sender_violation(code, instance.senders(), instance.block_size())) {
        throw std::logic_error("constructed code breaks the sender structure: " + *violation);
    }
    const auto report = verify_linear(code, instance);
    if (!report.ok) {
        throw std::logic_error("constructed code fails at receiver " + std::to_string(report.failures.front().receiver) +
                               ": " + report.failures.front().reason);
    }
}

}  // namespace

SubCodes optimal_sub_codes(const ValidatedInstance& instance, const MinrankOptions& options) {
    const auto d = build_digraph(instance);
    const auto partition_sets = partition(instance);
    SubCodes codes;
    for (const auto& [s, p] : partition_sets.parts()) {
        if (!p.empty()) {
            codes.emplace(s, optimal_code(induced_subdigraph(d, p), options));
        }
    }
    return codes;
}

LinearCodeword embed(const SingleSenderSolution& code, std::size_t num_messages, std::size_t block_size) {
    const std::size_t columns = num_messages * block_size;
    std::vector<BitVector> rows;
    for (const auto& scalar : code.generator.row_vectors()) {
        for (std::size_t b = 0; b < block_size; ++b) {
            BitVector row(columns);
            for (std::size_t k = 0; k < code.vertices.size(); ++k) {
                if (scalar.get(k)) {
                    row.set((code.vertices[k] - 1) * block_size + b);
                }
            }
            rows.push_back(std::move(row));
        }
    }
    return LinearCodeword(std::move(rows), columns);
}

SenderCode build(const ValidatedInstance& instance, const CaseLabel& label, const SubCodes& sub_codes) {
    if (instance.num_senders() != 2) {
        throw Unsupported("two-sender construction called with " + std::to_string(instance.num_senders()) +
                          " senders");
    }
    if (label.value == Case::Unresolved) {
        throw UnresolvedCase("no construction for an unresolved interaction digraph; use the oracle witness");
    }
    const auto h = interaction_digraph(build_digraph(instance), partition(instance));
    for (const auto& [from, to] : required_interactions(label.value, h)) {
        auto e = h.edge(from, to);
        if (!e || !e->fully_participated) {
            throw Unsupported("case " + to_string(label.value) + " construction needs the interaction {" + from.key() +
                              "} -> {" + to.key() + "} to be fully participated");
        }
    }

    const std::size_t m = instance.num_messages();
    const std::size_t t = instance.block_size();
    const auto c1 = sub_code(sub_codes, kOne, m, t);
    const auto c2 = sub_code(sub_codes, kTwo, m, t);
    const auto c12 = sub_code(sub_codes, kBoth, m, t);
    const std::size_t l1 = c1.length();
    const std::size_t l2 = c2.length();
    const std::size_t l12 = c12.length();

    SenderCode code(m * t);
    switch (label.value) {
        case Case::I:
        case Case::IIA:
            send(code, 1, c1);
            send(code, 1, c12);
            send(code, 2, c2);
            break;
        case Case::IIB:
            send(code, 1, xor_pad(c1, part(c12, 1, std::min(l1, l12))));
            send(code, 2, xor_pad(c2, part(c12, l1 + 1, std::min(l1 + l2, l12))));
            send(code, 1, part(c12, l1 + l2 + 1, l12));
            break;
        case Case::IIC:
            send(code, 1, xor_pad(c1, c12));
            send(code, 2, c2);
            break;
        case Case::IID:
            send(code, 1, c1);
            send(code, 2, xor_pad(c2, c12));
            break;
        case Case::IIE: {
            const std::size_t k = std::min({l1, l2, l12});
            send(code, 1, xor_pad(c1, part(c12, 1, k)));
            send(code, 2, xor_pad(c2, part(c12, 1, k)));
            send(code, 1, part(c12, k + 1, l12));
            break;
        }
        case Case::Unresolved: break;
    }
    check(code, instance);
    return code;
}

SenderCode build_multi(const ValidatedInstance& instance, const MultiRateReport& report, const SubCodes& sub_codes) {
    if (report.rule == MultiRule::none) {
        throw UnresolvedCase("no rate rule applies to this interaction digraph; use the oracle witness");
    }
    const std::size_t m = instance.num_messages();
    const std::size_t t = instance.block_size();
    SenderCode code(m * t);
    for (const auto& cluster : report.clusters) {
        std::uint32_t common = ~std::uint32_t{0};
        LinearCodeword combined(m * t);
        for (auto s : cluster) {
            common &= s.mask();
            combined = xor_pad(combined, sub_code(sub_codes, s, m, t));
        }
        if (common == 0) {
            throw std::logic_error("cluster without a common sender");
        }
        send(code, static_cast<std::size_t>(std::countr_zero(common)) + 1, combined);
    }
    check(code, instance);
    return code;
}

}  // namespace icode
