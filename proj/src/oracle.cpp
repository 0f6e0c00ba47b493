#include "icode/oracle.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "icode/digraph.hpp"
#include "icode/errors.hpp"

namespace icode {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t message) { return Mask{1} << (message - 1); }

Mask mask_of(const IndexSet& messages) {
    Mask m = 0;
    for (auto j : messages) {
        m |= bit(j);
    }
    return m;
}

// Order of the printed bit string, where x_1 is the leftmost character.
Mask print_key(Mask v, std::size_t m) {
    Mask out = 0;
    for (std::size_t c = 0; c < m; ++c) {
        if ((v >> c) & 1u) {
            out |= Mask{1} << (m - 1 - c);
        }
    }
    return out;
}

class SubspaceSearch {
public:
    SubspaceSearch(const ValidatedInstance& instance, const OracleOptions& options)
        : m_(instance.num_messages()), budget_(options.budget) {
        for (std::size_t i = 1; i <= m_; ++i) {
            known_.push_back(mask_of(instance.side_info(i)));
        }
        for (const auto& s : instance.senders()) {
            holdings_.push_back(mask_of(s));
        }
    }

    // Returns a basis of the first feasible subspace of dimension `dim`, if any.
    std::optional<std::vector<Mask>> search(std::size_t dim) {
        std::vector<std::size_t> pivots(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            pivots[k] = k;
        }
        while (true) {
            if (auto found = search_pivots(pivots)) {
                return found;
            }
            if (!next_combination(pivots)) {
                return std::nullopt;
            }
        }
    }

    [[nodiscard]] bool feasible(const std::vector<Mask>& rows) const {
        for (std::size_t i = 0; i < m_; ++i) {
            XorBasis span;
            for (auto r : rows) {
                span.insert(r & ~known_[i]);
            }
            if (!span.contains(Mask{1} << i)) {
                return false;
            }
        }
        XorBasis supported;
        for (auto h : holdings_) {
            for (auto v : restricted_subspace(rows, h)) {
                supported.insert(v);
            }
        }
        return supported.dimension() == rows.size();
    }

    [[nodiscard]] std::vector<std::pair<std::size_t, Mask>> witness(const std::vector<Mask>& rows) const {
        std::vector<std::pair<std::size_t, Mask>> out;
        XorBasis chosen;
        for (std::size_t s = 0; s < holdings_.size() && chosen.dimension() < rows.size(); ++s) {
            const auto basis = restricted_subspace(rows, holdings_[s]);
            std::vector<Mask> members;
            for (Mask combo = 1; combo < (Mask{1} << basis.size()); ++combo) {
                Mask v = 0;
                for (std::size_t k = 0; k < basis.size(); ++k) {
                    if ((combo >> k) & 1u) {
                        v ^= basis[k];
                    }
                }
                members.push_back(v);
            }
            std::sort(members.begin(), members.end(),
                      [this](Mask a, Mask b) { return print_key(a, m_) < print_key(b, m_); });
            for (auto v : members) {
                if (chosen.insert(v)) {
                    out.emplace_back(s + 1, v);
                }
            }
        }
        return out;
    }

    [[nodiscard]] std::uint64_t examined() const { return examined_; }

private:
    bool next_combination(std::vector<std::size_t>& c) const {
        const std::size_t k = c.size();
        for (std::size_t i = k; i-- > 0;) {
            if (c[i] < m_ - k + i) {
                ++c[i];
                for (std::size_t j = i + 1; j < k; ++j) {
                    c[j] = c[j - 1] + 1;
                }
                return true;
            }
        }
        return false;
    }

    std::optional<std::vector<Mask>> search_pivots(const std::vector<std::size_t>& pivots) {
        const std::size_t dim = pivots.size();
        Mask pivot_mask = 0;
        for (auto p : pivots) {
            pivot_mask |= Mask{1} << p;
        }
        // Free entries of each row: columns after its pivot that are not pivots.
        std::vector<std::vector<std::size_t>> free_cols(dim);
        std::size_t total_free = 0;
        for (std::size_t k = 0; k < dim; ++k) {
            for (std::size_t c = pivots[k] + 1; c < m_; ++c) {
                if (((pivot_mask >> c) & 1u) == 0) {
                    free_cols[k].push_back(c);
                }
            }
            total_free += free_cols[k].size();
        }
        std::vector<Mask> rows(dim);
        for (Mask f = 0; f < (Mask{1} << total_free); ++f) {
            if (++examined_ > budget_) {
                throw BudgetExceeded("oracle search exceeded " + std::to_string(budget_) + " candidate subspaces");
            }
            std::size_t used = 0;
            for (std::size_t k = 0; k < dim; ++k) {
                Mask r = Mask{1} << pivots[k];
                for (auto c : free_cols[k]) {
                    if ((f >> used++) & 1u) {
                        r |= Mask{1} << c;
                    }
                }
                rows[k] = r;
            }
            if (feasible(rows)) {
                return rows;
            }
        }
        return std::nullopt;
    }

    std::size_t m_;
    std::uint64_t budget_;
    std::uint64_t examined_ = 0;
    std::vector<Mask> known_;
    std::vector<Mask> holdings_;
};

}  // namespace

OracleResult oracle_rate(const ValidatedInstance& instance, const OracleOptions& options) {
    if (instance.block_size() != 1) {
        throw Unsupported("the oracle searches scalar codes only; got t = " + std::to_string(instance.block_size()));
    }
    const std::size_t m = instance.num_messages();
    if (m > options.limit_m || m > 63) {
        throw BudgetExceeded("oracle limit exceeded: m = " + std::to_string(m) + " is above the limit of " +
                             std::to_string(options.limit_m));
    }
    SubspaceSearch search(instance, options);
    for (std::size_t dim = 0; dim <= m; ++dim) {
        auto rows = search.search(dim);
        if (!rows) {
            continue;
        }
        OracleResult result;
        result.rate = dim;
        result.examined = search.examined();
        result.witness = SenderCode(m);
        for (auto [sender, v] : search.witness(*rows)) {
            BitVector row(m);
            for (std::size_t c = 0; c < m; ++c) {
                if ((v >> c) & 1u) {
                    row.set(c);
                }
            }
            result.witness.add_row(sender, std::move(row));
        }
        return result;
    }
    // Sending every message in the clear is always feasible, so dim = m succeeds.
    throw std::logic_error("oracle found no feasible code");
}

std::size_t single_sender_projection(const ValidatedInstance& instance, const MinrankOptions& options) {
    return minrank(build_digraph(instance), options);
}

}  // namespace icode
