#include "icode/minrank.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "icode/errors.hpp"

namespace icode {

namespace {

// Depth-first search for a fitting matrix of rank <= target on one strongly
// connected component. Rows are visited in order; a row that already has a
// fitting vector inside the current span takes it without branching, since
// any completion from a larger span is dominated. Otherwise the search
// branches over the distinct cosets of fitting vectors modulo the span.
class ComponentSearch {
public:
    ComponentSearch(std::vector<std::uint64_t> neighbours, std::uint64_t budget)
        : neighbours_(std::move(neighbours)), budget_(budget) {}

    std::vector<std::uint64_t> solve() {
        const std::size_t n = neighbours_.size();
        for (target_ = 1; target_ <= n; ++target_) {
            chosen_.clear();
            if (descend(0, XorBasis{})) {
                return chosen_;
            }
        }
        // The identity always fits, so this is unreachable for n >= 1.
        return {};
    }

private:
    bool fits_in_span(std::size_t row, const XorBasis& basis) const {
        const std::uint64_t self = std::uint64_t{1} << row;
        const auto admissible = restricted_subspace(basis.rows(), neighbours_[row] | self);
        return std::any_of(admissible.begin(), admissible.end(), [self](std::uint64_t w) { return (w & self) != 0; });
    }

    bool descend(std::size_t row, const XorBasis& basis) {
        if (row == neighbours_.size()) {
            return true;
        }
        if (++nodes_ > budget_) {
            throw BudgetExceeded("minrank search exceeded " + std::to_string(budget_) + " nodes on a component of size " +
                                 std::to_string(neighbours_.size()));
        }
        if (fits_in_span(row, basis)) {
            return descend(row + 1, basis);
        }
        if (basis.dimension() >= target_) {
            return false;
        }
        const std::uint64_t self = std::uint64_t{1} << row;
        const std::uint64_t free = neighbours_[row];
        std::unordered_set<std::uint64_t> seen;
        // Densest candidates first: all free entries set, then descending submasks.
        std::uint64_t sub = free;
        while (true) {
            const std::uint64_t v = self | sub;
            if (seen.insert(basis.reduce(v)).second) {
                XorBasis next = basis;
                next.insert(v);
                chosen_.push_back(v);
                if (descend(row + 1, next)) {
                    return true;
                }
                chosen_.pop_back();
            }
            if (sub == 0) {
                break;
            }
            sub = (sub - 1) & free;
        }
        return false;
    }

    std::vector<std::uint64_t> neighbours_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::size_t target_ = 0;
    std::vector<std::uint64_t> chosen_;
};

}  // namespace

SingleSenderSolution optimal_code(const Digraph& d, const MinrankOptions& options) {
    const std::size_t n = d.vertex_count();
    SingleSenderSolution solution;
    solution.vertices = d.vertices();

    auto components = scc(d);
    std::sort(components.begin(), components.end(),
              [](const IndexSet& a, const IndexSet& b) { return a.front() < b.front(); });

    std::vector<BitVector> rows;
    for (const auto& comp : components) {
        if (comp.size() > options.max_component_size || comp.size() > 64) {
            throw BudgetExceeded("search budget exceeded: strongly connected component of size " +
                                 std::to_string(comp.size()) + " exceeds the limit of " +
                                 std::to_string(options.max_component_size));
        }
        const Digraph sub = induced_subdigraph(d, comp);
        std::vector<std::uint64_t> neighbours(comp.size(), 0);
        for (std::size_t u = 0; u < comp.size(); ++u) {
            for (std::size_t v = 0; v < comp.size(); ++v) {
                if (sub.out_row(u).get(v)) {
                    neighbours[u] |= std::uint64_t{1} << v;
                }
            }
        }
        for (auto local : ComponentSearch(std::move(neighbours), options.node_budget).solve()) {
            BitVector row(n);
            for (std::size_t k = 0; k < comp.size(); ++k) {
                if ((local >> k) & 1u) {
                    row.set(d.position(comp[k]));
                }
            }
            rows.push_back(std::move(row));
        }
    }
    solution.rate = rows.size();
    solution.generator = BitMatrix::from_rows(std::move(rows), n);
    return solution;
}

std::size_t minrank(const Digraph& d, const MinrankOptions& options) { return optimal_code(d, options).rate; }

}  // namespace icode
