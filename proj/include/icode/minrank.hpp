#pragma once

#include <cstddef>
#include <cstdint>

#include "icode/digraph.hpp"
#include "icode/gf2.hpp"

namespace icode {

struct MinrankOptions {
    /// Largest strongly connected component searched exhaustively.
    std::size_t max_component_size = 10;
    /// Search nodes allowed per component before giving up.
    std::uint64_t node_budget = 50'000'000;
};

/// Optimal scalar linear code for a single-sender unicast problem.
struct SingleSenderSolution {
    std::size_t rate = 0;
    /// rate x |vertices| generator; column k carries message vertices[k].
    BitMatrix generator;
    IndexSet vertices;
};

/// Minimum GF(2) rank over matrices with unit diagonal whose off-diagonal
/// support lies on the edges of `d`; the optimal scalar linear broadcast rate.
///
/// Edges between strongly connected components are dropped first and each
/// component is solved separately. Throws BudgetExceeded when a component is
/// larger than the configured limit or the search runs out of nodes.
[[nodiscard]] std::size_t minrank(const Digraph& d, const MinrankOptions& options = {});

/// A full-row-rank generator achieving minrank(d); identical input gives identical output.
[[nodiscard]] SingleSenderSolution optimal_code(const Digraph& d, const MinrankOptions& options = {});

}  // namespace icode
