#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "icode/gf2.hpp"
#include "icode/instance.hpp"

namespace icode {

/// Simple digraph on labelled vertices (1-based message indices).
///
/// Vertices are kept sorted; algorithms work on local positions 0..n-1 and
/// report labels. Edge (i, j) of a side-information digraph means receiver i
/// knows x_j.
class Digraph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    Digraph() = default;
    /// Edgeless digraph on the given labels.
    explicit Digraph(IndexSet vertices);
    /// Edgeless digraph on 1..n.
    static Digraph on_range(std::size_t n);

    [[nodiscard]] std::size_t vertex_count() const { return labels_.size(); }
    [[nodiscard]] const IndexSet& vertices() const { return labels_; }
    [[nodiscard]] bool has_vertex(std::size_t label) const;
    /// Local position of `label`; throws std::out_of_range if absent.
    [[nodiscard]] std::size_t position(std::size_t label) const;
    [[nodiscard]] std::size_t label(std::size_t position) const { return labels_.at(position); }

    /// Throws std::invalid_argument on self-loops or unknown labels. Idempotent.
    void add_edge(std::size_t from, std::size_t to);
    void remove_edge(std::size_t from, std::size_t to);
    [[nodiscard]] bool has_edge(std::size_t from, std::size_t to) const;

    /// Edges as label pairs, sorted.
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] std::size_t edge_count() const;
    [[nodiscard]] IndexSet out_neighbors(std::size_t label) const;

    /// Out-neighbourhood of local vertex `position` as a bit row over local positions.
    [[nodiscard]] const BitVector& out_row(std::size_t position) const { return out_.at(position); }
    /// Adjacency lists over local positions, neighbours ascending.
    [[nodiscard]] std::vector<std::vector<std::size_t>> adjacency() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    IndexSet labels_;
    std::vector<BitVector> out_;
};

using SideInfoDigraph = Digraph;

/// One edge (i, j) per x_j in K_i.
[[nodiscard]] SideInfoDigraph build_digraph(const ValidatedInstance& instance);

/// Sub-digraph induced by `vertices`; throws std::invalid_argument if any is not a vertex of `d`.
[[nodiscard]] Digraph induced_subdigraph(const Digraph& d, const IndexSet& vertices);

/// Strongly connected components as label sets, each sorted, listed in a
/// topological order of the condensation (sources first).
[[nodiscard]] std::vector<IndexSet> scc(const Digraph& d);

/// Removes every edge joining two different strongly connected components,
/// i.e. every edge that lies on no directed cycle.
[[nodiscard]] Digraph reduce_noncycle_edges(const Digraph& d);

/// Kahn's algorithm, always taking the lowest available label next.
/// std::nullopt when `d` has a directed cycle.
[[nodiscard]] std::optional<IndexSet> topological_order(const Digraph& d);

[[nodiscard]] Digraph directed_cycle(std::size_t n);
[[nodiscard]] Digraph complete_digraph(std::size_t n);

namespace graph {

/// Tarjan SCC over adjacency lists; vertices visited in index order.
/// Components come out in topological order of the condensation, members ascending.
[[nodiscard]] std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& adjacency);

/// Lowest-index-first topological sort; std::nullopt if cyclic.
[[nodiscard]] std::optional<std::vector<std::size_t>> topological_sort(
    const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace graph

}  // namespace icode
