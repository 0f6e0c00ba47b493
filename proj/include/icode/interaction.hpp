#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "icode/digraph.hpp"
#include "icode/instance.hpp"

namespace icode {

struct InteractionEdge {
    SenderSet from;
    SenderSet to;
    /// Every vertex of D_from has an edge to every vertex of D_to.
    bool fully_participated = false;

    friend bool operator==(const InteractionEdge&, const InteractionEdge&) = default;
};

/// Digraph on the sets S with non-empty P_S. Edge (S, S') exists iff some
/// receiver in P_S knows some message in P_S'.
class InteractionDigraph {
public:
    InteractionDigraph() = default;
    InteractionDigraph(std::vector<SenderSet> vertices, std::vector<InteractionEdge> edges);

    [[nodiscard]] const std::vector<SenderSet>& vertices() const { return vertices_; }
    [[nodiscard]] const std::vector<InteractionEdge>& edges() const { return edges_; }
    [[nodiscard]] bool has_vertex(SenderSet s) const;
    [[nodiscard]] bool has_edge(SenderSet from, SenderSet to) const;
    [[nodiscard]] std::optional<InteractionEdge> edge(SenderSet from, SenderSet to) const;
    [[nodiscard]] bool all_fully_participated() const;
    [[nodiscard]] bool acyclic() const;

    /// Adjacency over positions in vertices().
    [[nodiscard]] std::vector<std::vector<std::size_t>> adjacency() const;
    /// Sub-digraph on the listed vertices (absent ones ignored).
    [[nodiscard]] InteractionDigraph induced(const std::vector<SenderSet>& keep) const;

private:
    std::vector<SenderSet> vertices_;
    std::vector<InteractionEdge> edges_;
};

[[nodiscard]] InteractionDigraph interaction_digraph(const SideInfoDigraph& d, const MessagePartition& p);

/// True iff both (a, b) and (b, a) are edges of `h`.
[[nodiscard]] bool two_cycle(const InteractionDigraph& h, SenderSet a, SenderSet b);

/// Strongly connected components of `h`, sources first.
[[nodiscard]] std::vector<std::vector<SenderSet>> interaction_components(const InteractionDigraph& h);

}  // namespace icode
