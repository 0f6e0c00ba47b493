#include "icode/interaction.hpp"

#include <algorithm>

namespace icode {

InteractionDigraph::InteractionDigraph(std::vector<SenderSet> vertices, std::vector<InteractionEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    std::sort(edges_.begin(), edges_.end(), [](const InteractionEdge& a, const InteractionEdge& b) {
        if (a.from != b.from) {
            return a.from < b.from;
        }
        return a.to < b.to;
    });
}

bool InteractionDigraph::has_vertex(SenderSet s) const {
    return std::find(vertices_.begin(), vertices_.end(), s) != vertices_.end();
}

bool InteractionDigraph::has_edge(SenderSet from, SenderSet to) const { return edge(from, to).has_value(); }

std::optional<InteractionEdge> InteractionDigraph::edge(SenderSet from, SenderSet to) const {
    for (const auto& e : edges_) {
        if (e.from == from && e.to == to) {
            return e;
        }
    }
    return std::nullopt;
}

bool InteractionDigraph::all_fully_participated() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const InteractionEdge& e) { return e.fully_participated; });
}

bool InteractionDigraph::acyclic() const { return graph::topological_sort(adjacency()).has_value(); }

std::vector<std::vector<std::size_t>> InteractionDigraph::adjacency() const {
    auto pos = [this](SenderSet s) {
        return static_cast<std::size_t>(std::find(vertices_.begin(), vertices_.end(), s) - vertices_.begin());
    };
    std::vector<std::vector<std::size_t>> adj(vertices_.size());
    for (const auto& e : edges_) {
        adj[pos(e.from)].push_back(pos(e.to));
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
    }
    return adj;
}

InteractionDigraph InteractionDigraph::induced(const std::vector<SenderSet>& keep) const {
    auto kept = [&keep](SenderSet s) { return std::find(keep.begin(), keep.end(), s) != keep.end(); };
    std::vector<SenderSet> v;
    std::copy_if(vertices_.begin(), vertices_.end(), std::back_inserter(v), kept);
    std::vector<InteractionEdge> e;
    std::copy_if(edges_.begin(), edges_.end(), std::back_inserter(e),
                 [&](const InteractionEdge& x) { return kept(x.from) && kept(x.to); });
    return InteractionDigraph(std::move(v), std::move(e));
}

InteractionDigraph interaction_digraph(const SideInfoDigraph& d, const MessagePartition& p) {
    const auto sets = p.nonempty_sets();
    std::vector<InteractionEdge> edges;
    for (auto from : sets) {
        for (auto to : sets) {
            if (from == to) {
                continue;
            }
            std::size_t present = 0;
            const auto& src = p.part(from);
            const auto& dst = p.part(to);
            for (auto u : src) {
                for (auto v : dst) {
                    if (d.has_edge(u, v)) {
                        ++present;
                    }
                }
            }
            if (present > 0) {
                edges.push_back({from, to, present == src.size() * dst.size()});
            }
        }
    }
    return InteractionDigraph(sets, std::move(edges));
}

bool two_cycle(const InteractionDigraph& h, SenderSet a, SenderSet b) {
    return h.has_edge(a, b) && h.has_edge(b, a);
}

std::vector<std::vector<SenderSet>> interaction_components(const InteractionDigraph& h) {
    std::vector<std::vector<SenderSet>> out;
    for (const auto& comp : graph::strongly_connected_components(h.adjacency())) {
        std::vector<SenderSet> sets;
        for (auto v : comp) {
            sets.push_back(h.vertices()[v]);
        }
        out.push_back(std::move(sets));
    }
    return out;
}

}  // namespace icode
