#include "icode/digraph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace icode {

Digraph::Digraph(IndexSet vertices) : labels_(std::move(vertices)) {
    std::sort(labels_.begin(), labels_.end());
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
    out_.assign(labels_.size(), BitVector(labels_.size()));
}

Digraph Digraph::on_range(std::size_t n) {
    IndexSet v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = i + 1;
    }
    return Digraph(std::move(v));
}

bool Digraph::has_vertex(std::size_t label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

std::size_t Digraph::position(std::size_t label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
        throw std::out_of_range("vertex " + std::to_string(label) + " not in digraph");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

void Digraph::add_edge(std::size_t from, std::size_t to) {
    if (from == to) {
        throw std::invalid_argument("self-loop on vertex " + std::to_string(from));
    }
    if (!has_vertex(from) || !has_vertex(to)) {
        throw std::invalid_argument("edge (" + std::to_string(from) + ", " + std::to_string(to) +
                                    ") has an endpoint outside the digraph");
    }
    out_[position(from)].set(position(to));
}

void Digraph::remove_edge(std::size_t from, std::size_t to) {
    if (has_vertex(from) && has_vertex(to)) {
        out_[position(from)].set(position(to), false);
    }
}

bool Digraph::has_edge(std::size_t from, std::size_t to) const {
    if (!has_vertex(from) || !has_vertex(to)) {
        return false;
    }
    return out_[position(from)].get(position(to));
}

std::vector<Digraph::Edge> Digraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < labels_.size(); ++u) {
        for (std::size_t v = 0; v < labels_.size(); ++v) {
            if (out_[u].get(v)) {
                out.emplace_back(labels_[u], labels_[v]);
            }
        }
    }
    return out;
}

std::size_t Digraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& row : out_) {
        n += row.count();
    }
    return n;
}

IndexSet Digraph::out_neighbors(std::size_t label) const {
    IndexSet out;
    const auto& row = out_[position(label)];
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        if (row.get(v)) {
            out.push_back(labels_[v]);
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> Digraph::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(labels_.size());
    for (std::size_t u = 0; u < labels_.size(); ++u) {
        for (std::size_t v = 0; v < labels_.size(); ++v) {
            if (out_[u].get(v)) {
                adj[u].push_back(v);
            }
        }
    }
    return adj;
}

SideInfoDigraph build_digraph(const ValidatedInstance& instance) {
    auto d = Digraph::on_range(instance.num_messages());
    for (std::size_t i = 1; i <= instance.num_messages(); ++i) {
        for (auto j : instance.side_info(i)) {
            d.add_edge(i, j);
        }
    }
    return d;
}

Digraph induced_subdigraph(const Digraph& d, const IndexSet& vertices) {
    for (auto v : vertices) {
        if (!d.has_vertex(v)) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " not in digraph");
        }
    }
    Digraph sub(vertices);
    for (auto u : sub.vertices()) {
        for (auto v : sub.vertices()) {
            if (u != v && d.has_edge(u, v)) {
                sub.add_edge(u, v);
            }
        }
    }
    return sub;
}

namespace graph {

std::vector<std::vector<std::size_t>> strongly_connected_components(
    const std::vector<std::vector<std::size_t>>& adjacency) {
    const std::size_t n = adjacency.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;

    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (auto w : adjacency[v]) {
            if (index[w] == unvisited) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> comp;
            std::size_t w = 0;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            components.push_back(std::move(comp));
        }
    };

    for (std::size_t v = 0; v < n; ++v) {
        if (index[v] == unvisited) {
            visit(v);
        }
    }
    // Tarjan emits sink components first.
    std::reverse(components.begin(), components.end());
    return components;
}

std::optional<std::vector<std::size_t>> topological_sort(const std::vector<std::vector<std::size_t>>& adjacency) {
    const std::size_t n = adjacency.size();
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& out : adjacency) {
        for (auto w : out) {
            ++indegree[w];
        }
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < n; ++v) {
        if (indegree[v] == 0) {
            ready.push(v);
        }
    }
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        auto v = ready.top();
        ready.pop();
        order.push_back(v);
        for (auto w : adjacency[v]) {
            if (--indegree[w] == 0) {
                ready.push(w);
            }
        }
    }
    if (order.size() != n) {
        return std::nullopt;
    }
    return order;
}

}  // namespace graph

std::vector<IndexSet> scc(const Digraph& d) {
    std::vector<IndexSet> out;
    for (const auto& comp : graph::strongly_connected_components(d.adjacency())) {
        IndexSet labels;
        for (auto v : comp) {
            labels.push_back(d.label(v));
        }
        out.push_back(std::move(labels));
    }
    return out;
}

Digraph reduce_noncycle_edges(const Digraph& d) {
    std::vector<std::size_t> component(d.vertex_count(), 0);
    const auto comps = graph::strongly_connected_components(d.adjacency());
    for (std::size_t c = 0; c < comps.size(); ++c) {
        for (auto v : comps[c]) {
            component[v] = c;
        }
    }
    Digraph out(d.vertices());
    for (auto [u, v] : d.edges()) {
        if (component[d.position(u)] == component[d.position(v)]) {
            out.add_edge(u, v);
        }
    }
    return out;
}

std::optional<IndexSet> topological_order(const Digraph& d) {
    auto order = graph::topological_sort(d.adjacency());
    if (!order) {
        return std::nullopt;
    }
    IndexSet labels;
    for (auto v : *order) {
        labels.push_back(d.label(v));
    }
    return labels;
}

Digraph directed_cycle(std::size_t n) {
    auto d = Digraph::on_range(n);
    for (std::size_t i = 1; n > 1 && i <= n; ++i) {
        d.add_edge(i, i % n + 1);
    }
    return d;
}

Digraph complete_digraph(std::size_t n) {
    auto d = Digraph::on_range(n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (i != j) {
                d.add_edge(i, j);
            }
        }
    }
    return d;
}

}  // namespace icode
