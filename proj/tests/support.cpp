#include "support.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "icode/digraph.hpp"
#include "icode/interaction.hpp"
#include "icode/json_io.hpp"
#include "icode/verifier.hpp"

namespace icode::testing {

std::filesystem::path data_dir() { return ICODE_TEST_DATA_DIR; }

ValidatedInstance load_example(const std::string& name) {
    return validate_or_throw(io::load_instance(data_dir() / name));
}

ValidatedInstance make_instance(std::size_t m, std::vector<IndexSet> senders,
                                std::map<std::size_t, IndexSet> side_info, std::size_t t) {
    ProblemInstance p;
    p.num_messages = m;
    p.block_size = t;
    p.senders = std::move(senders);
    p.side_info = std::move(side_info);
    return validate_or_throw(p);
}

ValidatedInstance with_digraph(const ValidatedInstance& base, const Digraph& d) {
    auto p = base.to_problem();
    p.side_info.clear();
    for (auto [i, j] : d.edges()) {
        p.side_info[i].push_back(j);
    }
    return validate_or_throw(p);
}

const std::array<Case, 64>& case_of_mask() {
    static const std::array<Case, 64> table = [] {
        std::array<Case, 64> out{};
        Rng rng(0);
        for (unsigned mask = 0; mask < 64; ++mask) {
            const auto inst = two_sender_instance(rng, {1, 1, 1}, mask, true, 0.0);
            out[mask] = classify(interaction_digraph(build_digraph(inst), partition(inst))).value;
        }
        return out;
    }();
    return table;
}

ValidatedInstance two_sender_instance(Rng& rng, PartSizes sizes, unsigned mask, bool full, double inner) {
    const std::size_t m = sizes.only1 + sizes.only2 + sizes.both;
    std::vector<int> group;
    group.insert(group.end(), sizes.only1, 0);
    group.insert(group.end(), sizes.only2, 1);
    group.insert(group.end(), sizes.both, 2);

    std::vector<std::size_t> label(m);
    std::iota(label.begin(), label.end(), 1);
    std::shuffle(label.begin(), label.end(), rng);

    Digraph d = Digraph::on_range(m);
    std::bernoulli_distribution inner_edge(inner);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
            if (u != v && group[u] == group[v] && inner_edge(rng)) {
                d.add_edge(label[u], label[v]);
            }
        }
    }
    for (std::size_t bit = 0; bit < kPairs.size(); ++bit) {
        if (((mask >> bit) & 1u) == 0) {
            continue;
        }
        const auto [a, b] = kPairs[bit];
        std::vector<std::pair<std::size_t, std::size_t>> cross;
        for (std::size_t u = 0; u < m; ++u) {
            for (std::size_t v = 0; v < m; ++v) {
                if (group[u] == a && group[v] == b) {
                    cross.emplace_back(label[u], label[v]);
                }
            }
        }
        if (cross.empty()) {
            continue;
        }
        if (full) {
            for (auto [u, v] : cross) {
                d.add_edge(u, v);
            }
            continue;
        }
        const std::size_t forced = std::uniform_int_distribution<std::size_t>(0, cross.size() - 1)(rng);
        for (std::size_t k = 0; k < cross.size(); ++k) {
            if (k == forced || coin(rng)) {
                d.add_edge(cross[k].first, cross[k].second);
            }
        }
    }

    std::vector<IndexSet> senders(2);
    for (std::size_t u = 0; u < m; ++u) {
        if (group[u] != 1) {
            senders[0].push_back(label[u]);
        }
        if (group[u] != 0) {
            senders[1].push_back(label[u]);
        }
    }
    std::map<std::size_t, IndexSet> side;
    for (auto [i, j] : d.edges()) {
        side[i].push_back(j);
    }
    return make_instance(m, std::move(senders), std::move(side));
}

PartSizes random_sizes(Rng& rng, std::size_t max_m) {
    PartSizes s;
    const std::size_t total = std::uniform_int_distribution<std::size_t>(3, max_m)(rng);
    std::uniform_int_distribution<int> which(0, 2);
    for (std::size_t k = 3; k < total; ++k) {
        switch (which(rng)) {
            case 0: ++s.only1; break;
            case 1: ++s.only2; break;
            default: ++s.both; break;
        }
    }
    return s;
}

ValidatedInstance random_instance(Rng& rng, std::size_t m, std::size_t num_senders, double p) {
    std::vector<std::size_t> label(m);
    std::iota(label.begin(), label.end(), 1);
    std::shuffle(label.begin(), label.end(), rng);

    std::uniform_int_distribution<std::uint32_t> owners(1, (std::uint32_t{1} << num_senders) - 1);
    std::vector<IndexSet> senders(num_senders);
    for (std::size_t k = 0; k < m; ++k) {
        const std::uint32_t mask = k < num_senders ? std::uint32_t{1} << k : owners(rng);
        for (std::size_t s = 0; s < num_senders; ++s) {
            if ((mask >> s) & 1u) {
                senders[s].push_back(label[k]);
            }
        }
    }
    std::map<std::size_t, IndexSet> side;
    for (auto [i, j] : random_digraph(rng, m, p).edges()) {
        side[i].push_back(j);
    }
    return make_instance(m, std::move(senders), std::move(side));
}

Digraph random_digraph(Rng& rng, std::size_t n, double p) {
    Digraph d = Digraph::on_range(n);
    std::bernoulli_distribution edge(p);
    for (std::size_t u = 1; u <= n; ++u) {
        for (std::size_t v = 1; v <= n; ++v) {
            if (u != v && edge(rng)) {
                d.add_edge(u, v);
            }
        }
    }
    return d;
}

std::size_t brute_rank(const BitMatrix& m) {
    std::set<std::vector<std::uint64_t>> span;
    const std::size_t words = (m.cols() + 63) / 64;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m.rows()); ++pick) {
        std::vector<std::uint64_t> sum(words, 0);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if ((pick >> r) & 1u) {
                const auto w = m.row(r).words();
                for (std::size_t k = 0; k < words; ++k) {
                    sum[k] ^= w[k];
                }
            }
        }
        span.insert(sum);
    }
    return static_cast<std::size_t>(std::countr_zero(span.size()));
}

std::size_t brute_minrank(const Digraph& d) {
    const auto edges = d.edges();
    const std::size_t n = d.vertex_count();
    std::size_t best = n;
    for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << edges.size()); ++fill) {
        BitMatrix a = BitMatrix::identity(n);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if ((fill >> e) & 1u) {
                a.set(d.position(edges[e].first), d.position(edges[e].second));
            }
        }
        best = std::min(best, brute_rank(a));
    }
    return best;
}

std::size_t brute_oracle(const ValidatedInstance& instance) {
    const std::size_t m = instance.num_messages();
    std::set<std::uint32_t> vectors;
    for (const auto& s : instance.senders()) {
        std::uint32_t support = 0;
        for (auto j : s) {
            support |= std::uint32_t{1} << (j - 1);
        }
        for (std::uint32_t v = support; v != 0; v = (v - 1) & support) {
            vectors.insert(v);
        }
    }
    const std::vector<std::uint32_t> pool(vectors.begin(), vectors.end());

    auto sender_of = [&](std::uint32_t v) {
        for (std::size_t s = 1; s <= instance.num_senders(); ++s) {
            std::uint32_t support = 0;
            for (auto j : instance.sender(s)) {
                support |= std::uint32_t{1} << (j - 1);
            }
            if ((v & ~support) == 0) {
                return s;
            }
        }
        return std::size_t{0};
    };
    auto decodes = [&](const std::vector<std::uint32_t>& rows) {
        SenderCode code(m);
        for (auto v : rows) {
            BitVector row(m);
            for (std::size_t j = 0; j < m; ++j) {
                row.set(j, (v >> j) & 1u);
            }
            code.add_row(sender_of(v), std::move(row));
        }
        return verify_exhaustive(code, instance).ok;
    };

    for (std::size_t length = 0; length <= m; ++length) {
        std::vector<bool> choose(pool.size(), false);
        std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(std::min(length, pool.size())), true);
        do {
            std::vector<std::uint32_t> rows;
            for (std::size_t k = 0; k < pool.size(); ++k) {
                if (choose[k]) {
                    rows.push_back(pool[k]);
                }
            }
            if (decodes(rows)) {
                return length;
            }
        } while (std::prev_permutation(choose.begin(), choose.end()));
    }
    return m;
}

SenderCode random_code(Rng& rng, const ValidatedInstance& instance, std::size_t length) {
    const std::size_t columns = instance.num_messages() * instance.block_size();
    SenderCode code(columns);
    std::uniform_int_distribution<std::size_t> pick(1, instance.num_senders());
    std::bernoulli_distribution coin(0.5);
    const std::size_t t = instance.block_size();
    for (std::size_t r = 0; r < length; ++r) {
        const std::size_t s = pick(rng);
        BitVector row(columns);
        for (auto j : instance.sender(s)) {
            for (std::size_t b = 0; b < t; ++b) {
                row.set((j - 1) * t + b, coin(rng));
            }
        }
        code.add_row(s, std::move(row));
    }
    return code;
}

}  // namespace icode::testing
