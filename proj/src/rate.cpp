#include "icode/rate.hpp"

#include <algorithm>
#include <array>

#include "icode/digraph.hpp"
#include "icode/errors.hpp"

namespace icode {

namespace {

const SenderSet kOne = SenderSet::of({1});
const SenderSet kTwo = SenderSet::of({2});
const SenderSet kBoth = SenderSet::of({1, 2});

bool fully(const InteractionDigraph& h, SenderSet a, SenderSet b) {
    auto e = h.edge(a, b);
    return e && e->fully_participated;
}

InteractionDigraph completed(const InteractionDigraph& h) {
    auto edges = h.edges();
    for (auto& e : edges) {
        e.fully_participated = true;
    }
    return InteractionDigraph(h.vertices(), std::move(edges));
}

Rational sum_of(const std::vector<SenderSet>& sets, const SubRates& rates) {
    Rational total;
    for (auto s : sets) {
        total += sub_rate(rates, s);
    }
    return total;
}

Rational max_of(const std::vector<SenderSet>& sets, const SubRates& rates) {
    Rational best;
    for (auto s : sets) {
        best = max(best, sub_rate(rates, s));
    }
    return best;
}

std::uint32_t common_senders(const std::vector<SenderSet>& sets) {
    std::uint32_t mask = ~std::uint32_t{0};
    for (auto s : sets) {
        mask &= s.mask();
    }
    return mask;
}

bool mutual_clique(const InteractionDigraph& h, const std::vector<SenderSet>& sets) {
    for (auto a : sets) {
        for (auto b : sets) {
            if (a != b && !fully(h, a, b)) {
                return false;
            }
        }
    }
    return true;
}

// Groups sets whose codes can share transmissions: every pair fully
// participated in both directions and a sender common to the group.
std::vector<std::vector<SenderSet>> greedy_clusters(const InteractionDigraph& h) {
    std::vector<std::vector<SenderSet>> groups;
    for (auto s : h.vertices()) {
        bool placed = false;
        for (auto& g : groups) {
            auto candidate = g;
            candidate.push_back(s);
            if (common_senders(candidate) != 0 && mutual_clique(h, candidate)) {
                g = std::move(candidate);
                placed = true;
                break;
            }
        }
        if (!placed) {
            groups.push_back({s});
        }
    }
    return groups;
}

}  // namespace

std::string to_string(Case c) {
    switch (c) {
        case Case::I: return "I";
        case Case::IIA: return "II-A";
        case Case::IIB: return "II-B";
        case Case::IIC: return "II-C";
        case Case::IID: return "II-D";
        case Case::IIE: return "II-E";
        case Case::Unresolved: return "Unresolved";
    }
    return "Unresolved";
}

std::optional<Case> parse_case(std::string_view text) {
    static constexpr std::array<Case, 7> all{Case::I,   Case::IIA, Case::IIB,       Case::IIC,
                                             Case::IID, Case::IIE, Case::Unresolved};
    for (auto c : all) {
        if (to_string(c) == text) {
            return c;
        }
    }
    return std::nullopt;
}

std::vector<Interaction> required_interactions(Case c, const InteractionDigraph& h) {
    switch (c) {
        case Case::IIB: return {{kOne, kBoth}, {kBoth, kOne}, {kTwo, kBoth}, {kBoth, kTwo}};
        case Case::IIC: return {{kOne, kBoth}, {kBoth, kOne}};
        case Case::IID: return {{kTwo, kBoth}, {kBoth, kTwo}};
        case Case::IIE: {
            std::vector<Interaction> all;
            for (const auto& e : h.edges()) {
                all.emplace_back(e.from, e.to);
            }
            return all;
        }
        default: return {};
    }
}

CaseLabel classify(const InteractionDigraph& h) {
    if (h.vertices().size() > 3) {
        throw Unsupported("two-sender classification needs at most 3 interaction vertices, got " +
                          std::to_string(h.vertices().size()));
    }
    for (auto v : h.vertices()) {
        if (v != kOne && v != kTwo && v != kBoth) {
            throw Unsupported("two-sender classification got vertex {" + v.key() + "}");
        }
    }

    CaseLabel label;
    label.all_interactions_fully_participated = h.all_fully_participated();
    const bool one_shared = two_cycle(h, kOne, kBoth);
    const bool two_shared = two_cycle(h, kTwo, kBoth);
    const bool shared_silent = std::none_of(h.edges().begin(), h.edges().end(),
                                            [](const InteractionEdge& e) { return e.from == kBoth; });

    if (h.acyclic()) {
        label.value = Case::I;
    } else if (two_cycle(h, kOne, kTwo) && shared_silent) {
        label.value = Case::IIA;
    } else if (one_shared && two_shared) {
        label.value = Case::IIB;
    } else if (one_shared) {
        label.value = Case::IIC;
    } else if (two_shared) {
        label.value = Case::IID;
    } else {
        label.value = Case::IIE;
    }

    const auto required = required_interactions(label.value, h);
    label.required_interactions_fully_participated =
        std::all_of(required.begin(), required.end(), [&h](const Interaction& e) { return fully(h, e.first, e.second); });
    return label;
}

Rational formula_rate(Case c, const Rational& b1, const Rational& b2, const Rational& b12) {
    switch (c) {
        case Case::I:
        case Case::IIA: return b1 + b2 + b12;
        case Case::IIB: return max(b12, b1 + b2);
        case Case::IIC: return b2 + max(b1, b12);
        case Case::IID: return b1 + max(b2, b12);
        case Case::IIE: return max(b1 + b2, max(b1 + b12, b2 + b12));
        case Case::Unresolved: break;
    }
    throw UnresolvedCase("no closed-form rate for an unresolved interaction digraph; use the bounds and the oracle");
}

Rational sub_rate(const SubRates& rates, SenderSet s) {
    auto it = rates.find(s);
    return it == rates.end() ? Rational{} : it->second;
}

Rational formula_rate(const CaseLabel& label, const SubRates& rates) {
    return formula_rate(label.value, sub_rate(rates, kOne), sub_rate(rates, kTwo), sub_rate(rates, kBoth));
}

SubRates scalar_sub_rates(const ValidatedInstance& instance, const MinrankOptions& options) {
    const auto d = build_digraph(instance);
    const auto p = partition(instance);
    SubRates rates;
    for (const auto& [s, part] : p.parts()) {
        rates[s] = part.empty() ? Rational{} : Rational(static_cast<std::int64_t>(minrank(induced_subdigraph(d, part), options)));
    }
    return rates;
}

LayeredConditions layered_conditions(const InteractionDigraph& h) {
    LayeredConditions c;
    c.no_shared_to_exclusive = std::none_of(h.edges().begin(), h.edges().end(), [](const InteractionEdge& e) {
        return e.from.size() > 1 && e.to.size() == 1;
    });
    std::vector<SenderSet> shared;
    std::copy_if(h.vertices().begin(), h.vertices().end(), std::back_inserter(shared),
                 [](SenderSet s) { return s.size() > 1; });
    c.shared_sets_acyclic = h.induced(shared).acyclic();
    c.exclusive_interactions_free = true;
    return c;
}

MultiRateReport multi_rate(const InteractionDigraph& h, const SubRates& rates) {
    MultiRateReport report;
    report.conditions = layered_conditions(h);

    auto singletons = [&h] {
        std::vector<std::vector<SenderSet>> out;
        for (auto s : h.vertices()) {
            out.push_back({s});
        }
        return out;
    };

    if (h.acyclic() || report.conditions.all()) {
        report.rule = h.acyclic() ? MultiRule::acyclic_sum : MultiRule::layered_sum;
        report.clusters = singletons();
        report.rate = sum_of(h.vertices(), rates);
        report.upper_bound = *report.rate;
        return report;
    }

    const auto components = interaction_components(h);
    const bool clusters_ok = std::all_of(components.begin(), components.end(), [&h](const auto& comp) {
        return comp.size() == 1 || (mutual_clique(h, comp) && common_senders(comp) != 0);
    });
    if (clusters_ok) {
        report.rule = MultiRule::clique_clusters;
        auto sorted = components;
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
        Rational total;
        for (const auto& comp : sorted) {
            total += max_of(comp, rates);
        }
        report.clusters = std::move(sorted);
        report.rate = total;
        report.upper_bound = total;
        return report;
    }

    report.rule = MultiRule::none;
    report.clusters = greedy_clusters(h);
    for (const auto& g : report.clusters) {
        report.upper_bound += max_of(g, rates);
    }
    return report;
}

MultiRateReport multi_rate(const ValidatedInstance& instance, const SubRates& rates) {
    return multi_rate(interaction_digraph(build_digraph(instance), partition(instance)), rates);
}

std::string to_string(MultiRule rule) {
    switch (rule) {
        case MultiRule::acyclic_sum: return "acyclic_sum";
        case MultiRule::layered_sum: return "layered_sum";
        case MultiRule::clique_clusters: return "clique_clusters";
        case MultiRule::none: return "none";
    }
    return "none";
}

std::vector<Bound> bounds(const ValidatedInstance& instance, const MinrankOptions& options) {
    if (instance.block_size() != 1) {
        throw Unsupported("bounds are computed for t = 1 only");
    }
    const auto d = build_digraph(instance);
    const auto p = partition(instance);
    const auto h = interaction_digraph(d, p);

    std::vector<Bound> out;
    auto attempt = [&out](std::string name, auto&& compute) {
        Bound b{std::move(name), std::nullopt, {}, false};
        try {
            b.value = compute();
        } catch (const BudgetExceeded& e) {
            b.error = e.what();
        }
        out.push_back(std::move(b));
    };

    std::optional<SubRates> rates;
    std::string rates_error;
    try {
        rates = scalar_sub_rates(instance, options);
    } catch (const BudgetExceeded& e) {
        rates_error = e.what();
    }
    auto need_rates = [&]() -> const SubRates& {
        if (!rates) {
            throw BudgetExceeded(rates_error);
        }
        return *rates;
    };

    attempt("single_sender", [&] { return Rational(static_cast<std::int64_t>(minrank(d, options))); });
    attempt("exclusive_sum", [&] {
        Rational total;
        for (const auto& [s, rate] : need_rates()) {
            if (s.size() == 1) {
                total += rate;
            }
        }
        return total;
    });

    const bool two_senders = instance.num_senders() == 2;
    if (two_senders && !p.part(kBoth).empty()) {
        if (!two_cycle(h, kOne, kBoth)) {
            attempt("one_way_1_12", [&] { return sub_rate(need_rates(), kOne) + sub_rate(need_rates(), kBoth); });
        }
        if (!two_cycle(h, kTwo, kBoth)) {
            attempt("one_way_2_12", [&] { return sub_rate(need_rates(), kTwo) + sub_rate(need_rates(), kBoth); });
        }
    }

    const auto full = completed(h);
    if (two_senders) {
        attempt("completion", [&] { return formula_rate(classify(full), need_rates()); });
    } else {
        const auto report = multi_rate(full, rates ? *rates : SubRates{});
        if (report.rule != MultiRule::none) {
            attempt("completion", [&] { return *multi_rate(full, need_rates()).rate; });
        }
    }

    std::optional<Rational> best;
    for (const auto& b : out) {
        if (b.value && (!best || *b.value > *best)) {
            best = b.value;
        }
    }
    for (auto& b : out) {
        b.largest = best && b.value && *b.value == *best;
    }
    return out;
}

RateReport rate_report(const ValidatedInstance& instance, const SubRates& rates, std::optional<std::size_t> oracle) {
    const auto h = interaction_digraph(build_digraph(instance), partition(instance));
    RateReport report;
    report.num_senders = instance.num_senders();
    report.sub_rates = rates;
    report.oracle_rate = oracle;
    const Rational observed = oracle ? Rational(static_cast<std::int64_t>(*oracle)) : Rational{};

    if (instance.num_senders() == 2) {
        report.label = classify(h);
        report.formula_rate = formula_rate(*report.label, rates);
        if (oracle) {
            report.consistent = report.label->required_interactions_fully_participated
                                    ? *report.formula_rate == observed
                                    : *report.formula_rate <= observed;
        }
    } else {
        report.multi = multi_rate(h, rates);
        if (oracle) {
            report.consistent = report.multi->rate ? *report.multi->rate == observed
                                                   : report.multi->upper_bound >= observed;
        }
    }
    return report;
}

}  // namespace icode
