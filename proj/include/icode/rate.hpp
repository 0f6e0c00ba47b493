#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "icode/instance.hpp"
#include "icode/interaction.hpp"
#include "icode/minrank.hpp"
#include "icode/rational.hpp"

namespace icode {

/// Two-sender taxonomy of the interaction digraph on {1, 2, 12}.
enum class Case { I, IIA, IIB, IIC, IID, IIE, Unresolved };

[[nodiscard]] std::string to_string(Case c);
/// Accepts the printed form ("I", "II-A", ...).
[[nodiscard]] std::optional<Case> parse_case(std::string_view text);

struct CaseLabel {
    Case value = Case::I;
    bool all_interactions_fully_participated = true;
    /// Every interaction the case's rate expression depends on is fully participated.
    bool required_interactions_fully_participated = true;

    friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

using Interaction = std::pair<SenderSet, SenderSet>;

/// The interactions that must be fully participated for the closed-form rate
/// of `c` to be exact:
///   I, II-A  none;
///   II-B     both directions between 1 and 12 and between 2 and 12;
///   II-C     both directions between 1 and 12;
///   II-D     both directions between 2 and 12;
///   II-E     every edge of h.
[[nodiscard]] std::vector<Interaction> required_interactions(Case c, const InteractionDigraph& h);

/// Classifies a two-sender interaction digraph. The first matching rule wins:
///   I     h is acyclic;
///   II-A  1 and 2 form a 2-cycle and 12 has no outgoing edge;
///   II-B  12 forms a 2-cycle with both 1 and 2;
///   II-C  12 forms a 2-cycle with 1 only;
///   II-D  12 forms a 2-cycle with 2 only;
///   II-E  any other cyclic h.
/// The rules cover all 64 digraphs on three vertices, so Unresolved is never
/// produced here; it remains a label for callers that could not classify.
/// Throws Unsupported when h has a vertex other than 1, 2 or 12.
[[nodiscard]] CaseLabel classify(const InteractionDigraph& h);

/// Table of closed forms in the sub-rates; throws UnresolvedCase for Unresolved.
[[nodiscard]] Rational formula_rate(Case c, const Rational& b1, const Rational& b2, const Rational& b12);

/// beta(D_S) for every non-empty S (0 when P_S is empty), in bits per message bit.
using SubRates = std::map<SenderSet, Rational>;

/// Scalar sub-rates from the minrank solver. Throws BudgetExceeded from the solver.
[[nodiscard]] SubRates scalar_sub_rates(const ValidatedInstance& instance, const MinrankOptions& options = {});

[[nodiscard]] Rational sub_rate(const SubRates& rates, SenderSet s);

/// Closed-form two-sender rate for the instance's own case.
[[nodiscard]] Rational formula_rate(const CaseLabel& label, const SubRates& rates);

struct Bound {
    std::string name;
    std::optional<Rational> value;
    /// Why the bound could not be computed, when value is empty.
    std::string error;
    bool largest = false;
};

/// Lower bounds on the scalar (t = 1) multi-sender rate:
///   single_sender   minrank of the whole digraph;
///   exclusive_sum   sum of beta(D_S) over single-sender sets S;
///   one_way_1_12    beta1 + beta12 when 1 and 12 do not form a 2-cycle (two senders);
///   one_way_2_12    beta2 + beta12 when 2 and 12 do not form a 2-cycle (two senders);
///   completion      the exact rate after making every existing interaction fully
///                   participated, when a closed form applies to the completion.
/// A bound whose solver call runs out of budget carries an error instead of a value.
/// Throws Unsupported for t != 1.
[[nodiscard]] std::vector<Bound> bounds(const ValidatedInstance& instance, const MinrankOptions& options = {});

enum class MultiRule { acyclic_sum, layered_sum, clique_clusters, none };

[[nodiscard]] std::string to_string(MultiRule rule);

/// Structural conditions under which the sum of sub-rates is optimal even
/// though h has cycles.
struct LayeredConditions {
    /// No interaction runs from a set with |S| > 1 to a singleton set.
    bool no_shared_to_exclusive = false;
    /// h restricted to the sets with |S| > 1 is acyclic.
    bool shared_sets_acyclic = false;
    /// Interactions among singleton sets are unrestricted.
    bool exclusive_interactions_free = true;

    [[nodiscard]] bool all() const {
        return no_shared_to_exclusive && shared_sets_acyclic && exclusive_interactions_free;
    }
};

[[nodiscard]] LayeredConditions layered_conditions(const InteractionDigraph& h);

struct MultiRateReport {
    MultiRule rule = MultiRule::none;
    std::optional<Rational> rate;
    LayeredConditions conditions;
    /// Groups whose codes are XORed together; singletons are sent alone.
    /// For rule none this is the greedy grouping behind upper_bound.
    std::vector<std::vector<SenderSet>> clusters;
    Rational upper_bound;
};

/// Rate of an s-sender instance from its interaction digraph, trying in order:
///   acyclic_sum      h acyclic: sum of sub-rates;
///   layered_sum      every LayeredConditions entry holds: sum of sub-rates;
///   clique_clusters  within each strongly connected component of h every
///                    ordered pair of sets is a fully participated interaction
///                    and the sets share a sender: sum over components of the
///                    largest sub-rate;
///   none             no rule applies; only the greedy upper bound is given.
[[nodiscard]] MultiRateReport multi_rate(const InteractionDigraph& h, const SubRates& rates);
[[nodiscard]] MultiRateReport multi_rate(const ValidatedInstance& instance, const SubRates& rates);

struct RateReport {
    std::size_t num_senders = 0;
    SubRates sub_rates;
    /// Two-sender instances.
    std::optional<CaseLabel> label;
    std::optional<Rational> formula_rate;
    /// Instances with any other number of senders.
    std::optional<MultiRateReport> multi;
    std::optional<std::size_t> oracle_rate;
    /// False only when an oracle rate contradicts an exact closed form or lies
    /// outside the reported bounds.
    bool consistent = true;
};

/// Closed-form report; `oracle` is checked against it when given.
[[nodiscard]] RateReport rate_report(const ValidatedInstance& instance, const SubRates& rates,
                                     std::optional<std::size_t> oracle = std::nullopt);

}  // namespace icode
