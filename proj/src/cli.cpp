#include "icode/cli.hpp"

#include <CLI11.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "icode/builder.hpp"
#include "icode/digraph.hpp"
#include "icode/errors.hpp"
#include "icode/json_io.hpp"
#include "icode/oracle.hpp"
#include "icode/rate.hpp"
#include "icode/verifier.hpp"

namespace icode::cli {

namespace {

using io::Json;

struct Config {
    std::string instance_path;
    std::string code_path;
    std::string format = "json";
    std::string method = "linear";
    std::size_t limit_m = 7;
    std::size_t max_component = 10;
    bool check_oracle = false;
    std::vector<std::string> sub_rates;
};

struct Context {
    const Config& config;
    std::ostream& out;
    std::ostream& err;

    [[nodiscard]] bool json() const { return config.format == "json"; }
    [[nodiscard]] MinrankOptions minrank_options() const { return {config.max_component, MinrankOptions{}.node_budget}; }
    [[nodiscard]] OracleOptions oracle_options() const { return {config.limit_m, OracleOptions{}.budget}; }

    void emit(const Json& j) const { out << j.dump(2) << '\n'; }
};

struct Loaded {
    ProblemInstance problem;
    ValidatedInstance instance;
};

Loaded load(const Context& ctx) {
    auto problem = io::load_instance(ctx.config.instance_path);
    auto result = validate(problem);
    if (!result.ok()) {
        std::string joined;
        for (const auto& e : result.errors) {
            joined += (joined.empty() ? "" : "; ") + e;
        }
        throw InvalidInput(joined);
    }
    for (const auto& w : result.warnings) {
        ctx.err << "warning: " << w << '\n';
    }
    return {std::move(problem), std::move(*result.instance)};
}

std::string set_name(SenderSet s, const ValidatedInstance& instance) {
    const auto key = io::original_key(s, instance);
    return s.size() == 1 ? key : "{" + key + "}";
}

// Maps a key in input sender ids ("1,3") to the internal set.
SenderSet internal_set(const std::string& key, const ValidatedInstance& instance) {
    const auto original = SenderSet::parse(key);
    std::uint32_t mask = 0;
    for (auto id : original.members()) {
        bool found = false;
        for (std::size_t s = 1; s <= instance.num_senders(); ++s) {
            if (instance.original_sender_id(s) == id) {
                mask |= std::uint32_t{1} << (s - 1);
                found = true;
            }
        }
        if (!found) {
            throw InvalidInput("--sub-rate names sender " + std::to_string(id) +
                               ", which is not part of the validated instance");
        }
    }
    return SenderSet::from_mask(mask);
}

SubRates resolve_rates(const Context& ctx, const ValidatedInstance& instance) {
    std::map<SenderSet, Rational> given;
    for (const auto& entry : ctx.config.sub_rates) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) {
            throw InvalidInput("--sub-rate expects KEY=VALUE, got '" + entry + "'");
        }
        Rational value;
        try {
            value = Rational::parse(entry.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
            throw InvalidInput("--sub-rate " + entry + ": " + e.what());
        }
        if (value < Rational{}) {
            throw InvalidInput("--sub-rate " + entry + " is negative");
        }
        given[internal_set(entry.substr(0, eq), instance)] = value;
    }
    const auto p = partition(instance);
    if (instance.block_size() != 1) {
        SubRates rates;
        for (const auto& [s, part] : p.parts()) {
            if (part.empty()) {
                rates[s] = Rational{};
            } else if (auto it = given.find(s); it != given.end()) {
                rates[s] = it->second;
            } else {
                throw InvalidInput("t = " + std::to_string(instance.block_size()) +
                                   " needs --sub-rate for every non-empty part; missing " +
                                   io::original_key(s, instance));
            }
        }
        return rates;
    }
    auto rates = scalar_sub_rates(instance, ctx.minrank_options());
    for (const auto& [s, v] : given) {
        rates[s] = v;
    }
    return rates;
}

std::string code_text(const SenderCode& code, const ValidatedInstance& instance) {
    std::ostringstream os;
    for (const auto& block : code.blocks()) {
        for (const auto& row : block.rows.row_vectors()) {
            os << "S" << instance.original_sender_id(block.sender) << ": " << expression(row, instance.block_size())
               << '\n';
        }
    }
    os << "length " << code.total_length() << '\n';
    return os.str();
}

int cmd_classify(const Context& ctx) {
    const auto [problem, instance] = load(ctx);
    const auto h = interaction_digraph(build_digraph(instance), partition(instance));
    std::optional<CaseLabel> label;
    std::optional<MultiRateReport> multi;
    if (instance.num_senders() == 2) {
        label = classify(h);
    } else {
        multi = multi_rate(h, SubRates{});
    }
    if (ctx.json()) {
        Json j;
        j["num_senders"] = instance.num_senders();
        j["interaction_digraph"] = io::to_json(h, instance);
        if (label) {
            j.update(io::to_json(*label));
        } else {
            j["rule"] = to_string(multi->rule);
        }
        ctx.emit(j);
        return kOk;
    }
    ctx.out << "interaction digraph:";
    if (h.edges().empty()) {
        ctx.out << " no edges";
    }
    ctx.out << '\n';
    for (const auto& e : h.edges()) {
        ctx.out << "  " << set_name(e.from, instance) << " -> " << set_name(e.to, instance)
                << (e.fully_participated ? "  fully participated" : "  partially participated") << '\n';
    }
    if (label) {
        ctx.out << "Case " << to_string(label->value) << '\n';
        ctx.out << "required interactions fully participated: "
                << (label->required_interactions_fully_participated ? "yes" : "no") << '\n';
    } else {
        ctx.out << "rule " << to_string(multi->rule) << '\n';
    }
    return kOk;
}

int cmd_rate(const Context& ctx) {
    const auto [problem, instance] = load(ctx);
    const auto rates = resolve_rates(ctx, instance);
    std::optional<std::size_t> oracle;
    if (ctx.config.check_oracle) {
        oracle = oracle_rate(instance, ctx.oracle_options()).rate;
    }
    const auto report = rate_report(instance, rates, oracle);
    const bool unresolved = report.multi && report.multi->rule == MultiRule::none;
    std::optional<std::vector<Bound>> lower;
    if (unresolved && instance.block_size() == 1) {
        lower = bounds(instance, ctx.minrank_options());
    }
    if (ctx.json()) {
        auto j = io::to_json(report, instance);
        if (lower) {
            j["lower_bounds"] = io::to_json(*lower)["bounds"];
        }
        ctx.emit(j);
    } else {
        if (report.label) {
            ctx.out << "Case " << to_string(report.label->value) << '\n';
        } else {
            ctx.out << "rule " << to_string(report.multi->rule) << '\n';
        }
        ctx.out << "sub-rates:";
        for (const auto& [s, r] : report.sub_rates) {
            ctx.out << ' ' << io::original_key(s, instance) << '=' << r.to_string();
        }
        ctx.out << '\n';
        if (report.formula_rate) {
            ctx.out << "formula rate " << report.formula_rate->to_string()
                    << (report.label->required_interactions_fully_participated ? "" : " (lower bound: required interactions are partial)")
                    << '\n';
        } else if (report.multi->rate) {
            ctx.out << "rate " << report.multi->rate->to_string() << '\n';
        } else {
            ctx.out << "no rule applies; upper bound " << report.multi->upper_bound.to_string() << '\n';
            if (lower) {
                for (const auto& b : *lower) {
                    if (b.value) {
                        ctx.out << "lower bound " << b.name << ' ' << b.value->to_string() << '\n';
                    }
                }
            }
        }
        if (report.oracle_rate) {
            ctx.out << "oracle rate " << *report.oracle_rate << (report.consistent ? " (consistent)" : " (INCONSISTENT)")
                    << '\n';
        }
    }
    return unresolved ? kUnresolved : kOk;
}

int cmd_bounds(const Context& ctx) {
    const auto [problem, instance] = load(ctx);
    const auto list = bounds(instance, ctx.minrank_options());
    if (ctx.json()) {
        ctx.emit(io::to_json(list));
        return kOk;
    }
    for (const auto& b : list) {
        ctx.out << b.name << ' ';
        if (b.value) {
            ctx.out << b.value->to_string() << (b.largest ? "  (largest)" : "");
        } else {
            ctx.out << "unavailable: " << b.error;
        }
        ctx.out << '\n';
    }
    return kOk;
}

int cmd_oracle(const Context& ctx) {
    const auto [problem, instance] = load(ctx);
    const auto result = oracle_rate(instance, ctx.oracle_options());
    if (ctx.json()) {
        Json j;
        j["oracle_rate"] = result.rate;
        j["subspaces_examined"] = result.examined;
        j["code"] = io::to_json(result.witness, instance);
        ctx.emit(j);
        return kOk;
    }
    ctx.out << "oracle rate " << result.rate << '\n' << code_text(result.witness, instance);
    return kOk;
}

int cmd_construct(const Context& ctx) {
    const auto [problem, instance] = load(ctx);
    std::optional<SenderCode> code;
    std::string method = "closed_form";
    std::string fallback_reason;
    try {
        const auto subs = optimal_sub_codes(instance, ctx.minrank_options());
        if (instance.num_senders() == 2) {
            const auto label = classify(interaction_digraph(build_digraph(instance), partition(instance)));
            code = build(instance, label, subs);
        } else {
            const auto report = multi_rate(instance, SubRates{});
            code = build_multi(instance, report, subs);
        }
    } catch (const UnresolvedCase& e) {
        fallback_reason = e.what();
    } catch (const Unsupported& e) {
        fallback_reason = e.what();
    }
    if (!code) {
        if (instance.block_size() != 1 || instance.num_messages() > ctx.config.limit_m) {
            throw UnresolvedCase("no closed-form construction (" + fallback_reason +
                                 ") and the instance is outside the oracle's range");
        }
        ctx.err << "note: " << fallback_reason << "; using the oracle witness\n";
        code = oracle_rate(instance, ctx.oracle_options()).witness;
        method = "oracle_witness";
    }
    if (ctx.json()) {
        Json j;
        j["method"] = method;
        j.update(io::to_json(*code, instance));
        ctx.emit(j);
        return kOk;
    }
    ctx.out << "method " << method << '\n' << code_text(*code, instance);
    return kOk;
}

int cmd_verify(const Context& ctx) {
    const auto [problem, instance] = load(ctx);
    const auto code = io::load_code(ctx.config.code_path, instance.num_messages() * instance.block_size());
    const auto method = ctx.config.method == "exhaustive" ? VerificationMethod::exhaustive : VerificationMethod::linear;
    auto report = verify(code, instance, method);
    // Block ids in the code file refer to the senders as numbered in the input.
    std::vector<IndexSet> senders;
    for (auto s : problem.senders) {
        std::sort(s.begin(), s.end());
        senders.push_back(s);
    }
    const auto violation = sender_violation(code, senders, instance.block_size());
    const bool ok = report.ok && !violation;
    if (ctx.json()) {
        auto j = io::to_json(report);
        j["ok"] = ok;
        j["decodable"] = report.ok;
        j["sender_structure"] = violation ? Json(*violation) : Json("ok");
        ctx.emit(j);
    } else {
        ctx.out << (ok ? "ok" : "FAILED") << " (" << to_string(report.method) << ")\n";
        for (const auto& f : report.failures) {
            ctx.out << "  receiver " << f.receiver << ": " << f.reason << '\n';
        }
        if (violation) {
            ctx.out << "  sender structure: " << *violation << '\n';
        }
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_reduce(const Context& ctx) {
    const auto [problem, instance] = load(ctx);
    const auto d = build_digraph(instance);
    const auto reduced = reduce_noncycle_edges(d);
    std::vector<Digraph::Edge> removed;
    for (const auto& e : d.edges()) {
        if (!reduced.has_edge(e.first, e.second)) {
            removed.push_back(e);
        }
    }
    if (ctx.json()) {
        Json j = io::to_json(reduced);
        Json r = Json::array();
        for (auto [u, v] : removed) {
            r.push_back(Json::array({u, v}));
        }
        j["removed_edges"] = r;
        j["components"] = scc(d);
        ctx.emit(j);
        return kOk;
    }
    ctx.out << "removed " << removed.size() << " edge(s) on no directed cycle";
    for (auto [u, v] : removed) {
        ctx.out << ' ' << u << "->" << v;
    }
    ctx.out << "\ncomponents:";
    for (const auto& comp : scc(d)) {
        ctx.out << " {";
        for (std::size_t k = 0; k < comp.size(); ++k) {
            ctx.out << (k ? "," : "") << comp[k];
        }
        ctx.out << '}';
    }
    ctx.out << '\n';
    return kOk;
}

void report_error(const Context& ctx, const std::string& kind, const std::string& message) {
    if (ctx.json()) {
        Json j;
        j["error"] = {{"kind", kind}, {"message", message}};
        ctx.err << j.dump() << '\n';
    } else {
        ctx.err << "error (" << kind << "): " << message << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config config;
    CLI::App app{"Multi-sender index coding: rates, bounds, constructions and verification"};
    app.require_subcommand(1);

    auto add_common = [&config](CLI::App* sub) {
        sub->add_option("instance", config.instance_path, "Instance JSON file")->required();
        sub->add_option("--format", config.format, "Output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
        sub->add_option("--limit-m", config.limit_m, "Largest m the exhaustive oracle accepts")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--max-component", config.max_component,
                        "Largest strongly connected component the minrank search accepts")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    std::map<CLI::App*, int (*)(const Context&)> handlers;
    auto sub = [&](const char* name, const char* help, int (*handler)(const Context&)) {
        auto* s = app.add_subcommand(name, help);
        add_common(s);
        handlers[s] = handler;
        return s;
    };
    sub("classify", "Print the interaction digraph and its case", cmd_classify);
    auto* rate = sub("rate", "Closed-form optimal linear rate", cmd_rate);
    rate->add_flag("--check-oracle", config.check_oracle, "Compare against the exhaustive oracle (t = 1)");
    rate->add_option("--sub-rate", config.sub_rates, "Sub-rate of a part, KEY=VALUE, e.g. 1,2=3/2 (needed for t > 1)");
    sub("bounds", "Lower bounds on the scalar linear rate", cmd_bounds);
    sub("oracle", "Exhaustive optimal scalar linear code", cmd_oracle);
    sub("construct", "Build a code achieving the closed-form rate", cmd_construct);
    auto* verify_cmd = sub("verify", "Check that a code file lets every receiver decode", cmd_verify);
    verify_cmd->add_option("code", config.code_path, "Code JSON file")->required();
    verify_cmd->add_option("--method", config.method, "Decodability check")
        ->check(CLI::IsMember({"linear", "exhaustive"}))
        ->capture_default_str();
    sub("reduce", "Drop side-information edges that lie on no directed cycle", cmd_reduce);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();  // program name
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidInput;
    }

    const Context ctx{config, out, err};
    for (auto& [s, handler] : handlers) {
        if (!s->parsed()) {
            continue;
        }
        try {
            return handler(ctx);
        } catch (const InvalidInput& e) {
            report_error(ctx, "invalid_input", e.what());
            return kInvalidInput;
        } catch (const Unsupported& e) {
            report_error(ctx, "unsupported", e.what());
            return kInvalidInput;
        } catch (const BudgetExceeded& e) {
            report_error(ctx, "budget_exceeded", e.what());
            return kBudgetExceeded;
        } catch (const UnresolvedCase& e) {
            report_error(ctx, "unresolved", e.what());
            return kUnresolved;
        } catch (const std::exception& e) {
            report_error(ctx, "internal_error", e.what());
            return kInvalidInput;
        }
    }
    return kInvalidInput;
}

}  // namespace icode::cli
