// Acceptance checks, one line per criterion:
//   criterion N: PASS|FAIL  <title>  [seconds]  <detail>
// Exit status is non-zero when any criterion fails.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "icode/builder.hpp"
#include "icode/cli.hpp"
#include "icode/interaction.hpp"
#include "icode/json_io.hpp"
#include "icode/minrank.hpp"
#include "icode/oracle.hpp"
#include "icode/verifier.hpp"
#include "support.hpp"

namespace {

using namespace icode;
using icode::io::Json;
using icode::testing::Rng;

const SenderSet kOne = SenderSet::of({1});
const SenderSet kTwo = SenderSet::of({2});
const SenderSet kBoth = SenderSet::of({1, 2});

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Check {
public:
    void require(bool ok, const std::string& what) {
        if (!ok && outcome_.pass) {
            outcome_.pass = false;
            outcome_.detail = what;
        }
    }
    void note(const std::string& text) {
        if (outcome_.pass) {
            outcome_.detail = text;
        }
    }
    [[nodiscard]] Outcome result() const { return outcome_; }

private:
    Outcome outcome_;
};

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun cli_run(std::vector<std::string> args) {
    args.insert(args.begin(), "icode");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string example(const std::string& name) { return (testing::data_dir() / name).string(); }

Rational as_rational(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

InteractionDigraph h_of(const ValidatedInstance& inst) {
    return interaction_digraph(build_digraph(inst), partition(inst));
}

std::string describe_mask(unsigned mask) {
    static const char* names[] = {"1", "2", "12"};
    std::string out;
    for (std::size_t bit = 0; bit < testing::kPairs.size(); ++bit) {
        if ((mask >> bit) & 1u) {
            const auto [a, b] = testing::kPairs[bit];
            out += std::string(out.empty() ? "" : ", ") + names[a] + "->" + names[b];
        }
    }
    return "{" + out + "}";
}

std::set<std::string> rows_of(const SenderCode& code, std::size_t sender) {
    std::set<std::string> out;
    for (const auto& b : code.blocks()) {
        if (b.sender == sender) {
            for (const auto& r : b.rows.to_strings()) {
                out.insert(r);
            }
        }
    }
    return out;
}

bool verifies_exhaustively_via_cli(const std::string& instance, const std::string& code_json) {
    const auto path = std::filesystem::temp_directory_path() / "icode_acceptance_code.json";
    {
        std::ofstream(path) << code_json;
    }
    const auto r = cli_run({"verify", instance, path.string(), "--method", "exhaustive"});
    std::filesystem::remove(path);
    return r.code == cli::kOk;
}

Outcome example1() {
    Check c;
    const auto r = cli_run({"classify", example("example1.json")});
    c.require(r.code == cli::kOk, "classify exited with " + std::to_string(r.code));
    if (r.code != cli::kOk) {
        return c.result();
    }
    const auto j = Json::parse(r.out);
    std::set<std::pair<std::string, std::string>> edges;
    std::set<std::pair<std::string, std::string>> full;
    for (const auto& e : j["interaction_digraph"]["edges"]) {
        edges.emplace(e["from"], e["to"]);
        if (e["fully_participated"] == true) {
            full.emplace(e["from"], e["to"]);
        }
    }
    const std::set<std::pair<std::string, std::string>> want{{"1", "2"}, {"2", "1,2"}, {"1,2", "1"}, {"1", "1,2"}};
    c.require(edges == want, "interaction edges differ");
    c.require(full == std::set<std::pair<std::string, std::string>>{{"1,2", "1"}},
              "fully participated set should be exactly 12->1");
    c.require(j["case"] == "II-C", "case is " + j["case"].dump());
    c.note("edges 1->2, 2->12, 12->1 (full), 1->12; Case II-C");
    return c.result();
}

Outcome example2() {
    Check c;
    const auto inst = testing::load_example("example2.json");
    const auto rates = scalar_sub_rates(inst);
    c.require(sub_rate(rates, kOne) == 2 && sub_rate(rates, kTwo) == 1 && sub_rate(rates, kBoth) == 1,
              "sub-rates are not (2, 1, 1)");
    const auto label = classify(h_of(inst));
    c.require(label.value == Case::IIC && label.required_interactions_fully_participated, "not a full II-C");
    const auto formula = formula_rate(label, rates);
    c.require(formula == 3, "formula rate " + formula.to_string());

    const auto code = build(inst, label, optimal_sub_codes(inst));
    c.require(code.total_length() == 3, "constructed length " + std::to_string(code.total_length()));
    c.require(rows_of(code, 1) == std::set<std::string>{"110001", "011000"}, "sender 1 rows differ");
    c.require(rows_of(code, 2) == std::set<std::string>{"000110"}, "sender 2 rows differ");

    const auto built = cli_run({"construct", example("example2.json")});
    c.require(built.code == cli::kOk && verifies_exhaustively_via_cli(example("example2.json"), built.out),
              "construct output does not verify exhaustively");
    const auto oracle = oracle_rate(inst).rate;
    c.require(oracle == 3, "oracle rate " + std::to_string(oracle));
    c.note("sub-rates (2,1,1), formula 3, code {x1+x2+x6, x2+x3 | x4+x5}, oracle 3");
    return c.result();
}

Outcome example3() {
    Check c;
    const auto inst = testing::load_example("example3.json");
    const auto label = classify(h_of(inst));
    c.require(label.value == Case::IIE && label.required_interactions_fully_participated, "not a full II-E");
    const auto formula = formula_rate(label, scalar_sub_rates(inst));
    c.require(formula == 2, "formula rate " + formula.to_string());

    const auto given = io::load_code(testing::data_dir() / "example3_code.json", 7);
    c.require(verify_exhaustive(given, inst).ok, "the two listed transmissions do not verify");

    const auto code = build(inst, label, optimal_sub_codes(inst));
    c.require(code.total_length() == 2, "constructed length " + std::to_string(code.total_length()));
    c.require(verify_exhaustive(code, inst).ok, "constructed code does not verify");
    const auto oracle = oracle_rate(inst).rate;
    c.require(oracle == 2, "oracle rate " + std::to_string(oracle));
    c.note("formula 2, listed and constructed codes verify, oracle 2");
    return c.result();
}

Outcome example4() {
    Check c;
    const auto inst = testing::load_example("example4.json");
    const auto report = multi_rate(inst, scalar_sub_rates(inst));
    c.require(report.rule == MultiRule::layered_sum, "rule " + to_string(report.rule));
    c.require(report.conditions.no_shared_to_exclusive, "condition: shared set interacts with an exclusive set");
    c.require(report.conditions.shared_sets_acyclic, "condition: shared sets are cyclic");
    c.require(report.conditions.exclusive_interactions_free, "condition: exclusive interactions");
    c.require(report.rate && *report.rate == 6, "rate is not 6");
    const auto given = io::load_code(testing::data_dir() / "example4_code.json", 8);
    c.require(given.total_length() == 6, "fixture length");
    c.require(!sender_violation(given, inst.senders(), 1), "listed transmissions break the sender structure");
    c.require(verify_exhaustive(given, inst).ok, "listed transmissions do not verify");
    c.note("layered_sum rate 6, three conditions true, six transmissions verify");
    return c.result();
}

Outcome example6() {
    Check c;
    const auto inst = testing::load_example("example6.json");
    const auto report = multi_rate(inst, scalar_sub_rates(inst));
    c.require(report.rule == MultiRule::clique_clusters, "rule " + to_string(report.rule));
    c.require(report.rate && *report.rate == 5, "rate is not 5");
    const auto code = build_multi(inst, report, optimal_sub_codes(inst));
    c.require(code.total_length() == 5, "built length " + std::to_string(code.total_length()));
    c.require(!sender_violation(code, inst.senders(), 1), "built code breaks the sender structure");
    c.require(verify_linear(code, inst).ok, "built code does not verify");
    c.note("clique_clusters rate 5, built code of length 5 verifies");
    return c.result();
}

Outcome fully_participated_equivalence() {
    Check c;
    Rng rng(6);
    const auto& cases = testing::case_of_mask();
    const std::vector<Case> wanted{Case::I, Case::IIA, Case::IIB, Case::IIC, Case::IID, Case::IIE};
    std::map<Case, int> count;
    int total = 0;
    for (int round = 0; round < 40; ++round) {
        for (auto target : wanted) {
            std::vector<unsigned> masks;
            for (unsigned mask = 0; mask < 64; ++mask) {
                if (cases[mask] == target) {
                    masks.push_back(mask);
                }
            }
            const unsigned mask = masks[rng() % masks.size()];
            const auto inst = testing::two_sender_instance(rng, testing::random_sizes(rng, 6), mask, true, 0.4);
            const auto label = classify(h_of(inst));
            c.require(label.value == target, "generator produced the wrong case for H = " + describe_mask(mask));
            const auto formula = formula_rate(label, scalar_sub_rates(inst));
            const auto oracle = oracle_rate(inst).rate;
            if (formula != as_rational(oracle)) {
                std::cerr << "mismatch: case " << to_string(target) << " H = " << describe_mask(mask) << " formula "
                          << formula.to_string() << " oracle " << oracle << '\n';
            }
            c.require(formula == as_rational(oracle), "case " + to_string(target) + " H = " + describe_mask(mask) +
                                                          ": formula " + formula.to_string() + " vs oracle " +
                                                          std::to_string(oracle));
            ++count[target];
            ++total;
        }
    }
    c.require(total >= 200, "too few instances");
    std::ostringstream detail;
    detail << total << " instances, m <= 6, " << count[Case::IIB] << " per case, 0 mismatches";
    c.note(detail.str());
    return c.result();
}

Outcome partial_participation_invariance() {
    Check c;
    Rng rng(7);
    const auto& cases = testing::case_of_mask();
    std::map<Case, std::vector<unsigned>> masks;
    for (unsigned mask = 0; mask < 64; ++mask) {
        if (cases[mask] == Case::I || cases[mask] == Case::IIA) {
            masks[cases[mask]].push_back(mask);
        }
    }
    int partial = 0;
    int attempts = 0;
    std::map<Case, int> count;
    while (partial < 120 && attempts < 5000) {
        ++attempts;
        const auto& pool = masks[attempts % 2 == 0 ? Case::I : Case::IIA];
        const unsigned mask = pool[rng() % pool.size()];
        const auto inst = testing::two_sender_instance(rng, testing::random_sizes(rng, 6), mask, false, 0.4);
        const auto h = h_of(inst);
        if (h.all_fully_participated()) {
            continue;
        }
        ++partial;
        const auto label = classify(h);
        ++count[label.value];
        const auto formula = formula_rate(label, scalar_sub_rates(inst));
        const auto oracle = oracle_rate(inst).rate;
        c.require(formula == as_rational(oracle), "case " + to_string(label.value) + " H = " + describe_mask(mask) +
                                                      ": formula " + formula.to_string() + " vs oracle " +
                                                      std::to_string(oracle));
    }
    c.require(partial >= 100, "too few partially participated instances");
    c.require(count[Case::I] > 0 && count[Case::IIA] > 0, "both cases must be sampled");
    c.note(std::to_string(partial) + " partial instances (" + std::to_string(count[Case::I]) + " I, " +
           std::to_string(count[Case::IIA]) + " II-A), 0 mismatches");
    return c.result();
}

Outcome bound_suite() {
    Check c;
    Rng rng(8);
    int checks = 0;
    auto expect = [&](bool ok, const std::string& what) {
        ++checks;
        c.require(ok, what);
    };
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t m = 3 + rng() % 3;
        const auto inst = testing::random_instance(rng, m, 2, 0.2 + 0.1 * static_cast<double>(rng() % 5));
        const auto d = build_digraph(inst);
        const auto p = partition(inst);
        const auto h = interaction_digraph(d, p);
        const auto rates = scalar_sub_rates(inst);
        const auto oracle = oracle_rate(inst).rate;
        const auto single = minrank(d);

        expect(oracle >= single, "oracle below the single-sender rate");
        expect(as_rational(oracle) >= sub_rate(rates, kOne) + sub_rate(rates, kTwo), "oracle below beta1 + beta2");
        expect(minrank(reduce_noncycle_edges(d)) == single, "non-cycle edge removal changed minrank");

        if (!p.part(kBoth).empty()) {
            if (!two_cycle(h, kTwo, kBoth)) {
                expect(as_rational(oracle) >= sub_rate(rates, kTwo) + sub_rate(rates, kBoth),
                       "oracle below beta2 + beta12 with one-way 2/12 interaction");
            }
            if (!two_cycle(h, kOne, kBoth)) {
                expect(as_rational(oracle) >= sub_rate(rates, kOne) + sub_rate(rates, kBoth),
                       "oracle below beta1 + beta12 with one-way 1/12 interaction");
            }
        }

        std::vector<Digraph::Edge> missing;
        for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t j = 1; j <= m; ++j) {
                if (i != j && !d.has_edge(i, j)) {
                    missing.emplace_back(i, j);
                }
            }
        }
        if (!missing.empty()) {
            auto denser = d;
            const auto [i, j] = missing[rng() % missing.size()];
            denser.add_edge(i, j);
            const auto more = testing::with_digraph(inst, denser);
            expect(oracle_rate(more).rate <= oracle, "adding an edge raised the oracle rate");
            expect(minrank(denser) <= single, "adding an edge raised minrank");
        }
    }
    c.require(checks >= 500, "only " + std::to_string(checks) + " checks");
    c.note(std::to_string(checks) + " checks on 150 instances, m <= 5, 0 violations");
    return c.result();
}

Outcome known_rates() {
    Check c;
    auto single_sender_oracle = [](const Digraph& d) {
        const std::size_t n = d.vertex_count();
        IndexSet all(n);
        for (std::size_t k = 0; k < n; ++k) {
            all[k] = k + 1;
        }
        return oracle_rate(testing::with_digraph(testing::make_instance(n, {all}, {}), d)).rate;
    };
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto d = directed_cycle(n);
        c.require(minrank(d) == n - 1, "cycle " + std::to_string(n));
        c.require(single_sender_oracle(d) == n - 1, "cycle oracle " + std::to_string(n));
    }
    for (std::size_t n = 1; n <= 5; ++n) {
        c.require(minrank(complete_digraph(n)) == 1, "complete " + std::to_string(n));
        c.require(single_sender_oracle(complete_digraph(n)) == 1, "complete oracle " + std::to_string(n));
        c.require(minrank(Digraph::on_range(n)) == n, "edgeless " + std::to_string(n));
        c.require(single_sender_oracle(Digraph::on_range(n)) == n, "edgeless oracle " + std::to_string(n));
    }
    c.note("cycles n-1 (n=2..6), complete 1, edgeless n (n<=5); solver and oracle agree");
    return c.result();
}

Outcome verifier_equivalence() {
    Check c;
    Rng rng(10);
    int decodable = 0;
    const int pairs = 1200;
    for (int trial = 0; trial < pairs; ++trial) {
        const std::size_t s = 1 + rng() % 3;
        const std::size_t m = std::max<std::size_t>(s, 1 + rng() % 5);
        const auto inst = testing::random_instance(rng, m, s, 0.1 * static_cast<double>(rng() % 8));
        auto code = testing::random_code(rng, inst, rng() % (m + 1));
        if (rng() % 2 == 0) {
            for (std::size_t j = 1; j <= m; ++j) {
                if (rng() % 3 == 0) {
                    continue;
                }
                for (std::size_t k = 1; k <= inst.num_senders(); ++k) {
                    if (inst.holds(k, j)) {
                        code.add_row(k, BitVector::unit(m, j - 1));
                        break;
                    }
                }
            }
        }
        const auto a = verify_linear(code, inst);
        const auto b = verify_exhaustive(code, inst);
        bool same = a.ok == b.ok && a.failures.size() == b.failures.size();
        for (std::size_t k = 0; same && k < a.failures.size(); ++k) {
            same = a.failures[k].receiver == b.failures[k].receiver;
        }
        c.require(same, "linear and exhaustive disagree on trial " + std::to_string(trial));
        decodable += a.ok ? 1 : 0;
    }
    c.require(decodable > 0 && decodable < pairs, "sample lacks decodable or undecodable codes");
    c.note(std::to_string(pairs) + " pairs, m <= 5 (" + std::to_string(decodable) +
           " decodable), identical per-receiver verdicts");
    return c.result();
}

}  // namespace

int main(int argc, char** argv) {
    // An optional argument selects a single criterion.
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    struct Criterion {
        int id;
        std::string title;
        std::function<Outcome()> run;
        double limit_seconds;
    };
    const std::vector<Criterion> criteria{
        {1, "Example 1 classification", example1, 1.0},
        {2, "Example 2 rate, code and oracle", example2, 10.0},
        {3, "Example 3 rate, code and oracle", example3, 60.0},
        {4, "Example 4 layered rule", example4, 0.0},
        {5, "Example 6 clique clusters", example6, 0.0},
        {6, "closed form equals oracle, fully participated", fully_participated_equivalence, 0.0},
        {7, "closed form equals oracle, partial Case I / II-A", partial_participation_invariance, 0.0},
        {8, "lower-bound and monotonicity suite", bound_suite, 0.0},
        {9, "known single-sender rates", known_rates, 0.0},
        {10, "linear and exhaustive verification agree", verifier_equivalence, 0.0},
    };

    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::cerr << "usage: icode_acceptance [criterion 1.." << criteria.size() << "]\n";
        return 2;
    }
    int failures = 0;
    for (const auto& criterion : criteria) {
        if (only != 0 && criterion.id != only) {
            continue;
        }
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.pass && criterion.limit_seconds > 0 && seconds > criterion.limit_seconds) {
            std::ostringstream msg;
            msg << "took longer than " << criterion.limit_seconds << " s";
            outcome = {false, msg.str()};
        }
        failures += outcome.pass ? 0 : 1;
        std::cout << "criterion " << criterion.id << ": " << (outcome.pass ? "PASS" : "FAIL") << "  "
                  << criterion.title << "  [" << std::fixed << std::setprecision(3) << seconds << " s]  "
                  << outcome.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
