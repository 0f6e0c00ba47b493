#include "icode/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "icode/errors.hpp"

namespace icode::io {

namespace {

std::size_t as_index(const Json& v, const std::string& where) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw InvalidInput(where + " must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

IndexSet as_index_list(const Json& v, const std::string& where) {
    if (!v.is_array()) {
        throw InvalidInput(where + " must be an array of integers");
    }
    IndexSet out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        out.push_back(as_index(v[k], where + "[" + std::to_string(k) + "]"));
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Json key_list(const std::vector<SenderSet>& sets, const ValidatedInstance& instance) {
    Json out = Json::array();
    for (auto s : sets) {
        out.push_back(original_key(s, instance));
    }
    return out;
}

}  // namespace

Json parse_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(what + " is not valid JSON: " + e.what());
    }
}

ProblemInstance parse_instance(const Json& j) {
    if (!j.is_object()) {
        throw InvalidInput("instance must be a JSON object");
    }
    static const std::set<std::string> known{"t", "num_messages", "senders", "side_info"};
    for (const auto& [key, value] : j.items()) {
        if (!known.contains(key)) {
            throw InvalidInput("unknown instance field '" + key + "'");
        }
    }
    ProblemInstance p;
    if (!j.contains("num_messages")) {
        throw InvalidInput("instance is missing 'num_messages'");
    }
    p.num_messages = as_index(j["num_messages"], "num_messages");
    p.block_size = j.contains("t") ? as_index(j["t"], "t") : 1;
    if (!j.contains("senders")) {
        throw InvalidInput("instance is missing 'senders'");
    }
    const auto& senders = j["senders"];
    if (!senders.is_array()) {
        throw InvalidInput("senders must be an array of message lists");
    }
    for (std::size_t k = 0; k < senders.size(); ++k) {
        p.senders.push_back(as_index_list(senders[k], "senders[" + std::to_string(k) + "]"));
    }
    if (j.contains("side_info")) {
        const auto& side = j["side_info"];
        if (!side.is_object()) {
            throw InvalidInput("side_info must be an object mapping receiver to message list");
        }
        for (const auto& [key, value] : side.items()) {
            std::size_t used = 0;
            std::size_t receiver = 0;
            try {
                receiver = std::stoul(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != key.size() || key.front() == '-' || key.front() == '+') {
                throw InvalidInput("side_info key '" + key + "' is not a receiver index");
            }
            if (p.side_info.contains(receiver)) {
                throw InvalidInput("side_info lists receiver " + std::to_string(receiver) + " twice");
            }
            p.side_info[receiver] = as_index_list(value, "side_info[\"" + key + "\"]");
        }
    }
    return p;
}

ProblemInstance load_instance(const std::filesystem::path& path) {
    return parse_instance(parse_text(read_file(path), path.string()));
}

Json to_json(const ProblemInstance& instance) {
    Json j;
    j["t"] = instance.block_size;
    j["num_messages"] = instance.num_messages;
    j["senders"] = instance.senders;
    Json side = Json::object();
    for (const auto& [i, k] : instance.side_info) {
        side[std::to_string(i)] = k;
    }
    j["side_info"] = side;
    return j;
}

SenderCode parse_code(const Json& j, std::size_t columns) {
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array()) {
        throw InvalidInput("code must be an object with a 'blocks' array");
    }
    SenderCode code(columns);
    const auto& blocks = j["blocks"];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& block = blocks[b];
        const std::string where = "blocks[" + std::to_string(b) + "]";
        if (!block.is_object() || !block.contains("sender") || !block.contains("rows") || !block["rows"].is_array()) {
            throw InvalidInput(where + " must have 'sender' and 'rows'");
        }
        const std::size_t sender = as_index(block["sender"], where + ".sender");
        if (sender == 0) {
            throw InvalidInput(where + ".sender must be at least 1");
        }
        for (const auto& row : block["rows"]) {
            if (!row.is_string()) {
                throw InvalidInput(where + ".rows must hold bit strings");
            }
            const auto text = row.get<std::string>();
            if (text.size() != columns) {
                throw InvalidInput(where + " row '" + text + "' has " + std::to_string(text.size()) +
                                   " columns, expected m*t = " + std::to_string(columns));
            }
            try {
                code.add_row(sender, BitVector::from_string(text));
            } catch (const std::invalid_argument&) {
                throw InvalidInput(where + " row '" + text + "' is not a 0/1 string");
            }
        }
    }
    return code;
}

SenderCode load_code(const std::filesystem::path& path, std::size_t columns) {
    return parse_code(parse_text(read_file(path), path.string()), columns);
}

std::string original_key(SenderSet s, const ValidatedInstance& instance) {
    std::string out;
    for (auto k : s.members()) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(instance.original_sender_id(k));
    }
    return out;
}

Json to_json(const SenderCode& code, const ValidatedInstance& instance) {
    Json j;
    j["total_length"] = code.total_length();
    Json blocks = Json::array();
    for (const auto& block : code.blocks()) {
        Json b;
        b["sender"] = instance.original_sender_id(block.sender);
        b["rows"] = block.rows.to_strings();
        Json expr = Json::array();
        for (const auto& r : block.rows.row_vectors()) {
            expr.push_back(expression(r, instance.block_size()));
        }
        b["expressions"] = expr;
        blocks.push_back(b);
    }
    j["blocks"] = blocks;
    return j;
}

Json to_json(const Rational& r) {
    if (r.is_integer()) {
        return r.num();
    }
    return r.to_string();
}

Json to_json(const Digraph& d) {
    Json j;
    j["vertices"] = d.vertices();
    Json edges = Json::array();
    for (auto [u, v] : d.edges()) {
        edges.push_back(Json::array({u, v}));
    }
    j["edges"] = edges;
    return j;
}

Json to_json(const InteractionDigraph& h, const ValidatedInstance& instance) {
    Json j;
    j["vertices"] = key_list(h.vertices(), instance);
    Json edges = Json::array();
    for (const auto& e : h.edges()) {
        Json x;
        x["from"] = original_key(e.from, instance);
        x["to"] = original_key(e.to, instance);
        x["fully_participated"] = e.fully_participated;
        edges.push_back(x);
    }
    j["edges"] = edges;
    return j;
}

Json to_json(const SubRates& rates, const ValidatedInstance& instance) {
    Json j = Json::object();
    for (const auto& [s, r] : rates) {
        j[original_key(s, instance)] = to_json(r);
    }
    return j;
}

Json to_json(const CaseLabel& label) {
    Json j;
    j["case"] = to_string(label.value);
    j["all_interactions_fully_participated"] = label.all_interactions_fully_participated;
    j["required_interactions_fully_participated"] = label.required_interactions_fully_participated;
    return j;
}

Json to_json(const MultiRateReport& report, const ValidatedInstance& instance) {
    Json j;
    j["rule"] = to_string(report.rule);
    j["rate"] = report.rate ? to_json(*report.rate) : Json();
    Json c;
    c["no_shared_to_exclusive"] = report.conditions.no_shared_to_exclusive;
    c["shared_sets_acyclic"] = report.conditions.shared_sets_acyclic;
    c["exclusive_interactions_free"] = report.conditions.exclusive_interactions_free;
    j["layered_conditions"] = c;
    Json clusters = Json::array();
    for (const auto& cluster : report.clusters) {
        clusters.push_back(key_list(cluster, instance));
    }
    j["clusters"] = clusters;
    j["upper_bound"] = to_json(report.upper_bound);
    return j;
}

Json to_json(const RateReport& report, const ValidatedInstance& instance) {
    Json j;
    if (report.label) {
        j["case"] = to_string(report.label->value);
        j["sub_rates"] = to_json(report.sub_rates, instance);
        j["formula_rate"] = to_json(*report.formula_rate);
        j["formula_exact"] = report.label->required_interactions_fully_participated;
        j["all_interactions_fully_participated"] = report.label->all_interactions_fully_participated;
    } else {
        j["sub_rates"] = to_json(report.sub_rates, instance);
        j.update(to_json(*report.multi, instance));
    }
    if (report.oracle_rate) {
        j["oracle_rate"] = *report.oracle_rate;
        j["consistent"] = report.consistent;
    }
    return j;
}

Json to_json(const std::vector<Bound>& bounds) {
    Json list = Json::array();
    for (const auto& b : bounds) {
        Json x;
        x["name"] = b.name;
        if (b.value) {
            x["value"] = to_json(*b.value);
            x["largest"] = b.largest;
        } else {
            x["error"] = b.error;
        }
        list.push_back(x);
    }
    Json j;
    j["bounds"] = list;
    return j;
}

Json to_json(const VerificationReport& report) {
    Json j;
    j["ok"] = report.ok;
    j["method"] = to_string(report.method);
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json x;
        x["receiver"] = f.receiver;
        x["reason"] = f.reason;
        failures.push_back(x);
    }
    j["failures"] = failures;
    return j;
}

}  // namespace icode::io
