#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "icode/digraph.hpp"
#include "icode/instance.hpp"
#include "icode/interaction.hpp"
#include "icode/oracle.hpp"
#include "icode/rate.hpp"
#include "icode/rational.hpp"
#include "icode/sender_code.hpp"
#include "icode/verifier.hpp"

namespace icode::io {

using Json = nlohmann::ordered_json;

/// Reads the instance schema: "t" (optional, default 1), "num_messages",
/// "senders" (array of message lists), "side_info" (object "i" -> list).
/// Unknown fields and malformed values throw InvalidInput.
[[nodiscard]] ProblemInstance parse_instance(const Json& j);
[[nodiscard]] ProblemInstance load_instance(const std::filesystem::path& path);
[[nodiscard]] Json to_json(const ProblemInstance& instance);

/// Reads {"blocks":[{"sender":k,"rows":["0110",...]}, ...]}; every row must be
/// `columns` characters of 0/1. Other keys are ignored so construct output can
/// be fed back to verify.
[[nodiscard]] SenderCode parse_code(const Json& j, std::size_t columns);
[[nodiscard]] SenderCode load_code(const std::filesystem::path& path, std::size_t columns);

/// Parses text as JSON, throwing InvalidInput with the parser's message.
[[nodiscard]] Json parse_text(const std::string& text, const std::string& what);

/// Sender ids in reports are the ids of the input file, not the renumbered ones.
[[nodiscard]] std::string original_key(SenderSet s, const ValidatedInstance& instance);

/// Code with internal sender ids, printed with the input's ids and XOR expressions.
[[nodiscard]] Json to_json(const SenderCode& code, const ValidatedInstance& instance);

[[nodiscard]] Json to_json(const Rational& r);
[[nodiscard]] Json to_json(const Digraph& d);
[[nodiscard]] Json to_json(const InteractionDigraph& h, const ValidatedInstance& instance);
[[nodiscard]] Json to_json(const SubRates& rates, const ValidatedInstance& instance);
[[nodiscard]] Json to_json(const CaseLabel& label);
[[nodiscard]] Json to_json(const MultiRateReport& report, const ValidatedInstance& instance);
[[nodiscard]] Json to_json(const RateReport& report, const ValidatedInstance& instance);
[[nodiscard]] Json to_json(const std::vector<Bound>& bounds);
[[nodiscard]] Json to_json(const VerificationReport& report);

}  // namespace icode::io
