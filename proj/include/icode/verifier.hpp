#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "icode/instance.hpp"
#include "icode/sender_code.hpp"

namespace icode {

enum class VerificationMethod { linear, exhaustive };

[[nodiscard]] std::string to_string(VerificationMethod method);

struct ReceiverFailure {
    std::size_t receiver = 0;
    std::string reason;

    friend bool operator==(const ReceiverFailure&, const ReceiverFailure&) = default;
};

struct VerificationReport {
    bool ok = true;
    std::vector<ReceiverFailure> failures;
    VerificationMethod method = VerificationMethod::linear;
};

/// Receiver i decodes iff every bit of x_i lies in the span of the code rows
/// together with the unit vectors of its side information. Only the
/// transmitted rows matter here; sender attribution is checked separately.
/// Throws InvalidInput when the code width is not m*t.
[[nodiscard]] VerificationReport verify_linear(const SenderCode& code, const ValidatedInstance& instance);

/// Enumerates all 2^(m*t) message assignments and checks that no two
/// assignments agreeing on K_i and on every transmitted bit differ in x_i.
/// Throws BudgetExceeded when m*t exceeds `max_bits` (at most 20).
[[nodiscard]] VerificationReport verify_exhaustive(const SenderCode& code, const ValidatedInstance& instance,
                                                   std::size_t max_bits = 20);

[[nodiscard]] VerificationReport verify(const SenderCode& code, const ValidatedInstance& instance,
                                        VerificationMethod method);

}  // namespace icode
