#pragma once

#include <cstddef>
#include <cstdint>

#include "icode/instance.hpp"
#include "icode/minrank.hpp"
#include "icode/sender_code.hpp"

namespace icode {

struct OracleOptions {
    /// Largest number of messages searched.
    std::size_t limit_m = 7;
    /// Candidate subspaces examined before giving up.
    std::uint64_t budget = 200'000'000;
};

struct OracleResult {
    std::size_t rate = 0;
    SenderCode witness;
    /// Subspaces examined, for reporting.
    std::uint64_t examined = 0;
};

/// Shortest multi-sender linear code at t = 1, by exhaustive search.
///
/// Candidate row spaces W of F_2^m are enumerated by increasing dimension,
/// each dimension in reduced-echelon order (pivot sets lexicographic, then
/// free entries counting up). W is accepted when every receiver decodes from
/// W and its side information, and W is spanned by vectors each supported on
/// one sender's messages. The witness basis is chosen greedily: sender 1's
/// vectors first, each sender's in increasing order of the printed bit
/// string. Throws Unsupported for t != 1 and BudgetExceeded past the limits.
[[nodiscard]] OracleResult oracle_rate(const ValidatedInstance& instance, const OracleOptions& options = {});

/// minrank of the full side-information digraph: the rate if one sender held every message.
[[nodiscard]] std::size_t single_sender_projection(const ValidatedInstance& instance,
                                                   const MinrankOptions& options = {});

}  // namespace icode
