#pragma once

#include <cstddef>
#include <map>

#include "icode/codeword.hpp"
#include "icode/instance.hpp"
#include "icode/minrank.hpp"
#include "icode/rate.hpp"
#include "icode/sender_code.hpp"

namespace icode {

using SubCodes = std::map<SenderSet, SingleSenderSolution>;

/// Optimal scalar code of D_S for every S with P_S non-empty.
[[nodiscard]] SubCodes optimal_sub_codes(const ValidatedInstance& instance, const MinrankOptions& options = {});

/// Places a scalar sub-code on the m*t message-bit columns. With t > 1 each
/// scalar row r becomes t rows, row r*t + b acting on bit b of every message.
[[nodiscard]] LinearCodeword embed(const SingleSenderSolution& code, std::size_t num_messages, std::size_t block_size);

/// Two-sender code achieving the closed-form rate of `label`:
///   I, II-A  C1 and C12 from sender 1, C2 from sender 2;
///   II-B     sender 1 sends C1 xor C12[1 : l1], sender 2 sends C2 xor the
///            next l2 positions of C12, sender 1 sends whatever of C12 is left;
///   II-C     sender 1 sends C1 xor C12, sender 2 sends C2 (II-D mirrored);
///   II-E     with k = min(l1, l2, l12) both senders XOR C12[1 : k] into their
///            own code, sender 1 sends C12[k+1 : l12].
/// Throws Unsupported naming the first required interaction that is not fully
/// participated, UnresolvedCase for Unresolved, and std::logic_error if the
/// result fails the linear decodability check.
[[nodiscard]] SenderCode build(const ValidatedInstance& instance, const CaseLabel& label, const SubCodes& sub_codes);

/// Code achieving multi_rate: each cluster's sub-codes are XORed together and
/// sent by the lowest sender common to the cluster. Throws UnresolvedCase when
/// no rule applied and std::logic_error if the result fails verification.
[[nodiscard]] SenderCode build_multi(const ValidatedInstance& instance, const MultiRateReport& report,
                                     const SubCodes& sub_codes);

}  // namespace icode
