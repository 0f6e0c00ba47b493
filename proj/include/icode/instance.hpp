#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace icode {

/// Sorted, duplicate-free list of 1-based message (or receiver) indices.
using IndexSet = std::vector<std::size_t>;

/// A unicast index coding instance as supplied by the user. Receiver i demands
/// x_i; side_info maps receiver i to K_i. Receivers absent from the map have
/// no side information. All indices are 1-based.
struct ProblemInstance {
    std::size_t num_messages = 0;
    std::size_t block_size = 1;
    std::vector<IndexSet> senders;
    std::map<std::size_t, IndexSet> side_info;
};

/// A non-empty set of sender ids (1-based), stored as a bit mask.
///
/// Ordered by size first, then lexicographically on the sorted members, so
/// for three senders the order is 1, 2, 3, {1,2}, {1,3}, {2,3}, {1,2,3}.
class SenderSet {
public:
    static constexpr std::size_t max_senders = 16;

    SenderSet() = default;
    static SenderSet of(std::initializer_list<std::size_t> senders);
    static SenderSet from_mask(std::uint32_t mask) { return SenderSet(mask); }

    [[nodiscard]] std::uint32_t mask() const { return mask_; }
    [[nodiscard]] bool empty() const { return mask_ == 0; }
    [[nodiscard]] bool contains(std::size_t sender) const {
        return sender >= 1 && sender <= max_senders && ((mask_ >> (sender - 1)) & 1u) != 0;
    }
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] std::vector<std::size_t> members() const;
    /// Lowest sender id in the set; the set must be non-empty.
    [[nodiscard]] std::size_t lowest() const;

    /// Canonical key, e.g. "1,2".
    [[nodiscard]] std::string key() const;
    /// Parses a canonical key; throws InvalidInput on malformed text.
    static SenderSet parse(const std::string& key);

    friend bool operator==(SenderSet, SenderSet) = default;
    friend std::strong_ordering operator<=>(SenderSet a, SenderSet b);

private:
    explicit SenderSet(std::uint32_t mask) : mask_(mask) {}
    std::uint32_t mask_ = 0;
};

/// The sets P_S for every non-empty S over s senders. Empty parts are kept so
/// every S is addressable; part() of an absent S is the empty set.
class MessagePartition {
public:
    MessagePartition() = default;
    MessagePartition(std::size_t num_senders, std::map<SenderSet, IndexSet> parts);

    [[nodiscard]] std::size_t num_senders() const { return num_senders_; }
    [[nodiscard]] const IndexSet& part(SenderSet s) const;
    [[nodiscard]] const std::map<SenderSet, IndexSet>& parts() const { return parts_; }
    /// Sets S with P_S non-empty, in canonical order.
    [[nodiscard]] std::vector<SenderSet> nonempty_sets() const;
    /// The S with x_j in P_S.
    [[nodiscard]] SenderSet owner(std::size_t message) const;

private:
    std::size_t num_senders_ = 0;
    std::map<SenderSet, IndexSet> parts_;
    std::vector<SenderSet> owner_;  // indexed by message - 1
};

struct ValidationResult;

/// An instance that passed validation: sender sets cover [m], no receiver
/// holds its own demand, indices in range, and every remaining sender holds
/// at least one message no other sender holds. Only validate() creates one.
class ValidatedInstance {
public:
    [[nodiscard]] std::size_t num_messages() const { return num_messages_; }
    [[nodiscard]] std::size_t block_size() const { return block_size_; }
    [[nodiscard]] std::size_t num_senders() const { return senders_.size(); }

    /// Message set of sender `s` (1-based, after redundant-sender removal).
    [[nodiscard]] const IndexSet& sender(std::size_t s) const { return senders_.at(s - 1); }
    [[nodiscard]] const std::vector<IndexSet>& senders() const { return senders_; }
    [[nodiscard]] bool holds(std::size_t s, std::size_t message) const;
    /// Side information K_i of receiver `i` (1-based).
    [[nodiscard]] const IndexSet& side_info(std::size_t i) const { return side_info_.at(i - 1); }
    /// Id the sender had in the input before redundant senders were removed.
    [[nodiscard]] std::size_t original_sender_id(std::size_t s) const { return original_ids_.at(s - 1); }
    [[nodiscard]] const std::vector<std::string>& warnings() const { return warnings_; }

    /// Back to the plain input form, with renumbered senders.
    [[nodiscard]] ProblemInstance to_problem() const;

private:
    friend ValidationResult validate(const ProblemInstance& instance);
    ValidatedInstance() = default;

    std::size_t num_messages_ = 0;
    std::size_t block_size_ = 1;
    std::vector<IndexSet> senders_;
    std::vector<IndexSet> side_info_;
    std::vector<std::size_t> original_ids_;
    std::vector<std::string> warnings_;
};

struct ValidationResult {
    std::optional<ValidatedInstance> instance;
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    [[nodiscard]] bool ok() const { return instance.has_value(); }
};

/// Checks the model assumptions, canonicalizes every set, and drops senders
/// whose exclusive message set is empty (lowest id first, one at a time).
[[nodiscard]] ValidationResult validate(const ProblemInstance& instance);

/// validate(), throwing InvalidInput with every error joined when invalid.
[[nodiscard]] ValidatedInstance validate_or_throw(const ProblemInstance& instance);

[[nodiscard]] MessagePartition partition(const ValidatedInstance& instance);

}  // namespace icode
