#include "icode/instance.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "icode/errors.hpp"

namespace icode {

namespace {

IndexSet canonical(IndexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool contains(const IndexSet& s, std::size_t v) { return std::binary_search(s.begin(), s.end(), v); }

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

// Index of the first sender whose exclusive set is empty, if any.
std::optional<std::size_t> redundant_sender(const std::vector<IndexSet>& senders, std::size_t m) {
    std::vector<std::size_t> holders(m + 1, 0);
    for (const auto& s : senders) {
        for (auto j : s) {
            ++holders[j];
        }
    }
    for (std::size_t k = 0; k < senders.size(); ++k) {
        const auto& s = senders[k];
        bool exclusive = std::any_of(s.begin(), s.end(), [&](std::size_t j) { return holders[j] == 1; });
        if (!exclusive) {
            return k;
        }
    }
    return std::nullopt;
}

}  // namespace

SenderSet SenderSet::of(std::initializer_list<std::size_t> senders) {
    std::uint32_t mask = 0;
    for (auto s : senders) {
        if (s < 1 || s > max_senders) {
            throw InvalidInput("sender id " + std::to_string(s) + " out of range");
        }
        mask |= std::uint32_t{1} << (s - 1);
    }
    return SenderSet(mask);
}

std::size_t SenderSet::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> SenderSet::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < max_senders; ++i) {
        if ((mask_ >> i) & 1u) {
            out.push_back(i + 1);
        }
    }
    return out;
}

std::size_t SenderSet::lowest() const { return static_cast<std::size_t>(std::countr_zero(mask_)) + 1; }

std::string SenderSet::key() const {
    std::string out;
    for (auto s : members()) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(s);
    }
    return out;
}

SenderSet SenderSet::parse(const std::string& key) {
    std::uint32_t mask = 0;
    std::stringstream in(key);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw InvalidInput("malformed sender set key \"" + key + "\"");
        }
        if (pos != item.size() || v < 1 || v > max_senders) {
            throw InvalidInput("malformed sender set key \"" + key + "\"");
        }
        mask |= std::uint32_t{1} << (v - 1);
    }
    if (mask == 0) {
        throw InvalidInput("empty sender set key");
    }
    return SenderSet(mask);
}

std::strong_ordering operator<=>(SenderSet a, SenderSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) {
        return c;
    }
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

MessagePartition::MessagePartition(std::size_t num_senders, std::map<SenderSet, IndexSet> parts)
    : num_senders_(num_senders), parts_(std::move(parts)) {
    std::size_t m = 0;
    for (const auto& [s, p] : parts_) {
        if (!p.empty()) {
            m = std::max(m, p.back());
        }
    }
    owner_.assign(m, SenderSet{});
    for (const auto& [s, p] : parts_) {
        for (auto j : p) {
            owner_[j - 1] = s;
        }
    }
}

const IndexSet& MessagePartition::part(SenderSet s) const {
    static const IndexSet empty;
    auto it = parts_.find(s);
    return it == parts_.end() ? empty : it->second;
}

std::vector<SenderSet> MessagePartition::nonempty_sets() const {
    std::vector<SenderSet> out;
    for (const auto& [s, p] : parts_) {
        if (!p.empty()) {
            out.push_back(s);
        }
    }
    return out;
}

SenderSet MessagePartition::owner(std::size_t message) const { return owner_.at(message - 1); }

bool ValidatedInstance::holds(std::size_t s, std::size_t message) const { return contains(sender(s), message); }

ProblemInstance ValidatedInstance::to_problem() const {
    ProblemInstance p;
    p.num_messages = num_messages_;
    p.block_size = block_size_;
    p.senders = senders_;
    for (std::size_t i = 0; i < side_info_.size(); ++i) {
        if (!side_info_[i].empty()) {
            p.side_info[i + 1] = side_info_[i];
        }
    }
    return p;
}

ValidationResult validate(const ProblemInstance& instance) {
    ValidationResult result;
    auto& errors = result.errors;
    const std::size_t m = instance.num_messages;

    if (m == 0) {
        errors.push_back("num_messages must be at least 1");
    }
    if (instance.block_size == 0) {
        errors.push_back("block size t must be at least 1");
    }
    if (instance.senders.empty()) {
        errors.push_back("at least one sender is required");
    }
    if (instance.senders.size() > SenderSet::max_senders) {
        errors.push_back("at most " + std::to_string(SenderSet::max_senders) + " senders are supported");
    }

    std::vector<IndexSet> senders;
    for (std::size_t k = 0; k < instance.senders.size(); ++k) {
        IndexSet s = canonical(instance.senders[k]);
        for (auto j : s) {
            if (j < 1 || j > m) {
                errors.push_back("sender " + std::to_string(k + 1) + " holds message " + std::to_string(j) +
                                 " outside [1, " + std::to_string(m) + "]");
            }
        }
        senders.push_back(std::move(s));
    }

    std::vector<IndexSet> side_info(m);
    for (const auto& [i, k] : instance.side_info) {
        if (i < 1 || i > m) {
            errors.push_back("side information given for receiver " + std::to_string(i) + " outside [1, " +
                             std::to_string(m) + "]");
            continue;
        }
        IndexSet ks = canonical(k);
        for (auto j : ks) {
            if (j < 1 || j > m) {
                errors.push_back("receiver " + std::to_string(i) + " has side information message " +
                                 std::to_string(j) + " outside [1, " + std::to_string(m) + "]");
            } else if (j == i) {
                errors.push_back("receiver " + std::to_string(i) + " holds its own demand x" + std::to_string(i));
            }
        }
        side_info[i - 1] = std::move(ks);
    }

    for (std::size_t j = 1; j <= m; ++j) {
        bool held = std::any_of(senders.begin(), senders.end(), [j](const IndexSet& s) { return contains(s, j); });
        if (!held) {
            errors.push_back("message " + std::to_string(j) + " held by no sender");
        }
    }

    if (!errors.empty()) {
        return result;
    }

    std::vector<std::size_t> ids(senders.size());
    for (std::size_t k = 0; k < ids.size(); ++k) {
        ids[k] = k + 1;
    }
    while (auto k = redundant_sender(senders, m)) {
        result.warnings.push_back("sender " + std::to_string(ids[*k]) +
                                  " removed: every message it holds is also held by another sender");
        senders.erase(senders.begin() + static_cast<std::ptrdiff_t>(*k));
        ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(*k));
    }

    ValidatedInstance v;
    v.num_messages_ = m;
    v.block_size_ = instance.block_size;
    v.senders_ = std::move(senders);
    v.side_info_ = std::move(side_info);
    v.original_ids_ = std::move(ids);
    v.warnings_ = result.warnings;
    result.instance = std::move(v);
    return result;
}

ValidatedInstance validate_or_throw(const ProblemInstance& instance) {
    auto r = validate(instance);
    if (!r.ok()) {
        throw InvalidInput(join(r.errors, "; "));
    }
    return std::move(*r.instance);
}

MessagePartition partition(const ValidatedInstance& instance) {
    const std::size_t s = instance.num_senders();
    std::map<SenderSet, IndexSet> parts;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << s); ++mask) {
        parts.emplace(SenderSet::from_mask(mask), IndexSet{});
    }
    for (std::size_t j = 1; j <= instance.num_messages(); ++j) {
        std::uint32_t mask = 0;
        for (std::size_t k = 1; k <= s; ++k) {
            if (instance.holds(k, j)) {
                mask |= std::uint32_t{1} << (k - 1);
            }
        }
        parts[SenderSet::from_mask(mask)].push_back(j);
    }
    return MessagePartition(s, std::move(parts));
}

}  // namespace icode
