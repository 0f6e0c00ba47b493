#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <vector>

#include "icode/digraph.hpp"
#include "icode/gf2.hpp"
#include "icode/instance.hpp"
#include "icode/rate.hpp"
#include "icode/sender_code.hpp"

namespace icode::testing {

using Rng = std::mt19937_64;

std::filesystem::path data_dir();
ValidatedInstance load_example(const std::string& name);

ValidatedInstance make_instance(std::size_t m, std::vector<IndexSet> senders,
                                std::map<std::size_t, IndexSet> side_info, std::size_t t = 1);

/// Instance with the side information of `d` (labels 1..m).
ValidatedInstance with_digraph(const ValidatedInstance& base, const Digraph& d);

/// Interaction digraphs on the three two-sender vertices {1}, {2}, {1,2} are
/// encoded as 6-bit masks, one bit per ordered pair in this order.
inline constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}};

/// Case of every mask, computed on a one-message-per-part instance.
const std::array<Case, 64>& case_of_mask();

struct PartSizes {
    std::size_t only1 = 1;
    std::size_t only2 = 1;
    std::size_t both = 1;
};

/// Two-sender instance whose interaction digraph is exactly `mask`. Each
/// interaction is fully participated when `full`, otherwise a random
/// non-empty subset of the cross edges. Edges inside a part appear with
/// probability `inner`. Message labels are shuffled.
ValidatedInstance two_sender_instance(Rng& rng, PartSizes sizes, unsigned mask, bool full, double inner);

/// Random sizes with every part non-empty and total at most `max_m`.
PartSizes random_sizes(Rng& rng, std::size_t max_m);

/// Arbitrary valid instance: each message owned by a random non-empty sender
/// set, every sender keeps an exclusive message, edges with probability `p`.
ValidatedInstance random_instance(Rng& rng, std::size_t m, std::size_t num_senders, double p);

Digraph random_digraph(Rng& rng, std::size_t n, double p);

/// Rank by enumerating every combination of rows.
std::size_t brute_rank(const BitMatrix& m);

/// Minimum rank over every fitting matrix; practical for at most ~16 edges.
std::size_t brute_minrank(const Digraph& d);

/// Shortest code built from sender-supported rows, decodability checked by
/// simulation; practical for m <= 4.
std::size_t brute_oracle(const ValidatedInstance& instance);

/// Random code whose rows respect the sender structure.
SenderCode random_code(Rng& rng, const ValidatedInstance& instance, std::size_t length);

}  // namespace icode::testing
