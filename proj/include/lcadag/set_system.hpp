#ifndef LCADAG_SET_SYSTEM_HPP
#define LCADAG_SET_SYSTEM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcadag/dag.hpp"

namespace lcadag {

// Family of subsets of a ground set. Element ids index into `labels`; for
// systems derived from a Dag they are that graph's vertex ids, so `ground`
// may be a strict subset of the id range (clusters live on the leaves).
struct SetSystem {
    std::vector<std::string> labels;   // id -> label for every id that may occur
    VertexSet ground;                  // the ground set X
    std::vector<VertexSet> members;    // each a subset of ground; distinct when built here
    // v -> index of the member contributed by vertex v (clusters, descendants,
    // ancestors); absent for families without a per-vertex origin.
    std::optional<std::vector<int>> witness;

    std::optional<int> member_index(const VertexSet& s) const;
    // Members as sorted label vectors, family sorted by (size, lexicographic).
    std::vector<std::vector<std::string>> canonical_labels() const;
};

// Builds a system with deduplicated members; witness entries follow the dedup.
SetSystem make_system(std::vector<std::string> labels, VertexSet ground,
                      std::vector<VertexSet> members,
                      std::optional<std::vector<int>> witness = std::nullopt);

// C(v) = leaves below v, one member per vertex (duplicates merged).
SetSystem clusters(const Dag& g);
// D(v) = everything below v, v included. Members are pairwise distinct.
SetSystem descendants(const Dag& g);
// A(v) = everything above v, v included.
SetSystem ancestors(const Dag& g);
// B(u, v) = { w : v <= w <= u }, over all ordered pairs; contains {} whenever
// some pair is unrelated.
SetSystem intermediaries(const Dag& g);

struct ClosednessReport {
    bool closed = false;
    // first member-index pair (i < j) whose non-empty intersection is missing
    std::optional<std::pair<int, int>> violating;
};

// Closed: pairwise intersections are members or empty.
ClosednessReport is_closed(const SetSystem& s);
// Grounded: every singleton of the ground set present, empty set absent.
bool is_grounded(const SetSystem& s);
// Rooted: the whole ground set is a member.
bool is_rooted(const SetSystem& s);
bool is_clustering_system(const SetSystem& s);

// Intersection of all members containing a; throws NoSuperset when none does.
// The result need not itself be a member.
VertexSet closure(const SetSystem& s, const VertexSet& a);

struct PreAryReport {
    bool holds = false;
    std::optional<VertexSet> witness;  // first failing subset in (size, lex) order
};

// Pre-k-ary: every non-empty subset A of the ground set with |A| <= k has a
// closure that is a member. Enumeration is capped; throws SizeLimitExceeded.
PreAryReport is_pre_k_ary(const SetSystem& s, int k, std::uint64_t cap = std::uint64_t{1} << 16);
// The k = 2 case restricted to genuine pairs.
PreAryReport is_pre_binary(const SetSystem& s);

// Equality as families of label sets; witness maps are ignored.
bool families_equal(const SetSystem& a, const SetSystem& b);

}  // namespace lcadag

#endif
