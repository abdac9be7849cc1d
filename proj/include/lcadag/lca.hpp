#ifndef LCADAG_LCA_HPP
#define LCADAG_LCA_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "lcadag/dag.hpp"
#include "lcadag/poset.hpp"

namespace lcadag {

// Common ancestors of a non-empty vertex set (members may qualify themselves).
VertexSet anc(const Poset& p, const VertexSet& a);
VertexSet anc(const Dag& g, const VertexSet& a);

// Minimal elements of anc(a).
VertexSet lca_set(const Poset& p, const VertexSet& a);
VertexSet lca_set(const Dag& g, const VertexSet& a);

// The unique minimal common ancestor; throws NoLca / AmbiguousLca.
VertexId lca(const Dag& g, const VertexSet& a);

enum class Route {
    PairwiseVertex,
    LxtLeafPairs,
    JoinSemilattice,
    DescendantClosed,
};

struct GlobalLcaWitness {
    enum class Kind {
        AmbiguousPair,  // query pair with LCA set of size != 1
        SystemPair,     // two descendant sets whose intersection is not one
        MultipleRoots,
    };
    Kind kind = Kind::AmbiguousPair;
    VertexSet query;                // AmbiguousPair: the pair; MultipleRoots: the roots
    VertexSet lca;                  // AmbiguousPair: the whole LCA set
    std::vector<VertexSet> sets;    // SystemPair: the two members, then their intersection
};

struct GlobalLcaReport {
    bool holds = false;
    Route route = Route::PairwiseVertex;
    std::optional<GlobalLcaWitness> witness;
};

// Route 1: every vertex pair has a unique minimal common ancestor.
GlobalLcaReport has_global_lca_pairwise(const Dag& g);

// Route 2: every leaf pair of the leaf-extended graph has one. The witness is
// mapped back to vertices of g.
GlobalLcaReport has_global_lca_via_lxt(const Dag& g);

struct JoinSemilatticeReport {
    bool holds = false;
    std::optional<std::pair<VertexId, VertexId>> witness;  // pair without a least upper bound
};

// Route 3, directly on the order relation; shares no LCA code so it can act
// as an independent oracle for the other routes.
JoinSemilatticeReport is_join_semilattice(const Poset& p);

// Route 4: single root and a closed descendant family.
GlobalLcaReport has_global_lca_via_descendants(const Dag& g);

struct PairReport {
    bool holds = false;
    std::optional<std::pair<VertexId, VertexId>> witness;  // first failing pair in id order
};

// Comparable vertices iff comparable clusters.
PairReport satisfies_pcc(const Dag& g);

// Every vertex is the unique LCA of some leaf set.
bool is_lca_relevant(const Dag& g);

// v == lca(C(v)) for every vertex v.
bool satisfies_strong_cl(const Dag& g);

struct ExhaustiveLcaReport {
    bool holds = false;
    std::optional<VertexSet> witness;  // first failing leaf subset in (size, lex-by-id) order
};

// |LCA(A)| == 1 for every non-empty leaf subset A, checked by enumeration.
// Throws SizeLimitExceeded when 2^|leaves| exceeds the cap.
ExhaustiveLcaReport has_lca_property_exhaustive(const Dag& g,
                                                std::uint64_t cap = std::uint64_t{1} << 16);

// |LCA({x, y})| == 1 for every leaf pair.
PairReport has_pairwise_lca_property(const Dag& g);

}  // namespace lcadag

#endif
