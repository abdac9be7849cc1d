#ifndef LCADAG_MINORS_HPP
#define LCADAG_MINORS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/isomorphism.hpp"

namespace lcadag {

using Path = std::vector<VertexId>;  // consecutive entries joined by edges

// Fully vertex-disjoint directed paths s1 -> t1 and s2 -> t2 (endpoints
// included in the disjointness). Dynamic program over head pairs in
// topological order; single-vertex paths are allowed.
std::optional<std::pair<Path, Path>> two_disjoint_paths(const Dag& g, VertexId s1, VertexId t1,
                                                        VertexId s2, VertexId t2);

// Subdivision of the two-root/two-sink complete pattern: four paths
// r1->s1, r1->s2, r2->s1, r2->s2 that pairwise meet exactly in their shared
// endpoint (nothing for opposite root/sink pairs).
struct K22Subdivision {
    VertexId root1 = -1, root2 = -1;
    VertexId sink1 = -1, sink2 = -1;
    std::array<Path, 4> paths;  // r1->s1, r1->s2, r2->s1, r2->s2
    bool strict = false;        // roots pairwise incomparable, sinks too
};

// Independent structural re-check of a certificate against g.
bool validate_k22(const Dag& g, const K22Subdivision& cert);

// Enumerates strict subdivisions, one per realizable endpoint quadruple,
// iterating incomparable root and sink pairs in id order. Stops at `limit`.
// Throws SizeLimitExceeded above the vertex cap.
std::vector<K22Subdivision> find_strict_k22(const Dag& g, std::size_t limit = SIZE_MAX,
                                            int cap = kDefaultIsoCap);

struct XWitness {
    bool found = false;
    VertexId upper = -1;  // meeting vertex of the two root paths
    VertexId lower = -1;  // branch vertex of the two sink paths; == upper for the X shape
};

// Looks for an X or X' subdivision with the given attachment points: two
// paths from the roots meeting only at `upper`, a (possibly empty) connecting
// path down to `lower`, and two paths from there to the sinks sharing only
// `lower`. Betweenness of directed paths makes the cross-disjointness
// automatic, so the search reduces to per-vertex fork tables.
XWitness has_x_or_xprime(const Dag& g, VertexId root1, VertexId root2, VertexId sink1,
                         VertexId sink2);

struct MinorTheoremReport {
    bool holds = false;
    std::optional<K22Subdivision> counterexample;  // strict subdivision with no matching X/X'
};

// Checks, per endpoint quadruple realized by some strict subdivision, that an
// X or X' subdivision with the same roots and sinks exists. Requires a
// network. Equivalent to the global property.
MinorTheoremReport verify_minor_theorem(const Dag& g, int cap = kDefaultIsoCap);

}  // namespace lcadag

#endif
