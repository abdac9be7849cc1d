#ifndef LCADAG_LEVEL1_HPP
#define LCADAG_LEVEL1_HPP

#include <cstdint>
#include <vector>

#include "lcadag/dag.hpp"

namespace lcadag {

// Vertex sets of the maximal biconnected components of the underlying
// undirected graph. Bridges appear as two-vertex blocks, isolated vertices as
// singletons; cut vertices belong to several blocks.
std::vector<VertexSet> blocks(const Dag& g);

// Network whose blocks each contain at most one vertex of in-degree > 1.
// Throws NotANetwork.
bool is_level1(const Dag& g);

// Network whose blocks are single vertices, single edges, or unions of
// exactly two directed paths sharing only their endpoints. Throws
// NotANetwork. Implies is_level1.
bool is_galled_tree(const Dag& g);

struct Level1Params {
    bool galled_only = false;  // restrict cycles to two parallel branches
};

// Deterministic generator: grows a rooted tree and composes cycles with a
// single reticulation onto bridge edges, padding with leaves to exactly n
// vertices. Labels are "v0".."v<n-1>".
Dag random_level1(int n, std::uint64_t seed, const Level1Params& params = {});

}  // namespace lcadag

#endif
