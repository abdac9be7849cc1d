#ifndef LCADAG_ISOMORPHISM_HPP
#define LCADAG_ISOMORPHISM_HPP

#include <optional>
#include <vector>

#include "lcadag/dag.hpp"

namespace lcadag {

struct IsoResult {
    bool isomorphic = false;
    // mapping[v in a] = image in b, present iff isomorphic
    std::optional<std::vector<VertexId>> mapping;
};

inline constexpr int kDefaultIsoCap = 24;

// Digraph isomorphism by iterated degree/color refinement plus backtracking.
// Intended for desk-scale certificates; throws SizeLimitExceeded when either
// graph has more than `cap` vertices.
IsoResult are_isomorphic(const Dag& a, const Dag& b, int cap = kDefaultIsoCap);

}  // namespace lcadag

#endif
