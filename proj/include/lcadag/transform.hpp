#ifndef LCADAG_TRANSFORM_HPP
#define LCADAG_TRANSFORM_HPP

#include <utility>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/poset.hpp"
#include "lcadag/set_system.hpp"

namespace lcadag {

// Edges (u, w) with some v strictly between w and u; removing them all keeps
// the reachability order and every cluster intact.
std::vector<std::pair<VertexId, VertexId>> shortcuts(const Dag& g);

// The shortcut-free version: same vertices, shortcut edges deleted.
Dag sf(const Dag& g);

inline constexpr const char* kSyntheticSuffix = "__lx";

struct LxtResult {
    Dag dag;
    VertexSet synthetic;  // ids of the added leaves, in the result graph
};

// Attaches one fresh leaf "<label>__lx" below every inner vertex. Throws
// LabelCollision when such a label already exists.
LxtResult lxt(const Dag& g);

enum class LopPolicy {
    SyntheticFirst,  // prefer "__lx" leaves, then lowest id
    LowestId,
    HighestId,
};

// Removes exactly one in-degree-one leaf child per inner vertex. Requires
// every inner vertex to own such a child (NotTreeLeafChild otherwise). Any
// two policies produce isomorphic results.
Dag lop(const Dag& g, LopPolicy policy = LopPolicy::SyntheticFirst);

enum class HasseLabeling {
    SetNotation,    // "{a,b,c}" with labels sorted
    WitnessLabels,  // label of the unique witness vertex per member
};

// Hasse diagram of (members, set inclusion): edge A -> B iff B is a proper
// subset of A with no member strictly between. WitnessLabels requires the
// witness map to hit every member exactly once.
Dag hasse(const SetSystem& s, HasseLabeling labeling = HasseLabeling::SetNotation);

// Hasse diagram of an abstract order; `labels` names the elements.
Dag hasse(const Poset& p, const std::vector<std::string>& labels);

// True when v -> C(v) is an isomorphism onto the Hasse diagram of the
// cluster system.
bool is_regular(const Dag& g);

}  // namespace lcadag

#endif
