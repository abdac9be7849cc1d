#ifndef LCADAG_HOLJU_HPP
#define LCADAG_HOLJU_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/poset.hpp"

namespace lcadag {

// Candidate set for a prospective leaf with parent set w, probed at v: the
// union over w' in w of the minimal common ancestors of {w', v}.
VertexSet l_set(const Dag& g, const VertexSet& w, VertexId v);

struct OStarReport {
    bool ok = false;
    std::optional<VertexId> witness;  // first v (id order) whose candidate set
                                      // lacks a unique minimum
};

// Attachment condition: for every vertex v the candidate set has a unique
// minimal element. Sound on graphs that already have the global property;
// `validate` re-checks that precondition and throws NotGlobalLca.
OStarReport check_o_star(const Dag& g, const VertexSet& w, bool validate = false);

enum class ExtendMode { Checked, Unchecked };

// Adds a fresh leaf with parent set w. Checked mode enforces the attachment
// condition first (OStarViolated on failure); LabelCollision when the label
// exists.
Dag extend(const Dag& g, const VertexSet& w, const std::string& label,
           ExtendMode mode = ExtendMode::Checked, bool validate_input = false);

struct TraceStep {
    std::string leaf;
    std::vector<std::string> parents;  // sorted by label
};

// Leaf-by-leaf construction recipe starting from a single vertex.
struct ConstructionTrace {
    std::string origin;
    std::vector<TraceStep> steps;
};

// Peels the leaf with the largest topological index down to one vertex, then
// replays forward verifying the attachment condition at every step. Succeeds
// exactly on graphs with the global property; otherwise throws NotHolju with
// the size of the largest valid prefix.
ConstructionTrace deconstruct(const Dag& g);

// Rebuilds a graph from a trace. Checked mode verifies the attachment
// condition per step and throws OStarViolated carrying the 1-based step.
Dag replay(const ConstructionTrace& t, ExtendMode mode = ExtendMode::Checked);

struct RandomLcaParams {
    int max_parents = 3;    // geometric parent count, capped here
    int retry_budget = 32;  // attempts per step before the singleton fallback
};

// Deterministic generator: grows a graph that keeps the global property at
// every step, by sampling parent sets and rejecting failures. Labels are
// "v0".."v<n-1>" in creation order.
std::pair<Dag, ConstructionTrace> random_global_lca(int n, std::uint64_t seed,
                                                    const RandomLcaParams& params = {});

}  // namespace lcadag

#endif
