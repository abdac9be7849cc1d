#ifndef LCADAG_TESTS_SUPPORT_RANDOM_GRAPHS_HPP
#define LCADAG_TESTS_SUPPORT_RANDOM_GRAPHS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lcadag/dag.hpp"

namespace testsupport {

// Raw engine draws (modulo) keep seeded corpora identical across standard
// libraries; the <random> distribution objects are not pinned by the standard.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t next() { return eng(); }
    int below(int k) { return static_cast<int>(next() % static_cast<std::uint64_t>(k)); }
    bool coin() { return (next() & 1u) != 0; }
};

inline std::vector<std::string> v_labels(int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
    return out;
}

inline std::vector<int> distinct_picks(Rng& rng, int bound, int want) {
    std::vector<int> picks;
    while (static_cast<int>(picks.size()) < want) {
        int p = rng.below(bound);
        if (std::find(picks.begin(), picks.end(), p) == picks.end()) picks.push_back(p);
    }
    return picks;
}

// Single root v0; every later vertex draws 1..max_parents distinct parents
// among its predecessors.
inline lcadag::Dag random_network(int n, std::uint64_t seed, int max_parents = 3) {
    Rng rng(seed);
    std::vector<std::pair<lcadag::VertexId, lcadag::VertexId>> edges;
    for (int v = 1; v < n; ++v) {
        int want = 1 + rng.below(std::min(v, max_parents));
        for (int p : distinct_picks(rng, v, want)) edges.emplace_back(p, v);
    }
    return lcadag::Dag::from_parts(v_labels(n), std::move(edges));
}

// May have several roots and isolated vertices: 0..2 parents per vertex.
inline lcadag::Dag random_dag(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<lcadag::VertexId, lcadag::VertexId>> edges;
    for (int v = 1; v < n; ++v) {
        int want = rng.below(std::min(v, 2) + 1);
        for (int p : distinct_picks(rng, v, want)) edges.emplace_back(p, v);
    }
    return lcadag::Dag::from_parts(v_labels(n), std::move(edges));
}

inline lcadag::Dag random_tree(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<lcadag::VertexId, lcadag::VertexId>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
    return lcadag::Dag::from_parts(v_labels(n), std::move(edges));
}

// Structurally identical copy with permuted vertex order and fresh labels,
// for exercising isomorphism searches.
inline lcadag::Dag relabel_shuffled(const lcadag::Dag& g, std::uint64_t seed) {
    Rng rng(seed);
    int n = g.vertex_count();
    std::vector<int> perm(n);  // old id -> new id
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<std::string> labels(n);
    for (int old = 0; old < n; ++old) labels[perm[old]] = "u" + std::to_string(perm[old]);
    std::vector<std::pair<lcadag::VertexId, lcadag::VertexId>> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    std::sort(edges.begin(), edges.end());
    return lcadag::Dag::from_parts(std::move(labels), std::move(edges));
}

}  // namespace testsupport

#endif
