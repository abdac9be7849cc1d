#include "lcadag/level1.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace lcadag {

namespace {

// Classic low-point block decomposition on the undirected view. An edge stack
// collects each biconnected component; antiparallel edges cannot occur in a
// DAG, so the undirected graph is simple.
struct BlockFinder {
    const Dag& g;
    std::vector<std::vector<VertexId>> adj;
    std::vector<int> num, low;
    std::vector<std::pair<VertexId, VertexId>> stack;
    std::vector<VertexSet> out;
    int counter = 0;

    explicit BlockFinder(const Dag& graph) : g(graph) {
        adj.assign(g.vertex_count(), {});
        for (const auto& [u, v] : g.edges()) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        num.assign(g.vertex_count(), -1);
        low.assign(g.vertex_count(), 0);
    }

    void emit_from(std::pair<VertexId, VertexId> top) {
        std::vector<VertexId> verts;
        for (;;) {
            auto e = stack.back();
            stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == top) break;
        }
        out.push_back(VertexSet::of(std::move(verts)));
    }

    void dfs(VertexId v, VertexId parent) {
        num[v] = low[v] = counter++;
        for (VertexId w : adj[v]) {
            if (num[w] < 0) {
                stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) emit_from({v, w});
            } else if (w != parent && num[w] < num[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], num[w]);
            }
        }
    }

    std::vector<VertexSet> run() {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (num[v] >= 0) continue;
            dfs(v, -1);
            if (adj[v].empty()) out.push_back(VertexSet::of({v}));
        }
        return out;
    }
};

}  // namespace

std::vector<VertexSet> blocks(const Dag& g) { return BlockFinder(g).run(); }

bool is_level1(const Dag& g) {
    if (!is_network(g)) throw NotANetwork("level-1 recognition requires a single root");
    for (const auto& block : blocks(g)) {
        int hybrids = 0;
        for (VertexId v : block)
            if (g.in_degree(v) > 1) ++hybrids;
        if (hybrids > 1) return false;
    }
    return true;
}

bool is_galled_tree(const Dag& g) {
    if (!is_network(g)) throw NotANetwork("galled-tree recognition requires a single root");
    for (const auto& block : blocks(g)) {
        if (block.size() <= 2) continue;  // vertex or edge
        // a union of two directed paths sharing only the endpoints is an
        // undirected simple cycle with exactly one source and one sink inside
        int sources = 0, sinks = 0;
        bool degree_ok = true;
        int block_edges = 0;
        for (VertexId v : block) {
            int ind = 0, outd = 0;
            for (VertexId u : g.parents(v))
                if (block.contains(u)) ++ind;
            for (VertexId u : g.children(v))
                if (block.contains(u)) ++outd;
            block_edges += outd;
            if (ind + outd != 2) degree_ok = false;
            if (ind == 0) ++sources;
            if (outd == 0) ++sinks;
        }
        if (!degree_ok || block_edges != static_cast<int>(block.size()) || sources != 1 ||
            sinks != 1)
            return false;
    }
    return true;
}

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t next() { return eng(); }
    int below(int k) { return static_cast<int>(next() % static_cast<std::uint64_t>(k)); }
};

}  // namespace

Dag random_level1(int n, std::uint64_t seed, const Level1Params& params) {
    if (n < 1) throw Error("vertex count must be positive");
    Rng rng(seed);
    int made = 1;  // v0 is the root
    std::vector<std::pair<int, int>> edges;
    std::vector<int> indeg(1, 0);
    std::vector<bool> heads_gall(1, false);
    // a tree bridge u -> v may be replaced by a cycle only when the block it
    // creates gains exactly one hybrid: u must not already be one, and v must
    // not head an earlier cycle (it is about to become a hybrid itself)
    std::vector<std::pair<int, int>> safe;
    auto add_leaf = [&](int parent) {
        edges.emplace_back(parent, made);
        safe.emplace_back(parent, made);
        indeg.push_back(1);
        heads_gall.push_back(false);
        ++made;
    };
    if (n > 1) add_leaf(0);
    while (made < n) {
        int budget = n - made;
        std::vector<std::size_t> candidates;
        for (std::size_t i = 0; i < safe.size(); ++i)
            if (indeg[safe[i].first] <= 1 && !heads_gall[safe[i].second]) candidates.push_back(i);
        bool gall = !candidates.empty() && budget >= 2 && rng.below(3) == 0;
        if (!gall) {
            add_leaf(rng.below(made));
            continue;
        }
        // replace a bridge u -> v by parallel branches into v
        int branches = (!params.galled_only && budget >= 3 && rng.below(4) == 0) ? 3 : 2;
        int cost = branches;  // one new vertex per branch, before subdivision
        if (cost > budget) branches = 2, cost = 2;
        std::size_t pick =
            candidates[static_cast<std::size_t>(rng.below(static_cast<int>(candidates.size())))];
        auto [u, v] = safe[pick];
        safe.erase(safe.begin() + static_cast<long>(pick));
        edges.erase(std::find(edges.begin(), edges.end(), std::make_pair(u, v)));
        int spare = budget - cost;
        for (int b = 0; b < branches; ++b) {
            int len = 1;
            if (spare > 0 && (rng.next() & 1)) {
                ++len;
                --spare;
            }
            int prev = u;
            for (int i = 0; i < len; ++i) {
                edges.emplace_back(prev, made);
                indeg.push_back(1);
                heads_gall.push_back(false);
                prev = made++;
            }
            edges.emplace_back(prev, v);
        }
        indeg[v] = branches;
        heads_gall[u] = true;
    }
    std::vector<std::string> labels;
    for (int i = 0; i < made; ++i) labels.push_back("v" + std::to_string(i));
    std::vector<std::pair<VertexId, VertexId>> typed;
    for (auto [u, v] : edges) typed.emplace_back(u, v);
    return Dag::from_parts(std::move(labels), std::move(typed));
}

}  // namespace lcadag
