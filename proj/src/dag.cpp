#include "lcadag/dag.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>

namespace lcadag {

VertexSet VertexSet::of(std::vector<VertexId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    VertexSet s;
    s.ids_ = std::move(ids);
    return s;
}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet VertexSet::intersect(const VertexSet& o) const {
    std::vector<VertexId> out;
    std::set_intersection(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                          std::back_inserter(out));
    return VertexSet::of(std::move(out));
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    return std::includes(o.ids_.begin(), o.ids_.end(), ids_.begin(), ids_.end());
}

namespace {

void check_label(const std::string& label) {
    if (label.empty()) throw InvalidLabel("empty vertex label");
    for (unsigned char c : label) {
        if (std::isspace(c)) throw InvalidLabel("label contains whitespace: '" + label + "'");
    }
}

}  // namespace

Dag Dag::from_edge_list(const std::vector<std::pair<std::string, std::string>>& edges,
                        const std::vector<std::string>& isolated) {
    Dag g;
    auto intern = [&g](const std::string& label) -> VertexId {
        auto it = g.index_.find(label);
        if (it != g.index_.end()) return it->second;
        check_label(label);
        VertexId id = static_cast<VertexId>(g.labels_.size());
        g.labels_.push_back(label);
        g.index_.emplace(label, id);
        return id;
    };
    for (const auto& [parent, child] : edges) {
        if (parent == child) throw SelfLoop("self loop at '" + parent + "'");
        VertexId u = intern(parent);
        VertexId v = intern(child);
        g.edges_.emplace_back(u, v);
    }
    for (const auto& label : isolated) {
        if (g.index_.count(label)) throw DuplicateLabel("duplicate label '" + label + "'");
        check_label(label);
        VertexId id = static_cast<VertexId>(g.labels_.size());
        g.labels_.push_back(label);
        g.index_.emplace(label, id);
    }
    g.finish();
    return g;
}

Dag Dag::from_parts(std::vector<std::string> labels,
                    std::vector<std::pair<VertexId, VertexId>> edges) {
    Dag g;
    g.labels_ = std::move(labels);
    for (VertexId v = 0; v < static_cast<VertexId>(g.labels_.size()); ++v) {
        check_label(g.labels_[v]);
        if (!g.index_.emplace(g.labels_[v], v).second)
            throw DuplicateLabel("duplicate label '" + g.labels_[v] + "'");
    }
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
            throw Error("edge endpoint out of range");
        if (u == v) throw SelfLoop("self loop at '" + g.labels_[u] + "'");
    }
    g.edges_ = std::move(edges);
    g.finish();
    return g;
}

void Dag::finish() {
    const int n = vertex_count();
    children_.assign(n, {});
    parents_.assign(n, {});
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& e : edges_) {
        if (!seen.insert(e).second)
            throw DuplicateEdge("duplicate edge " + labels_[e.first] + " -> " + labels_[e.second]);
        children_[e.first].push_back(e.second);
        parents_[e.second].push_back(e.first);
    }
    for (auto& adj : children_) std::sort(adj.begin(), adj.end());
    for (auto& adj : parents_) std::sort(adj.begin(), adj.end());

    // Kahn with a min-id heap; leftovers mean a cycle.
    std::vector<int> pending(n);
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v) {
        pending[v] = in_degree(v);
        if (pending[v] == 0) ready.push(v);
    }
    topo_.clear();
    while (!ready.empty()) {
        VertexId v = ready.top();
        ready.pop();
        topo_.push_back(v);
        for (VertexId c : children_[v]) {
            if (--pending[c] == 0) ready.push(c);
        }
    }
    if (static_cast<int>(topo_.size()) != n) {
        // Walk within the still-pending vertices until one repeats.
        std::vector<int> seen_at(n, -1);
        VertexId v = 0;
        while (pending[v] == 0) ++v;
        std::vector<VertexId> walk;
        while (seen_at[v] < 0) {
            seen_at[v] = static_cast<int>(walk.size());
            walk.push_back(v);
            for (VertexId c : children_[v]) {
                if (pending[c] > 0) {
                    v = c;
                    break;
                }
            }
        }
        std::vector<std::string> cycle;
        for (std::size_t i = seen_at[v]; i < walk.size(); ++i) cycle.push_back(labels_[walk[i]]);
        throw CycleDetected("edge list contains a directed cycle through '" + labels_[v] + "'",
                            std::move(cycle));
    }
    topo_index_.assign(n, 0);
    for (int i = 0; i < n; ++i) topo_index_[topo_[i]] = i;
}

std::optional<VertexId> Dag::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Dag::has_edge(VertexId parent, VertexId child) const {
    const auto& adj = children_.at(parent);
    return std::binary_search(adj.begin(), adj.end(), child);
}

VertexSet leaves(const Dag& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.out_degree(v) == 0) out.push_back(v);
    return VertexSet::of(std::move(out));
}

VertexSet roots(const Dag& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.in_degree(v) == 0) out.push_back(v);
    return VertexSet::of(std::move(out));
}

VertexSet inner(const Dag& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.out_degree(v) > 0) out.push_back(v);
    return VertexSet::of(std::move(out));
}

bool is_network(const Dag& g) { return roots(g).size() == 1; }

Dag reverse(const Dag& g) {
    std::vector<std::pair<VertexId, VertexId>> flipped;
    flipped.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) flipped.emplace_back(v, u);
    return Dag::from_parts(g.labels(), std::move(flipped));
}

Dag remove_vertex(const Dag& g, VertexId v) {
    if (g.vertex_count() <= 1) throw LastVertex("cannot remove the last vertex");
    std::vector<std::string> labels;
    std::vector<VertexId> remap(g.vertex_count(), -1);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (u == v) continue;
        remap[u] = static_cast<VertexId>(labels.size());
        labels.push_back(g.label(u));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [a, b] : g.edges())
        if (a != v && b != v) edges.emplace_back(remap[a], remap[b]);
    return Dag::from_parts(std::move(labels), std::move(edges));
}

bool labeled_equal(const Dag& a, const Dag& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<std::string> la = a.labels(), lb = b.labels();
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return false;
    std::set<std::pair<std::string, std::string>> ea, eb;
    for (const auto& [u, v] : a.edges()) ea.emplace(a.label(u), a.label(v));
    for (const auto& [u, v] : b.edges()) eb.emplace(b.label(u), b.label(v));
    return ea == eb;
}

}  // namespace lcadag
