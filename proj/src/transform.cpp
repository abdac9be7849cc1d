#include "lcadag/transform.hpp"

#include <algorithm>
#include <string>

namespace lcadag {

std::vector<std::pair<VertexId, VertexId>> shortcuts(const Dag& g) {
    Poset p = reachability(g);
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& [u, w] : g.edges()) {
        Bits between = p.down(u) & p.up(w);
        between.reset(u);
        between.reset(w);
        if (between.any()) out.emplace_back(u, w);
    }
    return out;
}

Dag sf(const Dag& g) {
    auto cut = shortcuts(g);
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (const auto& e : g.edges())
        if (std::find(cut.begin(), cut.end(), e) == cut.end()) kept.push_back(e);
    return Dag::from_parts(g.labels(), std::move(kept));
}

LxtResult lxt(const Dag& g) {
    std::vector<std::string> labels = g.labels();
    std::vector<std::pair<VertexId, VertexId>> edges = g.edges();
    std::vector<VertexId> fresh;
    for (VertexId v : inner(g)) {
        std::string leaf_label = g.label(v) + kSyntheticSuffix;
        if (g.find(leaf_label))
            throw LabelCollision("label '" + leaf_label + "' already present");
        VertexId id = static_cast<VertexId>(labels.size());
        labels.push_back(std::move(leaf_label));
        edges.emplace_back(v, id);
        fresh.push_back(id);
    }
    return {Dag::from_parts(std::move(labels), std::move(edges)), VertexSet::of(std::move(fresh))};
}

namespace {

bool is_synthetic_label(const std::string& label) {
    const std::string suffix = kSyntheticSuffix;
    return label.size() > suffix.size() &&
           label.compare(label.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Dag lop(const Dag& g, LopPolicy policy) {
    std::vector<bool> drop(g.vertex_count(), false);
    for (VertexId v : inner(g)) {
        std::vector<VertexId> candidates;
        for (VertexId c : g.children(v))
            if (g.out_degree(c) == 0 && g.in_degree(c) == 1) candidates.push_back(c);
        if (candidates.empty())
            throw NotTreeLeafChild("inner vertex '" + g.label(v) + "' has no tree-leaf child",
                                   g.label(v));
        VertexId pick = candidates.front();
        switch (policy) {
            case LopPolicy::SyntheticFirst: {
                for (VertexId c : candidates)
                    if (is_synthetic_label(g.label(c))) {
                        pick = c;
                        break;
                    }
                break;
            }
            case LopPolicy::LowestId:
                break;
            case LopPolicy::HighestId:
                pick = candidates.back();
                break;
        }
        drop[pick] = true;
    }
    std::vector<std::string> labels;
    std::vector<VertexId> remap(g.vertex_count(), -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (drop[v]) continue;
        remap[v] = static_cast<VertexId>(labels.size());
        labels.push_back(g.label(v));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [u, v] : g.edges())
        if (!drop[u] && !drop[v]) edges.emplace_back(remap[u], remap[v]);
    return Dag::from_parts(std::move(labels), std::move(edges));
}

namespace {

// Cover edges of members under inclusion: A -> B iff B < A with nothing between.
Dag hasse_of_members(const std::vector<VertexSet>& members, std::vector<std::string> labels) {
    const int m = static_cast<int>(members.size());
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            if (!(members[j].is_subset_of(members[i]) && members[j] != members[i])) continue;
            bool covered = true;
            for (int t = 0; t < m && covered; ++t) {
                if (t == i || t == j) continue;
                if (members[j].is_subset_of(members[t]) && members[j] != members[t] &&
                    members[t].is_subset_of(members[i]) && members[t] != members[i])
                    covered = false;
            }
            if (covered) edges.emplace_back(i, j);
        }
    }
    return Dag::from_parts(std::move(labels), std::move(edges));
}

}  // namespace

Dag hasse(const SetSystem& s, HasseLabeling labeling) {
    std::vector<std::string> labels;
    if (labeling == HasseLabeling::WitnessLabels) {
        if (!s.witness) throw Error("witness labeling requested but no witness map present");
        std::vector<int> owner(s.members.size(), -1);
        for (std::size_t v = 0; v < s.witness->size(); ++v) {
            int m = (*s.witness)[v];
            if (m < 0) continue;
            if (owner[m] >= 0)
                throw Error("witness map is not injective over members");
            owner[m] = static_cast<int>(v);
        }
        for (std::size_t m = 0; m < s.members.size(); ++m) {
            if (owner[m] < 0) throw Error("member without witness vertex");
            labels.push_back(s.labels.at(owner[m]));
        }
    } else {
        for (const auto& member : s.members) {
            std::vector<std::string> parts;
            for (VertexId v : member) parts.push_back(s.labels.at(v));
            std::sort(parts.begin(), parts.end());
            std::string label = "{";
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (i) label += ',';
                label += parts[i];
            }
            label += '}';
            labels.push_back(std::move(label));
        }
    }
    return hasse_of_members(s.members, std::move(labels));
}

Dag hasse(const Poset& p, const std::vector<std::string>& labels) {
    const int n = p.size();
    if (static_cast<int>(labels.size()) != n) throw Error("label count does not match poset size");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = 0; b < n; ++b) {
            if (a == b || !p.leq(b, a)) continue;
            Bits between = p.down(a) & p.up(b);
            between.reset(a);
            between.reset(b);
            if (between.none()) edges.emplace_back(a, b);
        }
    }
    return Dag::from_parts(labels, std::move(edges));
}

bool is_regular(const Dag& g) {
    SetSystem cs = clusters(g);
    if (static_cast<int>(cs.members.size()) != g.vertex_count()) return false;
    const auto& phi = *cs.witness;  // v -> member index, bijective at this point
    Dag h = hasse(cs);
    if (g.edge_count() != h.edge_count()) return false;
    for (const auto& [u, v] : g.edges())
        if (!h.has_edge(phi[u], phi[v])) return false;
    return true;
}

}  // namespace lcadag
