#include "lcadag/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lcadag/transform.hpp"

namespace lcadag {

SetSystem descendants_from_lxt_clusters(
    const SetSystem& lxt_clusters, const std::optional<std::vector<std::string>>& original_leaves) {
    const std::string suffix = kSyntheticSuffix;
    auto is_synthetic = [&](const std::string& label) {
        if (original_leaves)
            return std::find(original_leaves->begin(), original_leaves->end(), label) ==
                   original_leaves->end();
        return label.size() > suffix.size() &&
               label.compare(label.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    auto host_label = [&](const std::string& label) {
        if (label.size() <= suffix.size() ||
            label.compare(label.size() - suffix.size(), suffix.size(), suffix) != 0)
            throw MalformedInput("cannot derive host vertex from synthetic leaf '" + label + "'");
        return label.substr(0, label.size() - suffix.size());
    };

    // target id space: original leaves keep their labels, synthetic leaves map
    // to their hosts
    std::vector<std::string> out_labels;
    std::map<std::string, VertexId> out_index;
    auto intern = [&](const std::string& label) {
        auto it = out_index.find(label);
        if (it != out_index.end()) return it->second;
        VertexId id = static_cast<VertexId>(out_labels.size());
        out_labels.push_back(label);
        out_index.emplace(label, id);
        return id;
    };
    std::vector<VertexId> translate(lxt_clusters.labels.size(), -1);
    std::vector<bool> synthetic(lxt_clusters.labels.size(), false);
    for (VertexId x : lxt_clusters.ground) {
        const std::string& label = lxt_clusters.labels.at(x);
        if (!is_synthetic(label)) translate[x] = intern(label);
    }
    for (VertexId x : lxt_clusters.ground) {
        const std::string& label = lxt_clusters.labels.at(x);
        if (!is_synthetic(label)) continue;
        synthetic[x] = true;
        std::string host = host_label(label);
        if (out_index.count(host))
            throw MalformedInput("host vertex '" + host + "' collides with a ground element");
        translate[x] = intern(host);
    }

    std::vector<VertexSet> members;
    for (const auto& m : lxt_clusters.members) {
        if (m.size() == 1 && synthetic[m.ids().front()]) continue;  // step 1
        std::vector<VertexId> ids;
        for (VertexId x : m) ids.push_back(translate[x]);  // step 2
        VertexSet mapped = VertexSet::of(std::move(ids));
        if (mapped.size() != m.size())
            throw MalformedInput("substitution collapses a member; input is not a leaf-extension "
                                 "cluster system");
        members.push_back(std::move(mapped));
    }
    std::vector<VertexId> all(out_labels.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<VertexId>(i);
    std::size_t before = members.size();
    SetSystem out = make_system(std::move(out_labels), VertexSet::of(std::move(all)),
                                std::move(members));
    if (out.members.size() != before)
        throw MalformedInput("substitution merges members; input is not a leaf-extension "
                             "cluster system");
    return out;
}

Dag rebuild_sf_from_descendants(const SetSystem& d) {
    const auto& members = d.members;
    if (members.empty()) throw InconsistentFamily("empty family");
    {
        std::set<VertexSet> distinct(members.begin(), members.end());
        if (distinct.size() != members.size())
            throw InconsistentFamily("members are not pairwise distinct");
    }
    for (const auto& m : members)
        if (m.empty()) throw InconsistentFamily("empty member cannot be a descendant set");

    // every element needs a minimum member containing it: its own set
    std::set<VertexId> element_set;
    for (const auto& m : members)
        for (VertexId x : m) element_set.insert(x);
    std::map<VertexId, int> own;  // element -> index of its minimum member
    for (VertexId x : element_set) {
        int best = -1;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (!members[i].contains(x)) continue;
            if (best < 0 || members[i].is_subset_of(members[best])) best = static_cast<int>(i);
        }
        for (const auto& m : members)
            if (m.contains(x) && !members[best].is_subset_of(m))
                throw InconsistentFamily("element '" + d.labels.at(x) +
                                         "' has no minimum containing member");
        own[x] = best;
    }
    // the owner map must hit every member exactly once
    std::vector<VertexId> owner(members.size(), -1);
    for (const auto& [x, i] : own) {
        if (owner[i] >= 0)
            throw InconsistentFamily("two elements own the same member");
        owner[i] = x;
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        if (owner[i] < 0) throw InconsistentFamily("member without an owning element");
    // minimal members are exactly the singletons (the leaves)
    for (std::size_t i = 0; i < members.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < members.size(); ++j)
            if (i != j && members[j].is_subset_of(members[i])) minimal = false;
        if (minimal && members[i].size() != 1)
            throw InconsistentFamily("minimal member of size > 1");
    }

    // vertices are the owners; edge u -> v iff v's set nests directly under
    // u's with no third member between
    std::vector<std::string> labels;
    std::map<VertexId, VertexId> vid;  // element id -> new vertex id
    for (std::size_t i = 0; i < members.size(); ++i) {
        vid[owner[i]] = static_cast<VertexId>(labels.size());
        labels.push_back(d.labels.at(owner[i]));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < members.size(); ++i) {
        VertexId u = owner[i];
        for (VertexId v : members[i]) {
            if (v == u) continue;
            bool covered = true;
            for (VertexId w : members[i]) {
                if (w == u || w == v) continue;
                if (members[own[w]].contains(v)) {
                    covered = false;
                    break;
                }
            }
            if (covered) edges.emplace_back(vid[u], vid[v]);
        }
    }
    return Dag::from_parts(std::move(labels), std::move(edges));
}

bool verify_lop_hasse_reconstruction(const Dag& g, int cap) {
    Dag rebuilt = lop(hasse(clusters(lxt(g).dag)));
    return are_isomorphic(sf(g), rebuilt, cap).isomorphic;
}

}  // namespace lcadag
