#include "lcadag/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lcadag {

namespace {

int color_count(const std::vector<int>& color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
}

// Joint refinement over the disjoint union keeps colors comparable across graphs.
bool joint_coloring(const Dag& a, const Dag& b, std::vector<int>& ca, std::vector<int>& cb) {
    std::map<std::pair<int, int>, int> deg_ids;
    auto seed = [&deg_ids](const Dag& g, std::vector<int>& c) {
        c.resize(g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            auto key = std::make_pair(g.in_degree(v), g.out_degree(v));
            auto [it, inserted] = deg_ids.emplace(key, static_cast<int>(deg_ids.size()));
            c[v] = it->second;
        }
    };
    seed(a, ca);
    seed(b, cb);
    for (;;) {
        std::map<std::vector<int>, int> ids;
        auto step = [&ids](const Dag& g, const std::vector<int>& c) {
            std::vector<int> next(g.vertex_count());
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                std::vector<int> sig{c[v], -1};
                std::vector<int> cs, ps;
                for (VertexId x : g.children(v)) cs.push_back(c[x]);
                for (VertexId x : g.parents(v)) ps.push_back(c[x]);
                std::sort(cs.begin(), cs.end());
                std::sort(ps.begin(), ps.end());
                sig.insert(sig.end(), cs.begin(), cs.end());
                sig.push_back(-2);
                sig.insert(sig.end(), ps.begin(), ps.end());
                auto [it, inserted] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
                next[v] = it->second;
            }
            return next;
        };
        std::vector<int> na = step(a, ca);
        std::vector<int> nb = step(b, cb);
        // class sizes must match between the two graphs at every round
        std::map<int, int> ha, hb;
        for (int c : na) ++ha[c];
        for (int c : nb) ++hb[c];
        if (ha != hb) return false;
        bool stable = color_count(na) == color_count(ca) && color_count(nb) == color_count(cb);
        ca = std::move(na);
        cb = std::move(nb);
        if (stable) return true;
    }
}

struct Backtracker {
    const Dag& a;
    const Dag& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<VertexId> order;    // a-vertices, most constrained first
    std::vector<VertexId> image;    // a -> b, -1 unassigned
    std::vector<bool> used;         // b-side occupancy

    bool consistent(VertexId v, VertexId w) const {
        // every already-assigned neighbor must agree, both edge directions
        for (VertexId c : a.children(v)) {
            if (image[c] >= 0 && !b.has_edge(w, image[c])) return false;
        }
        for (VertexId p : a.parents(v)) {
            if (image[p] >= 0 && !b.has_edge(image[p], w)) return false;
        }
        return true;
    }

    bool run(std::size_t pos) {
        if (pos == order.size()) return true;
        VertexId v = order[pos];
        for (VertexId w = 0; w < b.vertex_count(); ++w) {
            if (used[w] || cb[w] != ca[v]) continue;
            if (!consistent(v, w)) continue;
            image[v] = w;
            used[w] = true;
            if (run(pos + 1)) return true;
            image[v] = -1;
            used[w] = false;
        }
        return false;
    }
};

}  // namespace

IsoResult are_isomorphic(const Dag& a, const Dag& b, int cap) {
    if (a.vertex_count() > cap || b.vertex_count() > cap)
        throw SizeLimitExceeded("isomorphism check beyond vertex cap " + std::to_string(cap));
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return {};

    std::vector<int> ca, cb;
    if (!joint_coloring(a, b, ca, cb)) return {};

    Backtracker bt{a, b, ca, cb, {}, {}, {}};
    bt.order.resize(a.vertex_count());
    std::iota(bt.order.begin(), bt.order.end(), 0);
    std::vector<int> class_size(color_count(ca), 0);
    for (int c : ca) ++class_size[c];
    std::sort(bt.order.begin(), bt.order.end(), [&](VertexId x, VertexId y) {
        if (class_size[ca[x]] != class_size[ca[y]]) return class_size[ca[x]] < class_size[ca[y]];
        return x < y;
    });
    bt.image.assign(a.vertex_count(), -1);
    bt.used.assign(b.vertex_count(), false);
    if (!bt.run(0)) return {};

    // full re-verification of the found bijection
    for (const auto& [u, v] : a.edges())
        if (!b.has_edge(bt.image[u], bt.image[v])) return {};

    IsoResult res;
    res.isomorphic = true;
    res.mapping = bt.image;
    return res;
}

}  // namespace lcadag
