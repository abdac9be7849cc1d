#include "lcadag/lca.hpp"

#include <algorithm>
#include <string>

#include "lcadag/set_system.hpp"
#include "lcadag/transform.hpp"

namespace lcadag {

namespace {

Bits anc_bits(const Poset& p, const VertexSet& a) {
    if (a.empty()) throw EmptyQuery("ancestor query over the empty set");
    Bits acc;
    bool first = true;
    for (VertexId v : a) {
        if (first) {
            acc = p.up(v);
            first = false;
        } else {
            acc &= p.up(v);
        }
    }
    return acc;
}

}  // namespace

VertexSet anc(const Poset& p, const VertexSet& a) { return bits_to_set(anc_bits(p, a)); }

VertexSet anc(const Dag& g, const VertexSet& a) { return anc(reachability(g), a); }

VertexSet lca_set(const Poset& p, const VertexSet& a) {
    return minimal_elements(p, anc_bits(p, a));
}

VertexSet lca_set(const Dag& g, const VertexSet& a) { return lca_set(reachability(g), a); }

VertexId lca(const Dag& g, const VertexSet& a) {
    VertexSet s = lca_set(g, a);
    if (s.empty()) throw NoLca("query set has no common ancestor");
    if (s.size() > 1) {
        std::vector<std::string> labels;
        for (VertexId v : s) labels.push_back(g.label(v));
        throw AmbiguousLca("query set has " + std::to_string(s.size()) +
                               " minimal common ancestors",
                           std::move(labels));
    }
    return s.ids().front();
}

GlobalLcaReport has_global_lca_pairwise(const Dag& g) {
    Poset p = reachability(g);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
            VertexSet pair = VertexSet::of({u, v});
            VertexSet s = lca_set(p, pair);
            if (s.size() != 1) {
                GlobalLcaWitness w;
                w.kind = GlobalLcaWitness::Kind::AmbiguousPair;
                w.query = pair;
                w.lca = s;
                return {false, Route::PairwiseVertex, std::move(w)};
            }
        }
    }
    return {true, Route::PairwiseVertex, std::nullopt};
}

GlobalLcaReport has_global_lca_via_lxt(const Dag& g) {
    LxtResult ext = lxt(g);
    const Dag& h = ext.dag;
    Poset p = reachability(h);
    VertexSet hl = leaves(h);
    // synthetic leaves keep their host's id below vertex_count(g)
    auto host_of = [&](VertexId v) -> VertexId {
        if (v < g.vertex_count()) return v;
        return h.parents(v).front();
    };
    const auto& pool = hl.ids();
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            VertexSet pair = VertexSet::of({pool[i], pool[j]});
            VertexSet s = lca_set(p, pair);
            if (s.size() != 1) {
                GlobalLcaWitness w;
                w.kind = GlobalLcaWitness::Kind::AmbiguousPair;
                w.query = VertexSet::of({host_of(pool[i]), host_of(pool[j])});
                // minimal common ancestors of two distinct leaves are inner
                // vertices of the extension, so their ids belong to g
                w.lca = s;
                return {false, Route::LxtLeafPairs, std::move(w)};
            }
        }
    }
    return {true, Route::LxtLeafPairs, std::nullopt};
}

JoinSemilatticeReport is_join_semilattice(const Poset& p) {
    const int n = p.size();
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            Bits ub = p.up(u) & p.up(v);
            // least upper bound: a member of ub lying below every member
            bool found = false;
            for (auto s = ub.find_first(); s != Bits::npos && !found; s = ub.find_next(s)) {
                if ((ub & ~p.up(static_cast<VertexId>(s))).none()) found = true;
            }
            if (!found) return {false, std::make_pair(u, v)};
        }
    }
    return {true, std::nullopt};
}

GlobalLcaReport has_global_lca_via_descendants(const Dag& g) {
    VertexSet r = roots(g);
    // only the empty graph has zero roots; the property holds vacuously there
    if (r.size() > 1) {
        GlobalLcaWitness w;
        w.kind = GlobalLcaWitness::Kind::MultipleRoots;
        w.query = r;
        return {false, Route::DescendantClosed, std::move(w)};
    }
    SetSystem d = descendants(g);
    ClosednessReport c = is_closed(d);
    if (c.closed) return {true, Route::DescendantClosed, std::nullopt};
    GlobalLcaWitness w;
    w.kind = GlobalLcaWitness::Kind::SystemPair;
    const auto& [i, j] = *c.violating;
    w.sets = {d.members[i], d.members[j], d.members[i].intersect(d.members[j])};
    return {false, Route::DescendantClosed, std::move(w)};
}

PairReport satisfies_pcc(const Dag& g) {
    Poset p = reachability(g);
    SetSystem cs = clusters(g);
    const auto& w = *cs.witness;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
            const VertexSet& cu = cs.members[w[u]];
            const VertexSet& cv = cs.members[w[v]];
            bool cluster_cmp = cu.is_subset_of(cv) || cv.is_subset_of(cu);
            if (p.comparable(u, v) != cluster_cmp) return {false, std::make_pair(u, v)};
        }
    }
    return {true, std::nullopt};
}

bool is_lca_relevant(const Dag& g) {
    // equivalent formulation: clusters pairwise distinct and PCC holds
    SetSystem cs = clusters(g);
    if (static_cast<int>(cs.members.size()) != g.vertex_count()) return false;
    return satisfies_pcc(g).holds;
}

bool satisfies_strong_cl(const Dag& g) {
    Poset p = reachability(g);
    SetSystem cs = clusters(g);
    const auto& w = *cs.witness;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        VertexSet s = lca_set(p, cs.members[w[v]]);
        if (s.size() != 1 || s.ids().front() != v) return false;
    }
    return true;
}

ExhaustiveLcaReport has_lca_property_exhaustive(const Dag& g, std::uint64_t cap) {
    VertexSet ls = leaves(g);
    const auto& pool = ls.ids();
    const int n = static_cast<int>(pool.size());
    if (n < 64 && (std::uint64_t{1} << n) > cap + 1)
        throw SizeLimitExceeded("leaf subset enumeration exceeds cap " + std::to_string(cap));
    if (n >= 64)
        throw SizeLimitExceeded("leaf subset enumeration exceeds cap " + std::to_string(cap));
    Poset p = reachability(g);
    // size-lex order over the leaf pool
    std::vector<int> pick;
    for (int size = 1; size <= n; ++size) {
        pick.assign(size, 0);
        for (int i = 0; i < size; ++i) pick[i] = i;
        for (;;) {
            std::vector<VertexId> subset(size);
            for (int i = 0; i < size; ++i) subset[i] = pool[pick[i]];
            VertexSet a = VertexSet::of(std::move(subset));
            if (lca_set(p, a).size() != 1) return {false, std::move(a)};
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return {true, std::nullopt};
}

PairReport has_pairwise_lca_property(const Dag& g) {
    Poset p = reachability(g);
    const std::vector<VertexId> pool = leaves(g).ids();
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (lca_set(p, VertexSet::of({pool[i], pool[j]})).size() != 1)
                return {false, std::make_pair(pool[i], pool[j])};
        }
    }
    return {true, std::nullopt};
}

}  // namespace lcadag
