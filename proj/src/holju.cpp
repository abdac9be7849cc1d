#include "lcadag/holju.hpp"

#include <algorithm>
#include <random>

#include "lcadag/lca.hpp"

namespace lcadag {

VertexSet l_set(const Dag& g, const VertexSet& w, VertexId v) {
    if (w.empty()) throw EmptyQuery("parent set must be non-empty");
    Poset p = reachability(g);
    std::vector<VertexId> acc;
    for (VertexId u : w) {
        VertexSet part = lca_set(p, VertexSet::of({u, v}));
        acc.insert(acc.end(), part.begin(), part.end());
    }
    return VertexSet::of(std::move(acc));
}

OStarReport check_o_star(const Dag& g, const VertexSet& w, bool validate) {
    if (w.empty()) throw EmptyQuery("parent set must be non-empty");
    if (validate && !has_global_lca_pairwise(g).holds)
        throw NotGlobalLca("graph under extension lacks the global property");
    Poset p = reachability(g);
    const int n = g.vertex_count();
    for (VertexId v = 0; v < n; ++v) {
        std::vector<VertexId> acc;
        for (VertexId u : w) {
            VertexSet part = lca_set(p, VertexSet::of({u, v}));
            acc.insert(acc.end(), part.begin(), part.end());
        }
        Bits candidates = set_to_bits(VertexSet::of(std::move(acc)), n);
        if (minimal_elements(p, candidates).size() != 1) return {false, v};
    }
    return {true, std::nullopt};
}

Dag extend(const Dag& g, const VertexSet& w, const std::string& label, ExtendMode mode,
           bool validate_input) {
    if (w.empty()) throw EmptyQuery("parent set must be non-empty");
    if (g.find(label)) throw LabelCollision("label '" + label + "' already present");
    if (mode == ExtendMode::Checked) {
        OStarReport rep = check_o_star(g, w, validate_input);
        if (!rep.ok)
            throw OStarViolated("attachment condition fails at '" + g.label(*rep.witness) + "'",
                                g.label(*rep.witness));
    }
    std::vector<std::string> labels = g.labels();
    labels.push_back(label);
    std::vector<std::pair<VertexId, VertexId>> edges = g.edges();
    VertexId fresh = static_cast<VertexId>(labels.size()) - 1;
    for (VertexId u : w) edges.emplace_back(u, fresh);
    return Dag::from_parts(std::move(labels), std::move(edges));
}

ConstructionTrace deconstruct(const Dag& g) {
    // peel backwards, then validate forwards
    std::vector<TraceStep> reversed;
    Dag cur = g;
    while (cur.vertex_count() > 1) {
        VertexId peel = cur.topological_order().back();  // a leaf by construction
        TraceStep step;
        step.leaf = cur.label(peel);
        for (VertexId u : cur.parents(peel)) step.parents.push_back(cur.label(u));
        std::sort(step.parents.begin(), step.parents.end());
        reversed.push_back(std::move(step));
        cur = remove_vertex(cur, peel);
    }
    ConstructionTrace t;
    t.origin = cur.label(0);
    t.steps.assign(reversed.rbegin(), reversed.rend());

    Dag partial = Dag::from_edge_list({}, {t.origin});
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const TraceStep& step = t.steps[i];
        if (step.parents.empty())
            throw NotHolju("vertex '" + step.leaf + "' has no parents and is not the origin",
                           partial.vertex_count(), "second root '" + step.leaf + "'");
        std::vector<VertexId> ids;
        for (const auto& label : step.parents) ids.push_back(*partial.find(label));
        VertexSet w = VertexSet::of(std::move(ids));
        OStarReport rep = check_o_star(partial, w);
        if (!rep.ok)
            throw NotHolju("attachment condition fails when adding '" + step.leaf + "'",
                           partial.vertex_count(),
                           "candidate set at '" + partial.label(*rep.witness) +
                               "' has no unique minimum");
        partial = extend(partial, w, step.leaf, ExtendMode::Unchecked);
    }
    return t;
}

Dag replay(const ConstructionTrace& t, ExtendMode mode) {
    Dag g = Dag::from_edge_list({}, {t.origin});
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const TraceStep& step = t.steps[i];
        if (step.parents.empty())
            throw OStarViolated("step " + std::to_string(i + 1) + ": empty parent set", step.leaf,
                                static_cast<int>(i + 1));
        std::vector<VertexId> ids;
        for (const auto& label : step.parents) {
            auto id = g.find(label);
            if (!id)
                throw MalformedInput("step " + std::to_string(i + 1) + ": unknown parent '" +
                                     label + "'");
            ids.push_back(*id);
        }
        VertexSet w = VertexSet::of(std::move(ids));
        if (mode == ExtendMode::Checked) {
            OStarReport rep = check_o_star(g, w);
            if (!rep.ok)
                throw OStarViolated("step " + std::to_string(i + 1) +
                                        ": attachment condition fails at '" +
                                        g.label(*rep.witness) + "'",
                                    g.label(*rep.witness), static_cast<int>(i + 1));
        }
        g = extend(g, w, step.leaf, ExtendMode::Unchecked);
    }
    return g;
}

namespace {

// Deterministic across platforms: raw engine outputs, modulo reduction.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t next() { return eng(); }
    int below(int k) { return static_cast<int>(next() % static_cast<std::uint64_t>(k)); }
    bool coin() { return (next() & 1) != 0; }
};

}  // namespace

std::pair<Dag, ConstructionTrace> random_global_lca(int n, std::uint64_t seed,
                                                    const RandomLcaParams& params) {
    if (n < 1) throw Error("vertex count must be positive");
    Rng rng(seed);
    ConstructionTrace t;
    t.origin = "v0";
    Dag g = Dag::from_edge_list({}, {t.origin});
    for (int i = 1; i < n; ++i) {
        std::string label = "v" + std::to_string(i);
        std::optional<VertexSet> chosen;
        for (int attempt = 0; attempt < params.retry_budget; ++attempt) {
            int count = 1;
            while (count < params.max_parents && rng.coin()) ++count;
            count = std::min(count, g.vertex_count());
            std::vector<VertexId> pick;
            while (static_cast<int>(pick.size()) < count) {
                VertexId v = rng.below(g.vertex_count());
                if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
            }
            VertexSet w = VertexSet::of(std::move(pick));
            if (check_o_star(g, w).ok) {
                chosen = std::move(w);
                break;
            }
        }
        if (!chosen) chosen = VertexSet::of({rng.below(g.vertex_count())});  // always valid
        TraceStep step;
        step.leaf = label;
        for (VertexId u : *chosen) step.parents.push_back(g.label(u));
        std::sort(step.parents.begin(), step.parents.end());
        t.steps.push_back(std::move(step));
        g = extend(g, *chosen, label, ExtendMode::Unchecked);
    }
    return {std::move(g), std::move(t)};
}

}  // namespace lcadag
