#include <vector>

#include "doctest.h"
#include "lcadag/errors.hpp"
#include "lcadag/isomorphism.hpp"
#include "support/fixtures.hpp"
#include "support/random_graphs.hpp"

using namespace lcadag;
using namespace testsupport;

namespace {

// Re-checks a claimed mapping edge-for-edge in both directions.
bool mapping_is_isomorphism(const Dag& a, const Dag& b, const std::vector<VertexId>& phi) {
    if (static_cast<int>(phi.size()) != a.vertex_count()) return false;
    std::vector<bool> hit(b.vertex_count(), false);
    for (VertexId img : phi) {
        if (img < 0 || img >= b.vertex_count() || hit[img]) return false;
        hit[img] = true;
    }
    if (a.edge_count() != b.edge_count()) return false;
    for (const auto& [u, v] : a.edges())
        if (!b.has_edge(phi[u], phi[v])) return false;
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("isomorphism");

TEST_CASE("relabeled copies are isomorphic, with a verified mapping") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Dag g = random_dag(9, seed);
        Dag h = relabel_shuffled(g, seed + 1000);
        IsoResult r = are_isomorphic(g, h);
        REQUIRE(r.isomorphic);
        REQUIRE(r.mapping.has_value());
        CHECK(mapping_is_isomorphism(g, h, *r.mapping));
    }
}

TEST_CASE("structure differences are detected") {
    CHECK_FALSE(are_isomorphic(path3(), cherry()).isomorphic);

    // same degree multiset, different wiring: path a->b->c->d plus isolated e
    // versus cherry + path2
    Dag g = Dag::from_edge_list({{"a", "b"}, {"b", "c"}, {"c", "d"}}, {"e"});
    Dag h = Dag::from_edge_list({{"r", "x"}, {"r", "y"}, {"p", "q"}});
    CHECK(g.vertex_count() == h.vertex_count());
    CHECK(g.edge_count() == h.edge_count());
    CHECK_FALSE(are_isomorphic(g, h).isomorphic);
}

TEST_CASE("direction matters") {
    // a directed path is isomorphic to its own reverse (flip the ends)...
    CHECK(are_isomorphic(path3(), reverse(path3())).isomorphic);
    // ...but a fork is not a merge: edge direction must be preserved
    Dag fork = Dag::from_edge_list({{"r", "x"}, {"r", "y"}});
    Dag merge = Dag::from_edge_list({{"x", "s"}, {"y", "s"}});
    CHECK_FALSE(are_isomorphic(fork, merge).isomorphic);
}

TEST_CASE("equivalence relation sanity on random samples") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Dag g = random_network(8, seed);
        CHECK(are_isomorphic(g, g).isomorphic);  // reflexive
        Dag h = relabel_shuffled(g, seed * 7 + 1);
        CHECK(are_isomorphic(g, h).isomorphic == are_isomorphic(h, g).isomorphic);  // symmetric
    }
}

TEST_CASE("near-isomorphic pairs differing in one edge are rejected") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Dag g = random_network(8, seed);
        if (g.edge_count() < 2) continue;
        // drop the last edge
        auto edges = g.edges();
        edges.pop_back();
        Dag h = Dag::from_parts(g.labels(), std::move(edges));
        CHECK_FALSE(are_isomorphic(g, relabel_shuffled(h, seed)).isomorphic);
    }
}

TEST_CASE("vertex cap raises instead of guessing") {
    Dag g = random_dag(26, 1);
    Dag h = random_dag(26, 1);
    CHECK_THROWS_AS(are_isomorphic(g, h), SizeLimitExceeded);
    CHECK(are_isomorphic(g, h, 30).isomorphic);
}

TEST_SUITE_END();
