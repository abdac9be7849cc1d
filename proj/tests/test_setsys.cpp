#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "lcadag/errors.hpp"
#include "lcadag/set_system.hpp"
#include "lcadag/transform.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace lcadag;
using namespace testsupport;

namespace {

using Family = std::vector<std::vector<std::string>>;

Family fam(const SetSystem& s) { return s.canonical_labels(); }

// ground + members as plain int vectors for the oracles
std::vector<std::vector<int>> int_members(const SetSystem& s) {
    std::vector<std::vector<int>> out;
    for (const auto& m : s.members) out.push_back(m.ids());
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("setsys");

TEST_CASE("cluster systems of the fixtures") {
    CHECK(fam(clusters(fig1())) == Family{{"x"}, {"y"}, {"x", "y"}});
    CHECK(fam(clusters(path3())) == Family{{"c"}});
    CHECK(fam(clusters(k22())) == Family{{"l1"}, {"l2"}, {"l1", "l2"}});

    SetSystem c = clusters(fig1());
    REQUIRE(c.witness.has_value());
    Dag f = fig1();
    // witness points each vertex at its own cluster
    CHECK(c.members[(*c.witness)[vid(f, "b")]] == vs(f, {"x", "y"}));
    CHECK(c.members[(*c.witness)[vid(f, "a")]] == vs(f, {"x", "y"}));
}

TEST_CASE("descendant systems") {
    Dag f = fig1();
    SetSystem d = descendants(f);
    CHECK(d.members.size() == 5);  // pairwise distinct, one per vertex
    Family df = fam(d);
    CHECK(std::find(df.begin(), df.end(), std::vector<std::string>{"b", "x", "y"}) != df.end());
    CHECK(std::find(df.begin(), df.end(), std::vector<std::string>{"c", "x", "y"}) != df.end());

    CHECK(fam(descendants(path3())) == Family{{"c"}, {"b", "c"}, {"a", "b", "c"}});

    SUBCASE("singleton members are exactly the leaves") {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            Dag g = random_dag(9, seed);
            SetSystem d2 = descendants(g);
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                bool is_single =
                    std::find(d2.members.begin(), d2.members.end(), VertexSet::of({v})) !=
                    d2.members.end();
                CHECK(is_single == (g.out_degree(v) == 0));
            }
            CHECK(d2.members.size() == static_cast<std::size_t>(g.vertex_count()));
        }
    }
    SUBCASE("restriction to leaves gives the clusters") {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            Dag g = random_dag(9, seed);
            VertexSet ls = leaves(g);
            std::vector<VertexSet> cut;
            for (const auto& m : descendants(g).members) cut.push_back(m.intersect(ls));
            SetSystem lhs = make_system(g.labels(), ls, std::move(cut));
            CHECK(families_equal(lhs, clusters(g)));
        }
    }
}

TEST_CASE("ancestor systems mirror descendants of the reverse") {
    CHECK(fam(ancestors(path3())) == Family{{"a"}, {"a", "b"}, {"a", "b", "c"}});
    Dag f = fig1();
    SetSystem a = ancestors(f);
    REQUIRE(a.witness.has_value());
    CHECK(a.members[(*a.witness)[vid(f, "x")]] == vs(f, {"a", "b", "c", "x"}));

    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Dag g = random_dag(9, seed);
        CHECK(families_equal(ancestors(g), descendants(reverse(g))));
    }
}

TEST_CASE("intermediary systems") {
    Dag p = path3();
    SetSystem b = intermediaries(p);
    Family bf = fam(b);
    CHECK(std::find(bf.begin(), bf.end(), std::vector<std::string>{}) != bf.end());  // B(c,a)
    CHECK(std::find(bf.begin(), bf.end(), std::vector<std::string>{"a", "b", "c"}) != bf.end());
    CHECK(bf == Family{{}, {"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}});

    Dag f = fig1();
    SetSystem bi = intermediaries(f);
    Family bif = fam(bi);
    CHECK(std::find(bif.begin(), bif.end(), std::vector<std::string>{"a", "b", "c", "x"}) !=
          bif.end());  // B(a,x)

    Dag k1 = Dag::from_edge_list({}, {"v"});
    CHECK(fam(intermediaries(k1)) == Family{{"v"}});
}

TEST_CASE("closedness") {
    CHECK(is_closed(clusters(fig1())).closed);

    ClosednessReport r = is_closed(descendants(fig1()));
    CHECK_FALSE(r.closed);
    REQUIRE(r.violating.has_value());
    SetSystem d = descendants(fig1());
    Dag f = fig1();
    CHECK(d.members[r.violating->first] == vs(f, {"b", "x", "y"}));
    CHECK(d.members[r.violating->second] == vs(f, {"c", "x", "y"}));

    SUBCASE("laminar families are closed") {
        for (std::uint64_t seed = 0; seed < 40; ++seed)
            CHECK(is_closed(descendants(random_tree(10, seed))).closed);
    }
    SUBCASE("agreement with the quadratic oracle") {
        for (std::uint64_t seed = 0; seed < 150; ++seed) {
            Dag g = random_dag(9, seed);
            CHECK(is_closed(descendants(g)).closed == closed_oracle(int_members(descendants(g))));
            CHECK(is_closed(clusters(g)).closed == closed_oracle(int_members(clusters(g))));
        }
    }
}

TEST_CASE("grounded, rooted, clustering") {
    CHECK(is_grounded(clusters(fig1())));
    CHECK(is_rooted(clusters(fig1())));
    CHECK(is_clustering_system(clusters(fig1())));

    CHECK_FALSE(is_grounded(intermediaries(path3())));  // contains the empty set

    SetSystem two = make_system({"x", "y"}, VertexSet::of({0, 1}),
                                {VertexSet::of({0}), VertexSet::of({1})});
    CHECK(is_grounded(two));
    CHECK_FALSE(is_rooted(two));
    CHECK_FALSE(is_clustering_system(two));

    // clusters are always a clustering system
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        CHECK(is_clustering_system(clusters(random_network(9, seed))));
}

TEST_CASE("closure function") {
    SetSystem c = clusters(fig1());
    Dag f = fig1();
    CHECK(closure(c, vs(f, {"x", "y"})) == vs(f, {"x", "y"}));

    SetSystem s = make_system({"x", "y", "z", "w"}, VertexSet::of({0, 1, 2, 3}),
                              {VertexSet::of({0, 1, 2}), VertexSet::of({0, 1, 3})});
    CHECK(closure(s, VertexSet::of({0})) == VertexSet::of({0, 1}));  // not itself a member

    CHECK(closure(clusters(k22()), vs(k22(), {"l1", "l2"})) == vs(k22(), {"l1", "l2"}));

    CHECK_THROWS_AS(closure(s, VertexSet::of({2, 3})), NoSuperset);
    CHECK_THROWS_AS(closure(s, VertexSet{}), EmptyQuery);

    SUBCASE("extensive and monotone") {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            Dag g = random_network(8, seed);
            SetSystem d = descendants(g);
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                VertexSet a = VertexSet::of({v});
                VertexSet cl = closure(d, a);
                CHECK(a.is_subset_of(cl));
                CHECK(closure(d, cl) == cl);  // idempotent on its own output
            }
        }
    }
}

TEST_CASE("pre-binary and pre-k-ary") {
    CHECK(is_pre_binary(clusters(fig1())).holds);

    // two incomparable minimal supersets of {x,y}
    SetSystem bad = make_system(
        {"x", "y", "z", "w"}, VertexSet::of({0, 1, 2, 3}),
        {VertexSet::of({0, 1, 2}), VertexSet::of({0, 1, 3}), VertexSet::of({0}),
         VertexSet::of({1}), VertexSet::of({2}), VertexSet::of({3}),
         VertexSet::of({0, 1, 2, 3})});
    PreAryReport r = is_pre_binary(bad);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == VertexSet::of({0, 1}));

    SUBCASE("closed clustering systems are pre-k for every k") {
        for (std::uint64_t seed = 0; seed < 80; ++seed) {
            Dag g = random_network(8, seed);
            SetSystem c = clusters(g);
            if (!is_closed(c).closed) continue;
            int n = static_cast<int>(c.ground.size());
            CHECK(is_pre_k_ary(c, n).holds);
        }
    }
    SUBCASE("agreement with the minimal-superset oracle") {
        for (std::uint64_t seed = 0; seed < 120; ++seed) {
            Dag g = random_dag(8, seed);
            SetSystem c = clusters(g);
            for (int k = 1; k <= 3; ++k)
                REQUIRE(is_pre_k_ary(c, k).holds ==
                        pre_k_oracle(c.ground.ids(), int_members(c), k));
        }
    }
    SUBCASE("subset cap") {
        std::vector<std::pair<std::string, std::string>> star;
        for (int i = 0; i < 10; ++i) star.emplace_back("r", "l" + std::to_string(i));
        SetSystem c = clusters(Dag::from_edge_list(star));
        CHECK(c.ground.size() == 10);
        CHECK_THROWS_AS(is_pre_k_ary(c, 10, 64), SizeLimitExceeded);
    }
}

TEST_CASE("system construction plumbing") {
    // duplicates are merged and the witness follows
    SetSystem s = make_system({"a", "b"}, VertexSet::of({0, 1}),
                              {VertexSet::of({0}), VertexSet::of({0}), VertexSet::of({1})},
                              std::vector<int>{0, 1, 2});
    CHECK(s.members.size() == 2);
    REQUIRE(s.witness.has_value());
    CHECK(s.members[(*s.witness)[0]] == VertexSet::of({0}));
    CHECK(s.members[(*s.witness)[1]] == VertexSet::of({0}));
    CHECK(s.members[(*s.witness)[2]] == VertexSet::of({1}));

    CHECK(s.member_index(VertexSet::of({1})).has_value());
    CHECK_FALSE(s.member_index(VertexSet::of({0, 1})).has_value());

    CHECK(families_equal(clusters(fig1()), clusters(fig1())));
    CHECK_FALSE(families_equal(clusters(fig1()), descendants(fig1())));
}

TEST_SUITE_END();
