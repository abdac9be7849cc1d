#ifndef LCADAG_TESTS_SUPPORT_FIXTURES_HPP
#define LCADAG_TESTS_SUPPORT_FIXTURES_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "doctest.h"
#include "lcadag/dag.hpp"

namespace testsupport {

// The small graphs most tests revolve around. Everything is built through the
// public edge-list constructor so label <-> id assignment matches what the
// CLI would produce for the same input.

// a -> b,c; b,c -> x,y. Clusters are closed, descendants are not, and
// LCA({x,y}) = {b,c}.
inline lcadag::Dag fig1() {
    return lcadag::Dag::from_edge_list(
        {{"a", "b"}, {"a", "c"}, {"b", "x"}, {"b", "y"}, {"c", "x"}, {"c", "y"}});
}

// Two roots over two leaves; the canonical non-network.
inline lcadag::Dag k22() {
    return lcadag::Dag::from_edge_list(
        {{"r1", "l1"}, {"r1", "l2"}, {"r2", "l1"}, {"r2", "l2"}});
}

inline lcadag::Dag path3() { return lcadag::Dag::from_edge_list({{"a", "b"}, {"b", "c"}}); }

// rho -> a,b; a,b -> x. Smallest network with a hybrid vertex that still has
// the global property.
inline lcadag::Dag diamond() {
    return lcadag::Dag::from_edge_list({{"rho", "a"}, {"rho", "b"}, {"a", "x"}, {"b", "x"}});
}

inline lcadag::Dag cherry() { return lcadag::Dag::from_edge_list({{"r", "x"}, {"r", "y"}}); }

// a -> b -> c plus the shortcut a -> c.
inline lcadag::Dag shortcut3() {
    return lcadag::Dag::from_edge_list({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

// The five-vertex hourglass: r1,r2 -> v; v -> l1,l2.
inline lcadag::Dag xgraph() {
    return lcadag::Dag::from_edge_list({{"r1", "v"}, {"r2", "v"}, {"v", "l1"}, {"v", "l2"}});
}

// Network with a strict two-root/two-sink subdivision AND an hourglass on the
// same endpoints, so the global property survives: rho -> r,rp; all four
// direct edges r,rp -> l,lp; and the funnel r,rp -> v -> l,lp.
inline lcadag::Dag xk22() {
    return lcadag::Dag::from_edge_list({{"rho", "r"},
                                        {"rho", "rp"},
                                        {"r", "l"},
                                        {"r", "lp"},
                                        {"rp", "l"},
                                        {"rp", "lp"},
                                        {"r", "v"},
                                        {"rp", "v"},
                                        {"v", "l"},
                                        {"v", "lp"}});
}

// One gall hanging a leaf: rho -> a,b; a,b -> h; h -> x.
inline lcadag::Dag galled1() {
    return lcadag::Dag::from_edge_list(
        {{"rho", "a"}, {"rho", "b"}, {"a", "h"}, {"b", "h"}, {"h", "x"}});
}

// Every leaf pair {a,b}, {a,c}, {b,c} has a dedicated unique meet, but the
// triple {a,b,c} is covered only by the incomparable pair {w,wp}: the
// pairwise property holds while the full property fails.
inline lcadag::Dag pairwise_only() {
    return lcadag::Dag::from_edge_list({{"rho", "w"},   {"rho", "wp"},  {"w", "pab"},
                                        {"w", "pac"},   {"w", "pbc"},   {"wp", "pab"},
                                        {"wp", "pac"},  {"wp", "pbc"},  {"pab", "a"},
                                        {"pab", "b"},   {"pac", "a"},   {"pac", "c"},
                                        {"pbc", "b"},   {"pbc", "c"}});
}

inline lcadag::VertexId vid(const lcadag::Dag& g, std::string_view label) {
    auto v = g.find(label);
    REQUIRE(v.has_value());
    return *v;
}

inline lcadag::VertexSet vs(const lcadag::Dag& g, std::initializer_list<const char*> labels) {
    std::vector<lcadag::VertexId> ids;
    for (const char* l : labels) ids.push_back(vid(g, l));
    return lcadag::VertexSet::of(std::move(ids));
}

inline std::vector<std::string> names(const lcadag::Dag& g, const lcadag::VertexSet& s) {
    std::vector<std::string> out;
    for (lcadag::VertexId v : s.ids()) out.push_back(g.label(v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testsupport

#endif
