#include "lcadag/minors.hpp"

#include <algorithm>
#include <string>

#include "lcadag/poset.hpp"

namespace lcadag {

namespace {

enum class Tri : unsigned char { Unknown, Yes, No };

struct PairDp {
    const Dag& g;
    VertexId t1, t2;
    std::vector<Tri> memo;  // (u, v) flattened

    PairDp(const Dag& graph, VertexId target1, VertexId target2)
        : g(graph), t1(target1), t2(target2),
          memo(static_cast<std::size_t>(graph.vertex_count()) * graph.vertex_count(),
               Tri::Unknown) {}

    Tri& at(VertexId u, VertexId v) { return memo[static_cast<std::size_t>(u) * g.vertex_count() + v]; }

    // Disjoint suffix paths u -> t1 and v -> t2 exist. Advancing the head with
    // the smaller topological index keeps every later vertex of either path
    // ahead of both heads, which makes the memo sound on a DAG.
    bool solve(VertexId u, VertexId v) {
        if (u == v) return false;
        Tri& cell = at(u, v);
        if (cell != Tri::Unknown) return cell == Tri::Yes;
        bool res = false;
        if (u == t1 && v == t2) {
            res = true;
        } else if (u == t1) {
            for (VertexId c : g.children(v))
                if (c != u && solve(u, c)) {
                    res = true;
                    break;
                }
        } else if (v == t2) {
            for (VertexId c : g.children(u))
                if (c != v && solve(c, v)) {
                    res = true;
                    break;
                }
        } else if (g.topo_index(u) < g.topo_index(v)) {
            for (VertexId c : g.children(u))
                if (c != v && solve(c, v)) {
                    res = true;
                    break;
                }
        } else {
            for (VertexId c : g.children(v))
                if (c != u && solve(u, c)) {
                    res = true;
                    break;
                }
        }
        cell = res ? Tri::Yes : Tri::No;
        return res;
    }

    std::pair<Path, Path> reconstruct(VertexId s1, VertexId s2) {
        Path p1{s1}, p2{s2};
        VertexId u = s1, v = s2;
        while (!(u == t1 && v == t2)) {
            bool advance_first;
            if (u == t1)
                advance_first = false;
            else if (v == t2)
                advance_first = true;
            else
                advance_first = g.topo_index(u) < g.topo_index(v);
            bool stepped = false;
            if (advance_first) {
                for (VertexId c : g.children(u))
                    if (c != v && solve(c, v)) {
                        p1.push_back(c);
                        u = c;
                        stepped = true;
                        break;
                    }
            } else {
                for (VertexId c : g.children(v))
                    if (c != u && solve(u, c)) {
                        p2.push_back(c);
                        v = c;
                        stepped = true;
                        break;
                    }
            }
            if (!stepped) throw Error("disjoint-path reconstruction lost its certificate");
        }
        return {std::move(p1), std::move(p2)};
    }
};

}  // namespace

std::optional<std::pair<Path, Path>> two_disjoint_paths(const Dag& g, VertexId s1, VertexId t1,
                                                        VertexId s2, VertexId t2) {
    if (s1 == s2 || t1 == t2 || s1 == t2 || s2 == t1) return std::nullopt;
    PairDp dp(g, t1, t2);
    if (!dp.solve(s1, s2)) return std::nullopt;
    return dp.reconstruct(s1, s2);
}

namespace {

// Two paths from x to a and from x to b sharing only x (a != b, both != x).
std::optional<std::pair<Path, Path>> out_fork(const Dag& g, VertexId x, VertexId a, VertexId b) {
    const auto& cs = g.children(x);
    for (VertexId c1 : cs) {
        for (VertexId c2 : cs) {
            if (c1 == c2) continue;
            if (auto p = two_disjoint_paths(g, c1, a, c2, b)) {
                Path p1{x}, p2{x};
                p1.insert(p1.end(), p->first.begin(), p->first.end());
                p2.insert(p2.end(), p->second.begin(), p->second.end());
                return std::make_pair(std::move(p1), std::move(p2));
            }
        }
    }
    return std::nullopt;
}

// All directed simple paths a -> b, capped; used by the exhaustive fallback.
std::vector<Path> all_paths(const Dag& g, VertexId a, VertexId b, std::size_t cap) {
    std::vector<Path> out;
    Path cur{a};
    // iterative DFS with explicit child cursors
    std::vector<std::size_t> cursor{0};
    while (!cur.empty()) {
        if (out.size() >= cap) break;
        VertexId v = cur.back();
        if (v == b) {
            out.push_back(cur);
            cur.pop_back();
            cursor.pop_back();
            continue;
        }
        const auto& cs = g.children(v);
        if (cursor.back() < cs.size()) {
            VertexId c = cs[cursor.back()++];
            cur.push_back(c);
            cursor.push_back(0);
        } else {
            cur.pop_back();
            cursor.pop_back();
        }
    }
    return out;
}

struct Reduced {
    Dag dag;
    std::vector<VertexId> to_host;    // reduced id -> host id
    std::vector<VertexId> from_host;  // host id -> reduced id or -1
};

Reduced drop_vertices(const Dag& g, const std::vector<bool>& drop) {
    std::vector<VertexId> to_host;
    std::vector<VertexId> from_host(g.vertex_count(), -1);
    std::vector<std::string> labels;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (drop[v]) continue;
        from_host[v] = static_cast<VertexId>(labels.size());
        to_host.push_back(v);
        labels.push_back(g.label(v));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [u, v] : g.edges())
        if (!drop[u] && !drop[v]) edges.emplace_back(from_host[u], from_host[v]);
    return Reduced{Dag::from_parts(std::move(labels), std::move(edges)), std::move(to_host),
                   std::move(from_host)};
}

constexpr int kBoundedAttempts = 64;
constexpr int kExhaustiveBelow = 14;
constexpr std::size_t kPathCap = 4096;

// Completes a root fork (paths root2 -> s1 / s2) after the root1 fork claimed
// the vertices in `taken` (sinks excluded).
std::optional<std::pair<Path, Path>> second_fork(const Dag& g, const std::vector<bool>& taken,
                                                 VertexId root2, VertexId s1, VertexId s2) {
    Reduced r = drop_vertices(g, taken);
    VertexId rr = r.from_host[root2], rs1 = r.from_host[s1], rs2 = r.from_host[s2];
    if (rr < 0 || rs1 < 0 || rs2 < 0) return std::nullopt;
    auto fork = out_fork(r.dag, rr, rs1, rs2);
    if (!fork) return std::nullopt;
    auto lift = [&r](const Path& p) {
        Path out;
        out.reserve(p.size());
        for (VertexId v : p) out.push_back(r.to_host[v]);
        return out;
    };
    return std::make_pair(lift(fork->first), lift(fork->second));
}

// The four-path pattern for fixed endpoints: root1's fork is chosen first
// (bounded attempts over child pairs, exhaustive path-pair enumeration as a
// fallback on small graphs), then root2's fork is solved in what remains.
std::optional<K22Subdivision> solve_k22_pattern(const Dag& g, VertexId r1, VertexId r2,
                                                VertexId s1, VertexId s2) {
    auto try_first = [&](const Path& p1, const Path& p2) -> std::optional<K22Subdivision> {
        std::vector<bool> taken(g.vertex_count(), false);
        for (VertexId v : p1) taken[v] = true;
        for (VertexId v : p2) taken[v] = true;
        taken[s1] = false;
        taken[s2] = false;
        auto second = second_fork(g, taken, r2, s1, s2);
        if (!second) return std::nullopt;
        K22Subdivision cert;
        cert.root1 = r1;
        cert.root2 = r2;
        cert.sink1 = s1;
        cert.sink2 = s2;
        cert.paths = {p1, p2, second->first, second->second};
        cert.strict = true;
        return cert;
    };

    int attempts = 0;
    const auto& cs = g.children(r1);
    for (VertexId c1 : cs) {
        for (VertexId c2 : cs) {
            if (c1 == c2) continue;
            if (attempts >= kBoundedAttempts) break;
            if (auto p = two_disjoint_paths(g, c1, s1, c2, s2)) {
                ++attempts;
                Path p1{r1}, p2{r1};
                p1.insert(p1.end(), p->first.begin(), p->first.end());
                p2.insert(p2.end(), p->second.begin(), p->second.end());
                if (auto cert = try_first(p1, p2)) return cert;
            }
        }
    }
    if (g.vertex_count() < kExhaustiveBelow) {
        auto to_s1 = all_paths(g, r1, s1, kPathCap);
        auto to_s2 = all_paths(g, r1, s2, kPathCap);
        for (const auto& p1 : to_s1) {
            if (std::find(p1.begin(), p1.end(), s2) != p1.end()) continue;
            std::vector<bool> on_p1(g.vertex_count(), false);
            for (VertexId v : p1) on_p1[v] = true;
            for (const auto& p2 : to_s2) {
                bool clash = false;
                for (std::size_t i = 1; i < p2.size() && !clash; ++i)
                    if (on_p1[p2[i]] || p2[i] == s1) clash = true;
                if (clash) continue;
                if (auto cert = try_first(p1, p2)) return cert;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

bool validate_k22(const Dag& g, const K22Subdivision& cert) {
    auto is_path = [&g](const Path& p, VertexId from, VertexId to) {
        if (p.empty() || p.front() != from || p.back() != to) return false;
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.has_edge(p[i], p[i + 1])) return false;
        return true;
    };
    if (!is_path(cert.paths[0], cert.root1, cert.sink1)) return false;
    if (!is_path(cert.paths[1], cert.root1, cert.sink2)) return false;
    if (!is_path(cert.paths[2], cert.root2, cert.sink1)) return false;
    if (!is_path(cert.paths[3], cert.root2, cert.sink2)) return false;

    auto meet = [](const Path& a, const Path& b) {
        std::vector<VertexId> va(a.begin(), a.end()), vb(b.begin(), b.end());
        std::sort(va.begin(), va.end());
        std::sort(vb.begin(), vb.end());
        std::vector<VertexId> out;
        std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                              std::back_inserter(out));
        return out;
    };
    // same root: meet exactly in that root; same sink: in that sink;
    // opposite root and sink: empty
    if (meet(cert.paths[0], cert.paths[1]) != std::vector<VertexId>{cert.root1}) return false;
    if (meet(cert.paths[2], cert.paths[3]) != std::vector<VertexId>{cert.root2}) return false;
    if (meet(cert.paths[0], cert.paths[2]) != std::vector<VertexId>{cert.sink1}) return false;
    if (meet(cert.paths[1], cert.paths[3]) != std::vector<VertexId>{cert.sink2}) return false;
    if (!meet(cert.paths[0], cert.paths[3]).empty()) return false;
    if (!meet(cert.paths[1], cert.paths[2]).empty()) return false;

    if (cert.strict) {
        Poset p = reachability(g);
        if (p.comparable(cert.root1, cert.root2)) return false;
        if (p.comparable(cert.sink1, cert.sink2)) return false;
    }
    return true;
}

std::vector<K22Subdivision> find_strict_k22(const Dag& g, std::size_t limit, int cap) {
    if (g.vertex_count() > cap)
        throw SizeLimitExceeded("subdivision search beyond vertex cap " + std::to_string(cap));
    Poset p = reachability(g);
    std::vector<K22Subdivision> out;
    const int n = g.vertex_count();
    for (VertexId r1 = 0; r1 < n && out.size() < limit; ++r1) {
        for (VertexId r2 = r1 + 1; r2 < n && out.size() < limit; ++r2) {
            if (p.comparable(r1, r2)) continue;
            for (VertexId s1 = 0; s1 < n && out.size() < limit; ++s1) {
                if (!p.less(s1, r1) || !p.less(s1, r2)) continue;
                for (VertexId s2 = s1 + 1; s2 < n && out.size() < limit; ++s2) {
                    if (!p.less(s2, r1) || !p.less(s2, r2)) continue;
                    if (p.comparable(s1, s2)) continue;
                    if (auto cert = solve_k22_pattern(g, r1, r2, s1, s2))
                        out.push_back(std::move(*cert));
                }
            }
        }
    }
    return out;
}

XWitness has_x_or_xprime(const Dag& g, VertexId root1, VertexId root2, VertexId sink1,
                         VertexId sink2) {
    const int n = g.vertex_count();
    Dag rev = reverse(g);
    Poset p = reachability(g);
    // fork_up[v]: two paths root1->v, root2->v meeting only at v
    // fork_down[w]: two paths w->sink1, w->sink2 meeting only at w
    std::vector<bool> fork_up(n, false), fork_down(n, false);
    for (VertexId v = 0; v < n; ++v) {
        if (p.less(v, root1) && p.less(v, root2))
            fork_up[v] = out_fork(rev, v, root1, root2).has_value();
        if (p.less(sink1, v) && p.less(sink2, v))
            fork_down[v] = out_fork(g, v, sink1, sink2).has_value();
    }
    // Any upper/lower pair with lower <= upper works: every vertex of a
    // directed path lies between its endpoints, so the three path groups can
    // only meet in the declared branch vertices.
    for (VertexId v = 0; v < n; ++v) {
        if (!fork_up[v]) continue;
        for (VertexId w = 0; w < n; ++w) {
            if (!fork_down[w] || !p.leq(w, v)) continue;
            return {true, v, w};
        }
    }
    return {false, -1, -1};
}

MinorTheoremReport verify_minor_theorem(const Dag& g, int cap) {
    if (!is_network(g)) throw NotANetwork("minor-theorem verification requires a single root");
    if (g.vertex_count() > cap)
        throw SizeLimitExceeded("minor-theorem verification beyond vertex cap " +
                                std::to_string(cap));
    for (const auto& cert : find_strict_k22(g, SIZE_MAX, cap)) {
        if (!has_x_or_xprime(g, cert.root1, cert.root2, cert.sink1, cert.sink2).found)
            return {false, cert};
    }
    return {true, std::nullopt};
}

}  // namespace lcadag
