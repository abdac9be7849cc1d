#include "lcadag/set_system.hpp"

#include <algorithm>

#include "lcadag/poset.hpp"

namespace lcadag {

std::optional<int> SetSystem::member_index(const VertexSet& s) const {
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i] == s) return static_cast<int>(i);
    return std::nullopt;
}

std::vector<std::vector<std::string>> SetSystem::canonical_labels() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(members.size());
    for (const auto& m : members) {
        std::vector<std::string> row;
        row.reserve(m.size());
        for (VertexId v : m) row.push_back(labels.at(v));
        std::sort(row.begin(), row.end());
        out.push_back(std::move(row));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

SetSystem make_system(std::vector<std::string> labels, VertexSet ground,
                      std::vector<VertexSet> members, std::optional<std::vector<int>> witness) {
    SetSystem s;
    s.labels = std::move(labels);
    s.ground = std::move(ground);
    std::map<VertexSet, int> seen;
    std::vector<int> remap(members.size(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) {
        auto [it, inserted] = seen.emplace(members[i], static_cast<int>(s.members.size()));
        if (inserted) s.members.push_back(members[i]);
        remap[i] = it->second;
    }
    if (witness) {
        for (int& w : *witness) w = w >= 0 ? remap[w] : -1;
        s.witness = std::move(witness);
    }
    return s;
}

SetSystem clusters(const Dag& g) {
    Poset p = reachability(g);
    Bits leaf_bits = set_to_bits(leaves(g), g.vertex_count());
    std::vector<VertexSet> members;
    std::vector<int> witness(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        witness[v] = static_cast<int>(members.size());
        members.push_back(bits_to_set(p.down(v) & leaf_bits));
    }
    return make_system(g.labels(), leaves(g), std::move(members), std::move(witness));
}

SetSystem descendants(const Dag& g) {
    Poset p = reachability(g);
    std::vector<VertexSet> members;
    std::vector<int> witness(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        witness[v] = static_cast<int>(members.size());
        members.push_back(bits_to_set(p.down(v)));
    }
    return make_system(g.labels(), VertexSet::of([&] {
                           std::vector<VertexId> all(g.vertex_count());
                           for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
                           return all;
                       }()),
                       std::move(members), std::move(witness));
}

SetSystem ancestors(const Dag& g) {
    Poset p = reachability(g);
    std::vector<VertexSet> members;
    std::vector<int> witness(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        witness[v] = static_cast<int>(members.size());
        members.push_back(bits_to_set(p.up(v)));
    }
    return make_system(g.labels(), VertexSet::of([&] {
                           std::vector<VertexId> all(g.vertex_count());
                           for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
                           return all;
                       }()),
                       std::move(members), std::move(witness));
}

SetSystem intermediaries(const Dag& g) {
    Poset p = reachability(g);
    std::vector<VertexSet> members;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            members.push_back(bits_to_set(p.down(u) & p.up(v)));
    return make_system(g.labels(), VertexSet::of([&] {
                           std::vector<VertexId> all(g.vertex_count());
                           for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
                           return all;
                       }()),
                       std::move(members));
}

ClosednessReport is_closed(const SetSystem& s) {
    std::map<VertexSet, int> index;
    for (std::size_t i = 0; i < s.members.size(); ++i)
        index.emplace(s.members[i], static_cast<int>(i));
    for (std::size_t i = 0; i < s.members.size(); ++i) {
        for (std::size_t j = i + 1; j < s.members.size(); ++j) {
            VertexSet meet = s.members[i].intersect(s.members[j]);
            if (meet.empty()) continue;
            if (!index.count(meet))
                return {false, std::make_pair(static_cast<int>(i), static_cast<int>(j))};
        }
    }
    return {true, std::nullopt};
}

bool is_grounded(const SetSystem& s) {
    for (const auto& m : s.members)
        if (m.empty()) return false;
    for (VertexId x : s.ground) {
        VertexSet single = VertexSet::of({x});
        bool found = false;
        for (const auto& m : s.members)
            if (m == single) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

bool is_rooted(const SetSystem& s) {
    for (const auto& m : s.members)
        if (m == s.ground) return true;
    return false;
}

bool is_clustering_system(const SetSystem& s) { return is_grounded(s) && is_rooted(s); }

VertexSet closure(const SetSystem& s, const VertexSet& a) {
    if (a.empty()) throw EmptyQuery("closure of the empty set");
    bool found = false;
    std::vector<VertexId> acc;
    for (const auto& m : s.members) {
        if (!a.is_subset_of(m)) continue;
        if (!found) {
            acc = m.ids();
            found = true;
        } else {
            std::vector<VertexId> next;
            std::set_intersection(acc.begin(), acc.end(), m.ids().begin(), m.ids().end(),
                                  std::back_inserter(next));
            acc = std::move(next);
        }
    }
    if (!found) throw NoSuperset("no member contains the query set");
    return VertexSet::of(std::move(acc));
}

namespace {

// Size-lexicographic enumeration of the non-empty subsets of `ground` with at
// most k elements; `fn` returning false stops early.
template <typename Fn>
void for_subsets_size_lex(const VertexSet& ground, int k, Fn&& fn) {
    const auto& pool = ground.ids();
    const int n = static_cast<int>(pool.size());
    std::vector<int> pick;
    for (int size = 1; size <= k && size <= n; ++size) {
        pick.assign(size, 0);
        for (int i = 0; i < size; ++i) pick[i] = i;
        for (;;) {
            std::vector<VertexId> subset(size);
            for (int i = 0; i < size; ++i) subset[i] = pool[pick[i]];
            if (!fn(VertexSet::of(std::move(subset)))) return;
            int i = size - 1;
            while (i >= 0 && pick[i] == n - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
}

std::uint64_t choose_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

}  // namespace

PreAryReport is_pre_k_ary(const SetSystem& s, int k, std::uint64_t cap) {
    std::uint64_t total = 0;
    for (int size = 1; size <= k && size <= static_cast<int>(s.ground.size()); ++size) {
        total += choose_capped(s.ground.size(), size, cap);
        if (total > cap)
            throw SizeLimitExceeded("pre-k-ary enumeration exceeds subset cap " +
                                    std::to_string(cap));
    }
    std::map<VertexSet, int> index;
    for (std::size_t i = 0; i < s.members.size(); ++i)
        index.emplace(s.members[i], static_cast<int>(i));
    PreAryReport rep;
    rep.holds = true;
    for_subsets_size_lex(s.ground, k, [&](VertexSet a) {
        bool ok = false;
        try {
            ok = index.count(closure(s, a)) > 0;
        } catch (const NoSuperset&) {
            ok = false;
        }
        if (!ok) {
            rep.holds = false;
            rep.witness = std::move(a);
            return false;
        }
        return true;
    });
    return rep;
}

PreAryReport is_pre_binary(const SetSystem& s) {
    std::map<VertexSet, int> index;
    for (std::size_t i = 0; i < s.members.size(); ++i)
        index.emplace(s.members[i], static_cast<int>(i));
    const auto& pool = s.ground.ids();
    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            VertexSet pair = VertexSet::of({pool[i], pool[j]});
            bool ok = false;
            try {
                ok = index.count(closure(s, pair)) > 0;
            } catch (const NoSuperset&) {
                ok = false;
            }
            if (!ok) return {false, pair};
        }
    }
    return {true, std::nullopt};
}

bool families_equal(const SetSystem& a, const SetSystem& b) {
    return a.canonical_labels() == b.canonical_labels();
}

}  // namespace lcadag
