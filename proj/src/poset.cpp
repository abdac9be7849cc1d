#include "lcadag/poset.hpp"

namespace lcadag {

Poset::Poset(int n) : down_(n, Bits(n)), up_(n, Bits(n)) {
    for (int v = 0; v < n; ++v) {
        down_[v].set(v);
        up_[v].set(v);
    }
}

void Poset::rebuild_up() {
    const int n = size();
    for (int v = 0; v < n; ++v) up_[v].reset();
    for (int v = 0; v < n; ++v) {
        for (auto u = down_[v].find_first(); u != Bits::npos; u = down_[v].find_next(u))
            up_[u].set(v);
    }
}

bool Poset::is_partial_order() const {
    const int n = size();
    for (int v = 0; v < n; ++v)
        if (!leq(v, v)) return false;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u != v && leq(u, v) && leq(v, u)) return false;
            if (leq(u, v)) {
                // everything below u must sit below v
                if ((down_[u] & ~down_[v]).any()) return false;
            }
        }
    return true;
}

Poset reachability(const Dag& g) {
    const int n = g.vertex_count();
    Poset p(n);
    const auto& topo = g.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        VertexId v = *it;
        Bits row(n);
        row.set(v);
        for (VertexId c : g.children(v)) row |= p.down(c);
        for (auto u = row.find_first(); u != Bits::npos; u = row.find_next(u))
            p.set_leq(static_cast<VertexId>(u), v);
    }
    p.rebuild_up();
    return p;
}

VertexSet minimal_elements(const Poset& p, const Bits& s) {
    std::vector<VertexId> out;
    for (auto v = s.find_first(); v != Bits::npos; v = s.find_next(v)) {
        // v is minimal when no other member of s lies strictly below it
        Bits strictly_below = p.down(static_cast<VertexId>(v)) & s;
        strictly_below.reset(v);
        if (strictly_below.none()) out.push_back(static_cast<VertexId>(v));
    }
    return VertexSet::of(std::move(out));
}

VertexSet bits_to_set(const Bits& b) {
    std::vector<VertexId> out;
    for (auto v = b.find_first(); v != Bits::npos; v = b.find_next(v))
        out.push_back(static_cast<VertexId>(v));
    return VertexSet::of(std::move(out));
}

Bits set_to_bits(const VertexSet& s, int n) {
    Bits b(n);
    for (VertexId v : s) b.set(v);
    return b;
}

}  // namespace lcadag
