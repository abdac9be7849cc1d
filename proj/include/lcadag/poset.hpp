#ifndef LCADAG_POSET_HPP
#define LCADAG_POSET_HPP

#include <boost/dynamic_bitset.hpp>
#include <vector>

#include "lcadag/dag.hpp"

namespace lcadag {

using Bits = boost::dynamic_bitset<>;

// Reflexive partial order on vertex ids, stored densely both ways.
// leq(u, v) reads "u below-or-equal v": in graph terms, v reaches u.
class Poset {
  public:
    explicit Poset(int n);

    int size() const { return static_cast<int>(down_.size()); }
    bool leq(VertexId u, VertexId v) const { return down_[v].test(u); }
    bool less(VertexId u, VertexId v) const { return u != v && leq(u, v); }
    bool comparable(VertexId u, VertexId v) const { return leq(u, v) || leq(v, u); }

    // All u with u <= v (the descendants of v, v included).
    const Bits& down(VertexId v) const { return down_[v]; }
    // All w with u <= w (the ancestors of u, u included).
    const Bits& up(VertexId u) const { return up_[u]; }

    void set_leq(VertexId u, VertexId v) { down_[v].set(u); }
    void rebuild_up();  // recomputes the transposed rows from down_

    // Exhaustive reflexivity / antisymmetry / transitivity scan.
    bool is_partial_order() const;

  private:
    std::vector<Bits> down_;
    std::vector<Bits> up_;
};

// Reachability order of a DAG: u <= v iff there is a directed v->u path or u == v.
Poset reachability(const Dag& g);

// Elements of s (given as a bitset) with no strictly smaller element in s.
VertexSet minimal_elements(const Poset& p, const Bits& s);

VertexSet bits_to_set(const Bits& b);
Bits set_to_bits(const VertexSet& s, int n);

}  // namespace lcadag

#endif
