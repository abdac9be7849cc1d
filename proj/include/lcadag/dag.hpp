#ifndef LCADAG_DAG_HPP
#define LCADAG_DAG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcadag/errors.hpp"

namespace lcadag {

using VertexId = int;

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
  public:
    VertexSet() = default;

    // Sorts and deduplicates.
    static VertexSet of(std::vector<VertexId> ids);

    const std::vector<VertexId>& ids() const { return ids_; }
    bool contains(VertexId v) const;
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;
    bool operator<(const VertexSet& o) const { return ids_ < o.ids_; }

    VertexSet intersect(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;

  private:
    std::vector<VertexId> ids_;
};

// Immutable directed acyclic graph over labeled vertices.
// Edges run parent -> child; the induced order is v <= w iff w reaches v.
class Dag {
  public:
    // Vertex ids are assigned in first-appearance order over the edge list
    // (parent before child within a pair), then the isolated labels.
    static Dag from_edge_list(const std::vector<std::pair<std::string, std::string>>& edges,
                              const std::vector<std::string>& isolated = {});

    // Assembles a graph from an explicit label table and id edges.
    static Dag from_parts(std::vector<std::string> labels,
                          std::vector<std::pair<VertexId, VertexId>> edges);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& label(VertexId v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexId> find(std::string_view label) const;

    const std::vector<VertexId>& children(VertexId v) const { return children_.at(v); }
    const std::vector<VertexId>& parents(VertexId v) const { return parents_.at(v); }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    bool has_edge(VertexId parent, VertexId child) const;

    int in_degree(VertexId v) const { return static_cast<int>(parents_.at(v).size()); }
    int out_degree(VertexId v) const { return static_cast<int>(children_.at(v).size()); }

    // Canonical topological order: parents precede children, ties by id.
    const std::vector<VertexId>& topological_order() const { return topo_; }
    int topo_index(VertexId v) const { return topo_index_.at(v); }

  private:
    Dag() = default;
    void finish();  // validates labels/edges, sorts adjacency, topo-sorts

    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::vector<VertexId>> children_;
    std::vector<std::vector<VertexId>> parents_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<VertexId> topo_;
    std::vector<int> topo_index_;
};

// Out-degree-0 vertices: the minimal elements of the induced order.
VertexSet leaves(const Dag& g);
// In-degree-0 vertices: the maximal elements.
VertexSet roots(const Dag& g);
// Everything that is not a leaf.
VertexSet inner(const Dag& g);

bool is_network(const Dag& g);

// Same vertices and labels, every edge flipped.
Dag reverse(const Dag& g);

// Induced subgraph without v; remaining ids are compacted in order.
// Refuses to empty the graph.
Dag remove_vertex(const Dag& g, VertexId v);

// Equal label set and equal labeled edge set (vertex ids may differ).
bool labeled_equal(const Dag& a, const Dag& b);

}  // namespace lcadag

#endif
