#ifndef LCADAG_IO_HPP
#define LCADAG_IO_HPP

#include <iosfwd>
#include <string>

#include "lcadag/dag.hpp"
#include "lcadag/holju.hpp"
#include "lcadag/set_system.hpp"

namespace lcadag {

// Edge-list format: one "parent child" pair per line, "node <label>" for
// degree-0 vertices, "#" starts a comment. Emission is canonical (lines
// sorted by label), so parse-then-emit is idempotent on files.
Dag parse_edge_list(std::istream& in);
std::string emit_edge_list(const Dag& g);

// Strict DOT subset: a digraph block with node statements and plain
// "a" -> "b"; edges, no attributes. Output always quotes identifiers and is
// re-parseable by this reader.
Dag parse_dot(std::istream& in);
std::string emit_dot(const Dag& g);

// Dispatches on a leading "digraph" token.
Dag parse_graph_auto(std::istream& in);

// JSON array of members, each a sorted array of labels; family sorted by
// (size, lexicographic). The ground set is the union of the members.
std::string set_system_to_json(const SetSystem& s);
// No deduplication: defects are preserved for downstream validation.
SetSystem set_system_from_json(const std::string& text);

// Trace text: "origin <label>" then one "leaf <label> <- {p1,p2,...}" per step.
std::string emit_trace(const ConstructionTrace& t);
ConstructionTrace parse_trace(std::istream& in);

}  // namespace lcadag

#endif
