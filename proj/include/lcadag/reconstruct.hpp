#ifndef LCADAG_RECONSTRUCT_HPP
#define LCADAG_RECONSTRUCT_HPP

#include <optional>
#include <string>
#include <vector>

#include "lcadag/dag.hpp"
#include "lcadag/isomorphism.hpp"
#include "lcadag/set_system.hpp"

namespace lcadag {

// Recovers the descendant family of g from the cluster system of its leaf
// extension: drop each synthetic singleton, then substitute the host vertex
// for its synthetic leaf everywhere. Synthetic leaves are the ground elements
// outside `original_leaves` when given, else those with the "__lx" suffix;
// hosts are derived by stripping that suffix (MalformedInput otherwise).
SetSystem descendants_from_lxt_clusters(
    const SetSystem& lxt_clusters,
    const std::optional<std::vector<std::string>>& original_leaves = std::nullopt);

// Rebuilds the shortcut-free graph whose descendant family is `d`. Each
// element owns the unique minimum member containing it; edges follow the
// cover test on the family. Throws InconsistentFamily when the input cannot
// be such a family.
Dag rebuild_sf_from_descendants(const SetSystem& d);

// End-to-end check: lop(hasse(clusters(lxt(g)))) is isomorphic to sf(g).
bool verify_lop_hasse_reconstruction(const Dag& g, int cap = kDefaultIsoCap);

}  // namespace lcadag

#endif
