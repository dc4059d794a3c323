// Rigid-token detection and post-deletion forest decomposition.
#ifndef SLIDETOK_RIGIDITY_HPP
#define SLIDETOK_RIGIDITY_HPP

#include <cstdint>
#include <vector>

#include "slidetok/independent_set.hpp"
#include "slidetok/tree.hpp"

namespace slidetok {

/// Partition of a token set into tokens that can never leave their vertex
/// and the rest.
struct RigidReport {
    IndependentSet rigid;
    IndependentSet movable;
    /// Elimination work counter (vertices scanned + worklist pops); grows
    /// linearly with the tree size.
    std::uint64_t work = 0;
};

/// One tree of the forest left after deleting closed neighborhoods of rigid
/// tokens. `vertices` are host-tree ids (ascending); `local` is the induced
/// subtree on them with vertex i standing for vertices[i].
struct ForestComponent {
    std::vector<int> vertices;
    Tree local;
};

struct ForestDecomposition {
    /// Host-tree vertices removed (the rigid tokens and their neighbors),
    /// ascending.
    std::vector<int> deleted;
    /// Connected components of what remains, ordered by smallest member.
    std::vector<ForestComponent> components;
};

/// Tokens that stay fixed across every reachable configuration. Iterative
/// elimination: tokens with a free neighbor (a neighbor dominated by no other
/// token) are removed until none qualifies; survivors are rigid. O(n).
/// Throws Error{NotIndependent}.
RigidReport compute_rigid_set(const Tree& tree, const IndependentSet& set);

/// True iff the token on s.root can never leave s.root when play is confined
/// to the subtree hanging off s.root away from s.excluded_parent. Runs the
/// elimination restricted to the subtree. O(|subtree|).
/// Throws Error{NoTokenAtRoot, NotAdjacent}.
bool is_rigid_in_subtree(const Tree& tree, const IndependentSet& set, SubtreeRef s);

/// Delete the closed neighborhood of every rigid token and decompose the
/// remainder into connected components, each with its own induced tree.
ForestDecomposition forest_after_deletion(const Tree& tree, const IndependentSet& rigid);

}  // namespace slidetok

#endif
