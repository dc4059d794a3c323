// Constructive reconfiguration: builds an explicit move sequence of length
// O(n^2) for every yes-instance.
#ifndef SLIDETOK_PLANNER_HPP
#define SLIDETOK_PLANNER_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "slidetok/independent_set.hpp"
#include "slidetok/tree.hpp"

namespace slidetok {

struct PlanStats {
    int move_count = 0;
    /// Moves spent per leaf settled, in settling order; each settled leaf
    /// contributes the forward-pass cost then the backward-pass cost.
    std::vector<int> settle_costs;
};

struct PlanTrace {
    Plan plan;
    /// The meeting configuration both endpoint sets are driven to (rigid
    /// tokens included).
    IndependentSet intermediate_star;
    PlanStats stats;
};

/// Builds a start->target plan. Requires decide(inst).verdict == yes; throws
/// Error{NotFeasible} otherwise. Per forest component, both endpoint
/// configurations are driven onto the same deterministic leaf-settled set;
/// the emitted plan is the forward pass followed by the reversed backward
/// pass. |plan| <= 4 n^2.
PlanTrace plan(const Instance& inst);

/// Slides one closest token onto the safe degree-1 vertex `v`, evacuating
/// competing tokens near the path first. All tokens must be movable. Returns
/// the moves and the resulting configuration.
/// Throws Error{NoTokens, NotSafeLeaf}.
std::pair<Plan, IndependentSet> route_token_to_leaf(const Tree& tree,
                                                    const IndependentSet& set,
                                                    int v);

/// Clears the token off s.root using only subtree edges; at most |subtree|
/// moves. Requires the root token to be movable within the subtree.
/// Throws Error{NoTokenAtRoot, RootIsRigid, NotAdjacent}.
std::pair<Plan, IndependentSet> evacuate_subtree(const Tree& tree,
                                                 const IndependentSet& set,
                                                 SubtreeRef s);

/// Process-wide tally over every evacuate_subtree call, so test binaries can
/// assert the per-call move bound held everywhere.
struct EvacuationStats {
    std::uint64_t calls = 0;
    /// Calls that emitted more moves than the subtree has vertices.
    std::uint64_t bound_violations = 0;
};

EvacuationStats& evacuation_stats();

}  // namespace slidetok

#endif
