#include "slidetok/planner.hpp"

#include <algorithm>
#include <string>

#include "scope_ops.hpp"
#include "slidetok/decision.hpp"
#include "slidetok/error.hpp"

namespace slidetok {

EvacuationStats& evacuation_stats() {
    static EvacuationStats stats;
    return stats;
}

namespace {

using detail::ScopedOps;

bool masked_rigid_in_subtree(ScopedOps& ops, const std::vector<char>& tokens,
                             int root, int parent) {
    std::vector<int> region = ops.masked_subtree(root, parent);
    std::vector<int> survivors = ops.eliminate_in(region, tokens);
    return std::binary_search(survivors.begin(), survivors.end(), root);
}

// Clears the token off `root`, moves confined to the scope-induced subtree
// hanging off `root` away from `parent`. Every step slides a subtree root to
// an escape neighbor whose own occupied children were evacuated first.
void masked_evacuate(ScopedOps& ops, std::vector<char>& tokens, int root,
                     int parent, Plan& plan) {
    std::size_t subtree_size = ops.masked_subtree(root, parent).size();
    std::size_t moves_before = plan.size();

    struct Frame {
        int root;
        int parent;
        int escape = -1;
    };
    std::vector<Frame> stack{{root, parent}};
    while (!stack.empty()) {
        std::size_t at = stack.size() - 1;
        if (stack[at].escape == -1) {
            int r = stack[at].root;
            int p = stack[at].parent;
            int escape = -1;
            for (int cand : ops.tree().neighbors(r)) {
                if (cand == p || !ops.in_scope(cand)) continue;
                bool ok = true;
                for (int x : ops.tree().neighbors(cand)) {
                    if (x == r || !ops.in_scope(x) || !tokens[x]) continue;
                    if (masked_rigid_in_subtree(ops, tokens, x, cand)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    escape = cand;
                    break;
                }
            }
            if (escape == -1) {
                throw Error(ErrorCode::InternalInvariant,
                            "movable token has no escape neighbor");
            }
            stack[at].escape = escape;
            // Occupied children of the escape vertex leave first; pushed in
            // descending id order so they are handled ascending.
            auto nbrs = ops.tree().neighbors(escape);
            for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
                if (*it != r && ops.in_scope(*it) && tokens[*it]) {
                    stack.push_back(Frame{*it, escape});
                }
            }
        } else {
            Frame done = stack[at];
            stack.pop_back();
            if (!tokens[done.root] || tokens[done.escape]) {
                throw Error(ErrorCode::InternalInvariant,
                            "evacuation slide is not applicable");
            }
            tokens[done.root] = 0;
            tokens[done.escape] = 1;
            plan.push_back(Move{done.root, done.escape});
        }
    }

    EvacuationStats& stats = evacuation_stats();
    ++stats.calls;
    if (plan.size() - moves_before > subtree_size) ++stats.bound_violations;
}

// Settles one token onto the safe degree-1 vertex `leaf`: evacuate the other
// tokens crowding the path's last interior vertex, then walk the chosen
// token down the path.
void masked_route(ScopedOps& ops, std::vector<char>& tokens, int leaf,
                  Plan& plan) {
    if (tokens[leaf]) return;
    std::vector<int> path = ops.path_to_closest_token(leaf, tokens);
    if (path.size() < 2) {
        throw Error(ErrorCode::InternalInvariant,
                    "no token reachable from the leaf");
    }
    int hinge = path[path.size() - 2];  // last path vertex before the token

    std::vector<int> crowd;  // tokens adjacent to the hinge, ascending
    for (int x : ops.tree().neighbors(hinge)) {
        if (ops.in_scope(x) && tokens[x]) crowd.push_back(x);
    }

    int chosen = -1;
    for (int x : crowd) {
        if (masked_rigid_in_subtree(ops, tokens, x, hinge)) {
            chosen = x;
            break;
        }
    }
    if (chosen == -1) chosen = crowd.front();

    for (int x : crowd) {
        if (x != chosen) masked_evacuate(ops, tokens, x, hinge, plan);
    }

    int at = chosen;
    for (std::size_t j = path.size() - 1; j-- > 0;) {
        int to = path[j];
        if (!tokens[at] || tokens[to]) {
            throw Error(ErrorCode::InternalInvariant,
                        "routing slide is not applicable");
        }
        tokens[at] = 0;
        tokens[to] = 1;
        plan.push_back(Move{at, to});
        at = to;
    }
}

// True iff `v` is a degree-1 vertex whose unique neighbor has at most one
// neighbor of degree > 1 (whole tree, no mask).
bool is_safe_leaf(const Tree& tree, int v) {
    if (tree.degree(v) != 1) return false;
    int u = tree.neighbors(v)[0];
    int branching = 0;
    for (int w : tree.neighbors(u)) {
        if (tree.degree(w) > 1) ++branching;
    }
    return branching <= 1;
}

}  // namespace

std::pair<Plan, IndependentSet> route_token_to_leaf(const Tree& tree,
                                                    const IndependentSet& set,
                                                    int v) {
    if (set.empty()) {
        throw Error(ErrorCode::NoTokens, "no token to route");
    }
    tree.check_vertex(v);
    if (!is_safe_leaf(tree, v)) {
        throw Error(ErrorCode::NotSafeLeaf,
                    "vertex " + std::to_string(v) +
                        " is not a safe degree-1 vertex");
    }
    ScopedOps ops(tree);
    ops.scope_all();
    std::vector<char> tokens = set.bitmap(tree.vertex_count());
    Plan plan;
    masked_route(ops, tokens, v, plan);

    std::vector<int> members;
    for (int x = 0; x < tree.vertex_count(); ++x) {
        if (tokens[x]) members.push_back(x);
    }
    return {std::move(plan),
            IndependentSet::from_sorted_unchecked(std::move(members))};
}

std::pair<Plan, IndependentSet> evacuate_subtree(const Tree& tree,
                                                 const IndependentSet& set,
                                                 SubtreeRef s) {
    if (!set.contains(s.root)) {
        throw Error(ErrorCode::NoTokenAtRoot,
                    "no token at subtree root " + std::to_string(s.root));
    }
    subtree_vertices(tree, s);  // validates adjacency, throws NotAdjacent
    ScopedOps ops(tree);
    ops.scope_all();
    std::vector<char> tokens = set.bitmap(tree.vertex_count());
    if (masked_rigid_in_subtree(ops, tokens, s.root, s.excluded_parent)) {
        throw Error(ErrorCode::RootIsRigid,
                    "token at " + std::to_string(s.root) +
                        " cannot leave its subtree root");
    }
    Plan plan;
    masked_evacuate(ops, tokens, s.root, s.excluded_parent, plan);

    std::vector<int> members;
    for (int x = 0; x < tree.vertex_count(); ++x) {
        if (tokens[x]) members.push_back(x);
    }
    return {std::move(plan),
            IndependentSet::from_sorted_unchecked(std::move(members))};
}

PlanTrace plan(const Instance& inst) {
    Decision decision = decide(inst);
    if (!decision.yes()) {
        throw Error(ErrorCode::NotFeasible, "instance is not reconfigurable");
    }
    const Feasible& cert = std::get<Feasible>(decision.certificate);

    int n = inst.tree.vertex_count();
    std::vector<char> fwd = inst.start.bitmap(n);
    std::vector<char> bwd = inst.target.bitmap(n);

    PlanTrace trace;
    std::vector<int> star;

    // Start-tokens on deleted vertices are exactly the rigid ones; they stay.
    for (int v : cert.forest.deleted) {
        if (fwd[v]) star.push_back(v);
    }

    ScopedOps ops(inst.tree);
    for (const ForestComponent& comp : cert.forest.components) {
        int remaining = 0;
        for (int v : comp.vertices) {
            if (fwd[v]) ++remaining;
        }
        if (remaining == 0) continue;

        std::vector<int> alive = comp.vertices;
        Plan forward;
        Plan backward;

        while (remaining > 0) {
            if (alive.size() == 1) {
                int only = alive[0];
                if (remaining != 1 || !fwd[only] || !bwd[only]) {
                    throw Error(ErrorCode::InternalInvariant,
                                "lone alive vertex out of sync with tokens");
                }
                star.push_back(only);
                remaining = 0;
                break;
            }
            ops.scope_vertices(alive);
            int v = ops.masked_safe_leaf();

            std::size_t before = forward.size();
            masked_route(ops, fwd, v, forward);
            trace.stats.settle_costs.push_back(
                static_cast<int>(forward.size() - before));
            before = backward.size();
            masked_route(ops, bwd, v, backward);
            trace.stats.settle_costs.push_back(
                static_cast<int>(backward.size() - before));

            star.push_back(v);
            --remaining;
            if (remaining == 0) break;

            // Shrink: drop the leaf, its neighbor, and anything isolated.
            int u = -1;
            for (int w : ops.tree().neighbors(v)) {
                if (ops.in_scope(w)) {
                    u = w;
                    break;
                }
            }
            std::vector<int> drop{v, u};
            for (int w : ops.tree().neighbors(u)) {
                if (w == v || !ops.in_scope(w)) continue;
                if (ops.scope_degree(w) == 1) {
                    if (fwd[w] || bwd[w]) {
                        throw Error(ErrorCode::InternalInvariant,
                                    "isolated vertex still holds a token");
                    }
                    drop.push_back(w);
                }
            }
            std::sort(drop.begin(), drop.end());
            std::vector<int> next_alive;
            next_alive.reserve(alive.size() - drop.size());
            std::set_difference(alive.begin(), alive.end(), drop.begin(),
                                drop.end(), std::back_inserter(next_alive));
            alive = std::move(next_alive);
        }

        for (int v : comp.vertices) {
            if (fwd[v] != bwd[v]) {
                throw Error(ErrorCode::InternalInvariant,
                            "forward and backward passes disagree");
            }
        }

        trace.plan.insert(trace.plan.end(), forward.begin(), forward.end());
        Plan back = reverse_plan(backward);
        trace.plan.insert(trace.plan.end(), back.begin(), back.end());
    }

    std::sort(star.begin(), star.end());
    trace.intermediate_star = IndependentSet::from_sorted_unchecked(std::move(star));
    trace.stats.move_count = static_cast<int>(trace.plan.size());
    return trace;
}

}  // namespace slidetok
