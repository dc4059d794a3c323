#include "slidetok/rigidity.hpp"

#include <algorithm>
#include <string>

#include "scope_ops.hpp"
#include "slidetok/error.hpp"

namespace slidetok {

RigidReport compute_rigid_set(const Tree& tree, const IndependentSet& set) {
    // Whole-tree elimination with flat per-vertex state. Unlike the scoped
    // variant the planner uses, this touches only two n-sized arrays and
    // walks the member list instead of scanning every vertex, which keeps
    // large instances close to memory-bandwidth speed.
    const int n = tree.vertex_count();
    const auto& members = set.vertices();
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
        if (members[i] >= members[i + 1]) {
            throw Error(ErrorCode::NotIndependent, "members not strictly sorted");
        }
    }

    std::uint64_t work = 0;
    // state: 0 = empty vertex, 1 = live unqueued token, 2 = queued token.
    std::vector<std::uint8_t> state(n, 0);
    for (int v : members) {
        tree.check_vertex(v);
        state[v] = 1;
        ++work;
    }

    // count[w] = token neighbors of w not yet removed. Members are mutually
    // non-adjacent, so every counted w is an empty vertex.
    std::vector<int> count(n, 0);
    for (int v : members) {
        for (int w : tree.neighbors(v)) {
            ++work;
            if (state[w] != 0) {
                throw Error(ErrorCode::NotIndependent,
                            "adjacent members " + std::to_string(v) + " and " +
                                std::to_string(w));
            }
            ++count[w];
        }
    }

    // Seed: a token whose some neighbor has no other token neighbor is free
    // to leave. Queued tokens are never re-queued, so work stays linear.
    std::vector<int> queue;
    queue.reserve(members.size());
    for (int v : members) {
        ++work;
        for (int w : tree.neighbors(v)) {
            ++work;
            if (count[w] == 1) {
                state[v] = 2;
                queue.push_back(v);
                break;
            }
        }
    }

    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        ++work;
        for (int w : tree.neighbors(u)) {
            ++work;
            if (--count[w] != 1) continue;
            // w regained a single live token neighbor; find and queue it.
            for (int x : tree.neighbors(w)) {
                ++work;
                if (state[x] == 1) {
                    state[x] = 2;
                    queue.push_back(x);
                    break;
                }
            }
        }
    }

    std::vector<int> rigid;
    std::vector<int> movable;
    for (int v : members) {
        ++work;
        (state[v] == 1 ? rigid : movable).push_back(v);
    }

    RigidReport report;
    report.rigid = IndependentSet::from_sorted_unchecked(std::move(rigid));
    report.movable = IndependentSet::from_sorted_unchecked(std::move(movable));
    report.work = work;
    return report;
}

bool is_rigid_in_subtree(const Tree& tree, const IndependentSet& set,
                         SubtreeRef s) {
    if (!set.contains(s.root)) {
        throw Error(ErrorCode::NoTokenAtRoot,
                    "no token at subtree root " + std::to_string(s.root));
    }
    std::vector<int> region = subtree_vertices(tree, s);  // throws NotAdjacent
    detail::ScopedOps ops(tree);
    ops.scope_all();
    std::vector<char> tokens = set.bitmap(tree.vertex_count());
    std::vector<int> survivors = ops.eliminate_in(region, tokens);
    return std::binary_search(survivors.begin(), survivors.end(), s.root);
}

ForestDecomposition forest_after_deletion(const Tree& tree,
                                          const IndependentSet& rigid) {
    int n = tree.vertex_count();
    std::vector<char> dead(n, 0);
    for (int v : rigid.vertices()) {
        tree.check_vertex(v);
        dead[v] = 1;
        for (int w : tree.neighbors(v)) dead[w] = 1;
    }

    ForestDecomposition out;
    for (int v = 0; v < n; ++v) {
        if (dead[v]) out.deleted.push_back(v);
    }

    std::vector<int> comp_of(n, -1);
    for (int v = 0; v < n; ++v) {
        if (dead[v] || comp_of[v] != -1) continue;
        ForestComponent comp;
        comp_of[v] = static_cast<int>(out.components.size());
        std::vector<int> queue{v};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            comp.vertices.push_back(x);
            for (int w : tree.neighbors(x)) {
                if (!dead[w] && comp_of[w] == -1) {
                    comp_of[w] = comp_of[v];
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        out.components.push_back(std::move(comp));
    }

    // Induced local trees: vertex i of the local tree is vertices[i].
    std::vector<int> local_id(n, -1);
    for (auto& comp : out.components) {
        for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
            local_id[comp.vertices[i]] = static_cast<int>(i);
        }
        std::vector<std::pair<int, int>> local_edges;
        local_edges.reserve(comp.vertices.size());
        for (int x : comp.vertices) {
            for (int w : tree.neighbors(x)) {
                if (x < w && !dead[w]) {
                    local_edges.emplace_back(local_id[x], local_id[w]);
                }
            }
        }
        comp.local = Tree::build(static_cast<int>(comp.vertices.size()),
                                 local_edges);
    }
    return out;
}

}  // namespace slidetok
