// Masked (vertex-subset-scoped) primitives over one host tree. The planner
// repeatedly shrinks its playing field, and rigidity checks run on subtrees;
// both reuse these. Generation stamps keep each call at O(touched), not O(n).
#ifndef SLIDETOK_SCOPE_OPS_HPP
#define SLIDETOK_SCOPE_OPS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "slidetok/tree.hpp"

namespace slidetok::detail {

class ScopedOps {
public:
    explicit ScopedOps(const Tree& tree);

    const Tree& tree() const noexcept { return *tree_; }
    std::uint64_t work() const noexcept { return work_; }

    /// Installs the active vertex subset. All masked queries below see only
    /// these vertices and the edges between them.
    void scope_vertices(std::span<const int> vertices);
    void scope_all();

    bool in_scope(int v) const noexcept {
        return scope_stamp_[v] == scope_gen_;
    }
    const std::vector<int>& scope() const noexcept { return scope_list_; }

    int scope_degree(int v) const;

    /// Free-neighbor elimination over `region` (vertices of one connected
    /// induced subgraph of the scope). Tokens outside the region are ignored.
    /// Returns surviving token vertices, ascending.
    std::vector<int> eliminate_in(std::span<const int> region,
                                  const std::vector<char>& token_bitmap);

    /// Vertices of the scope-induced subtree hanging off `root` away from
    /// `parent` (both in scope, adjacent), preorder.
    std::vector<int> masked_subtree(int root, int parent);

    /// Smallest degree-1 vertex (in the scope-induced tree) whose unique
    /// neighbor has at most one neighbor of scope-degree > 1. Scope must
    /// hold >= 2 vertices of one connected tree.
    int masked_safe_leaf();

    /// BFS from `source` within the scope; returns the path from `source` to
    /// the nearest token (smallest id among ties), inclusive. Empty when no
    /// token is in scope.
    std::vector<int> path_to_closest_token(int source,
                                           const std::vector<char>& token_bitmap);

private:
    void grow_run_arrays();

    const Tree* tree_;
    std::uint64_t work_ = 0;

    std::uint32_t scope_gen_ = 0;
    std::vector<std::uint32_t> scope_stamp_;
    std::vector<int> scope_list_;

    // Per-run scratch (eliminations, BFS, subtree walks).
    std::uint32_t run_gen_ = 0;
    std::vector<std::uint32_t> run_stamp_;
    std::vector<int> run_value_;
    std::vector<std::uint32_t> aux_stamp_;
    std::vector<int> queue_;
};

}  // namespace slidetok::detail

#endif
