// Immutable tree on 0-based contiguous vertex ids, stored as a CSR adjacency
// structure. All traversals are iterative so paths with millions of vertices
// cannot overflow the call stack.
#ifndef SLIDETOK_TREE_HPP
#define SLIDETOK_TREE_HPP

#include <span>
#include <utility>
#include <vector>

namespace slidetok {

class Tree {
public:
    Tree() = default;

    /// Validates and builds: exactly n-1 edges, connected, simple.
    /// Throws Error{InvalidVertex, DuplicateEdge, NotATree}.
    static Tree build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const noexcept { return n_; }

    std::span<const int> neighbors(int v) const {
        return {adjacency_.data() + offsets_[v],
                adjacency_.data() + offsets_[v + 1]};
    }

    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(int u, int v) const;

    /// Edges as (min, max) pairs in ascending order.
    std::vector<std::pair<int, int>> edges() const;

    void check_vertex(int v) const;  // throws Error{InvalidVertex}

private:
    int n_ = 0;
    std::vector<int> offsets_{0};  // n+1 entries
    std::vector<int> adjacency_;   // 2(n-1) entries, each bucket sorted ascending
};

/// The subtree containing `root` and everything below it when the host tree
/// is rooted at `excluded_parent`; the parent itself is outside the subtree.
struct SubtreeRef {
    int root = 0;
    int excluded_parent = 0;
};

/// Vertices of the subtree in preorder (ascending neighbor order), root first.
/// Throws Error{NotAdjacent} if (root, excluded_parent) is not an edge.
std::vector<int> subtree_vertices(const Tree& tree, SubtreeRef ref);

/// Number of edges on the unique path between v and w.
int distance(const Tree& tree, int v, int w);

/// Vertices of the unique path from v to w, inclusive.
std::vector<int> path_between(const Tree& tree, int v, int w);

/// Smallest-id degree-1 vertex whose unique neighbor has at most one
/// neighbor of degree greater than one. Every tree with n >= 2 has one.
/// Throws Error{TooSmall} for n < 2.
int find_safe_leaf(const Tree& tree);

}  // namespace slidetok

#endif
