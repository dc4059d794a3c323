#include "slidetok/tree.hpp"

#include <algorithm>
#include <string>

#include "slidetok/error.hpp"

namespace slidetok {

void Tree::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw Error(ErrorCode::InvalidVertex,
                    "vertex " + std::to_string(v) + " not in [0, " +
                        std::to_string(n_) + ")");
    }
}

Tree Tree::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) {
        throw Error(ErrorCode::InvalidVertex, "negative vertex count");
    }
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw Error(ErrorCode::InvalidVertex,
                        "edge endpoint out of range: (" + std::to_string(u) +
                            ", " + std::to_string(v) + ")");
        }
        if (u == v) {
            throw Error(ErrorCode::NotATree,
                        "self-loop at vertex " + std::to_string(u));
        }
    }
    if (n >= 1 && static_cast<int>(edges.size()) != n - 1) {
        throw Error(ErrorCode::NotATree,
                    "expected " + std::to_string(n - 1) + " edges, got " +
                        std::to_string(edges.size()));
    }
    if (n == 0 && !edges.empty()) {
        throw Error(ErrorCode::NotATree, "edges on an empty vertex set");
    }

    Tree t;
    t.n_ = n;
    t.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        ++t.offsets_[u + 1];
        ++t.offsets_[v + 1];
    }
    for (int v = 0; v < n; ++v) {
        t.offsets_[v + 1] += t.offsets_[v];
    }
    t.adjacency_.resize(2 * edges.size());
    std::vector<int> cursor(t.offsets_.begin(), t.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        t.adjacency_[cursor[u]++] = v;
        t.adjacency_[cursor[v]++] = u;
    }
    for (int v = 0; v < n; ++v) {
        auto begin = t.adjacency_.begin() + t.offsets_[v];
        auto end = t.adjacency_.begin() + t.offsets_[v + 1];
        std::sort(begin, end);
        if (std::adjacent_find(begin, end) != end) {
            throw Error(ErrorCode::DuplicateEdge,
                        "duplicate edge at vertex " + std::to_string(v));
        }
    }

    // n-1 edges and no duplicates, so connectivity implies acyclicity.
    if (n > 0) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int visited = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : t.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++visited;
                    stack.push_back(w);
                }
            }
        }
        if (visited != n) {
            throw Error(ErrorCode::NotATree, "graph is disconnected");
        }
    }
    return t;
}

bool Tree::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Tree::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(n_ > 0 ? n_ - 1 : 0);
    for (int v = 0; v < n_; ++v) {
        for (int w : neighbors(v)) {
            if (v < w) out.emplace_back(v, w);
        }
    }
    return out;
}

std::vector<int> subtree_vertices(const Tree& tree, SubtreeRef ref) {
    if (!tree.has_edge(ref.root, ref.excluded_parent)) {
        throw Error(ErrorCode::NotAdjacent,
                    "subtree root " + std::to_string(ref.root) +
                        " and excluded parent " +
                        std::to_string(ref.excluded_parent) +
                        " are not adjacent");
    }
    std::vector<int> out;
    std::vector<std::pair<int, int>> stack{{ref.root, ref.excluded_parent}};
    while (!stack.empty()) {
        auto [v, parent] = stack.back();
        stack.pop_back();
        out.push_back(v);
        auto nbrs = tree.neighbors(v);
        // Push in descending order so the smallest neighbor pops first.
        for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
            if (*it != parent) stack.emplace_back(*it, v);
        }
    }
    return out;
}

namespace {

// BFS parents from source; parent[source] == source.
std::vector<int> bfs_parents(const Tree& tree, int source) {
    std::vector<int> parent(tree.vertex_count(), -1);
    std::vector<int> queue{source};
    parent[source] = source;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : tree.neighbors(v)) {
            if (parent[w] == -1) {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    return parent;
}

}  // namespace

int distance(const Tree& tree, int v, int w) {
    tree.check_vertex(v);
    tree.check_vertex(w);
    auto parent = bfs_parents(tree, v);
    int d = 0;
    for (int x = w; x != v; x = parent[x]) ++d;
    return d;
}

std::vector<int> path_between(const Tree& tree, int v, int w) {
    tree.check_vertex(v);
    tree.check_vertex(w);
    auto parent = bfs_parents(tree, v);
    std::vector<int> rev;
    for (int x = w; x != v; x = parent[x]) rev.push_back(x);
    rev.push_back(v);
    return {rev.rbegin(), rev.rend()};
}

int find_safe_leaf(const Tree& tree) {
    int n = tree.vertex_count();
    if (n < 2) {
        throw Error(ErrorCode::TooSmall, "safe leaf needs at least 2 vertices");
    }
    // branching[u] = number of neighbors of u with degree > 1.
    std::vector<int> branching(n, 0);
    for (int v = 0; v < n; ++v) {
        if (tree.degree(v) > 1) {
            for (int w : tree.neighbors(v)) ++branching[w];
        }
    }
    for (int v = 0; v < n; ++v) {
        if (tree.degree(v) == 1 && branching[tree.neighbors(v)[0]] <= 1) {
            return v;
        }
    }
    throw Error(ErrorCode::InternalInvariant, "no safe leaf found");
}

}  // namespace slidetok
