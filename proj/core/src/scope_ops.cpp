#include "scope_ops.hpp"

#include <algorithm>

#include "slidetok/error.hpp"

namespace slidetok::detail {

ScopedOps::ScopedOps(const Tree& tree) : tree_(&tree) {
    int n = tree.vertex_count();
    scope_stamp_.assign(n, 0);
    run_stamp_.assign(n, 0);
    run_value_.assign(n, 0);
    aux_stamp_.assign(n, 0);
}

void ScopedOps::scope_vertices(std::span<const int> vertices) {
    ++scope_gen_;
    scope_list_.assign(vertices.begin(), vertices.end());
    for (int v : scope_list_) {
        scope_stamp_[v] = scope_gen_;
        ++work_;
    }
}

void ScopedOps::scope_all() {
    ++scope_gen_;
    int n = tree_->vertex_count();
    scope_list_.resize(n);
    for (int v = 0; v < n; ++v) {
        scope_list_[v] = v;
        scope_stamp_[v] = scope_gen_;
        ++work_;
    }
}

int ScopedOps::scope_degree(int v) const {
    int d = 0;
    for (int w : tree_->neighbors(v)) {
        if (in_scope(w)) ++d;
    }
    return d;
}

std::vector<int> ScopedOps::eliminate_in(std::span<const int> region,
                                         const std::vector<char>& token_bitmap) {
    // Stamp the region; run_value_ carries deg(w) = live token neighbors.
    ++run_gen_;
    for (int v : region) {
        run_stamp_[v] = run_gen_;
        run_value_[v] = 0;
        ++work_;
    }
    auto in_region = [&](int v) { return run_stamp_[v] == run_gen_; };

    for (int v : region) {
        if (!token_bitmap[v]) continue;
        for (int w : tree_->neighbors(v)) {
            ++work_;
            if (in_region(w)) ++run_value_[w];
        }
    }

    // aux_stamp_ marks tokens already queued for removal; queued tokens are
    // never re-queued, so total work stays linear in the region's edges.
    queue_.clear();
    for (int v : region) {
        ++work_;
        if (!token_bitmap[v]) continue;
        for (int w : tree_->neighbors(v)) {
            ++work_;
            if (in_region(w) && run_value_[w] == 1) {
                aux_stamp_[v] = run_gen_;
                queue_.push_back(v);
                break;
            }
        }
    }

    for (std::size_t head = 0; head < queue_.size(); ++head) {
        int u = queue_[head];
        ++work_;
        for (int w : tree_->neighbors(u)) {
            ++work_;
            if (!in_region(w)) continue;
            if (--run_value_[w] != 1) continue;
            // w regained a single live token neighbor; find and queue it.
            for (int x : tree_->neighbors(w)) {
                ++work_;
                if (in_region(x) && token_bitmap[x] &&
                    aux_stamp_[x] != run_gen_) {
                    aux_stamp_[x] = run_gen_;
                    queue_.push_back(x);
                }
            }
        }
    }

    std::vector<int> survivors;
    for (int v : region) {
        if (token_bitmap[v] && aux_stamp_[v] != run_gen_) {
            survivors.push_back(v);
        }
    }
    std::sort(survivors.begin(), survivors.end());
    return survivors;
}

std::vector<int> ScopedOps::masked_subtree(int root, int parent) {
    std::vector<int> out;
    // (vertex, its parent) pairs; neighbor order gives deterministic preorder.
    std::vector<std::pair<int, int>> stack{{root, parent}};
    while (!stack.empty()) {
        auto [v, p] = stack.back();
        stack.pop_back();
        out.push_back(v);
        ++work_;
        auto nbrs = tree_->neighbors(v);
        for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
            if (*it != p && in_scope(*it)) stack.emplace_back(*it, v);
        }
    }
    return out;
}

int ScopedOps::masked_safe_leaf() {
    // run_value_[v] = number of scope-neighbors of v with scope-degree > 1.
    ++run_gen_;
    for (int v : scope_list_) {
        run_stamp_[v] = run_gen_;
        run_value_[v] = 0;
        ++work_;
    }
    for (int v : scope_list_) {
        if (scope_degree(v) > 1) {
            for (int w : tree_->neighbors(v)) {
                ++work_;
                if (in_scope(w)) ++run_value_[w];
            }
        }
    }
    int best = -1;
    for (int v : scope_list_) {
        ++work_;
        if (scope_degree(v) != 1) continue;
        int u = -1;
        for (int w : tree_->neighbors(v)) {
            if (in_scope(w)) {
                u = w;
                break;
            }
        }
        if (run_value_[u] <= 1 && (best == -1 || v < best)) best = v;
    }
    if (best == -1) {
        throw Error(ErrorCode::InternalInvariant,
                    "scope has no safe degree-1 vertex");
    }
    return best;
}

std::vector<int> ScopedOps::path_to_closest_token(
    int source, const std::vector<char>& token_bitmap) {
    // BFS within scope; run_value_ holds the BFS parent (source -> itself).
    ++run_gen_;
    run_stamp_[source] = run_gen_;
    run_value_[source] = source;
    queue_.clear();
    queue_.push_back(source);

    int found = -1;
    std::size_t level_end = 1;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        if (head == level_end) {
            if (found != -1) break;  // finished the level that holds a token
            level_end = queue_.size();
        }
        int v = queue_[head];
        ++work_;
        if (token_bitmap[v] && (found == -1 || v < found)) found = v;
        if (found != -1) continue;  // finish this level, stop expanding
        for (int w : tree_->neighbors(v)) {
            ++work_;
            if (in_scope(w) && run_stamp_[w] != run_gen_) {
                run_stamp_[w] = run_gen_;
                run_value_[w] = v;
                queue_.push_back(w);
            }
        }
    }
    if (found == -1) return {};

    std::vector<int> rev;
    for (int x = found; x != source; x = run_value_[x]) rev.push_back(x);
    rev.push_back(source);
    return {rev.rbegin(), rev.rend()};
}

}  // namespace slidetok::detail
