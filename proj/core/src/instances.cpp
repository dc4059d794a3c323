#include "slidetok/instances.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <string>

#include "slidetok/error.hpp"

namespace slidetok {

namespace {

/// Unbiased draw from [0, bound) (multiply-shift with rejection); exact and
/// platform-independent, so seeded generation is reproducible everywhere.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(rng()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
        std::uint64_t threshold = -bound % bound;
        while (lo < threshold) {
            m = static_cast<unsigned __int128>(rng()) * bound;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

Tree tree_from_rng(std::mt19937_64& rng, int n) {
    if (n == 1) return Tree::build(1, {});
    std::vector<int> seq(n - 2);
    for (int& a : seq) a = static_cast<int>(bounded(rng, n));
    return pruefer_decode(n, seq);
}

/// Randomized greedy: scan a shuffled vertex order, taking every vertex not
/// adjacent to one already taken, until k tokens are placed.
std::vector<int> sample_independent(std::mt19937_64& rng, const Tree& tree,
                                    int k) {
    int n = tree.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    constexpr int kRetries = 200;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        for (int i = n - 1; i > 0; --i) {
            int j = static_cast<int>(bounded(rng, i + 1));
            std::swap(perm[i], perm[j]);
        }
        std::vector<char> blocked(n, 0);
        std::vector<int> chosen;
        for (int v : perm) {
            if (blocked[v]) continue;
            chosen.push_back(v);
            if (static_cast<int>(chosen.size()) == k) break;
            blocked[v] = 1;
            for (int w : tree.neighbors(v)) blocked[w] = 1;
        }
        if (static_cast<int>(chosen.size()) == k) {
            std::sort(chosen.begin(), chosen.end());
            return chosen;
        }
    }
    throw Error(ErrorCode::Infeasible,
                "no independent set of size " + std::to_string(k) +
                    " found after " + std::to_string(kRetries) + " attempts");
}

}  // namespace

Instance gen_path_family(int k) {
    if (k < 1) {
        throw Error(ErrorCode::InvalidK, "k must be positive");
    }
    int n = 8 * k;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    Tree tree = Tree::build(n, edges);

    std::vector<int> start;
    std::vector<int> target;
    start.reserve(k);
    target.reserve(k);
    for (int i = 0; i < k; ++i) {
        start.push_back(2 * i);
        target.push_back(6 * k + 1 + 2 * i);
    }
    Instance inst;
    inst.tree = std::move(tree);
    inst.start = IndependentSet::from_sorted_unchecked(std::move(start));
    inst.target = IndependentSet::from_sorted_unchecked(std::move(target));
    return inst;
}

Tree gen_random_tree(int n, std::uint64_t seed) {
    if (n < 1) {
        throw Error(ErrorCode::TooSmall, "tree needs at least one vertex");
    }
    std::mt19937_64 rng(seed);
    return tree_from_rng(rng, n);
}

Instance gen_random_instance(int n, int k_tokens, std::uint64_t seed) {
    if (n < 1) {
        throw Error(ErrorCode::TooSmall, "tree needs at least one vertex");
    }
    if (k_tokens < 0) {
        throw Error(ErrorCode::InvalidK, "token count must be non-negative");
    }
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.tree = tree_from_rng(rng, n);
    inst.start = IndependentSet::from_sorted_unchecked(
        sample_independent(rng, inst.tree, k_tokens));
    inst.target = IndependentSet::from_sorted_unchecked(
        sample_independent(rng, inst.tree, k_tokens));
    return inst;
}

Tree pruefer_decode(int n, const std::vector<int>& sequence) {
    if (n < 2) {
        throw Error(ErrorCode::TooSmall, "decode needs n >= 2");
    }
    if (static_cast<int>(sequence.size()) != n - 2) {
        throw Error(ErrorCode::InvalidVertex,
                    "sequence length must be n - 2");
    }
    for (int a : sequence) {
        if (a < 0 || a >= n) {
            throw Error(ErrorCode::InvalidVertex,
                        "sequence entry out of range");
        }
    }

    std::vector<int> degree(n, 1);
    for (int a : sequence) ++degree[a];

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int ptr = 0;
    int leaf = -1;
    for (int a : sequence) {
        if (leaf == -1) {
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
        edges.emplace_back(leaf, a);
        --degree[leaf];
        if (--degree[a] == 1 && a < ptr) {
            leaf = a;
        } else {
            leaf = -1;
        }
    }
    if (leaf == -1) {
        while (degree[ptr] != 1) ++ptr;
        leaf = ptr;
    }
    edges.emplace_back(leaf, n - 1);
    return Tree::build(n, edges);
}

std::vector<int> pruefer_encode(const Tree& tree) {
    int n = tree.vertex_count();
    if (n < 2) {
        throw Error(ErrorCode::TooSmall, "encode needs n >= 2");
    }
    std::vector<int> degree(n);
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        degree[v] = tree.degree(v);
        if (degree[v] == 1) leaves.push(v);
    }
    std::vector<char> removed(n, 0);
    std::vector<int> seq;
    seq.reserve(n - 2);
    for (int i = 0; i + 2 < n; ++i) {
        int u = leaves.top();
        leaves.pop();
        int w = -1;
        for (int x : tree.neighbors(u)) {
            if (!removed[x]) {
                w = x;
                break;
            }
        }
        seq.push_back(w);
        removed[u] = 1;
        if (--degree[w] == 1) leaves.push(w);
    }
    return seq;
}

TreeEnumerator::TreeEnumerator(int n) : n_(n) {
    if (n < 1) {
        throw Error(ErrorCode::TooSmall, "enumeration needs n >= 1");
    }
    if (n > 8) {
        throw Error(ErrorCode::TooLarge,
                    "enumeration capped at 8 vertices (n^(n-2) trees)");
    }
    total_ = 1;
    if (n > 2) {
        for (int i = 0; i < n - 2; ++i) total_ *= static_cast<std::uint64_t>(n);
    }
    sequence_.assign(n > 2 ? n - 2 : 0, 0);
}

bool TreeEnumerator::next(Tree& out) {
    if (index_ >= total_) return false;
    if (n_ == 1) {
        out = Tree::build(1, {});
    } else {
        out = pruefer_decode(n_, sequence_);
    }
    ++index_;
    for (std::size_t i = 0; i < sequence_.size(); ++i) {
        if (++sequence_[i] < n_) break;
        sequence_[i] = 0;
    }
    return true;
}

}  // namespace slidetok
