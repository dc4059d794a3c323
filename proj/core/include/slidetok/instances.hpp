// Instance generators: the quadratic path family, random trees, exhaustive
// labeled-tree enumeration, and random configurations.
#ifndef SLIDETOK_INSTANCES_HPP
#define SLIDETOK_INSTANCES_HPP

#include <cstdint>
#include <vector>

#include "slidetok/independent_set.hpp"
#include "slidetok/tree.hpp"

namespace slidetok {

/// Path on 8k vertices with k tokens packed at the left end and k target
/// slots packed at the right end; any plan needs at least 6k^2 + k moves.
/// Throws Error{InvalidK} for k < 1.
Instance gen_path_family(int k);

/// Uniform random labeled tree on n vertices (random Pruefer sequence);
/// deterministic per seed. n >= 1.
Tree gen_random_tree(int n, std::uint64_t seed);

/// Random tree plus two independently drawn size-k independent sets.
/// Throws Error{Infeasible} when no size-k independent set turns up within
/// the retry budget.
Instance gen_random_instance(int n, int k_tokens, std::uint64_t seed);

/// Every labeled tree on n vertices exactly once, via Pruefer-sequence
/// odometer. n <= 8 (n^{n-2} trees). Throws Error{TooLarge, TooSmall}.
class TreeEnumerator {
public:
    explicit TreeEnumerator(int n);

    /// False once the enumeration is exhausted.
    bool next(Tree& out);

    std::uint64_t total() const noexcept { return total_; }

private:
    int n_;
    std::uint64_t index_ = 0;
    std::uint64_t total_ = 0;
    std::vector<int> sequence_;
};

/// Tree on n vertices from a Pruefer sequence of length n-2, entries in
/// [0, n). n >= 2.
Tree pruefer_decode(int n, const std::vector<int>& sequence);

/// Inverse of pruefer_decode. n >= 2.
std::vector<int> pruefer_encode(const Tree& tree);

}  // namespace slidetok

#endif
