// Brute-force ground truth over the reconfiguration graph of a small tree.
#ifndef SLIDETOK_ORACLE_HPP
#define SLIDETOK_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "slidetok/independent_set.hpp"
#include "slidetok/tree.hpp"

namespace slidetok {

inline constexpr int kOracleDefaultCap = 16;
/// States are 32-bit vertex bitmasks, so no cap may exceed this.
inline constexpr int kOracleHardCap = 31;

/// All independent sets of one fixed size in a small tree, with the slide
/// relation explored on demand. States are vertex bitmasks.
class StateSpace {
public:
    /// Throws Error{TooLarge} if the tree has more than `cap` vertices,
    /// Error{NotIndependent} if `seed` is not independent.
    StateSpace(const Tree& tree, const IndependentSet& seed,
               int cap = kOracleDefaultCap);

    /// Masks reachable from the seed (the seed included), ascending.
    const std::vector<std::uint32_t>& reachable() const noexcept {
        return reachable_;
    }

    bool is_reachable(const IndependentSet& set) const;

    /// Moves from the seed mask to `target`, or nullopt.
    std::optional<int> distance_to(const IndependentSet& target) const;

    /// Seed vertices present in every reachable state.
    IndependentSet always_occupied() const;

    static std::uint32_t mask_of(const IndependentSet& set);

private:
    const Tree* tree_;
    std::uint32_t seed_mask_;
    std::vector<std::uint32_t> reachable_;        // sorted
    std::vector<int> distance_;                   // aligned with reachable_
};

/// Every independent set reachable from `set`, as sorted-vertex sets.
/// Throws Error{TooLarge} past the cap.
std::vector<IndependentSet> oracle_reachable(const Tree& tree,
                                             const IndependentSet& set,
                                             int cap = kOracleDefaultCap);

/// True iff inst.target is reachable from inst.start.
bool oracle_decide(const Instance& inst, int cap = kOracleDefaultCap);

/// Tokens of `set` present in every reachable configuration.
IndependentSet oracle_rigid(const Tree& tree, const IndependentSet& set,
                            int cap = kOracleDefaultCap);

/// Fewest moves from start to target; nullopt when unreachable.
std::optional<int> oracle_shortest(const Instance& inst,
                                   int cap = kOracleDefaultCap);

}  // namespace slidetok

#endif
