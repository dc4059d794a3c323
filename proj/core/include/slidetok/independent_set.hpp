// Independent sets, token slides, plans, and plan validation.
#ifndef SLIDETOK_INDEPENDENT_SET_HPP
#define SLIDETOK_INDEPENDENT_SET_HPP

#include <optional>
#include <string>
#include <vector>

#include "slidetok/tree.hpp"

namespace slidetok {

/// Sorted duplicate-free vertex set; independence is checked against a host
/// tree at construction via `checked`. Tokens are unlabeled.
class IndependentSet {
public:
    IndependentSet() = default;

    /// Throws Error{InvalidVertex, NotIndependent} (duplicates count as a
    /// NotIndependent violation of the set representation).
    static IndependentSet checked(const Tree& tree, std::vector<int> members);

    /// Caller guarantees `members` is sorted, duplicate-free, and independent.
    static IndependentSet from_sorted_unchecked(std::vector<int> members);

    const std::vector<int>& vertices() const noexcept { return members_; }
    int size() const noexcept { return static_cast<int>(members_.size()); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(int v) const;

    /// Membership bitmap over vertices 0..n-1.
    std::vector<char> bitmap(int n) const;

    friend bool operator==(const IndependentSet&, const IndependentSet&) = default;

private:
    std::vector<int> members_;
};

/// One token slide along the edge {from, to}.
struct Move {
    int from = 0;
    int to = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

/// Ordered move list; the corresponding sequence of configurations has
/// moves.size() + 1 entries.
using Plan = std::vector<Move>;

/// A reconfiguration question: can `start` reach `target` in `tree`?
struct Instance {
    Tree tree;
    IndependentSet start;
    IndependentSet target;
};

/// Slide one token. Throws Error{NoTokenAtSource, DestinationOccupied,
/// NotAnEdge, IndependenceViolated}.
IndependentSet apply_move(const Tree& tree, const IndependentSet& set, Move move);

/// First failure found when replaying a plan, or the final-set mismatch.
struct PlanViolation {
    enum class Kind {
        NoTokenAtSource,
        DestinationOccupied,
        NotAnEdge,
        IndependenceViolated,
        TargetMismatch,
    };

    Kind kind;
    /// Index of the offending move; moves.size() for TargetMismatch.
    int move_index;
    std::string detail;
};

/// Replays `plan` from inst.start; nullopt iff every intermediate set is
/// independent and the final set equals inst.target.
std::optional<PlanViolation> verify_plan(const Instance& inst, const Plan& plan);

/// Moves reversed in order with endpoints swapped: a valid A->B plan becomes
/// a valid B->A plan.
Plan reverse_plan(const Plan& plan);

const char* plan_violation_kind_name(PlanViolation::Kind kind) noexcept;

}  // namespace slidetok

#endif
