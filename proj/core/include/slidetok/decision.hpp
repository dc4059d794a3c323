// Linear-time decision procedure with explanatory certificates.
#ifndef SLIDETOK_DECISION_HPP
#define SLIDETOK_DECISION_HPP

#include <variant>
#include <vector>

#include "slidetok/independent_set.hpp"
#include "slidetok/rigidity.hpp"

namespace slidetok {

/// |start| != |target|.
struct SizeMismatch {
    int start_size = 0;
    int target_size = 0;
};

/// The two configurations pin different vertices forever.
struct RigidMismatch {
    IndependentSet start_rigid;
    IndependentSet target_rigid;
};

/// Some forest component holds different token counts on each side.
struct ComponentCountMismatch {
    int component = 0;
    int start_count = 0;
    int target_count = 0;
};

/// Yes-certificate: the shared decomposition plus per-component counts.
struct Feasible {
    ForestDecomposition forest;
    std::vector<int> tokens_per_component;
};

struct Decision {
    enum class Verdict { Yes, No };

    Verdict verdict = Verdict::No;
    std::variant<SizeMismatch, RigidMismatch, ComponentCountMismatch, Feasible>
        certificate;

    bool yes() const noexcept { return verdict == Verdict::Yes; }
};

/// Decides reconfigurability in O(n): size check, rigid-set equality, then
/// per-component token counts after deleting rigid neighborhoods.
/// Throws Error{NotIndependent}.
Decision decide(const Instance& inst);

}  // namespace slidetok

#endif
