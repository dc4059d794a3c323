#include "slidetok/decision.hpp"

namespace slidetok {

Decision decide(const Instance& inst) {
    Decision out;

    if (inst.start.size() != inst.target.size()) {
        out.verdict = Decision::Verdict::No;
        out.certificate = SizeMismatch{inst.start.size(), inst.target.size()};
        return out;
    }

    RigidReport start_report = compute_rigid_set(inst.tree, inst.start);
    RigidReport target_report = compute_rigid_set(inst.tree, inst.target);
    if (!(start_report.rigid == target_report.rigid)) {
        out.verdict = Decision::Verdict::No;
        out.certificate = RigidMismatch{std::move(start_report.rigid),
                                        std::move(target_report.rigid)};
        return out;
    }

    ForestDecomposition forest =
        forest_after_deletion(inst.tree, start_report.rigid);

    int n = inst.tree.vertex_count();
    std::vector<int> comp_of(n, -1);
    for (std::size_t c = 0; c < forest.components.size(); ++c) {
        for (int v : forest.components[c].vertices) {
            comp_of[v] = static_cast<int>(c);
        }
    }
    std::vector<int> start_counts(forest.components.size(), 0);
    std::vector<int> target_counts(forest.components.size(), 0);
    for (int v : inst.start.vertices()) {
        if (comp_of[v] != -1) ++start_counts[comp_of[v]];
    }
    for (int v : inst.target.vertices()) {
        if (comp_of[v] != -1) ++target_counts[comp_of[v]];
    }
    for (std::size_t c = 0; c < forest.components.size(); ++c) {
        if (start_counts[c] != target_counts[c]) {
            out.verdict = Decision::Verdict::No;
            out.certificate = ComponentCountMismatch{
                static_cast<int>(c), start_counts[c], target_counts[c]};
            return out;
        }
    }

    out.verdict = Decision::Verdict::Yes;
    out.certificate = Feasible{std::move(forest), std::move(start_counts)};
    return out;
}

}  // namespace slidetok
