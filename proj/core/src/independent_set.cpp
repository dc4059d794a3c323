#include "slidetok/independent_set.hpp"

#include <algorithm>
#include <string>

#include "slidetok/error.hpp"

namespace slidetok {

IndependentSet IndependentSet::checked(const Tree& tree,
                                       std::vector<int> members) {
    std::sort(members.begin(), members.end());
    for (int v : members) tree.check_vertex(v);
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
        throw Error(ErrorCode::NotIndependent, "duplicate member");
    }
    for (int v : members) {
        for (int w : tree.neighbors(v)) {
            if (std::binary_search(members.begin(), members.end(), w)) {
                throw Error(ErrorCode::NotIndependent,
                            "adjacent members " + std::to_string(v) + " and " +
                                std::to_string(w));
            }
        }
    }
    IndependentSet s;
    s.members_ = std::move(members);
    return s;
}

IndependentSet IndependentSet::from_sorted_unchecked(std::vector<int> members) {
    IndependentSet s;
    s.members_ = std::move(members);
    return s;
}

bool IndependentSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> IndependentSet::bitmap(int n) const {
    std::vector<char> map(n, 0);
    for (int v : members_) map[v] = 1;
    return map;
}

IndependentSet apply_move(const Tree& tree, const IndependentSet& set,
                          Move move) {
    tree.check_vertex(move.from);
    tree.check_vertex(move.to);
    if (!set.contains(move.from)) {
        throw Error(ErrorCode::NoTokenAtSource,
                    "no token at " + std::to_string(move.from));
    }
    if (set.contains(move.to)) {
        throw Error(ErrorCode::DestinationOccupied,
                    "token already at " + std::to_string(move.to));
    }
    if (!tree.has_edge(move.from, move.to)) {
        throw Error(ErrorCode::NotAnEdge,
                    "(" + std::to_string(move.from) + ", " +
                        std::to_string(move.to) + ") is not an edge");
    }
    for (int w : tree.neighbors(move.to)) {
        if (w != move.from && set.contains(w)) {
            throw Error(ErrorCode::IndependenceViolated,
                        "destination " + std::to_string(move.to) +
                            " is adjacent to the token at " + std::to_string(w));
        }
    }
    std::vector<int> members = set.vertices();
    members.erase(std::lower_bound(members.begin(), members.end(), move.from));
    members.insert(std::lower_bound(members.begin(), members.end(), move.to),
                   move.to);
    return IndependentSet::from_sorted_unchecked(std::move(members));
}

std::optional<PlanViolation> verify_plan(const Instance& inst,
                                         const Plan& plan) {
    const Tree& tree = inst.tree;
    std::vector<char> tokens = inst.start.bitmap(tree.vertex_count());
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const Move& m = plan[i];
        int idx = static_cast<int>(i);
        if (m.from < 0 || m.from >= tree.vertex_count() || !tokens[m.from]) {
            return PlanViolation{PlanViolation::Kind::NoTokenAtSource, idx,
                                 "no token at " + std::to_string(m.from)};
        }
        if (m.to < 0 || m.to >= tree.vertex_count()) {
            return PlanViolation{PlanViolation::Kind::NotAnEdge, idx,
                                 "vertex " + std::to_string(m.to) +
                                     " does not exist"};
        }
        if (tokens[m.to]) {
            return PlanViolation{PlanViolation::Kind::DestinationOccupied, idx,
                                 "vertex " + std::to_string(m.to) +
                                     " already holds a token"};
        }
        if (!tree.has_edge(m.from, m.to)) {
            return PlanViolation{PlanViolation::Kind::NotAnEdge, idx,
                                 "(" + std::to_string(m.from) + ", " +
                                     std::to_string(m.to) + ") is not an edge"};
        }
        bool clash = false;
        int clash_at = -1;
        for (int w : tree.neighbors(m.to)) {
            if (w != m.from && tokens[w]) {
                clash = true;
                clash_at = w;
                break;
            }
        }
        if (clash) {
            return PlanViolation{
                PlanViolation::Kind::IndependenceViolated, idx,
                std::to_string(m.to) + " is adjacent to the token at " +
                    std::to_string(clash_at)};
        }
        tokens[m.from] = 0;
        tokens[m.to] = 1;
    }
    std::vector<char> want = inst.target.bitmap(tree.vertex_count());
    if (tokens != want) {
        return PlanViolation{PlanViolation::Kind::TargetMismatch,
                             static_cast<int>(plan.size()),
                             "final configuration differs from the target"};
    }
    return std::nullopt;
}

Plan reverse_plan(const Plan& plan) {
    Plan out;
    out.reserve(plan.size());
    for (auto it = plan.rbegin(); it != plan.rend(); ++it) {
        out.push_back(Move{it->to, it->from});
    }
    return out;
}

const char* plan_violation_kind_name(PlanViolation::Kind kind) noexcept {
    switch (kind) {
        case PlanViolation::Kind::NoTokenAtSource: return "NoTokenAtSource";
        case PlanViolation::Kind::DestinationOccupied:
            return "DestinationOccupied";
        case PlanViolation::Kind::NotAnEdge: return "NotAnEdge";
        case PlanViolation::Kind::IndependenceViolated:
            return "IndependenceViolated";
        case PlanViolation::Kind::TargetMismatch: return "TargetMismatch";
    }
    return "Unknown";
}

}  // namespace slidetok
