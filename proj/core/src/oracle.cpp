#include "slidetok/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "slidetok/error.hpp"

namespace slidetok {

namespace {

void require_small(const Tree& tree, int cap) {
    int n = tree.vertex_count();
    int limit = std::min(cap, kOracleHardCap);
    if (n > limit) {
        throw Error(ErrorCode::TooLarge,
                    "oracle limited to " + std::to_string(limit) +
                        " vertices, got " + std::to_string(n));
    }
}

void require_independent(const Tree& tree, const IndependentSet& set) {
    for (int v : set.vertices()) {
        tree.check_vertex(v);
        for (int w : tree.neighbors(v)) {
            if (set.contains(w)) {
                throw Error(ErrorCode::NotIndependent,
                            "adjacent members " + std::to_string(v) + " and " +
                                std::to_string(w));
            }
        }
    }
}

}  // namespace

std::uint32_t StateSpace::mask_of(const IndependentSet& set) {
    std::uint32_t mask = 0;
    for (int v : set.vertices()) mask |= std::uint32_t{1} << v;
    return mask;
}

StateSpace::StateSpace(const Tree& tree, const IndependentSet& seed, int cap)
    : tree_(&tree) {
    require_small(tree, cap);
    require_independent(tree, seed);
    seed_mask_ = mask_of(seed);

    std::unordered_map<std::uint32_t, int> dist;
    std::vector<std::uint32_t> queue{seed_mask_};
    dist.emplace(seed_mask_, 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t mask = queue[head];
        int d = dist.at(mask);
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            int u = std::countr_zero(rest);
            std::uint32_t without = mask & ~(std::uint32_t{1} << u);
            for (int w : tree.neighbors(u)) {
                std::uint32_t wbit = std::uint32_t{1} << w;
                if (without & wbit) continue;
                bool clash = false;
                for (int x : tree.neighbors(w)) {
                    if (without & (std::uint32_t{1} << x)) {
                        clash = true;
                        break;
                    }
                }
                if (clash) continue;
                std::uint32_t next = without | wbit;
                if (dist.emplace(next, d + 1).second) queue.push_back(next);
            }
        }
    }

    reachable_.reserve(dist.size());
    for (const auto& [mask, _] : dist) reachable_.push_back(mask);
    std::sort(reachable_.begin(), reachable_.end());
    distance_.reserve(reachable_.size());
    for (std::uint32_t mask : reachable_) distance_.push_back(dist.at(mask));
}

bool StateSpace::is_reachable(const IndependentSet& set) const {
    std::uint32_t mask = mask_of(set);
    return std::binary_search(reachable_.begin(), reachable_.end(), mask);
}

std::optional<int> StateSpace::distance_to(const IndependentSet& target) const {
    std::uint32_t mask = mask_of(target);
    auto it = std::lower_bound(reachable_.begin(), reachable_.end(), mask);
    if (it == reachable_.end() || *it != mask) return std::nullopt;
    return distance_[it - reachable_.begin()];
}

IndependentSet StateSpace::always_occupied() const {
    std::uint32_t common = seed_mask_;
    for (std::uint32_t mask : reachable_) common &= mask;
    std::vector<int> members;
    for (std::uint32_t rest = common; rest != 0; rest &= rest - 1) {
        members.push_back(std::countr_zero(rest));
    }
    return IndependentSet::from_sorted_unchecked(std::move(members));
}

std::vector<IndependentSet> oracle_reachable(const Tree& tree,
                                             const IndependentSet& set,
                                             int cap) {
    StateSpace space(tree, set, cap);
    std::vector<IndependentSet> out;
    out.reserve(space.reachable().size());
    for (std::uint32_t mask : space.reachable()) {
        std::vector<int> members;
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            members.push_back(std::countr_zero(rest));
        }
        out.push_back(IndependentSet::from_sorted_unchecked(std::move(members)));
    }
    return out;
}

bool oracle_decide(const Instance& inst, int cap) {
    StateSpace space(inst.tree, inst.start, cap);
    require_independent(inst.tree, inst.target);
    return space.is_reachable(inst.target);
}

IndependentSet oracle_rigid(const Tree& tree, const IndependentSet& set,
                            int cap) {
    StateSpace space(tree, set, cap);
    return space.always_occupied();
}

std::optional<int> oracle_shortest(const Instance& inst, int cap) {
    StateSpace space(inst.tree, inst.start, cap);
    require_independent(inst.tree, inst.target);
    return space.distance_to(inst.target);
}

}  // namespace slidetok
