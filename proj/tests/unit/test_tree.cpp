#include <algorithm>
#include <functional>
#include <vector>

#include "doctest.h"
#include "slidetok/error.hpp"
#include "slidetok/instances.hpp"
#include "slidetok/tree.hpp"
#include "testutil.hpp"

using namespace slidetok;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    REQUIRE(false);
    return ErrorCode::InternalInvariant;
}

}  // namespace

TEST_SUITE("tree") {
    TEST_CASE("build accepts paths, stars, singletons") {
        Tree p1 = Tree::build(1, {});
        CHECK(p1.vertex_count() == 1);
        CHECK(p1.degree(0) == 0);

        Tree p3 = testutil::make_path(3);
        CHECK(p3.vertex_count() == 3);
        CHECK(p3.degree(1) == 2);
        CHECK(p3.has_edge(0, 1));
        CHECK(p3.has_edge(1, 0));
        CHECK_FALSE(p3.has_edge(0, 2));

        Tree star = testutil::make_star(5);
        CHECK(star.degree(0) == 4);
        for (int v = 1; v < 5; ++v) CHECK(star.degree(v) == 1);
    }

    TEST_CASE("build rejects malformed input") {
        CHECK(code_of([] { Tree::build(2, {}); }) == ErrorCode::NotATree);
        CHECK(code_of([] { Tree::build(2, {{0, 0}}); }) == ErrorCode::NotATree);
        CHECK(code_of([] { Tree::build(3, {{0, 1}, {0, 1}}); }) ==
              ErrorCode::DuplicateEdge);
        CHECK(code_of([] { Tree::build(2, {{0, 2}}); }) ==
              ErrorCode::InvalidVertex);
        // Right edge count, but a triangle plus an isolated vertex.
        CHECK(code_of([] { Tree::build(4, {{0, 1}, {1, 2}, {2, 0}}); }) ==
              ErrorCode::NotATree);
    }

    TEST_CASE("neighbors are sorted and edges canonical") {
        Tree t = Tree::build(5, {{4, 2}, {2, 0}, {3, 2}, {1, 0}});
        auto nbrs = t.neighbors(2);
        CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
        CHECK(t.edges() == std::vector<std::pair<int, int>>{
                               {0, 1}, {0, 2}, {2, 3}, {2, 4}});
    }

    TEST_CASE("subtree_vertices walks away from the excluded parent") {
        Tree t = testutil::make_spider8();
        CHECK(subtree_vertices(t, {3, 1}) == std::vector<int>{3, 4, 5});
        CHECK(subtree_vertices(t, {1, 3}) == std::vector<int>{1, 0, 2, 6, 7});
        CHECK(subtree_vertices(t, {0, 1}) == std::vector<int>{0});
        CHECK(code_of([&] { subtree_vertices(t, {0, 3}); }) ==
              ErrorCode::NotAdjacent);
    }

    TEST_CASE("distance and path") {
        Tree t = testutil::make_spider8();
        CHECK(distance(t, 0, 0) == 0);
        CHECK(distance(t, 0, 5) == 4);
        CHECK(distance(t, 5, 7) == 5);
        CHECK(path_between(t, 5, 7) == std::vector<int>{5, 4, 3, 1, 6, 7});
        CHECK(path_between(t, 2, 2) == std::vector<int>{2});
    }

    TEST_CASE("safe leaf: examples") {
        // Path: both ends are safe; smallest id wins.
        CHECK(find_safe_leaf(testutil::make_path(6)) == 0);
        // Star: every leaf's neighbor (the center) has zero deg>1 neighbors.
        CHECK(find_safe_leaf(testutil::make_star(6)) == 1);
        // Spider: leaf 0's neighbor is the center, which has two deg>1
        // neighbors (3 and 6), so 0 and 2 are unsafe; 5's neighbor 4 has
        // exactly one (vertex 3).
        CHECK(find_safe_leaf(testutil::make_spider8()) == 5);
        CHECK(code_of([] { find_safe_leaf(Tree::build(1, {})); }) ==
              ErrorCode::TooSmall);
    }

    TEST_CASE("safe leaf: every random tree has one and it is the smallest") {
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            int n = 2 + static_cast<int>(seed % 499);
            Tree t = gen_random_tree(n, seed * 7919 + 1);
            int v = find_safe_leaf(t);
            auto safe = [&](int x) {
                if (t.degree(x) != 1) return false;
                int u = t.neighbors(x)[0];
                int branching = 0;
                for (int w : t.neighbors(u)) {
                    if (t.degree(w) > 1) ++branching;
                }
                return branching <= 1;
            };
            REQUIRE(safe(v));
            for (int x = 0; x < v; ++x) REQUIRE_FALSE(safe(x));
        }
    }
}
