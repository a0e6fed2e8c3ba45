#include <catch_amalgamated.hpp>

#include "ybx/braiding.hpp"
#include "ybx/catalog.hpp"

using namespace ybx;

TEST_CASE("skew brace braiding (kind 4.1)") {
    for (auto B : {trivial_brace(4), z4_brace()}) {
        auto ex = braiding_skew_brace(B);
        auto rep = verify_deformed_braiding(ex.m, ex.triple, ex.shape);
        CHECK(rep.cond1);
        CHECK(rep.cond2);
        CHECK(rep.cond3);
        CHECK(rep.shape_ok);
        CHECK(rep.braid_consequence);
    }
}

TEST_CASE("z-deformed braiding (kind 4.2)") {
    auto B = z4_brace();
    for (int z = 0; z < 4; ++z) {
        auto ex = braiding_skew_brace_deformed(B, z);
        auto rep = verify_deformed_braiding(ex.m, ex.triple, ex.shape);
        CHECK(rep.all());
        CHECK(rep.braid_consequence);
        // composition law sigma_x sigma_y = f_{x o y} against the xi component
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
                for (int w = 0; w < 4; ++w) {
                    int lhs = ex.triple.r(x, ex.triple.r(y, w).first).first;
                    int rhs = ex.triple.xi(B.circ(x, y), w).first;
                    REQUIRE(lhs == rhs);
                }
    }
}

TEST_CASE("S-type conjugation braiding (kind 4.3)") {
    for (auto g : {symmetric_group_s3(), cyclic_group(4)}) {
        auto ex = braiding_group_conjugation(g);
        auto rep = verify_deformed_braiding(ex.m, ex.triple, ex.shape);
        CHECK(rep.all());
        CHECK(rep.braid_consequence);
        // tau_w tau_y = g^_{y + w}
        const int n = g.n();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int w = 0; w < n; ++w) {
                    int lhs = ex.triple.r(ex.triple.r(x, y).second, w).second;
                    int rhs = ex.triple.zeta(x, g.add(y, w)).second;
                    REQUIRE(lhs == rhs);
                }
    }
}

TEST_CASE("S-deformed braided magma from a heap endomorphism (kind 4.4)") {
    SECTION("Z/5 with f(x) = 2x") {
        auto g = cyclic_group(5);
        EndoMap f(5, {0, 2, 4, 1, 3});
        auto ex = braiding_heap_bullet(g, f);
        auto rep = verify_deformed_braiding(ex.m, ex.triple, ex.shape);
        CHECK(rep.all());
        CHECK(rep.braid_consequence);
        // m is the bullet_s operation 2a + b
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) REQUIRE(ex.m.at(a, b) == (2 * a + b) % 5);
    }
    SECTION("nonabelian carrier: bijective heap endomorphisms of S3") {
        auto g = symmetric_group_s3();
        std::vector<int> t(6, 0);
        int tested = 0;
        for (;;) {
            EndoMap f(6, t);
            if (f.is_bijective() && is_heap_endomorphism(f, g)) {
                auto ex = braiding_heap_bullet(g, f);
                auto rep = verify_deformed_braiding(ex.m, ex.triple, ex.shape);
                REQUIRE(rep.all());
                REQUIRE(rep.braid_consequence);
                ++tested;
            }
            int i = 5;
            while (i >= 0 && t[static_cast<size_t>(i)] == 5) t[static_cast<size_t>(i--)] = 0;
            if (i < 0) break;
            ++t[static_cast<size_t>(i)];
        }
        CHECK(tested == 36);  // 6 shifts x 6 automorphisms
    }
}

TEST_CASE("braiding conditions fail for incompatible data") {
    // flip r with a noncommutative m violates cond1
    auto g = symmetric_group_s3();
    auto flip = PairMap::build(6, 6, [](int a, int b) { return std::pair<int, int>{b, a}; });
    auto rep = verify_deformed_braiding(g.op, BraidingTriple(flip, flip, flip),
                                        BraidingShape::group);
    CHECK_FALSE(rep.cond1);
}

TEST_CASE("shape checks reject the wrong structural form") {
    auto g = symmetric_group_s3();
    auto ex = braiding_group_conjugation(g);
    auto rep_wrong = verify_deformed_braiding(ex.m, ex.triple, BraidingShape::S_ii);
    CHECK_FALSE(rep_wrong.shape_ok);
}
