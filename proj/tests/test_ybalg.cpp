#include <catch_amalgamated.hpp>

#include "ybx/brace.hpp"
#include "ybx/catalog.hpp"
#include "ybx/enumerate.hpp"
#include "ybx/ybalg.hpp"

using namespace ybx;

TEST_CASE("commutative operations are Yang-Baxter algebras for the flip") {
    auto m = OpTable::build(4, [](int a, int b) { return (a * b) % 4; });
    CHECK(is_yb_algebra(m, Solution::flip(4)).holds);
}

TEST_CASE("noncommutative operation fails for the flip, with witness") {
    auto g = symmetric_group_s3();
    auto res = is_yb_algebra(g.op, Solution::flip(6));
    CHECK_FALSE(res.holds);
    REQUIRE(res.witness.has_value());
    CHECK(g.add(res.witness->a, res.witness->b) != g.add(res.witness->b, res.witness->a));
}

TEST_CASE("group addition is a YB algebra for the skew-brace solution") {
    auto B = z4_brace();
    auto s = brace_maps(B, BraceVariant::one);
    CHECK(is_yb_algebra(B.add.op, s).holds);  // a + b = b + (b |> a)
}

TEST_CASE("bullet_from_solution produces certified YB algebras") {
    SECTION("flip gives the constant operation x") {
        for (int x = 0; x < 3; ++x) {
            auto m = bullet_from_solution(Solution::flip(3), x);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) REQUIRE(m.at(a, b) == x);
            CHECK(is_yb_algebra(m, Solution::flip(3)).holds);
        }
    }
    SECTION("derived solution of the right-zero quandle gives the constant") {
        auto s = derived_solution(OpTable::build(4, [](int, int b) { return b; }));
        auto m = bullet_from_solution(s, 2);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) REQUIRE(m.at(a, b) == 2);
    }
    SECTION("z4 brace solution") {
        auto B = z4_brace();
        auto s = brace_maps(B, BraceVariant::one);
        auto m = bullet_from_solution(s, 0);
        CHECK(is_yb_algebra(m, s).holds);
    }
    SECTION("every census solution at n = 2 admits the generic YB algebra") {
        for (const auto& s : census_left_nd_solutions(2).solutions)
            for (int x = 0; x < 2; ++x)
                CHECK(is_yb_algebra(bullet_from_solution(s, x), s).holds);
    }
}

TEST_CASE("affine bullets on Z/5 with f(x) = 2x") {
    auto g = cyclic_group(5);
    EndoMap f(5, {0, 2, 4, 1, 3});
    SECTION("variant s: a.b = 2a + b") {
        auto m = bullet_affine(g, f, AffineVariant::s);
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) REQUIRE(m.at(a, b) == (2 * a + b) % 5);
        auto shelf = affine_shelf(g, f, AffineVariant::s);
        CHECK(is_yb_algebra(m, derived_solution(shelf.table)).holds);
    }
    SECTION("variant r: a.b = b + 2a") {
        auto m = bullet_affine(g, f, AffineVariant::r);
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b) REQUIRE(m.at(a, b) == (b + 2 * a) % 5);
        auto shelf = affine_shelf(g, f, AffineVariant::r);
        CHECK(is_yb_algebra(m, derived_solution(shelf.table)).holds);
    }
    SECTION("variant t: a.b = -f^2(a) + f(a) - f(b) + b") {
        auto m = bullet_affine(g, f, AffineVariant::t);
        for (int a = 0; a < 5; ++a)
            for (int b = 0; b < 5; ++b)
                REQUIRE(m.at(a, b) == (((3 * a + 4 * b) % 5) + 5) % 5);
        auto shelf = affine_shelf(g, f, AffineVariant::t);
        CHECK(is_yb_algebra(m, derived_solution(shelf.table)).holds);
    }
    SECTION("shifted operation stays a YB algebra") {
        for (int h = 0; h < 5; ++h) {
            auto m = bullet_affine(g, f, AffineVariant::s, std::pair<int, int>{h, 0});
            auto shelf = affine_shelf(g, f, AffineVariant::s);
            CHECK(is_yb_algebra(m, derived_solution(shelf.table)).holds);
        }
        auto m = bullet_affine(g, f, AffineVariant::r, std::pair<int, int>{1, 3});
        auto shelf = affine_shelf(g, f, AffineVariant::r);
        CHECK(is_yb_algebra(m, derived_solution(shelf.table)).holds);
    }
}

TEST_CASE("affine bullets on the nonabelian carrier S3") {
    auto g = symmetric_group_s3();
    // iota is a metahomomorphism of both orders
    std::vector<int> it(6);
    for (int a = 0; a < 6; ++a) it[static_cast<size_t>(a)] = g.neg(a);
    EndoMap iota(6, it);
    auto m = bullet_affine(g, iota, AffineVariant::s);
    auto shelf = affine_shelf(g, iota, AffineVariant::s);
    REQUIRE(shelf.report.quandle);
    CHECK(is_yb_algebra(m, derived_solution(shelf.table)).holds);

    // all heap endomorphisms work in every variant
    std::vector<int> t(6, 0);
    for (;;) {
        EndoMap f(6, t);
        if (is_heap_endomorphism(f, g))
            for (auto v : {AffineVariant::t, AffineVariant::r, AffineVariant::s}) {
                auto mm = bullet_affine(g, f, v);
                auto sh = affine_shelf(g, f, v);
                REQUIRE(sh.report.shelf);
                CHECK(is_yb_algebra(mm, derived_solution(sh.table)).holds);
            }
        int i = 5;
        while (i >= 0 && t[static_cast<size_t>(i)] == 5) t[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++t[static_cast<size_t>(i)];
    }
}

TEST_CASE("z-deformed bullets from the skew-brace maps") {
    auto B = z4_brace();
    for (int z = 1; z < 4; ++z) {
        ZParams p{0, z, z};
        auto s = brace_maps(B, BraceVariant::one, p);
        REQUIRE(verify_braid(s).braid);
        // a o b = sigma_a(b) o tau_b(a) holds for the deformed maps
        CHECK(is_yb_algebra(B.mul.op, s).holds);
        // a .s b = a o z - z1 + b over the associated quandle solution
        auto bullet_s = OpTable::build(4, [&](int a, int b) {
            return B.plus(B.plus(B.circ(a, p.z), B.minus(p.z1)), b);
        });
        auto q = zdeformed_quandle(B, BraceVariant::one, p);
        CHECK(is_yb_algebra(bullet_s, derived_solution(q)).holds);
        // a .r b = b - z2 + a o z for the variant-2 quandle
        auto bullet_r = OpTable::build(4, [&](int a, int b) {
            return B.plus(B.plus(b, B.minus(p.z2)), B.circ(a, p.z));
        });
        auto q2 = zdeformed_quandle(B, BraceVariant::two, p);
        CHECK(is_yb_algebra(bullet_r, derived_solution(q2)).holds);
    }
}

TEST_CASE("bullet_affine rejects maps outside the hypothesis") {
    auto g = cyclic_group(4);
    EndoMap swap(4, {1, 0, 2, 3});  // not a metahom, not heap
    REQUIRE_FALSE(is_heap_endomorphism(swap, g));
    REQUIRE_FALSE(is_metahomomorphism(swap, g));
    CHECK_THROWS_AS(bullet_affine(g, swap, AffineVariant::s), PreconditionFailed);
}
