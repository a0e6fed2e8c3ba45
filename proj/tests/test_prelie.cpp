#include <catch_amalgamated.hpp>

#include "ybx/catalog.hpp"
#include "ybx/prelie.hpp"
#include "ybx/ybalg.hpp"

using namespace ybx;

namespace {
OpTable zmod(int n) {
    return OpTable::build(n, [n](int a, int b) { return (a + b) % n; });
}
}  // namespace

TEST_CASE("Z/5 with a.b = 2a + b is a left invertible right pre-Lie brace") {
    auto add = zmod(5);
    auto bullet = OpTable::build(5, [](int a, int b) { return (2 * a + b) % 5; });
    auto rep = verify_prelie(add, bullet);
    CHECK(rep.distr);
    CHECK(rep.prelie);
    CHECK(rep.prelie_op);
    REQUIRE(rep.left_invertible.has_value());
    CHECK(rep.left_invertible->identity == 0);  // e = f^-1(0)
    for (int b = 0; b < 5; ++b)
        CHECK(rep.left_invertible->inverse(b) == (3 * ((5 - b) % 5)) % 5);  // f^-1(e - b)
}

TEST_CASE("rings are pre-Lie braces") {
    auto add = zmod(6);
    auto mul = OpTable::build(6, [](int a, int b) { return (a * b) % 6; });
    auto rep = verify_prelie(add, mul);
    CHECK(rep.distr);
    CHECK(rep.prelie);
}

TEST_CASE("shifted operation h + f(a) + b keeps the pre-Lie structure") {
    auto add = zmod(5);
    const int h = 1;
    auto bullet = OpTable::build(5, [&](int a, int b) { return (h + 2 * a + b) % 5; });
    auto rep = verify_prelie(add, bullet);
    CHECK(rep.distr);
    CHECK(rep.prelie);
    REQUIRE(rep.left_invertible.has_value());
    // e = f^-1(-h) = 3 * 4 = 2; b* = f^-1(-h + e - b)
    CHECK(rep.left_invertible->identity == 2);
    for (int b = 0; b < 5; ++b)
        CHECK(rep.left_invertible->inverse(b) == (3 * ((((-h + 2 - b) % 5) + 5) % 5)) % 5);
}

TEST_CASE("theorem instances: bullet_s over + and bullet_r over +op") {
    auto groups = std::vector<Group>{cyclic_group(4), cyclic_group(5), units_mod8(),
                                     symmetric_group_s3()};
    for (const auto& g : groups) {
        const int n = g.n();
        // every bijective heap endomorphism: f = k + l with l an automorphism
        std::vector<int> t(static_cast<size_t>(n), 0);
        for (;;) {
            EndoMap f(n, t);
            if (f.is_bijective() && is_heap_endomorphism(f, g)) {
                auto bs = bullet_affine(g, f, AffineVariant::s);
                auto rep_s = verify_prelie(g.op, bs);
                CHECK(rep_s.distr);
                CHECK(rep_s.prelie);
                CHECK(rep_s.left_invertible.has_value());
                auto br = bullet_affine(g, f, AffineVariant::r);
                auto rep_r = verify_prelie(g.opposite().op, br);
                CHECK(rep_r.distr);
                CHECK(rep_r.prelie);
                CHECK(rep_r.left_invertible.has_value());
                // b |> a = (b^-1 . a) . b  for the bullet_s structure
                if (rep_s.left_invertible) {
                    const auto& inv = rep_s.left_invertible->inverse;
                    auto shelf = affine_shelf(g, f, AffineVariant::s).table;
                    for (int b = 0; b < n; ++b)
                        for (int a = 0; a < n; ++a)
                            REQUIRE(bs.at(bs.at(inv(b), a), b) == shelf.at(b, a));
                }
            }
            int i = n - 1;
            while (i >= 0 && t[static_cast<size_t>(i)] == n - 1)
                t[static_cast<size_t>(i--)] = 0;
            if (i < 0) break;
            ++t[static_cast<size_t>(i)];
        }
    }
}

TEST_CASE("defining difference is f^2(a) - f(0) - f(a) independent of b, c") {
    auto g = symmetric_group_s3();
    std::vector<int> t(6, 0);
    for (;;) {
        EndoMap f(6, t);
        if (f.is_bijective() && is_heap_endomorphism(f, g)) {
            auto bs = bullet_affine(g, f, AffineVariant::s);
            for (int a = 0; a < 6; ++a) {
                int expect = g.add(g.add(f(f(a)), g.neg(f(g.zero()))), g.neg(f(a)));
                for (int b = 0; b < 6; ++b)
                    for (int c = 0; c < 6; ++c)
                        REQUIRE(g.add(bs.at(bs.at(a, b), c), g.neg(bs.at(a, bs.at(b, c)))) ==
                                expect);
            }
        }
        int i = 5;
        while (i >= 0 && t[static_cast<size_t>(i)] == 5) t[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++t[static_cast<size_t>(i)];
    }
}

TEST_CASE("Lie ring of a ring at o = 0 is the commutator bracket") {
    auto add = zmod(5);
    auto mul = OpTable::build(5, [](int a, int b) { return (a * b) % 5; });
    auto lie = lie_ring_at(add, mul, 0);
    CHECK(lie.report.lie_ring());
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            CHECK(lie.bracket.at(a, b) == (((a * b - b * a) % 5) + 5) % 5);
}

TEST_CASE("Lie ring axioms hold at every base point of a ring") {
    auto add = zmod(4);
    auto mul = OpTable::build(4, [](int a, int b) { return (a * b) % 4; });
    for (int o = 0; o < 4; ++o) {
        auto lie = lie_ring_at(add, mul, o);
        CHECK(lie.report.group_o);
        CHECK(lie.report.alternating);
        CHECK(lie.report.biadditive);
        CHECK(lie.report.jacobi);
    }
}

TEST_CASE("affine quandle Lie rings have zero bracket") {
    auto add = zmod(5);
    auto bullet_r = OpTable::build(5, [](int a, int b) { return (b + 2 * a) % 5; });
    for (int o = 0; o < 5; ++o) {
        auto lie = lie_ring_at(add, bullet_r, o);
        CHECK(lie.report.lie_ring());
        CHECK(lie.report.constant_bracket);
        CHECK(lie.report.bracket_constant == o);  // the neutral element: zero bracket
    }
}

TEST_CASE("lie_ring_at refuses non-pre-Lie and nonabelian inputs") {
    auto g = symmetric_group_s3();
    std::vector<int> it(6);
    for (int a = 0; a < 6; ++a) it[static_cast<size_t>(a)] = g.neg(a);
    auto bs = bullet_affine(g, EndoMap(6, it), AffineVariant::s);
    CHECK_THROWS_AS(lie_ring_at(g.op, bs, 0), Error);  // nonabelian carrier

    auto add = zmod(4);
    auto bad = OpTable::build(4, [](int a, int b) { return (a * a + b) % 4; });
    CHECK_THROWS(lie_ring_at(add, bad, 0));
}
