#include <random>

#include <catch_amalgamated.hpp>

#include "ybx/finset.hpp"

using namespace ybx;

TEST_CASE("group detection on cyclic tables") {
    auto z4 = OpTable::build(4, [](int a, int b) { return (a + b) % 4; });
    auto info = group_info(z4);
    REQUIRE(info.has_value());
    CHECK(info->identity == 0);
    CHECK(info->abelian);
    for (int x = 0; x < 4; ++x) CHECK(info->inverse(x) == (4 - x) % 4);
}

TEST_CASE("left-zero band is not a group") {
    auto band = OpTable::build(2, [](int a, int) { return a; });
    CHECK_FALSE(group_info(band).has_value());
}

TEST_CASE("S3 Cayley table is a nonabelian group") {
    auto g = symmetric_group_s3();
    CHECK(g.n() == 6);
    CHECK(g.zero() == 0);
    CHECK_FALSE(g.info.abelian);
    // oracle: brute-force associativity and inverse laws over all triples
    for (int a = 0; a < 6; ++a) {
        CHECK(g.add(a, g.neg(a)) == 0);
        for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 6; ++c)
                REQUIRE(g.add(g.add(a, b), c) == g.add(a, g.add(b, c)));
    }
}

TEST_CASE("U(Z/8Z) is the Klein four-group") {
    auto g = units_mod8();
    CHECK(g.n() == 4);
    CHECK(g.info.abelian);
    for (int a = 0; a < 4; ++a) CHECK(g.neg(a) == a);  // units mod 8 are self-inverse
}

TEST_CASE("group endomorphisms satisfy every taxonomy flag") {
    auto g = cyclic_group(5);
    EndoMap f(5, {0, 2, 4, 1, 3});  // x -> 2x
    auto c = classify_endofunction(f, g);
    CHECK(c.hom);
    CHECK(c.heap_endo);
    CHECK(c.metahom);
    CHECK(c.metahom_op);
}

TEST_CASE("inversion map on S3 is a metahomomorphism only") {
    auto g = symmetric_group_s3();
    std::vector<int> t(6);
    for (int a = 0; a < 6; ++a) t[static_cast<size_t>(a)] = g.neg(a);
    EndoMap iota(6, t);
    auto c = classify_endofunction(iota, g);
    CHECK(c.metahom);
    CHECK(c.metahom_op);
    CHECK_FALSE(c.hom);
    CHECK_FALSE(c.heap_endo);
}

TEST_CASE("constant maps are heap endomorphisms and metahomomorphisms") {
    auto g = symmetric_group_s3();
    for (int k = 0; k < 6; ++k) {
        auto c = classify_endofunction(EndoMap::constant(6, k), g);
        CHECK(c.heap_endo);
        CHECK(c.metahom);
        CHECK(c.hom == (k == 0));
    }
}

TEST_CASE("hom implies heap_endo and metahom over sampled endofunctions") {
    auto groups = std::vector<Group>{cyclic_group(4), cyclic_group(6), units_mod8(),
                                     symmetric_group_s3()};
    std::mt19937 rng(7);
    for (const auto& g : groups) {
        const int n = g.n();
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> t(static_cast<size_t>(n));
            for (auto& v : t) v = static_cast<int>(rng() % n);
            auto c = classify_endofunction(EndoMap(n, t), g);
            if (c.hom) {
                CHECK(c.heap_endo);
                CHECK(c.metahom);
            }
            if (c.heap_endo && is_central(t[static_cast<size_t>(g.zero())], g))
                CHECK(c.metahom);
        }
    }
}

TEST_CASE("heap decomposition of an endomorphism") {
    auto g = cyclic_group(5);
    EndoMap f(5, {0, 2, 4, 1, 3});
    auto d = heap_decompose(f, g);
    REQUIRE(d.has_value());
    CHECK(d->k == 0);
    CHECK(d->l == f);
    CHECK(d->r == f);
}

TEST_CASE("heap decomposition of a translation") {
    auto g = cyclic_group(7);
    std::vector<int> t(7);
    for (int x = 0; x < 7; ++x) t[static_cast<size_t>(x)] = (x + 3) % 7;
    EndoMap f(7, t);
    // oracle: the heap identity holds for translations on abelian groups
    REQUIRE(is_heap_endomorphism(f, g));
    auto d = heap_decompose(f, g);
    REQUIRE(d.has_value());
    CHECK(d->k == 3);
    CHECK(d->l == EndoMap::identity(7));
    CHECK(d->r == EndoMap::identity(7));
}

TEST_CASE("inversion map on S3 has no heap decomposition") {
    auto g = symmetric_group_s3();
    std::vector<int> t(6);
    for (int a = 0; a < 6; ++a) t[static_cast<size_t>(a)] = g.neg(a);
    CHECK_FALSE(heap_decompose(EndoMap(6, t), g).has_value());
}

TEST_CASE("heap decomposition round trip on all heap endomorphisms of S3") {
    auto g = symmetric_group_s3();
    // scan all 6^6 maps; the heap endomorphisms are exactly k + l(x)
    std::vector<int> t(6, 0);
    long heap_count = 0;
    for (;;) {
        EndoMap f(6, t);
        if (auto d = heap_decompose(f, g)) {
            ++heap_count;
            for (int x = 0; x < 6; ++x) {
                REQUIRE(g.add(d->k, d->l(x)) == f(x));
                REQUIRE(g.add(d->r(x), d->k) == f(x));
            }
        }
        int i = 5;
        while (i >= 0 && t[static_cast<size_t>(i)] == 5) t[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
        ++t[static_cast<size_t>(i)];
    }
    // 6 shifts x 10 endomorphisms of S3
    CHECK(heap_count == 60);
}
