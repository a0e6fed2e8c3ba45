#pragma once

#include <optional>

#include "ybx/finset.hpp"
#include "ybx/types.hpp"

/// Right pre-Lie skew braces and the Lie ring attached to a pre-Lie brace.
namespace ybx {

struct LeftInvertibility {
    int identity = -1;   // e with e . b = b for all b
    EndoMap inverse;     // unique b^-1 with b^-1 . b = e
};

struct PreLieReport {
    bool distr = false;      // a.(b+c) = a.b - a.0 + a.c and (a+b).c = a.c - 0.c + b.c
    bool prelie = false;     // (a.b).c - a.(b.c) symmetric in b, c
    bool prelie_op = false;  // the same condition written in (X, +op)
    std::optional<LeftInvertibility> left_invertible;
};

/// Checks the right pre-Lie skew brace axioms for (add, bullet); add must be
/// a group. Left invertibility returns the first left identity admitting
/// unique left inverses for every element.
inline PreLieReport verify_prelie(const OpTable& add, const OpTable& bullet) {
    if (add.n != bullet.n) throw CarrierMismatch("verify_prelie: carrier mismatch");
    auto gi = group_info(add);
    if (!gi) throw NotAGroup("verify_prelie: add is not a group");
    Group g{add, *gi};
    const int n = add.n;
    const int zero = g.zero();
    auto bul = [&](int a, int b) { return bullet.at(a, b); };

    PreLieReport rep;
    rep.distr = true;
    for (int a = 0; a < n && rep.distr; ++a)
        for (int b = 0; b < n && rep.distr; ++b)
            for (int c = 0; c < n; ++c) {
                int l1 = bul(a, g.add(b, c));
                int r1 = g.add(g.add(bul(a, b), g.neg(bul(a, zero))), bul(a, c));
                int l2 = bul(g.add(a, b), c);
                int r2 = g.add(g.add(bul(a, c), g.neg(bul(zero, c))), bul(b, c));
                if (l1 != r1 || l2 != r2) {
                    rep.distr = false;
                    break;
                }
            }
    rep.prelie = true;
    rep.prelie_op = true;
    Group gop = g.opposite();
    for (int a = 0; a < n && (rep.prelie || rep.prelie_op); ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int abc = bul(bul(a, b), c), a_bc = bul(a, bul(b, c));
                int acb = bul(bul(a, c), b), a_cb = bul(a, bul(c, b));
                if (g.add(abc, g.neg(a_bc)) != g.add(acb, g.neg(a_cb)))
                    rep.prelie = false;
                if (gop.add(gop.neg(a_bc), abc) != gop.add(gop.neg(a_cb), acb))
                    rep.prelie_op = false;
            }
    for (int e = 0; e < n; ++e) {
        bool ident = true;
        for (int b = 0; b < n; ++b)
            if (bul(e, b) != b) {
                ident = false;
                break;
            }
        if (!ident) continue;
        std::vector<int> inv(static_cast<size_t>(n), -1);
        bool ok = true;
        for (int b = 0; b < n && ok; ++b) {
            int found = -1;
            for (int x = 0; x < n; ++x)
                if (bul(x, b) == e) {
                    if (found >= 0) {
                        ok = false;
                        break;
                    }
                    found = x;
                }
            if (found < 0) ok = false;
            inv[static_cast<size_t>(b)] = found;
        }
        if (ok) {
            rep.left_invertible = LeftInvertibility{e, EndoMap(n, std::move(inv))};
            break;
        }
    }
    return rep;
}

struct LieReport {
    bool group_o = false;        // (X, +_o) abelian group with neutral o
    bool alternating = false;    // [a, a] = o
    bool biadditive = false;     // over +_o in both arguments
    bool jacobi = false;
    bool constant_bracket = false;
    int bracket_constant = -1;   // defined when constant_bracket

    bool lie_ring() const { return group_o && alternating && biadditive && jacobi; }
};

struct LieRing {
    OpTable add_o;    // a +_o b = a - o + b
    OpTable bracket;  // [a,b] = a.b - b.a + o.a - a.o + b.o - o.b + o
    LieReport report;
};

/// Lie ring of a pre-Lie brace at base point o. The bracket carries a final
/// +o term so that o is its neutral value; the axioms below are verified by
/// brute force, never assumed.
inline LieRing lie_ring_at(const OpTable& add, const OpTable& bullet, int o) {
    auto pre = verify_prelie(add, bullet);
    if (!pre.distr || !pre.prelie)
        throw NotPreLieBrace("lie_ring_at: (add, bullet) is not a pre-Lie skew brace");
    auto gi = group_info(add);
    if (!gi->abelian) throw NotAbelian("lie_ring_at: stated for abelian add only");
    Group g{add, *gi};
    const int n = add.n;
    auto bul = [&](int a, int b) { return bullet.at(a, b); };

    auto add_o = OpTable::build(n, [&](int a, int b) { return g.heap(a, o, b); });
    auto bracket = OpTable::build(n, [&](int a, int b) {
        int v = g.add(bul(a, b), g.neg(bul(b, a)));
        v = g.add(v, bul(o, a));
        v = g.add(v, g.neg(bul(a, o)));
        v = g.add(v, bul(b, o));
        v = g.add(v, g.neg(bul(o, b)));
        return g.add(v, o);
    });

    LieRing out{add_o, bracket, {}};
    auto& rep = out.report;
    auto go = group_info(add_o);
    rep.group_o = go && go->abelian && go->identity == o;
    if (!rep.group_o) return out;
    auto sumo = [&](int a, int b) { return add_o.at(a, b); };
    auto br = [&](int a, int b) { return bracket.at(a, b); };

    rep.alternating = true;
    for (int a = 0; a < n; ++a)
        if (br(a, a) != o) {
            rep.alternating = false;
            break;
        }
    rep.biadditive = true;
    for (int a = 0; a < n && rep.biadditive; ++a)
        for (int b = 0; b < n && rep.biadditive; ++b)
            for (int c = 0; c < n; ++c)
                if (br(sumo(a, c), b) != sumo(br(a, b), br(c, b)) ||
                    br(a, sumo(b, c)) != sumo(br(a, b), br(a, c))) {
                    rep.biadditive = false;
                    break;
                }
    rep.jacobi = true;
    for (int a = 0; a < n && rep.jacobi; ++a)
        for (int b = 0; b < n && rep.jacobi; ++b)
            for (int c = 0; c < n; ++c)
                if (sumo(sumo(br(br(a, b), c), br(br(b, c), a)), br(br(c, a), b)) != o) {
                    rep.jacobi = false;
                    break;
                }
    rep.constant_bracket = true;
    rep.bracket_constant = br(0, 0);
    for (int a = 0; a < n && rep.constant_bracket; ++a)
        for (int b = 0; b < n; ++b)
            if (br(a, b) != rep.bracket_constant) {
                rep.constant_bracket = false;
                rep.bracket_constant = -1;
                break;
            }
    return out;
}

}  // namespace ybx
