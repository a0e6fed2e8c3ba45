#pragma once

#include <optional>

#include "ybx/brace.hpp"
#include "ybx/finset.hpp"
#include "ybx/solution.hpp"
#include "ybx/types.hpp"

/// Deformed braiding operators on groups and S-deformed braidings on magmas.
namespace ybx {

/// The three invertible maps of a deformed braiding:
/// r(x,y) = (sigma_x(y), tau_y(x)), xi(x,y) = (f_x(y), g_y(x)),
/// zeta(x,y) = (f^_x(y), g^_y(x)).
struct BraidingTriple {
    PairMap r;
    PairMap xi;
    PairMap zeta;

    BraidingTriple(PairMap r_, PairMap xi_, PairMap zeta_)
        : r(std::move(r_)), xi(std::move(xi_)), zeta(std::move(zeta_)) {
        if (!r.is_bijective() || !xi.is_bijective() || !zeta.is_bijective())
            throw PreconditionFailed("BraidingTriple: maps must be invertible");
    }
};

enum class BraidingShape { group, S_i, S_ii };

struct BraidingReport {
    bool cond1 = false;  // m = m r
    bool cond2 = false;  // xi (m x id) = (id x m)(r x id)(id x r)
    bool cond3 = false;  // zeta (id x m) = (m x id)(id x r)(r x id)
    bool shape_ok = false;
    bool braid_consequence = false;  // verify_braid(r) when all conditions pass

    bool all() const { return cond1 && cond2 && cond3 && shape_ok; }
};

namespace detail {

/// Structural form of the S-shapes: (i) first output is always y for r, xi,
/// zeta; (ii) second output is always x.
inline bool braiding_shape_ok(const BraidingTriple& t, BraidingShape shape) {
    const int n = t.r.nx;
    if (shape == BraidingShape::group) return true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (shape == BraidingShape::S_i) {
                if (t.r(x, y).first != y || t.xi(x, y).first != y ||
                    t.zeta(x, y).first != y)
                    return false;
            } else {
                if (t.r(x, y).second != x || t.xi(x, y).second != x ||
                    t.zeta(x, y).second != x)
                    return false;
            }
        }
    return true;
}

}  // namespace detail

inline BraidingReport verify_deformed_braiding(const OpTable& m, const BraidingTriple& t,
                                               BraidingShape shape) {
    const int n = m.n;
    if (t.r.nx != n) throw CarrierMismatch("verify_deformed_braiding: carrier mismatch");
    if (shape == BraidingShape::group && !group_info(m))
        throw NotAGroup("verify_deformed_braiding: m is not a group");
    BraidingReport rep;
    rep.cond1 = true;
    for (int x = 0; x < n && rep.cond1; ++x)
        for (int y = 0; y < n; ++y) {
            auto p = t.r(x, y);
            if (m.at(x, y) != m.at(p.first, p.second)) {
                rep.cond1 = false;
                break;
            }
        }
    rep.cond2 = true;
    rep.cond3 = true;
    for (int x = 0; x < n && (rep.cond2 || rep.cond3); ++x)
        for (int y = 0; y < n; ++y)
            for (int w = 0; w < n; ++w) {
                // (r x id)(id x r): (x,y,w) -> (x, r(y,w)) -> (r(x, sigma_y(w)), tau_w(y))
                auto q = t.r(y, w);
                auto p = t.r(x, q.first);
                // cond2: xi(m(x,y), w) = (p.first, m(p.second, q.second))
                auto lhs2 = t.xi(m.at(x, y), w);
                if (lhs2 != std::pair<int, int>{p.first, m.at(p.second, q.second)})
                    rep.cond2 = false;
                // (id x r)(r x id): (x,y,w) -> (r(x,y), w) -> (sigma_x(y), r(tau_y(x), w))
                auto u = t.r(x, y);
                auto v = t.r(u.second, w);
                // cond3: zeta(x, m(y,w)) = (m(u.first, v.first), v.second)
                auto lhs3 = t.zeta(x, m.at(y, w));
                if (lhs3 != std::pair<int, int>{m.at(u.first, v.first), v.second})
                    rep.cond3 = false;
                if (!rep.cond2 && !rep.cond3) break;
            }
    rep.shape_ok = detail::braiding_shape_ok(t, shape);
    if (rep.all()) {
        Solution r(OpTable::build(n, [&](int a, int b) { return t.r(a, b).first; }),
                   OpTable::build(n, [&](int b, int a) { return t.r(a, b).second; }));
        rep.braid_consequence = verify_braid(r).braid;
    }
    return rep;
}

struct BraidingExample {
    OpTable m;
    BraidingTriple triple;
    BraidingShape shape;
};

/// The braiding of a skew brace: sigma_a(b) = -a + a o b, xi = zeta = r, m = o.
inline BraidingExample braiding_skew_brace(const SkewBrace& B) {
    auto r = PairMap::from_solution(brace_maps(B, BraceVariant::one));
    return BraidingExample{B.mul.op, BraidingTriple(r, r, r), BraidingShape::group};
}

/// The z-deformed braiding: sigma_a(b) = -a o z + a o b o z, with
/// xi the (z o z)-deformed solution and zeta = r.
inline BraidingExample braiding_skew_brace_deformed(const SkewBrace& B, int z) {
    auto params_for = [&](int zz) { return ZParams{B.zero(), zz, zz}; };
    auto r = PairMap::from_solution(brace_maps(B, BraceVariant::one, params_for(z)));
    auto xi = PairMap::from_solution(
        brace_maps(B, BraceVariant::one, params_for(B.circ(z, z))));
    return BraidingExample{B.mul.op, BraidingTriple(r, xi, r), BraidingShape::group};
}

/// The S-type braiding of a group: r(a,b) = (b, -b + a + b), xi = zeta = r.
inline BraidingExample braiding_group_conjugation(const Group& g) {
    const int n = g.n();
    auto r = PairMap::build(n, n, [&](int a, int b) {
        return std::pair<int, int>{b, g.add(g.add(g.neg(b), a), b)};
    });
    return BraidingExample{g.op, BraidingTriple(r, r, r), BraidingShape::S_i};
}

/// The S-deformed braiding of the pre-Lie magma (X, .): m = a.b = f(a) + b,
/// tau_b(a) = b |>s a, g from the heap decomposition of f, and
/// g^_b(a) = tau_b(a . e) with e = f^-1(0).
inline BraidingExample braiding_heap_bullet(const Group& g, const EndoMap& f) {
    if (!f.is_bijective() || !is_heap_endomorphism(f, g))
        throw PreconditionFailed("braiding_heap_bullet: f must be a bijective heap endomorphism");
    const int n = g.n();
    auto finv = f.inverse();
    const int e = finv(g.zero());
    const int k = f(g.zero());
    auto m = OpTable::build(n, [&](int a, int b) { return g.add(f(a), b); });
    auto tau = [&](int b, int a) {  // b |>s a = -f(b) + f(a) + b
        return g.add(g.add(g.neg(f(b)), f(a)), b);
    };
    auto r = PairMap::build(
        n, n, [&](int a, int b) { return std::pair<int, int>{b, tau(b, a)}; });
    // g_w(u) = tau_w(x) . tau_w(y) for any x . y = u; closed form via f heap:
    // g_w(u) = f(0) - f^2(w) + f(u) + w
    auto xi = PairMap::build(n, n, [&](int u, int w) {
        int v = g.add(g.add(g.add(k, g.neg(f(f(w)))), f(u)), w);
        return std::pair<int, int>{w, v};
    });
    auto zeta = PairMap::build(n, n, [&](int u, int w) {
        return std::pair<int, int>{w, tau(w, m.at(u, e))};
    });
    return BraidingExample{m, BraidingTriple(r, xi, zeta), BraidingShape::S_i};
}

}  // namespace ybx
