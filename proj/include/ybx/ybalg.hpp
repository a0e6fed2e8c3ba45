#pragma once

#include <optional>

#include "ybx/shelf.hpp"
#include "ybx/solution.hpp"
#include "ybx/types.hpp"

/// Yang-Baxter (braided) algebras: operations invariant under a solution,
/// m(x,y) = m(r(x,y)).
namespace ybx {

struct YBAlgebraCheck {
    bool holds = false;
    std::optional<Witness> witness;  // failing pair in (a, b); c unused
};

inline YBAlgebraCheck is_yb_algebra(const OpTable& m, const Solution& r) {
    if (m.n != r.n) throw CarrierMismatch("is_yb_algebra: carrier mismatch");
    for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b) {
            auto p = r.apply(a, b);
            if (m.at(a, b) != m.at(p.first, p.second))
                return {false, Witness{a, b, -1}};
        }
    return {true, std::nullopt};
}

/// The generic Yang-Baxter algebra of a left non-degenerate solution:
/// a . b = sigma_a(b) |> (a |> x) over the associated shelf, for a fixed x.
inline OpTable bullet_from_solution(const Solution& s, int x) {
    if (!is_left_nondegenerate(s))
        throw NotLeftNonDegenerate("bullet_from_solution: sigma maps not all bijective");
    auto shelf = associated_shelf(s);
    return OpTable::build(s.n, [&](int a, int b) {
        return shelf.at(s.sigma.at(a, b), shelf.at(a, x));
    });
}

/// Affine Yang-Baxter operations:
///   t: a . b = -f^2(a) + f(a) - f(b) + b   (f a heap endomorphism)
///   r: a . b = b + f(a)                     (f metahom or heap endomorphism)
///   s: a . b = f(a) + b                     (f metahom of (X,+op) or heap endo)
/// with an optional shift a -> h + a . b + k.
inline OpTable bullet_affine(const Group& g, const EndoMap& f, AffineVariant v,
                             std::optional<std::pair<int, int>> shift = std::nullopt) {
    if (f.n != g.n()) throw CarrierMismatch("bullet_affine: carrier mismatch");
    bool ok = false;
    switch (v) {
        case AffineVariant::t:
            ok = is_heap_endomorphism(f, g);
            break;
        case AffineVariant::r:
            ok = (f.is_bijective() && is_metahomomorphism(f, g)) ||
                 is_heap_endomorphism(f, g);
            break;
        case AffineVariant::s:
            ok = (f.is_bijective() && is_metahomomorphism(f, g.opposite())) ||
                 is_heap_endomorphism(f, g);
            break;
    }
    if (!ok) throw PreconditionFailed("bullet_affine: f fails the variant's hypothesis");
    auto base = [&](int a, int b) {
        switch (v) {
            case AffineVariant::t: {
                int t = g.add(g.neg(f(f(a))), f(a));
                return g.add(g.add(t, g.neg(f(b))), b);
            }
            case AffineVariant::r:
                return g.add(b, f(a));
            default:
                return g.add(f(a), b);
        }
    };
    if (!shift) return OpTable::build(g.n(), base);
    auto [h, k] = *shift;
    return OpTable::build(g.n(),
                          [&](int a, int b) { return g.add(g.add(h, base(a, b)), k); });
}

}  // namespace ybx
