#pragma once

#include <optional>
#include <string>

#include "ybx/finset.hpp"
#include "ybx/solution.hpp"
#include "ybx/types.hpp"

/// Skew braces, their sigma/tau solution families (plain and z-deformed),
/// the z-deformed quandles, and the heap-endomorphism solution builders.
namespace ybx {

struct SkewBraceFlags {
    bool group_add = false;
    bool group_mul = false;
    bool left_skew = false;  // a o (b + c) = a o b - a + a o c
    bool two_sided = false;  // additionally (b + c) o a = b o a - a + c o a
    bool brace = false;      // left_skew with abelian +
    std::optional<Witness> witness;
};

inline SkewBraceFlags verify_skew_brace(const OpTable& add, const OpTable& mul) {
    SkewBraceFlags flags;
    if (add.n != mul.n) throw CarrierMismatch("verify_skew_brace: carrier mismatch");
    auto ga = group_info(add);
    auto gm = group_info(mul);
    flags.group_add = ga.has_value();
    flags.group_mul = gm.has_value();
    if (!ga || !gm) return flags;
    const int n = add.n;
    auto neg = [&](int a) { return ga->inverse(a); };
    bool left = true;
    for (int a = 0; a < n && left; ++a)
        for (int b = 0; b < n && left; ++b)
            for (int c = 0; c < n; ++c) {
                int lhs = mul.at(a, add.at(b, c));
                int rhs = add.at(add.at(mul.at(a, b), neg(a)), mul.at(a, c));
                if (lhs != rhs) {
                    left = false;
                    flags.witness = Witness{a, b, c};
                    break;
                }
            }
    flags.left_skew = left;
    if (left) {
        bool right = true;
        for (int a = 0; a < n && right; ++a)
            for (int b = 0; b < n && right; ++b)
                for (int c = 0; c < n; ++c) {
                    int lhs = mul.at(add.at(b, c), a);
                    int rhs = add.at(add.at(mul.at(b, a), neg(a)), mul.at(c, a));
                    if (lhs != rhs) {
                        right = false;
                        break;
                    }
                }
        flags.two_sided = right;
        flags.brace = ga->abelian;
    }
    return flags;
}

/// A verified left skew brace (two groups linked by the distributivity law).
struct SkewBrace {
    Group add;
    Group mul;
    SkewBraceFlags flags;

    int n() const { return add.n(); }
    int plus(int a, int b) const { return add.add(a, b); }
    int minus(int a) const { return add.neg(a); }
    int circ(int a, int b) const { return mul.add(a, b); }
    int circ_inv(int a) const { return mul.neg(a); }
    /// 0 = 1 in every skew brace.
    int zero() const { return add.zero(); }
};

inline SkewBrace make_skew_brace(const OpTable& add, const OpTable& mul) {
    auto flags = verify_skew_brace(add, mul);
    if (!flags.left_skew) throw NotAGroup("make_skew_brace: not a left skew brace");
    return SkewBrace{make_group(add), make_group(mul), flags};
}

/// The trivial brace on Z/n: o = +.
inline SkewBrace trivial_brace(int n) {
    auto t = OpTable::build(n, [n](int a, int b) { return (a + b) % n; });
    return make_skew_brace(t, t);
}

/// Z/4 with a o b = a + b + 2ab; the multiplicative group is Klein's group.
inline SkewBrace z4_brace() {
    auto add = OpTable::build(4, [](int a, int b) { return (a + b) % 4; });
    auto mul = OpTable::build(4, [](int a, int b) { return (a + b + 2 * a * b) % 4; });
    return make_skew_brace(add, mul);
}

// --- z-deformations -----------------------------------------------------------

enum class BraceVariant { one, two };

/// Fixed parameters z1, z2, z of the deformed maps
///   variant 1: sigma_a(b) = z1 - a o z + a o b o z2
///   variant 2: sigma_a(b) = a o b o z1 - a o z + z2.
struct ZParams {
    int z1 = 0;
    int z2 = 0;
    int z = 0;

    static ZParams plain(const SkewBrace& B) {
        return ZParams{B.zero(), B.zero(), B.zero()};
    }
    /// Parameters of the inverse solution: z^ = z^-1, z^_{1,2} = z_{2,1} o z^-1.
    ZParams hat(const SkewBrace& B) const {
        int zi = B.circ_inv(z);
        return ZParams{B.circ(z2, zi), B.circ(z1, zi), zi};
    }
};

/// First element violating the constancy constraints
/// a o z2 o z1 - a o z = z2 o z1 - z and -a o z + a o z1 o z2 = -z + z1 o z2,
/// or nothing when both hold for all a.
inline std::optional<int> zparams_violation(const SkewBrace& B, const ZParams& p) {
    const int n = B.n();
    const int z21 = B.circ(p.z2, p.z1);
    const int z12 = B.circ(p.z1, p.z2);
    const int c1 = B.plus(z21, B.minus(p.z));
    const int c2 = B.plus(B.minus(p.z), z12);
    for (int a = 0; a < n; ++a) {
        if (B.plus(B.circ(a, z21), B.minus(B.circ(a, p.z))) != c1) return a;
        if (B.plus(B.minus(B.circ(a, p.z)), B.circ(a, z12)) != c2) return a;
    }
    return std::nullopt;
}

inline int zdeformed_sigma(const SkewBrace& B, BraceVariant v, const ZParams& p, int a,
                           int b) {
    if (v == BraceVariant::one)
        return B.plus(B.plus(p.z1, B.minus(B.circ(a, p.z))), B.circ(B.circ(a, b), p.z2));
    return B.plus(B.plus(B.circ(B.circ(a, b), p.z1), B.minus(B.circ(a, p.z))), p.z2);
}

/// Solution from a skew brace: variant 1 sigma_a(b) = -a + a o b, variant 2
/// sigma_a(b) = a o b - a, optionally z-deformed; in all cases
/// tau_b(a) = sigma_a(b)^-1 o a o b. Deformed parameters must satisfy the
/// constancy constraints.
inline Solution brace_maps(const SkewBrace& B, BraceVariant v,
                           std::optional<ZParams> z = std::nullopt) {
    const int n = B.n();
    ZParams p = z.value_or(ZParams::plain(B));
    if (z) {
        if (auto bad = zparams_violation(B, p))
            throw InvalidZParams("brace_maps: constancy constraint fails at a = " +
                                 std::to_string(*bad));
    }
    auto sigma =
        OpTable::build(n, [&](int a, int b) { return zdeformed_sigma(B, v, p, a, b); });
    auto tau = OpTable::build(n, [&](int b, int a) {
        return B.circ(B.circ(B.circ_inv(sigma.at(a, b)), a), b);
    });
    return Solution(sigma, tau);
}

/// Quandle attached to the z-deformed maps:
///   variant 1: b |> a = z1 - b o z + a o z - z1 + b
///   variant 2: b |> a = b - z2 + a o z - b o z + z2.
/// Holds for arbitrary parameters (the formula only needs bijective sigma),
/// so the constancy constraints are not required here.
inline OpTable zdeformed_quandle(const SkewBrace& B, BraceVariant v, const ZParams& p) {
    const int n = B.n();
    if (v == BraceVariant::one)
        return OpTable::build(n, [&](int x, int y) {
            // x |> y with b = x, a = y
            int t = B.plus(p.z1, B.minus(B.circ(x, p.z)));
            t = B.plus(t, B.circ(y, p.z));
            t = B.plus(t, B.minus(p.z1));
            return B.plus(t, x);
        });
    return OpTable::build(n, [&](int x, int y) {
        int t = B.plus(x, B.minus(p.z2));
        t = B.plus(t, B.circ(y, p.z));
        t = B.plus(t, B.minus(B.circ(x, p.z)));
        return B.plus(t, p.z2);
    });
}

// --- heap-endomorphism solutions (Prop. rr1 family) ----------------------------

enum class RRVariant { i, ii };

struct RRReport {
    bool braid = false;
    bool inverse_ok = false;      // r r_inv = id on X x X
    bool shelf_formula = false;   // b |> a = sigma_b tau_{sigma^-1_a(b)}(a)
    bool shelf_compat = false;    // sigma_a(b) |> sigma_a(c) = sigma_a(b |> c)
    bool comp_sigma = false;      // sigma_a sigma_b = sigma_{a o b}
    bool comp_tau = false;        // tau_c tau_b = tau^{f^2}_{b o c}
    bool bullet_compat = false;   // sigma_a(b) . sigma_a(c) = sigma^{f^2}_a(b . c)
    bool all() const {
        return braid && inverse_ok && shelf_formula && shelf_compat && comp_sigma &&
               comp_tau && bullet_compat;
    }
};

struct RRSolution {
    Solution r;
    Solution r_inv;
    RRReport report;
};

/// Solutions sigma^f_a(b) = -f(a) + a o b (variant i) or a o b - f(a)
/// (variant ii) for a bijective heap endomorphism f with
///   (i)  f(a o b) = a o f(b) - a + f(a)
///   (ii) f(a o b) = f(a) - a + a o f(b),
/// together with the inverse solution sigma^_a(b) = f^-1(a o b - a) /
/// f^-1(-a + a o b) and the verified composition laws.
inline RRSolution rr1_solution(const SkewBrace& B, const EndoMap& f, RRVariant v) {
    const int n = B.n();
    if (f.n != n) throw CarrierMismatch("rr1_solution: carrier mismatch");
    if (!f.is_bijective()) throw PreconditionFailed("rr1_solution: f not bijective");
    if (!is_heap_endomorphism(f, B.add))
        throw PreconditionFailed("rr1_solution: f is not a heap endomorphism of (X,+)");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int lhs = f(B.circ(a, b));
            int rhs = v == RRVariant::i
                          ? B.plus(B.plus(B.circ(a, f(b)), B.minus(a)), f(a))
                          : B.plus(B.plus(f(a), B.minus(a)), B.circ(a, f(b)));
            if (lhs != rhs)
                throw PreconditionFailed(
                    "rr1_solution: compatibility condition (3) fails at (a,b) = (" +
                    std::to_string(a) + "," + std::to_string(b) + ")");
        }
    if (f(B.zero()) != B.zero())
        throw PreconditionFailed("rr1_solution: f(1) != 0");  // implied by (3); rechecked

    auto finv = f.inverse();
    auto sigma_of = [&](const EndoMap& g, int a, int b) {
        return v == RRVariant::i ? B.plus(B.minus(g(a)), B.circ(a, b))
                                 : B.plus(B.circ(a, b), B.minus(g(a)));
    };
    auto sigma = OpTable::build(n, [&](int a, int b) { return sigma_of(f, a, b); });
    auto tau = OpTable::build(n, [&](int b, int a) {
        return B.circ(B.circ(B.circ_inv(sigma.at(a, b)), a), b);
    });
    Solution r(sigma, tau);

    auto sigma_hat = OpTable::build(n, [&](int a, int b) {
        int t = v == RRVariant::i ? B.plus(B.circ(a, b), B.minus(a))
                                  : B.plus(B.minus(a), B.circ(a, b));
        return finv(t);
    });
    auto tau_hat = OpTable::build(n, [&](int b, int a) {
        return B.circ(B.circ(B.circ_inv(sigma_hat.at(a, b)), a), b);
    });
    Solution r_inv(sigma_hat, tau_hat);

    RRReport rep;
    rep.braid = verify_braid(r).braid;
    rep.inverse_ok = true;
    for (int a = 0; a < n && rep.inverse_ok; ++a)
        for (int b = 0; b < n; ++b) {
            auto p = r.apply(a, b);
            if (r_inv.apply(p.first, p.second) != std::pair<int, int>{a, b}) {
                rep.inverse_ok = false;
                break;
            }
        }

    // the matching quandle and Yang-Baxter operation for the variant
    auto shelf = OpTable::build(n, [&](int x, int y) {
        return v == RRVariant::i ? B.plus(B.plus(B.minus(f(x)), f(y)), x)
                                 : B.plus(B.plus(x, f(y)), B.minus(f(x)));
    });
    auto bullet = [&](int a, int b) {
        return v == RRVariant::i ? B.plus(f(a), b) : B.plus(b, f(a));
    };
    auto assoc = associated_shelf(r);
    rep.shelf_formula = assoc == shelf;
    rep.shelf_compat = true;
    for (int a = 0; a < n && rep.shelf_compat; ++a)
        for (int b = 0; b < n && rep.shelf_compat; ++b)
            for (int c = 0; c < n; ++c)
                if (shelf.at(sigma.at(a, b), sigma.at(a, c)) !=
                    sigma.at(a, shelf.at(b, c))) {
                    rep.shelf_compat = false;
                    break;
                }
    auto f2 = f.compose(f);
    rep.comp_sigma = true;
    rep.comp_tau = true;
    rep.bullet_compat = true;
    auto tau_f2 = OpTable::build(n, [&](int b, int a) {
        int s = sigma_of(f2, a, b);
        return B.circ(B.circ(B.circ_inv(s), a), b);
    });
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (sigma.at(a, sigma.at(b, c)) != sigma.at(B.circ(a, b), c))
                    rep.comp_sigma = false;
                if (tau.at(c, tau.at(b, a)) != tau_f2.at(B.circ(b, c), a))
                    rep.comp_tau = false;
                if (bullet(sigma.at(a, b), sigma.at(a, c)) !=
                    sigma_of(f2, a, bullet(b, c)))
                    rep.bullet_compat = false;
            }
    return RRSolution{r, r_inv, rep};
}

}  // namespace ybx
