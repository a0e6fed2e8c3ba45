#pragma once

#include <algorithm>
#include <optional>

#include "ybx/finset.hpp"
#include "ybx/types.hpp"

/// Shelf / spindle / rack / quandle taxonomy and the generalized affine
/// constructions built from heap endomorphisms and metahomomorphisms.
namespace ybx {

struct ShelfReport {
    bool shelf = false;
    bool spindle = false;
    bool rack = false;
    bool quandle = false;
    std::optional<Witness> witness;  // first self-distributivity failure
};

/// Classifies a binary operation: shelf means left self-distributive,
/// a |> (b |> c) = (a |> b) |> (a |> c); spindle additionally a |> a = a;
/// rack means every left translation is bijective; quandle = spindle and rack.
inline ShelfReport classify_shelf(const OpTable& op) {
    const int n = op.n;
    ShelfReport rep;
    rep.shelf = true;
    for (int a = 0; a < n && rep.shelf; ++a)
        for (int b = 0; b < n && rep.shelf; ++b)
            for (int c = 0; c < n; ++c)
                if (op.at(a, op.at(b, c)) != op.at(op.at(a, b), op.at(a, c))) {
                    rep.shelf = false;
                    rep.witness = Witness{a, b, c};
                    break;
                }
    bool idem = true;
    for (int a = 0; a < n; ++a)
        if (op.at(a, a) != a) {
            idem = false;
            break;
        }
    bool left_bij = true;
    for (int a = 0; a < n; ++a)
        if (!op.row(a).is_bijective()) {
            left_bij = false;
            break;
        }
    rep.spindle = rep.shelf && idem;
    rep.rack = rep.shelf && left_bij;
    rep.quandle = rep.spindle && rep.rack;
    return rep;
}

inline bool is_shelf_homomorphism(const EndoMap& f, const OpTable& src, const OpTable& dst) {
    if (f.n != src.n) throw CarrierMismatch("is_shelf_homomorphism: carrier mismatch");
    for (int a = 0; a < src.n; ++a)
        for (int b = 0; b < src.n; ++b)
            if (f(src.at(a, b)) != dst.at(f(a), f(b))) return false;
    return true;
}

inline bool is_shelf_automorphism(const EndoMap& f, const OpTable& op) {
    return f.is_bijective() && is_shelf_homomorphism(f, op, op);
}

/// Automorphism group of a shelf by brute force (n! candidates).
inline std::vector<EndoMap> shelf_automorphisms(const OpTable& op) {
    const int n = op.n;
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    std::vector<EndoMap> out;
    do {
        EndoMap f(n, p);
        if (is_shelf_homomorphism(f, op, op)) out.push_back(f);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// First shelf isomorphism src -> dst in lexicographic order, if any.
inline std::optional<EndoMap> shelf_isomorphism(const OpTable& src, const OpTable& dst) {
    if (src.n != dst.n) return std::nullopt;
    const int n = src.n;
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    do {
        EndoMap f(n, p);
        if (is_shelf_homomorphism(f, src, dst)) return f;
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

// --- generalized affine shelves ----------------------------------------------

enum class AffineVariant { t, r, s };

struct AffineShelfResult {
    OpTable table;
    /// The variant's hypothesis from the construction: the t-condition
    /// f(a - f(b) + b) = f(a) - f^2(b) + f(b), metahom for r, metahom of
    /// (X,+op) for s.
    bool condition = false;
    ShelfReport report;
};

/// t: a |> b = f(b) - f(a) + a;  r: a |> b = a + f(b) - f(a);
/// s: a |> b = -f(a) + f(b) + a.
inline AffineShelfResult affine_shelf(const Group& g, const EndoMap& f, AffineVariant v) {
    if (f.n != g.n()) throw CarrierMismatch("affine_shelf: carrier mismatch");
    const int n = g.n();
    OpTable table = [&] {
        switch (v) {
            case AffineVariant::t:
                return OpTable::build(
                    n, [&](int a, int b) { return g.add(g.add(f(b), g.neg(f(a))), a); });
            case AffineVariant::r:
                return OpTable::build(
                    n, [&](int a, int b) { return g.add(g.add(a, f(b)), g.neg(f(a))); });
            default:
                return OpTable::build(
                    n, [&](int a, int b) { return g.add(g.add(g.neg(f(a)), f(b)), a); });
        }
    }();
    bool cond = false;
    switch (v) {
        case AffineVariant::t: {
            cond = true;
            for (int a = 0; a < n && cond; ++a)
                for (int b = 0; b < n; ++b) {
                    int lhs = f(g.add(g.add(a, g.neg(f(b))), b));
                    int rhs = g.add(g.add(f(a), g.neg(f(f(b)))), f(b));
                    if (lhs != rhs) {
                        cond = false;
                        break;
                    }
                }
            break;
        }
        case AffineVariant::r:
            cond = is_metahomomorphism(f, g);
            break;
        case AffineVariant::s:
            cond = is_metahomomorphism(f, g.opposite());
            break;
    }
    return AffineShelfResult{table, cond, classify_shelf(table)};
}

}  // namespace ybx
