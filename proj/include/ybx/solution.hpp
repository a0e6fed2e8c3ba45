#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "ybx/shelf.hpp"
#include "ybx/types.hpp"

/// Solutions of the set-theoretic braid equation: verification through the
/// component conditions (bI)-(bIII), the associated shelf, Drinfel'd
/// (iso)morphisms, and the twist description of left non-degenerate solutions.
namespace ybx {

enum class BraidCondition { none, bI, bII, bIII };

inline const char* to_string(BraidCondition c) {
    switch (c) {
        case BraidCondition::bI: return "bI";
        case BraidCondition::bII: return "bII";
        case BraidCondition::bIII: return "bIII";
        default: return "none";
    }
}

struct BraidReport {
    bool braid = false;
    BraidCondition failed = BraidCondition::none;
    std::optional<Witness> witness;
};

/// Checks the three equivalent component conditions of the braid identity:
///   (bI)   sigma_a sigma_b = sigma_{sigma_a(b)} sigma_{tau_b(a)}
///   (bII)  sigma_{tau_{sigma_b(c)}(a)} tau_c(b) = tau_{sigma_{tau_b(a)}(c)} sigma_a(b)
///   (bIII) tau_c tau_b = tau_{tau_c(b)} tau_{sigma_b(c)}
/// Witness is the first failing triple in lexicographic order per condition.
inline BraidReport verify_braid(const Solution& s) {
    const int n = s.n;
    const OpTable& sig = s.sigma;
    const OpTable& tau = s.tau;
    BraidReport rep;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int u = sig.at(a, b), v = tau.at(b, a);
            for (int c = 0; c < n; ++c)
                if (sig.at(a, sig.at(b, c)) != sig.at(u, sig.at(v, c))) {
                    rep.failed = BraidCondition::bI;
                    rep.witness = Witness{a, b, c};
                    return rep;
                }
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (sig.at(tau.at(sig.at(b, c), a), tau.at(c, b)) !=
                    tau.at(sig.at(tau.at(b, a), c), sig.at(a, b))) {
                    rep.failed = BraidCondition::bII;
                    rep.witness = Witness{a, b, c};
                    return rep;
                }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (tau.at(c, tau.at(b, a)) !=
                    tau.at(tau.at(c, b), tau.at(sig.at(b, c), a))) {
                    rep.failed = BraidCondition::bIII;
                    rep.witness = Witness{a, b, c};
                    return rep;
                }
    rep.braid = true;
    return rep;
}

/// Direct check of (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) on X^3.
/// Independent of verify_braid; the two must always agree.
inline bool braid_identity_direct(const Solution& s) {
    const int n = s.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int x1 = a, y1 = b, z1 = c;
                auto p = s.apply(x1, y1);
                x1 = p.first;
                y1 = p.second;
                p = s.apply(y1, z1);
                y1 = p.first;
                z1 = p.second;
                p = s.apply(x1, y1);
                x1 = p.first;
                y1 = p.second;

                int x2 = a, y2 = b, z2 = c;
                p = s.apply(y2, z2);
                y2 = p.first;
                z2 = p.second;
                p = s.apply(x2, y2);
                x2 = p.first;
                y2 = p.second;
                p = s.apply(y2, z2);
                y2 = p.first;
                z2 = p.second;

                if (x1 != x2 || y1 != y2 || z1 != z2) return false;
            }
    return true;
}

struct SolutionReport {
    BraidReport braid;
    bool left_nd = false;
    bool right_nd = false;
    bool bijective = false;
    bool involutive = false;
    bool idempotent = false;
    bool square_free = false;
};

inline bool is_left_nondegenerate(const Solution& s) {
    for (int a = 0; a < s.n; ++a)
        if (!s.sigma.row(a).is_bijective()) return false;
    return true;
}

inline bool is_right_nondegenerate(const Solution& s) {
    for (int b = 0; b < s.n; ++b)
        if (!s.tau.row(b).is_bijective()) return false;
    return true;
}

inline SolutionReport classify_solution(const Solution& s) {
    const int n = s.n;
    SolutionReport rep;
    rep.braid = verify_braid(s);
    rep.left_nd = is_left_nondegenerate(s);
    rep.right_nd = is_right_nondegenerate(s);
    rep.bijective = PairMap::from_solution(s).is_bijective();
    rep.involutive = true;
    rep.idempotent = true;
    for (int a = 0; a < n && (rep.involutive || rep.idempotent); ++a)
        for (int b = 0; b < n; ++b) {
            auto p = s.apply(a, b);
            auto q = s.apply(p.first, p.second);
            if (q != std::pair<int, int>{a, b}) rep.involutive = false;
            if (q != p) rep.idempotent = false;
            if (!rep.involutive && !rep.idempotent) break;
        }
    rep.square_free = true;
    for (int a = 0; a < n; ++a)
        if (s.apply(a, a) != std::pair<int, int>{a, a}) {
            rep.square_free = false;
            break;
        }
    return rep;
}

/// Derived solution of a shelf: r(a,b) = (b, b |> a).
inline Solution derived_solution(const OpTable& shelf) {
    if (!classify_shelf(shelf).shelf) throw NotAShelf("derived_solution: not a shelf");
    const int n = shelf.n;
    auto sigma = OpTable::build(n, [](int, int b) { return b; });
    auto tau = OpTable::build(n, [&](int b, int a) { return shelf.at(b, a); });
    return Solution(sigma, tau);
}

/// Shelf associated to a left non-degenerate solution:
/// a |> b = sigma_a tau_{sigma^-1_b(a)} (b).
inline OpTable associated_shelf(const Solution& s) {
    if (!is_left_nondegenerate(s))
        throw NotLeftNonDegenerate("associated_shelf: sigma maps not all bijective");
    const int n = s.n;
    std::vector<EndoMap> siginv;
    siginv.reserve(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) siginv.push_back(s.sigma.row(a).inverse());
    return OpTable::build(n, [&](int a, int b) {
        int u = siginv[static_cast<size_t>(b)](a);
        return s.sigma.at(a, s.tau.at(u, b));
    });
}

struct ConjugatorResult {
    PairMap phi;       // (a,b) -> (a, sigma_a(b))
    PairMap phi_inv;
    bool certified = false;  // phi r = r' phi against the derived solution
};

inline bool is_d_homomorphism(const PairMap& phi, const Solution& r, const Solution& s) {
    if (phi.nx != r.n || phi.ny != s.n)
        throw CarrierMismatch("is_d_homomorphism: carrier mismatch");
    for (int a = 0; a < r.n; ++a)
        for (int b = 0; b < r.n; ++b) {
            auto rp = r.apply(a, b);
            auto lhs = phi(rp.first, rp.second);
            auto pp = phi(a, b);
            auto rhs = s.apply(pp.first, pp.second);
            if (lhs != rhs) return false;
        }
    return true;
}

/// The D-isomorphism phi(a,b) = (a, sigma_a(b)) conjugating a left
/// non-degenerate solution onto its derived solution.
inline ConjugatorResult derived_conjugator(const Solution& s) {
    if (!is_left_nondegenerate(s))
        throw NotLeftNonDegenerate("derived_conjugator: sigma maps not all bijective");
    const int n = s.n;
    auto phi = PairMap::build(n, n, [&](int a, int b) {
        return std::pair<int, int>{a, s.sigma.at(a, b)};
    });
    auto phi_inv = phi.inverse();
    auto derived = derived_solution(associated_shelf(s));
    return ConjugatorResult{phi, phi_inv, is_d_homomorphism(phi, s, derived)};
}

// --- twists -------------------------------------------------------------------

/// An assignment a -> phi_a of bijections over a base shelf. Twist status
/// (automorphism property plus the composition identity) is checked by
/// validate_twist, never assumed.
struct TwistAssignment {
    OpTable shelf;
    std::vector<EndoMap> phi;

    int n() const { return shelf.n; }
};

struct TwistReport {
    bool bijective = false;
    bool automorphisms = false;
    bool varphi = false;  // phi_a phi_b = phi_{phi_a(b)} phi_{phi^-1_{phi_a(b)} L_{phi_a(b)}(a)}
    std::optional<Witness> witness;

    bool is_twist() const { return bijective && automorphisms && varphi; }
};

inline TwistReport validate_twist(const TwistAssignment& t) {
    const int n = t.n();
    TwistReport rep;
    rep.bijective = true;
    for (const auto& p : t.phi)
        if (!p.is_bijective()) return rep;
    rep.automorphisms = true;
    for (const auto& p : t.phi)
        if (!is_shelf_homomorphism(p, t.shelf, t.shelf)) {
            rep.automorphisms = false;
            return rep;
        }
    std::vector<EndoMap> inv;
    inv.reserve(static_cast<size_t>(n));
    for (const auto& p : t.phi) inv.push_back(p.inverse());
    rep.varphi = true;
    for (int a = 0; a < n && rep.varphi; ++a)
        for (int b = 0; b < n; ++b) {
            const int u = t.phi[static_cast<size_t>(a)](b);
            const int v = inv[static_cast<size_t>(u)](t.shelf.at(u, a));
            bool eq = true;
            for (int c = 0; c < n; ++c)
                if (t.phi[static_cast<size_t>(a)](t.phi[static_cast<size_t>(b)](c)) !=
                    t.phi[static_cast<size_t>(u)](t.phi[static_cast<size_t>(v)](c))) {
                    eq = false;
                    break;
                }
            if (!eq) {
                rep.varphi = false;
                rep.witness = Witness{a, b, -1};
                break;
            }
        }
    return rep;
}

/// r_phi(a,b) = (phi_a(b), phi^-1_{phi_a(b)}(phi_a(b) |> a)). A solution
/// precisely when phi is a twist of the base shelf.
inline Solution build_from_twist(const OpTable& shelf, const std::vector<EndoMap>& phi) {
    if (!classify_shelf(shelf).shelf) throw NotAShelf("build_from_twist: not a shelf");
    const int n = shelf.n;
    if (static_cast<int>(phi.size()) != n)
        throw CarrierMismatch("build_from_twist: twist family size mismatch");
    std::vector<EndoMap> inv;
    inv.reserve(static_cast<size_t>(n));
    for (const auto& p : phi) {
        if (!p.is_bijective())
            throw PreconditionFailed("build_from_twist: phi_a not bijective");
        inv.push_back(p.inverse());
    }
    auto sigma =
        OpTable::build(n, [&](int a, int b) { return phi[static_cast<size_t>(a)](b); });
    auto tau = OpTable::build(n, [&](int b, int a) {
        const int u = phi[static_cast<size_t>(a)](b);
        return inv[static_cast<size_t>(u)](shelf.at(u, a));
    });
    return Solution(sigma, tau);
}

/// Reads the twist a -> sigma_a off a left non-degenerate braid solution over
/// its associated shelf, certifying the twist properties.
inline TwistAssignment extract_twist(const Solution& s) {
    if (!is_left_nondegenerate(s))
        throw NotLeftNonDegenerate("extract_twist: sigma maps not all bijective");
    if (!verify_braid(s).braid) throw NotASolution("extract_twist: braid identity fails");
    TwistAssignment t;
    t.shelf = associated_shelf(s);
    t.phi.reserve(static_cast<size_t>(s.n));
    for (int a = 0; a < s.n; ++a) t.phi.push_back(s.sigma.row(a));
    auto rep = validate_twist(t);
    if (!rep.is_twist())
        throw NotASolution("extract_twist: sigma family is not a twist of the associated shelf");
    return t;
}

/// D-homomorphism induced by a shelf homomorphism f between twisted shelves:
/// Phi(a,b) = (f(a), psi^-1_{f(a)} f phi_a(b)).
struct InducedDHom {
    PairMap map;
    bool certified = false;  // Phi r_phi = r_psi Phi
};

inline InducedDHom induced_d_hom(const EndoMap& f, const TwistAssignment& phi,
                                 const TwistAssignment& psi) {
    if (!is_shelf_homomorphism(f, phi.shelf, psi.shelf))
        throw NotShelfHom("induced_d_hom: f is not a shelf homomorphism");
    const int nx = phi.n();
    std::vector<EndoMap> psiinv;
    psiinv.reserve(psi.phi.size());
    for (const auto& p : psi.phi) psiinv.push_back(p.inverse());
    auto map = PairMap::build(nx, psi.n(), [&](int a, int b) {
        int fa = f(a);
        int second = psiinv[static_cast<size_t>(fa)](f(phi.phi[static_cast<size_t>(a)](b)));
        return std::pair<int, int>{fa, second};
    });
    auto r_phi = build_from_twist(phi.shelf, phi.phi);
    auto r_psi = build_from_twist(psi.shelf, psi.phi);
    return InducedDHom{map, is_d_homomorphism(map, r_phi, r_psi)};
}

// --- comparison ---------------------------------------------------------------

struct SolutionComparison {
    std::optional<EndoMap> equivalent;  // first f with (f x f) r = s (f x f)
    bool d_isomorphic_via_derived = false;
};

/// Equivalence by brute force over all n! bijections (refused for n > 8), and
/// the derived-shelf D-isomorphism certificate: both solutions left
/// non-degenerate with isomorphic associated shelves.
inline SolutionComparison compare_solutions(const Solution& r, const Solution& s) {
    if (r.n != s.n) throw CarrierMismatch("compare_solutions: carrier mismatch");
    const int n = r.n;
    if (n > 8)
        throw PreconditionFailed("compare_solutions: brute-force search capped at n <= 8");
    SolutionComparison out;
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    do {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n; ++b) {
                auto rp = r.apply(a, b);
                auto sp = s.apply(p[static_cast<size_t>(a)], p[static_cast<size_t>(b)]);
                if (std::pair<int, int>{p[static_cast<size_t>(rp.first)],
                                        p[static_cast<size_t>(rp.second)]} != sp) {
                    ok = false;
                    break;
                }
            }
        if (ok) {
            out.equivalent = EndoMap(n, p);
            break;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    if (is_left_nondegenerate(r) && is_left_nondegenerate(s)) {
        auto iso = shelf_isomorphism(associated_shelf(r), associated_shelf(s));
        out.d_isomorphic_via_derived = iso.has_value();
    }
    return out;
}

// --- single-operation predicates ---------------------------------------------

struct StructurePredicates {
    bool cycle_set = false;     // (a.b).(a.c) = (b.a).(b.c), left translations bijective
    bool twisted_ward = false;  // (a*b)*(a*c) = (b*b)*(b*c)
};

inline StructurePredicates structure_predicates(const OpTable& op) {
    const int n = op.n;
    StructurePredicates out;
    bool cyc = true, tw = true;
    for (int a = 0; a < n && (cyc || tw); ++a)
        for (int b = 0; b < n && (cyc || tw); ++b)
            for (int c = 0; c < n; ++c) {
                if (cyc && op.at(op.at(a, b), op.at(a, c)) !=
                               op.at(op.at(b, a), op.at(b, c)))
                    cyc = false;
                if (tw && op.at(op.at(a, b), op.at(a, c)) !=
                              op.at(op.at(b, b), op.at(b, c)))
                    tw = false;
                if (!cyc && !tw) break;
            }
    if (cyc)
        for (int a = 0; a < n; ++a)
            if (!op.row(a).is_bijective()) {
                cyc = false;
                break;
            }
    out.cycle_set = cyc;
    out.twisted_ward = tw;
    return out;
}

/// Table a . b = sigma^-1_a(b); feeds the cycle-set / twisted-Ward predicates.
inline OpTable sigma_inverse_table(const Solution& s) {
    if (!is_left_nondegenerate(s))
        throw NotLeftNonDegenerate("sigma_inverse_table: sigma maps not all bijective");
    std::vector<EndoMap> rows;
    rows.reserve(static_cast<size_t>(s.n));
    for (int a = 0; a < s.n; ++a) rows.push_back(s.sigma.row(a).inverse());
    return OpTable::from_rows(rows);
}

/// Existence form of the non-degeneracy criterion for a twisted shelf:
/// for all b,c there exists a with phi_{phi_a(b)}(c) = L_{phi_a(b)}(a).
inline bool twist_nondegeneracy_criterion(const TwistAssignment& t) {
    const int n = t.n();
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            bool found = false;
            for (int a = 0; a < n; ++a) {
                int u = t.phi[static_cast<size_t>(a)](b);
                if (t.phi[static_cast<size_t>(u)](c) == t.shelf.at(u, a)) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    return true;
}

}  // namespace ybx
