#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "ybx/shelf.hpp"
#include "ybx/solution.hpp"
#include "ybx/types.hpp"

/// Exhaustive enumeration at desk scale: shelves for n <= 3 by full table
/// scan, racks at n = 4 through the left-translation encoding, and the
/// complete left non-degenerate solution census at n <= 3. All candidate
/// spaces partition across workers; results are canonically sorted so the
/// output is independent of the worker count.
namespace ybx {

inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace detail {

template <typename Body>
inline void parallel_chunks(std::uint64_t count, int workers, Body&& body) {
    workers = std::max(1, std::min<int>(workers, 64));
    if (workers == 1 || count < 2) {
        body(0, 0, count);
        return;
    }
    std::vector<std::thread> pool;
    std::uint64_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t lo = std::min<std::uint64_t>(count, w * chunk);
        std::uint64_t hi = std::min<std::uint64_t>(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([=, &body] { body(w, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace detail

/// All shelf tables on {0,...,n-1} for n <= 3, lexicographically sorted;
/// racks_only restricts the output to racks.
inline std::vector<OpTable> enumerate_shelves(int n, bool racks_only = false,
                                              int workers = 0) {
    if (n < 1 || n > 3)
        throw PreconditionFailed("enumerate_shelves: full scan supported for n <= 3");
    const int cells = n * n;
    std::uint64_t total = 1;
    for (int i = 0; i < cells; ++i) total *= static_cast<std::uint64_t>(n);
    int W = resolve_workers(workers);
    std::vector<std::vector<OpTable>> found(64);
    detail::parallel_chunks(total, W, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        std::vector<int> t(static_cast<size_t>(cells));
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::uint64_t v = idx;
            for (int i = cells - 1; i >= 0; --i) {
                t[static_cast<size_t>(i)] = static_cast<int>(v % n);
                v /= static_cast<std::uint64_t>(n);
            }
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b)
                    for (int c = 0; c < n; ++c)
                        if (t[static_cast<size_t>(a * n + t[static_cast<size_t>(b * n + c)])] !=
                            t[static_cast<size_t>(
                                t[static_cast<size_t>(a * n + b)] * n +
                                t[static_cast<size_t>(a * n + c)])]) {
                            ok = false;
                            break;
                        }
            if (!ok) continue;
            if (racks_only) {
                bool bij = true;
                for (int a = 0; a < n && bij; ++a) {
                    int mask = 0;
                    for (int b = 0; b < n; ++b) mask |= 1 << t[static_cast<size_t>(a * n + b)];
                    bij = mask == (1 << n) - 1;
                }
                if (!bij) continue;
            }
            found[static_cast<size_t>(w)].emplace_back(n, t);
        }
    });
    std::vector<OpTable> out;
    for (auto& v : found) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end(),
              [](const OpTable& a, const OpTable& b) { return a.table < b.table; });
    return out;
}

/// Racks on four elements through tuples of left translations
/// L_a in Sym(4) filtered by L_a L_b = L_{L_a(b)} L_a; 24^4 candidates.
inline std::vector<OpTable> enumerate_racks4(int workers = 0) {
    const int n = 4;
    std::vector<std::array<int, 4>> perms;
    {
        std::array<int, 4> p{0, 1, 2, 3};
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    const std::uint64_t np = perms.size();
    const std::uint64_t total = np * np * np * np;
    int W = resolve_workers(workers);
    std::vector<std::vector<OpTable>> found(64);
    detail::parallel_chunks(total, W, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::uint64_t v = idx;
            int li[4];
            for (int i = 3; i >= 0; --i) {
                li[i] = static_cast<int>(v % np);
                v /= np;
            }
            const std::array<int, 4>* L[4] = {&perms[static_cast<size_t>(li[0])],
                                              &perms[static_cast<size_t>(li[1])],
                                              &perms[static_cast<size_t>(li[2])],
                                              &perms[static_cast<size_t>(li[3])]};
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b) {
                    const auto& lab = *L[(*L[a])[static_cast<size_t>(b)]];
                    for (int c = 0; c < n; ++c)
                        if ((*L[a])[static_cast<size_t>((*L[b])[static_cast<size_t>(c)])] !=
                            lab[static_cast<size_t>((*L[a])[static_cast<size_t>(c)])]) {
                            ok = false;
                            break;
                        }
                }
            if (!ok) continue;
            std::vector<int> t(16);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    t[static_cast<size_t>(a * n + b)] = (*L[a])[static_cast<size_t>(b)];
            found[static_cast<size_t>(w)].emplace_back(n, t);
        }
    });
    std::vector<OpTable> out;
    for (auto& v : found) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end(),
              [](const OpTable& a, const OpTable& b) { return a.table < b.table; });
    return out;
}

struct CensusResult {
    std::uint64_t candidates = 0;
    std::vector<Solution> solutions;          // all braid-passing, canonically sorted
    std::uint64_t roundtrip_failures = 0;     // build_from_twist o extract_twist != id
    std::uint64_t corollary_failures = 0;     // bijective <=> rack violated
    std::uint64_t crosscheck_failures = 0;    // conditions vs direct braid disagree
};

/// Scans every sigma in Sym_n^n and tau in Maps_n^n for n <= 3, keeping the
/// braid-passing candidates. On each solution the twist round trip and the
/// rack-bijectivity corollary are rechecked. Work partitions by
/// sigma-assignment; aggregate counts are order-independent.
inline CensusResult census_left_nd_solutions(int n, int workers = 0) {
    if (n < 1 || n > 3)
        throw PreconditionFailed("census_left_nd_solutions: supported for n <= 3");
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<std::vector<int>> maps;
    {
        std::uint64_t total = 1;
        for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(n);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<int> m(static_cast<size_t>(n));
            std::uint64_t v = idx;
            for (int i = 0; i < n; ++i) {
                m[static_cast<size_t>(i)] = static_cast<int>(v % n);
                v /= static_cast<std::uint64_t>(n);
            }
            maps.push_back(m);
        }
    }
    const std::uint64_t nsig = perms.size();
    std::uint64_t sig_total = 1, tau_total = 1;
    for (int i = 0; i < n; ++i) {
        sig_total *= nsig;
        tau_total *= maps.size();
    }

    int W = resolve_workers(workers);
    std::vector<CensusResult> local(64);
    detail::parallel_chunks(sig_total, W, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        CensusResult& acc = local[static_cast<size_t>(w)];
        std::vector<const int*> sig(static_cast<size_t>(n));
        std::vector<const int*> tau(static_cast<size_t>(n));
        for (std::uint64_t si = lo; si < hi; ++si) {
            std::uint64_t v = si;
            for (int i = n - 1; i >= 0; --i) {
                sig[static_cast<size_t>(i)] = perms[v % nsig].data();
                v /= nsig;
            }
            for (std::uint64_t ti = 0; ti < tau_total; ++ti) {
                std::uint64_t u = ti;
                for (int i = n - 1; i >= 0; --i) {
                    tau[static_cast<size_t>(i)] = maps[u % maps.size()].data();
                    u /= maps.size();
                }
                ++acc.candidates;
                bool ok = true;
                for (int a = 0; a < n && ok; ++a)
                    for (int b = 0; b < n && ok; ++b) {
                        const int sab = sig[static_cast<size_t>(a)][b];
                        const int tba = tau[static_cast<size_t>(b)][a];
                        for (int c = 0; c < n; ++c) {
                            if (sig[static_cast<size_t>(a)][sig[static_cast<size_t>(b)][c]] !=
                                sig[static_cast<size_t>(sab)]
                                   [sig[static_cast<size_t>(tba)][c]]) {
                                ok = false;
                                break;
                            }
                            if (tau[static_cast<size_t>(c)][tau[static_cast<size_t>(b)][a]] !=
                                tau[static_cast<size_t>(tau[static_cast<size_t>(c)][b])]
                                   [tau[static_cast<size_t>(sig[static_cast<size_t>(b)][c])]
                                       [a]]) {
                                ok = false;
                                break;
                            }
                            if (sig[static_cast<size_t>(
                                    tau[static_cast<size_t>(sig[static_cast<size_t>(b)][c])]
                                       [a])][tau[static_cast<size_t>(c)][b]] !=
                                tau[static_cast<size_t>(
                                    sig[static_cast<size_t>(tba)][c])][sab]) {
                                ok = false;
                                break;
                            }
                        }
                    }
                if (!ok) continue;
                std::vector<int> st(static_cast<size_t>(n) * n), tt(static_cast<size_t>(n) * n);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        st[static_cast<size_t>(a * n + b)] = sig[static_cast<size_t>(a)][b];
                        tt[static_cast<size_t>(a * n + b)] = tau[static_cast<size_t>(a)][b];
                    }
                Solution s(OpTable(n, st), OpTable(n, tt));
                if (!braid_identity_direct(s) || !verify_braid(s).braid)
                    ++acc.crosscheck_failures;
                try {
                    auto t = extract_twist(s);
                    if (!(build_from_twist(t.shelf, t.phi) == s)) ++acc.roundtrip_failures;
                    bool bij = PairMap::from_solution(s).is_bijective();
                    if (bij != classify_shelf(t.shelf).rack) ++acc.corollary_failures;
                } catch (const Error&) {
                    ++acc.roundtrip_failures;
                }
                acc.solutions.push_back(std::move(s));
            }
        }
    });
    CensusResult out;
    for (auto& l : local) {
        out.candidates += l.candidates;
        out.roundtrip_failures += l.roundtrip_failures;
        out.corollary_failures += l.corollary_failures;
        out.crosscheck_failures += l.crosscheck_failures;
        out.solutions.insert(out.solutions.end(), l.solutions.begin(), l.solutions.end());
    }
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const Solution& a, const Solution& b) {
                  if (a.sigma.table != b.sigma.table) return a.sigma.table < b.sigma.table;
                  return a.tau.table < b.tau.table;
              });
    return out;
}

}  // namespace ybx
