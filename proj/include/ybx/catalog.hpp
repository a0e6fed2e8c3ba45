#pragma once

#include <string>
#include <vector>

#include "ybx/brace.hpp"
#include "ybx/finset.hpp"
#include "ybx/shelf.hpp"
#include "ybx/solution.hpp"
#include "ybx/types.hpp"

/// Built-in instances used throughout the tests and the CLI.
namespace ybx::catalog {

/// Z/6 with a |> b = 2a + 2b: a shelf that is not a spindle.
inline OpTable z6_shelf() {
    return OpTable::build(6, [](int a, int b) { return (2 * a + 2 * b) % 6; });
}

/// Z/4 with a |> b = 2a + b: a rack that is not a quandle.
inline OpTable z4_rack() {
    return OpTable::build(4, [](int a, int b) { return (2 * a + b) % 4; });
}

/// Dihedral quandle on Z/3: a |> b = 2a - b.
inline OpTable dihedral3() {
    return OpTable::build(3, [](int a, int b) { return ((2 * a - b) % 3 + 3) % 3; });
}

/// Conjugation quandle of S3: a |> b = a^-1 b a, compatible with the group
/// operation as its Yang-Baxter algebra.
inline OpTable s3_conjugation() {
    auto g = symmetric_group_s3();
    return OpTable::build(
        6, [&](int a, int b) { return g.add(g.add(g.neg(a), b), a); });
}

/// The solution r(a,b) = (1 - a + ab, (1 - a + ab)^{-1} ab) on
/// U(Z/8Z) = {1,3,5,7}, reindexed (1,3,5,7) -> (0,1,2,3).
inline Solution u8_solution() {
    auto value = [](int i) { return 2 * i + 1; };
    auto index = [](int v) { return (((v % 8) + 8) % 8 - 1) / 2; };
    auto sigma = OpTable::build(4, [&](int a, int b) {
        int va = value(a), vb = value(b);
        return index(1 - va + va * vb);
    });
    auto tau = OpTable::build(4, [&](int b, int a) {
        int va = value(a), vb = value(b);
        int s = ((1 - va + va * vb) % 8 + 8) % 8;
        return index(s * va * vb);  // units of Z/8Z are self-inverse
    });
    return Solution(sigma, tau);
}

inline SkewBrace z4_brace() { return ybx::z4_brace(); }

inline std::vector<std::string> names() {
    return {"z6-shelf", "z4-rack", "u8-solution", "z4-brace", "s3-conj", "dihedral3"};
}

}  // namespace ybx::catalog
