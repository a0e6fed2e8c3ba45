#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// Core table types shared by every structure in the library.
///
/// Every carrier is the canonical set {0, ..., n-1}; named structures
/// (cyclic groups, S3, the units of Z/8Z) are provided as table builders.
namespace ybx {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotAGroup : public Error {
public:
    using Error::Error;
};
class NotAShelf : public Error {
public:
    using Error::Error;
};
class NotShelfHom : public Error {
public:
    using Error::Error;
};
class NotLeftNonDegenerate : public Error {
public:
    using Error::Error;
};
class NotASolution : public Error {
public:
    using Error::Error;
};
class CarrierMismatch : public Error {
public:
    using Error::Error;
};
class InvalidZParams : public Error {
public:
    using Error::Error;
};
class PreconditionFailed : public Error {
public:
    using Error::Error;
};
class NotPreLieBrace : public Error {
public:
    using Error::Error;
};
class NotAbelian : public Error {
public:
    using Error::Error;
};
class DimMismatch : public Error {
public:
    using Error::Error;
};
class AdmissibilityFailed : public Error {
public:
    using Error::Error;
};
class RelationFailed : public Error {
public:
    using Error::Error;
};
class BulletIncompatible : public Error {
public:
    using Error::Error;
};

/// An endofunction f of {0,...,n-1}, stored as f(i) = table[i].
struct EndoMap {
    int n = 0;
    std::vector<int> table;

    EndoMap() = default;
    EndoMap(int n_, std::vector<int> t) : n(n_), table(std::move(t)) {
        if (static_cast<int>(table.size()) != n)
            throw Error("EndoMap: table size does not match carrier");
        for (int v : table)
            if (v < 0 || v >= n) throw Error("EndoMap: entry out of range");
    }

    static EndoMap identity(int n) {
        std::vector<int> t(n);
        for (int i = 0; i < n; ++i) t[i] = i;
        return EndoMap(n, std::move(t));
    }
    static EndoMap constant(int n, int k) {
        return EndoMap(n, std::vector<int>(static_cast<size_t>(n), k));
    }

    int operator()(int i) const { return table[static_cast<size_t>(i)]; }

    bool is_bijective() const {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int v : table) {
            if (seen[static_cast<size_t>(v)]) return false;
            seen[static_cast<size_t>(v)] = 1;
        }
        return true;
    }

    /// Inverse of a bijective map; throws if not bijective.
    EndoMap inverse() const {
        std::vector<int> inv(static_cast<size_t>(n), -1);
        for (int i = 0; i < n; ++i) {
            int v = table[static_cast<size_t>(i)];
            if (inv[static_cast<size_t>(v)] != -1) throw Error("EndoMap::inverse: not bijective");
            inv[static_cast<size_t>(v)] = i;
        }
        return EndoMap(n, std::move(inv));
    }

    /// Composition (f.compose(g))(x) = f(g(x)).
    EndoMap compose(const EndoMap& g) const {
        if (g.n != n) throw CarrierMismatch("EndoMap::compose: carrier mismatch");
        std::vector<int> t(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] = (*this)(g(i));
        return EndoMap(n, std::move(t));
    }

    bool operator==(const EndoMap& o) const { return n == o.n && table == o.table; }
};

/// A binary operation on {0,...,n-1}: at(a,b) is "a op b" (row = left operand).
struct OpTable {
    int n = 0;
    std::vector<int> table;  // row-major, n*n entries

    OpTable() = default;
    OpTable(int n_, std::vector<int> t) : n(n_), table(std::move(t)) {
        if (static_cast<int>(table.size()) != n * n)
            throw Error("OpTable: table size does not match carrier");
        for (int v : table)
            if (v < 0 || v >= n) throw Error("OpTable: entry out of range");
    }

    int at(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
    int& at(int a, int b) { return table[static_cast<size_t>(a) * n + b]; }

    /// Left translation row a as a map b -> a op b.
    EndoMap row(int a) const {
        std::vector<int> t(table.begin() + static_cast<long>(a) * n,
                           table.begin() + static_cast<long>(a + 1) * n);
        return EndoMap(n, std::move(t));
    }

    static OpTable from_rows(const std::vector<EndoMap>& rows) {
        int n = static_cast<int>(rows.size());
        std::vector<int> t;
        t.reserve(static_cast<size_t>(n) * n);
        for (const auto& r : rows) {
            if (r.n != n) throw CarrierMismatch("OpTable::from_rows: row size mismatch");
            t.insert(t.end(), r.table.begin(), r.table.end());
        }
        return OpTable(n, std::move(t));
    }

    /// Builds a table pointwise from a callable (a, b) -> value.
    template <typename F>
    static OpTable build(int n, F&& f) {
        std::vector<int> t(static_cast<size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = f(a, b);
        return OpTable(n, std::move(t));
    }

    /// Opposite operation: a op' b = b op a.
    OpTable opposite() const {
        return build(n, [&](int a, int b) { return at(b, a); });
    }

    bool operator==(const OpTable& o) const { return n == o.n && table == o.table; }
};

/// A solution candidate r(a,b) = (sigma_a(b), tau_b(a)) on {0,...,n-1}.
/// Row a of `sigma` is the map sigma_a; row b of `tau` is the map tau_b.
struct Solution {
    int n = 0;
    OpTable sigma;  // sigma.at(a, b) = sigma_a(b)
    OpTable tau;    // tau.at(b, a)  = tau_b(a)

    Solution() = default;
    Solution(OpTable s, OpTable t) : n(s.n), sigma(std::move(s)), tau(std::move(t)) {
        if (sigma.n != tau.n) throw CarrierMismatch("Solution: sigma/tau carrier mismatch");
    }

    std::pair<int, int> apply(int a, int b) const { return {sigma.at(a, b), tau.at(b, a)}; }

    static Solution flip(int n) {
        auto id = OpTable::build(n, [](int, int b) { return b; });
        return Solution(id, id);
    }

    bool operator==(const Solution& o) const { return sigma == o.sigma && tau == o.tau; }
};

/// A map X x X -> Y x Y stored pointwise; nx is |X|, ny is |Y|.
struct PairMap {
    int nx = 0;
    int ny = 0;
    std::vector<std::pair<int, int>> out;  // index a*nx + b

    PairMap() = default;
    PairMap(int nx_, int ny_, std::vector<std::pair<int, int>> o)
        : nx(nx_), ny(ny_), out(std::move(o)) {
        if (static_cast<int>(out.size()) != nx * nx) throw Error("PairMap: wrong size");
        for (auto& p : out)
            if (p.first < 0 || p.first >= ny || p.second < 0 || p.second >= ny)
                throw Error("PairMap: entry out of range");
    }

    template <typename F>
    static PairMap build(int nx, int ny, F&& f) {
        std::vector<std::pair<int, int>> o(static_cast<size_t>(nx) * nx);
        for (int a = 0; a < nx; ++a)
            for (int b = 0; b < nx; ++b) o[static_cast<size_t>(a) * nx + b] = f(a, b);
        return PairMap(nx, ny, std::move(o));
    }

    static PairMap identity(int n) {
        return build(n, n, [](int a, int b) { return std::pair<int, int>{a, b}; });
    }

    static PairMap from_solution(const Solution& s) {
        return build(s.n, s.n, [&](int a, int b) { return s.apply(a, b); });
    }

    std::pair<int, int> operator()(int a, int b) const {
        return out[static_cast<size_t>(a) * nx + b];
    }

    bool is_bijective() const {
        if (nx != ny) return false;
        std::vector<char> seen(static_cast<size_t>(ny) * ny, 0);
        for (auto& p : out) {
            auto idx = static_cast<size_t>(p.first) * ny + p.second;
            if (seen[idx]) return false;
            seen[idx] = 1;
        }
        return true;
    }

    PairMap inverse() const {
        if (nx != ny || !is_bijective()) throw Error("PairMap::inverse: not bijective");
        std::vector<std::pair<int, int>> inv(static_cast<size_t>(nx) * nx);
        for (int a = 0; a < nx; ++a)
            for (int b = 0; b < nx; ++b) {
                auto p = (*this)(a, b);
                inv[static_cast<size_t>(p.first) * nx + p.second] = {a, b};
            }
        return PairMap(nx, nx, std::move(inv));
    }

    /// Composition (f.compose(g)) = f after g; carriers must chain.
    PairMap compose(const PairMap& g) const {
        if (g.ny != nx) throw CarrierMismatch("PairMap::compose: carrier mismatch");
        return build(g.nx, ny, [&](int a, int b) {
            auto p = g(a, b);
            return (*this)(p.first, p.second);
        });
    }

    bool operator==(const PairMap& o) const {
        return nx == o.nx && ny == o.ny && out == o.out;
    }
};

/// First failing triple of an exhaustive check, in lexicographic scan order.
struct Witness {
    int a = -1, b = -1, c = -1;
};

}  // namespace ybx
