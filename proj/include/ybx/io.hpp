#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ybx/types.hpp"

/// The ybx v1 text format. Line-oriented and strict:
///
///   ybx v1
///   n <int>
///   table <name>        (n rows of n space-separated integers; row = left operand)
///   map <name>          (one row of n integers)
///   solution            (expands to `table sigma` followed by `table tau`)
///
/// Out-of-range entries and malformed lines are errors carrying line numbers.
namespace ybx {

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct NamedTable {
    std::string name;
    OpTable table;
};
struct NamedMap {
    std::string name;
    EndoMap map;
};

struct Document {
    int n = 0;
    std::vector<NamedTable> tables;
    std::vector<NamedMap> maps;
    bool has_solution = false;  // the sigma/tau pair came from a `solution` block

    const OpTable* find_table(const std::string& name) const {
        for (const auto& t : tables)
            if (t.name == name) return &t.table;
        return nullptr;
    }
    const EndoMap* find_map(const std::string& name) const {
        for (const auto& m : maps)
            if (m.name == name) return &m.map;
        return nullptr;
    }
    Solution solution() const {
        const OpTable* s = find_table("sigma");
        const OpTable* t = find_table("tau");
        if (!s || !t) throw Error("document holds no solution");
        return Solution(*s, *t);
    }
};

namespace io_detail {

struct LineReader {
    std::istream& is;
    int lineno = 0;

    /// Next non-empty, non-comment line; nullopt at end of input.
    std::optional<std::string> next() {
        std::string line;
        while (std::getline(is, line)) {
            ++lineno;
            size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            size_t end = line.find_last_not_of(" \t\r");
            return line.substr(start, end - start + 1);
        }
        return std::nullopt;
    }
};

inline std::vector<int> parse_row(const std::string& line, int n, int lineno) {
    std::istringstream ss(line);
    std::vector<int> row;
    int v;
    while (ss >> v) {
        if (v < 0 || v >= n)
            throw ParseError(lineno, "entry " + std::to_string(v) + " out of range [0," +
                                         std::to_string(n - 1) + "]");
        row.push_back(v);
    }
    std::string rest;
    if (ss.clear(), ss >> rest)
        throw ParseError(lineno, "unexpected token '" + rest + "'");
    if (static_cast<int>(row.size()) != n)
        throw ParseError(lineno, "expected " + std::to_string(n) + " entries, found " +
                                     std::to_string(row.size()));
    return row;
}

inline OpTable parse_table(LineReader& r, int n) {
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        auto line = r.next();
        if (!line) throw ParseError(r.lineno, "unexpected end of input inside table");
        auto row = parse_row(*line, n, r.lineno);
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return OpTable(n, flat);
}

}  // namespace io_detail

inline Document parse_document(std::istream& is) {
    io_detail::LineReader r{is};
    auto header = r.next();
    if (!header || *header != "ybx v1")
        throw ParseError(r.lineno, "expected header 'ybx v1'");
    auto nline = r.next();
    if (!nline) throw ParseError(r.lineno, "expected 'n <int>'");
    Document doc;
    {
        std::istringstream ss(*nline);
        std::string kw;
        if (!(ss >> kw >> doc.n) || kw != "n" || doc.n < 1)
            throw ParseError(r.lineno, "expected 'n <positive int>'");
    }
    for (;;) {
        auto line = r.next();
        if (!line) break;
        std::istringstream ss(*line);
        std::string kw;
        ss >> kw;
        if (kw == "table") {
            std::string name;
            if (!(ss >> name)) throw ParseError(r.lineno, "table needs a name");
            doc.tables.push_back({name, io_detail::parse_table(r, doc.n)});
        } else if (kw == "map") {
            std::string name;
            if (!(ss >> name)) throw ParseError(r.lineno, "map needs a name");
            auto row = r.next();
            if (!row) throw ParseError(r.lineno, "unexpected end of input inside map");
            doc.maps.push_back({name, EndoMap(doc.n, io_detail::parse_row(*row, doc.n, r.lineno))});
        } else if (kw == "solution") {
            auto expect_table = [&](const std::string& want) {
                auto hdr = r.next();
                if (!hdr) throw ParseError(r.lineno, "solution: missing 'table " + want + "'");
                std::istringstream hs(*hdr);
                std::string k, name;
                hs >> k >> name;
                if (k != "table" || name != want)
                    throw ParseError(r.lineno, "solution: expected 'table " + want + "'");
                doc.tables.push_back({name, io_detail::parse_table(r, doc.n)});
            };
            expect_table("sigma");
            expect_table("tau");
            doc.has_solution = true;
        } else {
            throw ParseError(r.lineno, "unknown block '" + kw + "'");
        }
    }
    return doc;
}

inline Document parse_document(const std::string& text) {
    std::istringstream ss(text);
    return parse_document(ss);
}

inline void write_table_rows(std::ostream& os, const OpTable& t) {
    for (int a = 0; a < t.n; ++a) {
        for (int b = 0; b < t.n; ++b) os << (b ? " " : "") << t.at(a, b);
        os << "\n";
    }
}

inline void serialize_document(std::ostream& os, const Document& doc) {
    os << "ybx v1\n";
    os << "n " << doc.n << "\n";
    if (doc.has_solution) {
        const OpTable* s = doc.find_table("sigma");
        const OpTable* t = doc.find_table("tau");
        if (!s || !t) throw Error("serialize_document: solution tables missing");
        os << "solution\n";
        os << "table sigma\n";
        write_table_rows(os, *s);
        os << "table tau\n";
        write_table_rows(os, *t);
    }
    for (const auto& t : doc.tables) {
        if (doc.has_solution && (t.name == "sigma" || t.name == "tau")) continue;
        os << "table " << t.name << "\n";
        write_table_rows(os, t.table);
    }
    for (const auto& m : doc.maps) {
        os << "map " << m.name << "\n";
        for (int i = 0; i < m.map.n; ++i) os << (i ? " " : "") << m.map(i);
        os << "\n";
    }
}

inline std::string serialize_document(const Document& doc) {
    std::ostringstream ss;
    serialize_document(ss, doc);
    return ss.str();
}

inline Document document_for_table(const std::string& name, const OpTable& t) {
    Document d;
    d.n = t.n;
    d.tables.push_back({name, t});
    return d;
}

inline Document document_for_solution(const Solution& s) {
    Document d;
    d.n = s.n;
    d.tables.push_back({"sigma", s.sigma});
    d.tables.push_back({"tau", s.tau});
    d.has_solution = true;
    return d;
}

}  // namespace ybx
