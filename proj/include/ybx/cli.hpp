#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ybx/ybx.hpp"

/// Command-line entry points. Everything is driven through run() so the
/// commands stay testable without spawning processes.
namespace ybx::cli {

inline int env_threads() {
    if (const char* v = std::getenv("YBX_THREADS")) {
        int t = std::atoi(v);
        if (t > 0) return t;
    }
    return 0;  // resolve_workers picks hardware parallelism
}

namespace detail {

inline Document load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_document(in);
}

inline std::string flag(bool v) { return v ? "1" : "0"; }

inline void print_witness(std::ostream& os, const Witness& w) {
    os << "witness=" << w.a << "," << w.b << "," << w.c << "\n";
}

inline int verify_shelf_doc(const OpTable& t, std::ostream& out) {
    auto rep = classify_shelf(t);
    out << "shelf=" << flag(rep.shelf) << "\n";
    out << "spindle=" << flag(rep.spindle) << "\n";
    out << "rack=" << flag(rep.rack) << "\n";
    out << "quandle=" << flag(rep.quandle) << "\n";
    if (rep.witness) print_witness(out, *rep.witness);
    return rep.shelf ? 0 : 1;
}

inline int verify_solution_doc(const Solution& s, std::ostream& out) {
    auto rep = classify_solution(s);
    out << "braid=" << flag(rep.braid.braid) << "\n";
    if (!rep.braid.braid) {
        out << "failed=" << to_string(rep.braid.failed) << "\n";
        if (rep.braid.witness) print_witness(out, *rep.braid.witness);
    }
    out << "left_nd=" << flag(rep.left_nd) << "\n";
    out << "right_nd=" << flag(rep.right_nd) << "\n";
    out << "bijective=" << flag(rep.bijective) << "\n";
    out << "involutive=" << flag(rep.involutive) << "\n";
    out << "idempotent=" << flag(rep.idempotent) << "\n";
    out << "square_free=" << flag(rep.square_free) << "\n";
    if (rep.braid.braid && rep.left_nd) {
        auto t = extract_twist(s);
        out << "twist_roundtrip=" << flag(build_from_twist(t.shelf, t.phi) == s) << "\n";
        bool rz = true, lz = true;
        for (int a = 0; a < s.n; ++a)
            for (int b = 0; b < s.n; ++b) {
                if (t.shelf.at(a, b) != b) rz = false;
                if (t.shelf.at(a, b) != a) lz = false;
            }
        out << "assoc_shelf_right_zero=" << flag(rz) << "\n";
        out << "assoc_shelf_left_zero=" << flag(lz) << "\n";
        if (s.n <= 8) {
            auto cmp = compare_solutions(s, Solution::flip(s.n));
            out << "equivalent_to_flip=" << flag(cmp.equivalent.has_value()) << "\n";
            out << "d_isomorphic_to_flip=" << flag(cmp.d_isomorphic_via_derived) << "\n";
        }
    }
    return rep.braid.braid ? 0 : 1;
}

inline int verify_brace_doc(const OpTable& add, const OpTable& mul, std::ostream& out) {
    auto flags = verify_skew_brace(add, mul);
    out << "group_add=" << flag(flags.group_add) << "\n";
    out << "group_mul=" << flag(flags.group_mul) << "\n";
    out << "left_skew=" << flag(flags.left_skew) << "\n";
    out << "two_sided=" << flag(flags.two_sided) << "\n";
    out << "brace=" << flag(flags.brace) << "\n";
    if (flags.witness) print_witness(out, *flags.witness);
    return flags.left_skew ? 0 : 1;
}

inline int verify_prelie_doc(const OpTable& add, const OpTable& bullet, std::ostream& out) {
    auto rep = verify_prelie(add, bullet);
    out << "distr=" << flag(rep.distr) << "\n";
    out << "prelie=" << flag(rep.prelie) << "\n";
    out << "prelie_op=" << flag(rep.prelie_op) << "\n";
    out << "left_invertible=" << flag(rep.left_invertible.has_value()) << "\n";
    if (rep.left_invertible)
        out << "left_identity=" << rep.left_invertible->identity << "\n";
    return rep.distr && rep.prelie ? 0 : 1;
}

inline int cmd_verify(const std::string& path, std::ostream& out) {
    auto doc = load(path);
    if (doc.has_solution) return verify_solution_doc(doc.solution(), out);
    const OpTable* add = doc.find_table("add");
    const OpTable* mul = doc.find_table("mul");
    const OpTable* bullet = doc.find_table("bullet");
    if (add && mul) return verify_brace_doc(*add, *mul, out);
    if (add && bullet) return verify_prelie_doc(*add, *bullet, out);
    if (doc.tables.size() == 1) return verify_shelf_doc(doc.tables[0].table, out);
    throw Error("verify: cannot detect structure (want solution, add+mul, add+bullet, or one table)");
}

inline int cmd_catalog(const std::string& name, std::ostream& out) {
    Document doc;
    if (name == "z6-shelf") {
        doc = document_for_table("op", catalog::z6_shelf());
    } else if (name == "z4-rack") {
        doc = document_for_table("op", catalog::z4_rack());
    } else if (name == "dihedral3") {
        doc = document_for_table("op", catalog::dihedral3());
    } else if (name == "s3-conj") {
        doc = document_for_table("op", catalog::s3_conjugation());
    } else if (name == "u8-solution") {
        doc = document_for_solution(catalog::u8_solution());
    } else if (name == "z4-brace") {
        auto B = catalog::z4_brace();
        doc.n = B.n();
        doc.tables.push_back({"add", B.add.op});
        doc.tables.push_back({"mul", B.mul.op});
    } else {
        throw Error("catalog: unknown name '" + name + "' (try: z6-shelf z4-rack u8-solution z4-brace s3-conj dihedral3)");
    }
    serialize_document(out, doc);
    return 0;
}

inline int cmd_derive(const std::string& path, std::ostream& out) {
    auto doc = load(path);
    if (doc.tables.size() != 1) throw Error("derive: expected a single shelf table");
    auto s = derived_solution(doc.tables[0].table);
    serialize_document(out, document_for_solution(s));
    return 0;
}

inline int cmd_twist(const std::string& path, std::ostream& out) {
    auto doc = load(path);
    auto s = doc.solution();
    auto t = extract_twist(s);
    Document result;
    result.n = s.n;
    result.tables.push_back({"shelf", t.shelf});
    std::vector<EndoMap> rows = t.phi;
    result.tables.push_back({"phi", OpTable::from_rows(rows)});
    serialize_document(out, result);
    bool roundtrip = build_from_twist(t.shelf, t.phi) == s;
    out << "roundtrip=" << flag(roundtrip) << "\n";
    return roundtrip ? 0 : 1;
}

inline int cmd_from_twist(const std::string& shelf_path, const std::string& twist_path,
                          std::ostream& out) {
    auto sdoc = load(shelf_path);
    if (sdoc.tables.size() != 1) throw Error("from-twist: shelf file must hold one table");
    auto tdoc = load(twist_path);
    const OpTable* phi = tdoc.find_table("phi");
    if (!phi) throw Error("from-twist: twist file must hold 'table phi'");
    std::vector<EndoMap> maps;
    for (int a = 0; a < phi->n; ++a) maps.push_back(phi->row(a));
    auto s = build_from_twist(sdoc.tables[0].table, maps);
    serialize_document(out, document_for_solution(s));
    return 0;
}

struct RepOptions {
    bool twist = false;
    bool frt = false;
    std::string hopf_bullet_path;
    std::string export_r_path;
    std::string export_rf_path;
    bool sparse = false;
};

inline int cmd_rep(const std::string& path, const RepOptions& opt, std::ostream& out) {
    auto doc = load(path);
    auto s = doc.solution();
    auto rack = associated_shelf(s);
    auto rep = fundamental_rep(rack, s);
    auto R = rack_R(rep);
    bool ok = true;
    out << "n=" << rep.n() << "\n";
    out << "dim=" << R.dim() << "\n";
    bool ybe = verify_matrix_ybe(R);
    ok = ok && ybe;
    out << "ybe=" << flag(ybe) << "\n";
    out << "pr_equals_derived=" << flag(flip_matrix(rep.n()) * R == derived_braid_matrix(rack))
        << "\n";
    if (opt.frt) {
        auto frt = frt_check(rep);
        ok = ok && frt.all();
        out << "frt_a=" << flag(frt.a) << "\n";
        out << "frt_b=" << flag(frt.b) << "\n";
        out << "frt_c=" << flag(frt.c) << "\n";
    }
    IntMatrix RF;
    if (opt.twist) {
        auto adm = twist_admissibility(rep);
        ok = ok && adm.all();
        out << "twist_statement1=" << flag(adm.statement1) << "\n";
        out << "twist_statement2i=" << flag(adm.statement2i) << "\n";
        out << "twist_statement2ii=" << flag(adm.statement2ii) << "\n";
        out << "twist_rf_direct=" << flag(adm.rf_direct) << "\n";
        out << "twist_rf_ybe=" << flag(adm.rf_ybe) << "\n";
        out << "twist_prf_solution=" << flag(adm.prf_solution) << "\n";
        out << "twist_comm_w=" << flag(adm.comm_w) << "\n";
        out << "twist_w_antipode=" << flag(adm.w_antipode) << "\n";
        RF = adm.RF;
    }
    if (!opt.hopf_bullet_path.empty()) {
        auto bdoc = load(opt.hopf_bullet_path);
        if (bdoc.tables.size() != 1) throw Error("rep --hopf: bullet file must hold one table");
        const OpTable& bullet = bdoc.tables[0].table;
        auto hopf = hopf_checks(rep, bullet);
        out << "hopf_bullet_group=" << flag(hopf.bullet_group) << "\n";
        out << "hopf_strong=" << flag(hopf.strong) << "\n";
        out << "hopf_weak=" << flag(hopf.weak) << "\n";
        out << "hopf_v1=" << flag(hopf.v1) << "\n";
        out << "hopf_v2=" << flag(hopf.v2) << "\n";
        out << "hopf_v2_weak=" << flag(hopf.v2_weak) << "\n";
        out << "hopf_comm_q=" << flag(hopf.comm_q) << "\n";
        out << "hopf_comm_h=" << flag(hopf.comm_h) << "\n";
        out << "hopf_coassoc_h=" << flag(hopf.coassoc_h) << "\n";
        for (const auto& w : hopf.coassoc_witnesses)
            out << "coassoc_witness=" << w[0] << "," << w[1] << "," << w[2] << "\n";
        out << "hopf_counit_left=" << flag(hopf.counit_left) << "\n";
        out << "hopf_counit_right=" << flag(hopf.counit_right) << "\n";
        out << "hopf_antipode_q=" << flag(hopf.antipode_q) << "\n";
        out << "hopf_antipode_h=" << flag(hopf.antipode_h) << "\n";
        out << "condition0=" << flag(condition0_check(s, bullet)) << "\n";
        ok = ok && hopf.v1 && (hopf.v2 || hopf.v2_weak) && hopf.comm_q && hopf.comm_h;
    }
    if (!opt.export_r_path.empty()) {
        std::ofstream f(opt.export_r_path);
        if (!f) throw Error("rep: cannot write '" + opt.export_r_path + "'");
        write_matrix(f, R, opt.sparse);
    }
    if (!opt.export_rf_path.empty()) {
        if (!opt.twist) throw Error("rep: --export-rf requires --twist");
        std::ofstream f(opt.export_rf_path);
        if (!f) throw Error("rep: cannot write '" + opt.export_rf_path + "'");
        write_matrix(f, RF, opt.sparse);
    }
    return ok ? 0 : 1;
}

inline int cmd_enumerate_shelves(int size, bool racks_only, std::ostream& out) {
    std::vector<OpTable> tables;
    if (size == 4) {
        if (!racks_only)
            throw Error("enumerate shelves: size 4 supports --racks-only (full scan infeasible)");
        tables = enumerate_racks4(env_threads());
    } else {
        tables = enumerate_shelves(size, racks_only, env_threads());
    }
    out << "count=" << tables.size() << "\n";
    for (const auto& t : tables) {
        for (size_t i = 0; i < t.table.size(); ++i)
            out << (i ? " " : "") << t.table[i];
        out << "\n";
    }
    return 0;
}

inline int cmd_enumerate_solutions(int size, bool left_nd, std::ostream& out) {
    if (!left_nd) throw Error("enumerate solutions: only --left-nd enumeration is supported");
    auto census = census_left_nd_solutions(size, env_threads());
    out << "candidates=" << census.candidates << "\n";
    out << "count=" << census.solutions.size() << "\n";
    out << "roundtrip_failures=" << census.roundtrip_failures << "\n";
    out << "corollary_failures=" << census.corollary_failures << "\n";
    out << "crosscheck_failures=" << census.crosscheck_failures << "\n";
    for (const auto& s : census.solutions) {
        auto rep = classify_solution(s);
        out << "solution sigma=";
        for (size_t i = 0; i < s.sigma.table.size(); ++i)
            out << (i ? "," : "") << s.sigma.table[i];
        out << " tau=";
        for (size_t i = 0; i < s.tau.table.size(); ++i)
            out << (i ? "," : "") << s.tau.table[i];
        out << " bijective=" << flag(rep.bijective) << " involutive=" << flag(rep.involutive)
            << " idempotent=" << flag(rep.idempotent)
            << " square_free=" << flag(rep.square_free) << "\n";
    }
    return census.roundtrip_failures == 0 && census.corollary_failures == 0 &&
                   census.crosscheck_failures == 0
               ? 0
               : 1;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite set-theoretic Yang-Baxter structures"};
    app.require_subcommand(1);

    std::string file, file2, name;
    int size = 3;
    bool racks_only = false, left_nd = false;
    detail::RepOptions rep_opt;

    auto* verify = app.add_subcommand("verify", "classify and check a structure file");
    verify->add_option("file", file, "ybx file")->required();

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive enumeration");
    auto* shelves = enumerate->add_subcommand("shelves", "all shelf tables");
    shelves->add_option("--size", size, "carrier size")->required();
    shelves->add_flag("--racks-only", racks_only, "restrict to racks");
    auto* solutions = enumerate->add_subcommand("solutions", "left non-degenerate census");
    solutions->add_option("--size", size, "carrier size")->required();
    solutions->add_flag("--left-nd", left_nd, "left non-degenerate candidates");
    enumerate->require_subcommand(1);

    auto* twist = app.add_subcommand("twist", "extract the twist of a solution");
    twist->add_option("file", file, "solution file")->required();

    auto* derive = app.add_subcommand("derive", "derived solution of a shelf");
    derive->add_option("file", file, "shelf file")->required();

    auto* fromtwist = app.add_subcommand("from-twist", "build a solution from shelf + twist");
    fromtwist->add_option("shelf", file, "shelf file")->required();
    fromtwist->add_option("twist", file2, "twist file (table phi)")->required();

    auto* rep = app.add_subcommand("rep", "fundamental representation checks");
    rep->add_option("file", file, "solution file")->required();
    rep->add_flag("--twist", rep_opt.twist, "run the admissible twist checks");
    rep->add_flag("--frt", rep_opt.frt, "run the FRT relation checks");
    rep->add_option("--hopf", rep_opt.hopf_bullet_path, "bullet file for Hopf checks");
    rep->add_option("--export-r", rep_opt.export_r_path, "write R to a file");
    rep->add_option("--export-rf", rep_opt.export_rf_path, "write R^F to a file");
    rep->add_flag("--sparse", rep_opt.sparse, "sparse matrix export");

    auto* cat = app.add_subcommand("catalog", "emit a built-in instance");
    cat->add_option("name", name, "instance name")->required();

    std::reverse(args.begin(), args.end());  // CLI11 consumes reversed argv
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        std::ostringstream dummy;
        int code = app.exit(e, dummy, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return detail::cmd_verify(file, out);
        if (enumerate->parsed()) {
            if (shelves->parsed()) return detail::cmd_enumerate_shelves(size, racks_only, out);
            return detail::cmd_enumerate_solutions(size, left_nd, out);
        }
        if (twist->parsed()) return detail::cmd_twist(file, out);
        if (derive->parsed()) return detail::cmd_derive(file, out);
        if (fromtwist->parsed()) return detail::cmd_from_twist(file, file2, out);
        if (rep->parsed()) return detail::cmd_rep(file, rep_opt, out);
        if (cat->parsed()) return detail::cmd_catalog(name, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace ybx::cli
