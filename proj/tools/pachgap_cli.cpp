// Workbench front door. Links only the public C API; all output is UTF-8
// JSON (or CSV for the expansion table) with rationals as "p/q" strings.
// Exit codes: 0 ok, 2 param, 3 precondition, 4 capacity, 5 io, 6 verify,
// 7 internal. Identical flags + seed give byte-identical reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pachgap/pachgap.h"

namespace {

using ojson = nlohmann::ordered_json;

const char* kind_name(int exit_code) {
    switch (exit_code) {
        case 2: return "param";
        case 3: return "precondition";
        case 4: return "capacity";
        case 5: return "io";
        case 6: return "verify";
        case 7: return "internal";
        default: return "internal";
    }
}

int fail_code(int exit_code, const std::string& message) {
    ojson e;
    e["error"]["kind"] = kind_name(exit_code);
    e["error"]["message"] = message;
    e["error"]["exit"] = exit_code;
    std::cerr << e.dump(2) << "\n";
    return exit_code;
}

int fail(pg_status st) { return fail_code(int(st) + 1, pg_last_error()); }

std::string take(char* s) {
    std::string out = s ? s : "";
    pg_string_free(s);
    return out;
}

struct LatticeDel {
    void operator()(pg_lattice* p) const { pg_lattice_free(p); }
};
struct MapDel {
    void operator()(pg_map* p) const { pg_map_free(p); }
};
struct ComplexDel {
    void operator()(pg_complex* p) const { pg_complex_free(p); }
};
struct HypergraphDel {
    void operator()(pg_hypergraph* p) const { pg_hypergraph_free(p); }
};
using LatticePtr = std::unique_ptr<pg_lattice, LatticeDel>;
using MapPtr = std::unique_ptr<pg_map, MapDel>;
using ComplexPtr = std::unique_ptr<pg_complex, ComplexDel>;
using HypergraphPtr = std::unique_ptr<pg_hypergraph, HypergraphDel>;

int read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return fail_code(5, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return 0;
}

int write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return fail_code(5, "cannot write " + path);
    out << text;
    return out ? 0 : fail_code(5, "short write to " + path);
}

// Build from --d/--q or load a serialized lattice with --in.
int make_lattice(int d, long long q, const std::string& in, LatticePtr& out) {
    pg_lattice* raw = nullptr;
    if (!in.empty()) {
        std::string text;
        if (int rc = read_file(in, text)) return rc;
        if (pg_status st = pg_lattice_from_json(text.c_str(), &raw)) return fail(st);
    } else {
        if (d < 1 || q < 2) return fail_code(2, "need --d and --q, or --in FILE");
        if (pg_status st = pg_lattice_build(d + 1, q, &raw)) return fail(st);
    }
    out.reset(raw);
    return 0;
}

int parse_int_list(const std::string& s, std::vector<int>& out, const char* what) {
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            return fail_code(2, std::string(what) + ": bad integer '" + tok + "'");
        }
    }
    if (out.empty()) return fail_code(2, std::string(what) + ": empty list");
    return 0;
}

struct Opts {
    int d = 0;
    long long q = 0;
    int n = 0;
    int k = -1;
    int m = 0;
    long long m_lo = 1;
    long long m_hi = 0;
    long long corradi_m = 0;
    uint64_t seed = 42;
    bool csv = false;
    bool validate = false;
    bool sampled = false;
    std::string in, out, point, atoms, transversal, mode;
};

int run_lattice(const Opts& o) {
    LatticePtr L;
    if (int rc = make_lattice(o.d, o.q, o.in, L)) return rc;
    if (!o.out.empty()) {
        char* text = nullptr;
        if (pg_status st = pg_lattice_to_json(L.get(), &text)) return fail(st);
        if (int rc = write_file(o.out, take(text))) return rc;
    }
    char* doc = nullptr;
    if (o.validate) {
        if (pg_status st = pg_lattice_validate(L.get(), o.seed, &doc)) return fail(st);
        std::string s = take(doc);
        std::cout << s;
        return ojson::parse(s)["all_pass"].get<bool>() ? 0 : 6;
    }
    if (pg_status st = pg_lattice_info(L.get(), &doc)) return fail(st);
    std::cout << take(doc);
    return 0;
}

int run_expansion(const Opts& o) {
    if (o.corradi_m > 0) {
        if (o.d < 1 || o.q < 2) return fail_code(2, "--corradi needs --d and --q");
        char* doc = nullptr;
        if (pg_status st = pg_corradi_chain(o.corradi_m, o.q, o.d, &doc)) return fail(st);
        std::string s = take(doc);
        std::cout << s;
        return ojson::parse(s)["all_hold"].get<bool>() ? 0 : 6;
    }
    LatticePtr L;
    if (int rc = make_lattice(o.d, o.q, o.in, L)) return rc;
    long long m_hi = o.m_hi;
    if (m_hi <= 0) {
        char* info = nullptr;
        if (pg_status st = pg_lattice_info(L.get(), &info)) return fail(st);
        m_hi = ojson::parse(take(info))["atoms"].get<long long>();
    }
    char* table = nullptr;
    if (pg_status st = pg_expansion_table(L.get(), o.m_lo, m_hi, o.csv ? 1 : 0, &table))
        return fail(st);
    std::cout << take(table);
    return 0;
}

int run_map(const Opts& o) {
    LatticePtr L;
    if (int rc = make_lattice(o.d, o.q, o.in, L)) return rc;
    pg_map* raw = nullptr;
    if (pg_status st = pg_map_build(L.get(), o.seed, o.sampled ? 0 : 1, &raw)) return fail(st);
    MapPtr M(raw);
    char* doc = nullptr;
    if (!o.point.empty() && !o.atoms.empty()) {
        std::vector<int> sigma;
        if (int rc = parse_int_list(o.atoms, sigma, "--atoms")) return rc;
        if (pg_status st = pg_map_membership(M.get(), o.point.c_str(), sigma.data(),
                                             int(sigma.size()), &doc))
            return fail(st);
        std::cout << take(doc);
        return 0;
    }
    if (!o.point.empty()) {
        if (pg_status st = pg_map_cover(M.get(), o.point.c_str(), &doc)) return fail(st);
        std::string s = take(doc);
        std::cout << s;
        return ojson::parse(s)["certificate"]["valid"].get<bool>() ? 0 : 6;
    }
    if (pg_status st = pg_map_summary(M.get(), &doc)) return fail(st);
    std::cout << take(doc);
    return 0;
}

int run_tau(const Opts& o) {
    LatticePtr L;
    if (int rc = make_lattice(o.d, o.q, o.in, L)) return rc;
    pg_map* raw = nullptr;
    if (pg_status st = pg_map_build(L.get(), o.seed, 1, &raw)) return fail(st);
    MapPtr M(raw);
    char* tau = nullptr;
    if (pg_status st = pg_tau(M.get(), o.n, o.seed, &tau)) return fail(st);
    ojson doc;
    doc["tau"] = ojson::parse(take(tau));

    // the abstract bound chain needs n >= (2d)^d; smaller instances report
    // the workbench numbers only
    long long threshold = 1;
    for (int i = 0; i < o.d; ++i) threshold *= 2 * o.d;
    if (o.n >= threshold) {
        char* chain = nullptr;
        if (pg_status st = pg_bound_chain(o.n, o.d, &chain)) return fail(st);
        doc["chain"] = ojson::parse(take(chain));
    } else {
        doc["chain_skipped"] =
            "n < (2d)^d = " + std::to_string(threshold) + ", bound chain not applicable";
    }
    std::cout << doc.dump(2) << "\n";

    int violations = 0;
    for (const auto& a : doc["tau"]["box_analyses"])
        if (!a["incl_excl_holds"].get<bool>() || !a["cover_holds"].get<bool>() ||
            !a["gamma_bound_holds"].get<bool>())
            ++violations;
    if (doc.contains("chain") && !doc["chain"]["all_hold"].get<bool>()) ++violations;
    return violations == 0 ? 0 : 6;
}

int run_hk(const Opts& o) {
    ComplexPtr X;
    pg_complex* raw = nullptr;
    if (!o.in.empty()) {
        std::string text;
        if (int rc = read_file(o.in, text)) return rc;
        if (pg_status st = pg_complex_parse(text.c_str(), &raw)) return fail(st);
    } else if (!o.transversal.empty()) {
        std::vector<int> sizes;
        if (int rc = parse_int_list(o.transversal, sizes, "--transversal")) return rc;
        if (pg_status st = pg_complex_transversal(sizes.data(), int(sizes.size()), &raw))
            return fail(st);
    } else {
        return fail_code(2, "need --in FILE or --transversal SIZES");
    }
    X.reset(raw);
    char* info = nullptr;
    if (pg_status st = pg_complex_info(X.get(), &info)) return fail(st);
    ojson doc;
    doc["complex"] = ojson::parse(take(info));
    int top = doc["complex"]["top_dim"].get<int>();
    int k_lo = o.k >= 0 ? o.k : 0;
    int k_hi = o.k >= 0 ? o.k : top;
    ojson rows = ojson::array();
    bool consistent = true;
    for (int k = k_lo; k <= k_hi; ++k) {
        char* h = nullptr;
        if (pg_status st = pg_complex_hk(X.get(), k, &h)) return fail(st);
        ojson row = ojson::parse(take(h));
        consistent = consistent && row["matches_cohomology"].get<bool>();
        rows.push_back(row);
    }
    doc["h"] = rows;
    doc["consistent"] = consistent;
    std::cout << doc.dump(2) << "\n";
    return consistent ? 0 : 6;
}

int run_extract(const Opts& o) {
    if (o.in.empty()) return fail_code(2, "need --in FILE");
    std::string text;
    if (int rc = read_file(o.in, text)) return rc;
    pg_hypergraph* raw = nullptr;
    if (pg_status st = pg_hypergraph_parse(text.c_str(), &raw)) return fail(st);
    HypergraphPtr H(raw);
    char* doc = nullptr;
    pg_status st = o.m >= 1 ? pg_hypergraph_extract(H.get(), o.m, &doc)
                            : pg_hypergraph_max_box(H.get(), &doc);
    if (st) return fail(st);
    std::cout << take(doc);
    return 0;
}

int run_baseline(const Opts& o) {
    if (o.in.empty()) return fail_code(2, "need --in FILE");
    std::string text;
    if (int rc = read_file(o.in, text)) return rc;
    char* doc = nullptr;
    if (pg_status st = pg_baseline(o.mode.c_str(), text.c_str(), o.seed, &doc))
        return fail(st);
    std::cout << take(doc);
    return 0;
}

int run_all_cmd(const Opts& o) {
    char* doc = nullptr;
    if (pg_status st = pg_run_all(o.seed, &doc)) return fail(st);
    std::string s = take(doc);
    if (!o.out.empty())
        if (int rc = write_file(o.out, s)) return rc;
    std::cout << s;
    return ojson::parse(s)["violations"].get<int>() == 0 ? 0 : 6;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subspace-lattice selection workbench"};
    app.set_version_flag("--version", pg_version());
    std::string budget_scale;
    app.add_option("--budget-scale", budget_scale,
                   "rational multiplier on all enumeration budgets, e.g. 3/2");
    Opts o;

    CLI::App* lattice = app.add_subcommand("lattice", "build or load a lattice, report or validate");
    lattice->add_option("--d", o.d, "top dimension; the lattice has rank d+1");
    lattice->add_option("--q", o.q, "prime field order");
    lattice->add_option("--in", o.in, "load a serialized lattice instead of building");
    lattice->add_option("--out", o.out, "write the canonical serialization here");
    lattice->add_flag("--validate", o.validate, "run the structural check suite");
    lattice->add_option("--seed", o.seed, "seed for sampled checks");

    CLI::App* expansion = app.add_subcommand("expansion", "vertex expansion table over m");
    expansion->add_option("--d", o.d, "top dimension");
    expansion->add_option("--q", o.q, "prime field order");
    expansion->add_option("--in", o.in, "load a serialized lattice");
    expansion->add_option("--m-lo", o.m_lo, "first set size");
    expansion->add_option("--m-hi", o.m_hi, "last set size (default: all atoms)");
    expansion->add_flag("--csv", o.csv, "emit CSV instead of JSON");
    expansion->add_option("--corradi", o.corradi_m,
                          "report the b1..b4 bound chain at this m instead of the table");

    CLI::App* map = app.add_subcommand("map", "build the straightened map, query points");
    map->add_option("--d", o.d, "top dimension");
    map->add_option("--q", o.q, "prime field order");
    map->add_option("--in", o.in, "load a serialized lattice");
    map->add_option("--seed", o.seed, "embedding seed");
    map->add_flag("--sampled", o.sampled, "sampled general-position check (default exhaustive)");
    map->add_option("--point", o.point, "query point, coordinates space-separated, e.g. \"1/3 1/4\"");
    map->add_option("--atoms", o.atoms, "with --point: face membership for these atom ids, comma-separated");

    CLI::App* tau = app.add_subcommand("tau", "selection workbench over colour partitions");
    tau->add_option("--d", o.d, "top dimension")->required();
    tau->add_option("--q", o.q, "prime field order")->required();
    tau->add_option("--n", o.n, "points per colour class")->required();
    tau->add_option("--seed", o.seed, "partition sampling seed");

    CLI::App* hk = app.add_subcommand("hk", "cosystolic expansion of a weighted complex");
    hk->add_option("--in", o.in, "complex file, one top face per line");
    hk->add_option("--transversal", o.transversal, "build the transversal complex of these class sizes, e.g. 2,2,2");
    hk->add_option("--k", o.k, "single level (default: all levels)");

    CLI::App* extract = app.add_subcommand("extract", "box extraction on a multipartite hypergraph");
    extract->add_option("--in", o.in, "hypergraph file")->required();
    extract->add_option("--m", o.m, "requested box size (default: exact maximum)");

    CLI::App* baseline = app.add_subcommand("baseline", "straight-simplex reference runs");
    baseline->add_option("--mode", o.mode, "pach or first_selection")->required();
    baseline->add_option("--in", o.in, "point classes, one class per line, coords comma-separated")->required();
    baseline->add_option("--seed", o.seed, "perturbation seed");

    CLI::App* all = app.add_subcommand("all", "full deterministic verification sweep");
    all->add_option("--seed", o.seed, "master seed");
    all->add_option("--out", o.out, "also write the report here");

    app.require_subcommand(1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail_code(2, e.what());
    }

    if (!budget_scale.empty())
        if (pg_status st = pg_budget_scale(budget_scale.c_str())) return fail(st);

    if (lattice->parsed()) return run_lattice(o);
    if (expansion->parsed()) return run_expansion(o);
    if (map->parsed()) return run_map(o);
    if (tau->parsed()) return run_tau(o);
    if (hk->parsed()) return run_hk(o);
    if (extract->parsed()) return run_extract(o);
    if (baseline->parsed()) return run_baseline(o);
    if (all->parsed()) return run_all_cmd(o);
    return fail_code(2, "no subcommand");
}
