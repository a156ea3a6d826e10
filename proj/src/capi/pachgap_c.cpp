#include "pachgap/pachgap.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/lattice_json.hpp"
#include "core/primes.hpp"
#include "core/report.hpp"

struct pg_lattice {
    pachgap::GradedLattice v;
};
struct pg_map {
    pachgap::PLMap v;
};
struct pg_complex {
    pachgap::WeightedComplex v;
};
struct pg_hypergraph {
    pachgap::MultipartiteHypergraph v;
};

namespace {

thread_local std::string g_last_error;

template <typename F>
pg_status guarded(F&& body) {
    try {
        body();
        return PG_OK;
    } catch (const pachgap::Error& e) {
        g_last_error = e.what();
        return static_cast<pg_status>(static_cast<int>(e.kind));
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PG_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PG_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void require(bool ok, const char* what) {
    if (!ok) pachgap::throw_param(what);
}

pachgap::Point parse_point(const char* text, int want_dim) {
    require(text != nullptr, "null point");
    pachgap::Point p;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) p.push_back(pachgap::rat_parse(tok));
    if (want_dim >= 0 && int(p.size()) != want_dim)
        pachgap::throw_param("point needs " + std::to_string(want_dim) + " coordinates");
    return p;
}

std::vector<std::vector<pachgap::Point>> parse_classes(const char* text) {
    require(text != nullptr, "null points");
    std::vector<std::vector<pachgap::Point>> classes;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        std::vector<pachgap::Point> cls;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            pachgap::Point p;
            std::string coord;
            std::istringstream ts(tok);
            while (std::getline(ts, coord, ',')) p.push_back(pachgap::rat_parse(coord));
            if (p.empty()) pachgap::throw_param("empty point in class input");
            cls.push_back(std::move(p));
        }
        if (!cls.empty()) classes.push_back(std::move(cls));
    }
    return classes;
}

long long scaled(long long v, const pachgap::Rat& s) {
    pachgap::Int r = (pachgap::Int(v) * pachgap::rat_num(s)) / pachgap::rat_den(s);
    if (r < 1) return 1;
    if (r > pachgap::Int(4'000'000'000'000'000'000LL)) return 4'000'000'000'000'000'000LL;
    return static_cast<long long>(r);
}

} // namespace

extern "C" {

const char* pg_version(void) { return "1.0.0"; }

const char* pg_last_error(void) { return g_last_error.c_str(); }

void pg_string_free(char* s) { std::free(s); }

pg_status pg_budget_scale(const char* rational) {
    return guarded([&] {
        require(rational != nullptr, "null scale");
        pachgap::Rat s = pachgap::rat_parse(rational);
        if (s <= 0) pachgap::throw_param("budget scale must be positive");
        pachgap::Budgets b = pachgap::budgets();
        b.subset_enum = scaled(b.subset_enum, s);
        b.partitions = scaled(b.partitions, s);
        b.chains = scaled(b.chains, s);
        b.cochain_bits = scaled(b.cochain_bits, s);
        b.flag_cap = scaled(b.flag_cap, s);
        b.verify_samples = scaled(b.verify_samples, s);
        b.lattice_vectors = scaled(b.lattice_vectors, s);
        b.lattice_elems = scaled(b.lattice_elems, s);
        pachgap::set_budgets(b);
    });
}

pg_status pg_lattice_build(int r, long long q, pg_lattice** out) {
    return guarded([&] {
        require(out != nullptr, "null output handle");
        auto h = new pg_lattice{pachgap::build_subspace_lattice(r, q)};
        *out = h;
    });
}

pg_status pg_lattice_from_json(const char* text, pg_lattice** out) {
    return guarded([&] {
        require(text != nullptr, "null input text");
        require(out != nullptr, "null output handle");
        *out = new pg_lattice{pachgap::lattice_from_json_text(text)};
    });
}

pg_status pg_lattice_to_json(const pg_lattice* L, char** out_text) {
    return guarded([&] {
        require(L != nullptr, "null lattice");
        require(out_text != nullptr, "null output");
        *out_text = dup_string(pachgap::lattice_to_json_text(L->v));
    });
}

pg_status pg_lattice_info(const pg_lattice* L, char** out_json) {
    return guarded([&] {
        require(L != nullptr, "null lattice");
        require(out_json != nullptr, "null output");
        *out_json = dup_string(pachgap::dump_json(pachgap::lattice_info_json(L->v)));
    });
}

pg_status pg_lattice_validate(const pg_lattice* L, unsigned long long seed, char** out_json) {
    return guarded([&] {
        require(L != nullptr, "null lattice");
        require(out_json != nullptr, "null output");
        auto rep = pachgap::validate_lattice(L->v, seed);
        *out_json = dup_string(pachgap::dump_json(pachgap::validation_json(rep)));
    });
}

void pg_lattice_free(pg_lattice* L) { delete L; }

pg_status pg_prime_window(long long n, int d, long long* out_q, char** out_json) {
    return guarded([&] {
        pachgap::PrimeWindow w = pachgap::find_prime_q(n, d);
        if (out_q) *out_q = w.q;
        if (out_json) {
            pachgap::ordered_json j;
            j["n"] = w.n;
            j["d"] = w.d;
            j["q"] = w.q;
            j["lower_pow"] = pachgap::int_str(w.lower_pow);
            j["upper_pow"] = pachgap::int_str(w.upper_pow);
            *out_json = dup_string(pachgap::dump_json(j));
        }
    });
}

pg_status pg_expansion_table(const pg_lattice* L, long long m_lo, long long m_hi, int as_csv,
                             char** out_text) {
    return guarded([&] {
        require(L != nullptr, "null lattice");
        require(out_text != nullptr, "null output");
        pachgap::BipartiteIncidence G = pachgap::incidence_from_lattice(L->v);
        if (as_csv)
            *out_text = dup_string(pachgap::expansion_csv(G, m_lo, m_hi));
        else
            *out_text = dup_string(pachgap::dump_json(pachgap::expansion_json(G, m_lo, m_hi)));
    });
}

pg_status pg_corradi_chain(long long m, long long q, int d, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null output");
        auto c = pachgap::corradi_chain(m, q, d);
        *out_json = dup_string(pachgap::dump_json(pachgap::corradi_chain_json(c)));
    });
}

pg_status pg_map_build(const pg_lattice* L, unsigned long long seed, int exhaustive,
                       pg_map** out) {
    return guarded([&] {
        require(L != nullptr, "null lattice");
        require(out != nullptr, "null output handle");
        auto mode = exhaustive ? pachgap::VerifyMode::Exhaustive : pachgap::VerifyMode::Sampled;
        *out = new pg_map{
            pachgap::build_pl_map(L->v, seed, mode, pachgap::budgets().verify_samples)};
    });
}

pg_status pg_map_summary(const pg_map* M, char** out_json) {
    return guarded([&] {
        require(M != nullptr, "null map");
        require(out_json != nullptr, "null output");
        pachgap::ordered_json j;
        j["d"] = M->v.d;
        j["lattice"] = pachgap::lattice_info_json(M->v.L);
        j["embedding"] = pachgap::embedding_json(M->v.emb);
        *out_json = dup_string(pachgap::dump_json(j));
    });
}

pg_status pg_map_cover(const pg_map* M, const char* point, char** out_json) {
    return guarded([&] {
        require(M != nullptr, "null map");
        require(out_json != nullptr, "null output");
        pachgap::Point u = parse_point(point, M->v.d);
        auto cert = pachgap::cover_certificate(M->v, u);
        pachgap::ordered_json j;
        j["at"] = pachgap::point_json(u);
        j["certificate"] = pachgap::certificate_json(cert);
        *out_json = dup_string(pachgap::dump_json(j));
    });
}

pg_status pg_map_membership(const pg_map* M, const char* point, const int* atom_elems,
                            int n_atoms, char** out_json) {
    return guarded([&] {
        require(M != nullptr, "null map");
        require(atom_elems != nullptr && n_atoms > 0, "need at least one atom");
        require(out_json != nullptr, "null output");
        pachgap::Point u = parse_point(point, M->v.d);
        std::vector<int> sigma(atom_elems, atom_elems + n_atoms);
        auto fm = pachgap::point_in_face_image(M->v, u, sigma);
        pachgap::ordered_json j;
        j["at"] = pachgap::point_json(u);
        j["atoms"] = sigma;
        j["membership"] = pachgap::membership_json(fm);
        *out_json = dup_string(pachgap::dump_json(j));
    });
}

void pg_map_free(pg_map* M) { delete M; }

pg_status pg_tau(const pg_map* M, int n, unsigned long long seed, char** out_json) {
    return guarded([&] {
        require(M != nullptr, "null map");
        require(out_json != nullptr, "null output");
        auto rep = pachgap::tau_workbench(M->v, n, seed);
        *out_json = dup_string(pachgap::dump_json(pachgap::tau_section_json(M->v, rep, nullptr)));
    });
}

pg_status pg_bound_chain(long long n, int d, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null output");
        auto ch = pachgap::tau_bound_chain(n, d);
        *out_json = dup_string(pachgap::dump_json(pachgap::chain_json(ch)));
    });
}

pg_status pg_complex_parse(const char* text, pg_complex** out) {
    return guarded([&] {
        require(text != nullptr, "null input text");
        require(out != nullptr, "null output handle");
        *out = new pg_complex{pachgap::parse_complex_text(text)};
    });
}

pg_status pg_complex_transversal(const int* sizes, int k, pg_complex** out) {
    return guarded([&] {
        require(sizes != nullptr && k > 0, "need at least one class size");
        require(out != nullptr, "null output handle");
        std::vector<int> s(sizes, sizes + k);
        *out = new pg_complex{
            pachgap::build_weighted_complex(pachgap::transversal_top_faces(s))};
    });
}

pg_status pg_complex_info(const pg_complex* X, char** out_json) {
    return guarded([&] {
        require(X != nullptr, "null complex");
        require(out_json != nullptr, "null output");
        pachgap::ordered_json j;
        j["top_dim"] = X->v.D;
        j["top_faces"] = X->v.f_top;
        std::vector<int> level_sizes;
        for (int k = 0; k <= X->v.D; ++k) level_sizes.push_back(X->v.n_faces(k));
        j["level_sizes"] = level_sizes;
        j["reduced_betti"] = pachgap::reduced_betti(X->v);
        *out_json = dup_string(pachgap::dump_json(j));
    });
}

pg_status pg_complex_hk(const pg_complex* X, int k, char** out_json) {
    return guarded([&] {
        require(X != nullptr, "null complex");
        require(out_json != nullptr, "null output");
        auto h = pachgap::cosystolic_expansion(X->v, k);
        auto betti = pachgap::reduced_betti(X->v);
        *out_json = dup_string(pachgap::dump_json(pachgap::hk_result_json(h, betti)));
    });
}

void pg_complex_free(pg_complex* X) { delete X; }

pg_status pg_hypergraph_parse(const char* text, pg_hypergraph** out) {
    return guarded([&] {
        require(text != nullptr, "null input text");
        require(out != nullptr, "null output handle");
        *out = new pg_hypergraph{pachgap::parse_hypergraph_text(text)};
    });
}

pg_status pg_hypergraph_text(const pg_hypergraph* H, char** out_text) {
    return guarded([&] {
        require(H != nullptr, "null hypergraph");
        require(out_text != nullptr, "null output");
        *out_text = dup_string(pachgap::hypergraph_text(H->v));
    });
}

pg_status pg_hypergraph_extract(const pg_hypergraph* H, int m, char** out_json) {
    return guarded([&] {
        require(H != nullptr, "null hypergraph");
        require(out_json != nullptr, "null output");
        auto b = pachgap::extract_box(H->v, m);
        pachgap::ordered_json j;
        j["m_requested"] = m;
        j["found"] = bool(b);
        if (b) j["box"] = pachgap::hbox_json(H->v, *b);
        *out_json = dup_string(pachgap::dump_json(j));
    });
}

pg_status pg_hypergraph_max_box(const pg_hypergraph* H, char** out_json) {
    return guarded([&] {
        require(H != nullptr, "null hypergraph");
        require(out_json != nullptr, "null output");
        auto b = pachgap::max_box_exact(H->v);
        *out_json = dup_string(pachgap::dump_json(pachgap::hbox_json(H->v, b)));
    });
}

void pg_hypergraph_free(pg_hypergraph* H) { delete H; }

pg_status pg_baseline(const char* mode, const char* points_text, unsigned long long seed,
                      char** out_json) {
    return guarded([&] {
        require(mode != nullptr, "null mode");
        require(out_json != nullptr, "null output");
        auto classes = parse_classes(points_text);
        auto rep = pachgap::affine_baseline(classes, mode, seed);
        *out_json = dup_string(pachgap::dump_json(pachgap::baseline_json(rep)));
    });
}

pg_status pg_run_all(unsigned long long seed, char** out_json) {
    return guarded([&] {
        require(out_json != nullptr, "null output");
        *out_json = dup_string(pachgap::dump_json(pachgap::run_all(seed)));
    });
}

} // extern "C"
