#include "core/report.hpp"

#include <algorithm>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/geometry.hpp"
#include "core/rng.hpp"

namespace pachgap {

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json point_json(const Point& p) {
    ordered_json a = ordered_json::array();
    for (const auto& c : p) a.push_back(rat_str(c));
    return a;
}

ordered_json lattice_info_json(const GradedLattice& L) {
    ordered_json j;
    j["q"] = L.q;
    j["r"] = L.top_rank;
    j["elements"] = L.size();
    j["profile"] = L.rank_profile();
    j["atoms"] = int(L.atoms.size());
    j["coatoms"] = int(L.coatoms.size());
    return j;
}

ordered_json validation_json(const ValidationReport& r) {
    ordered_json j;
    j["all_pass"] = r.all_pass;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
}

ordered_json embedding_json(const GenericEmbedding& e) {
    ordered_json j;
    j["seed"] = e.seed;
    j["d"] = e.d;
    j["mode"] = e.log.mode == VerifyMode::Exhaustive ? "exhaustive" : "sampled";
    j["families_tested"] = e.log.families_tested;
    j["retries"] = e.log.retries;
    j["ok"] = e.log.ok;
    ordered_json pts = ordered_json::array();
    for (size_t i = 0; i < e.ground.size(); ++i) {
        ordered_json row;
        row["elem"] = e.ground[i];
        row["at"] = point_json(e.pts[i]);
        pts.push_back(row);
    }
    j["points"] = pts;
    return j;
}

ordered_json expansion_json(const BipartiteIncidence& G, long long m_lo, long long m_hi) {
    ordered_json j;
    j["atoms"] = G.atoms();
    j["coatoms"] = G.coatoms();
    if (G.q > 0) {
        j["q"] = G.q;
        j["d"] = G.d;
    }
    ordered_json rows = ordered_json::array();
    for (long long m = m_lo; m <= m_hi; ++m) {
        ExpansionRecord r = min_vertex_expansion(G, m);
        ordered_json e;
        e["m"] = r.m;
        e["min_gamma"] = r.min_gamma;
        if (G.q > 0) e["corradi"] = rat_str(r.corradi);
        if (G.d >= 1) e["rhs21"] = rat_str(r.rhs21);
        e["witness"] = r.witness;
        rows.push_back(e);
    }
    j["rows"] = rows;
    return j;
}

ordered_json corradi_chain_json(const CorradiChain& c) {
    ordered_json j;
    j["b1"] = rat_str(c.b1);
    j["b1_alt"] = rat_str(c.b1_alt);
    j["alt_equal"] = c.alt_equal;
    j["b2"] = rat_str(c.b2);
    j["b3"] = rat_str(c.b3);
    j["s12"] = c.s12;
    j["s23"] = c.s23;
    j["s34"] = c.s34;
    j["all_hold"] = c.all_hold;
    return j;
}

ordered_json membership_json(const FaceMembership& fm) {
    ordered_json j;
    j["member"] = fm.member;
    j["interior"] = fm.interior;
    j["witness_chain"] = fm.witness_chain;
    j["carrier"] = fm.carrier;
    ordered_json flag = ordered_json::array();
    for (const auto& s : fm.witness_flag) flag.push_back(s);
    j["witness_flag"] = flag;
    return j;
}

ordered_json cover_json(const CoverReport& r) {
    ordered_json j;
    j["count"] = r.count;
    j["interior_count"] = r.interior_count;
    j["covering"] = r.covering;
    return j;
}

ordered_json certificate_json(const CoverCertificate& c) {
    ordered_json j;
    j["valid"] = c.valid;
    if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
    j["count"] = c.count;
    j["interior_count"] = c.interior_count;
    j["covering"] = c.covering;
    ordered_json carriers = ordered_json::array();
    for (const auto& e : c.carriers) carriers.push_back(e);
    j["carriers"] = carriers;
    ordered_json tp = ordered_json::array();
    for (const auto& e : c.t_prime) tp.push_back(e);
    j["t_prime"] = tp;
    j["atom_of"] = c.atom_of;
    j["assignment"] = c.assignment;
    j["shared_elem"] = c.shared_elem;
    j["sum_bound"] = int_str(c.sum_bound);
    j["global_bound"] = int_str(c.global_bound);
    j["boundary_cases"] = c.boundary_cases;
    return j;
}

ordered_json box_json(const BoxResult& b) {
    ordered_json j;
    j["m"] = b.m;
    ordered_json parts = ordered_json::array();
    for (const auto& p : b.parts) parts.push_back(p);
    j["parts"] = parts;
    j["at"] = point_json(b.at);
    return j;
}

ordered_json box_analysis_json(const BoxCoatomAnalysis& a) {
    ordered_json j;
    j["m"] = a.m;
    j["gamma_sizes"] = a.gamma_sizes;
    j["common"] = a.common;
    j["min_gamma_m"] = a.min_gamma_m;
    j["incl_excl_lower"] = int_str(a.incl_excl_lower);
    j["cover_upper"] = int_str(a.cover_upper);
    j["implied_bound"] = rat_str(a.implied_bound);
    j["cover_count"] = a.cover_count;
    j["common_covers"] = a.common_covers;
    j["incl_excl_holds"] = a.incl_excl_holds;
    j["cover_holds"] = a.cover_holds;
    j["gamma_bound_holds"] = a.gamma_bound_holds;
    return j;
}

ordered_json tau_json(const TauReport& r) {
    ordered_json j;
    j["d"] = r.d;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["partitions_total"] = int_str(r.partitions_total);
    j["partitions_tested"] = r.partitions_tested;
    j["sampled"] = r.sampled;
    j["tau_hat"] = r.tau_hat;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
        ordered_json e;
        ordered_json classes = ordered_json::array();
        for (const auto& c : row.partition.classes) classes.push_back(c);
        e["classes"] = classes;
        e["tau"] = row.tau;
        e["candidates"] = row.candidates;
        e["box"] = box_json(row.box);
        rows.push_back(e);
    }
    j["rows"] = rows;
    return j;
}

ordered_json tau_section_json(const PLMap& M, const TauReport& r, int* violations) {
    ordered_json sec = tau_json(r);
    ordered_json analyses = ordered_json::array();
    std::vector<size_t> picks;
    for (size_t i = 0; i < r.rows.size() && picks.size() < 4; ++i)
        if (r.rows[i].box.m >= 1) picks.push_back(i);
    for (size_t i = 0; i < r.rows.size(); ++i)
        if (r.rows[i].tau == r.tau_hat) {
            if (std::find(picks.begin(), picks.end(), i) == picks.end()) picks.push_back(i);
            break;
        }
    for (size_t i : picks) {
        BoxCoatomAnalysis a = box_coatom_analysis(M, r.rows[i].box);
        if (violations && (!a.incl_excl_holds || !a.cover_holds || !a.gamma_bound_holds))
            ++*violations;
        ordered_json e = box_analysis_json(a);
        e["partition_index"] = (long long)i;
        analyses.push_back(e);
    }
    sec["box_analyses"] = analyses;
    return sec;
}

ordered_json chain_json(const TauBoundChain& ch) {
    ordered_json j;
    j["d"] = ch.d;
    j["n"] = ch.n;
    ordered_json w;
    w["q"] = ch.window.q;
    w["lower_pow"] = int_str(ch.window.lower_pow);
    w["upper_pow"] = int_str(ch.window.upper_pow);
    j["window"] = w;
    ordered_json steps = ordered_json::array();
    for (const auto& s : ch.steps) {
        ordered_json e;
        e["label"] = s.label;
        e["lhs"] = s.lhs;
        e["rel"] = s.rel;
        e["rhs"] = s.rhs;
        e["holds"] = s.holds;
        steps.push_back(e);
    }
    j["steps"] = steps;
    ordered_json fb;
    fb["coeff"] = int_str(ch.final_bound.coeff);
    fb["radicand"] = int_str(ch.final_bound.radicand);
    fb["degree"] = ch.final_bound.degree;
    fb["exact"] = ch.final_bound.exact;
    fb["value_floor"] = int_str(ch.final_bound.value_floor);
    j["final_bound"] = fb;
    j["m_refuted"] = int_str(ch.m_refuted);
    j["all_hold"] = ch.all_hold;
    return j;
}

ordered_json hk_result_json(const HkResult& h, const std::vector<long long>& betti) {
    ordered_json e;
    e["k"] = h.k;
    e["defined"] = h.defined;
    if (h.defined) {
        e["h"] = rat_str(h.h);
        e["minimizer"] = h.minimizer;
        e["norm_d"] = rat_str(h.minimizer_norm_d);
        e["norm_class"] = rat_str(h.minimizer_norm_class);
    }
    e["tested"] = h.tested;
    // vanishing expansion must line up with nontrivial cohomology, and an
    // undefined ratio with a vanishing one
    bool zero = h.defined && h.h == 0;
    bool nontrivial = betti[h.k] > 0;
    e["matches_cohomology"] = h.defined ? (zero == nontrivial) : !nontrivial;
    return e;
}

ordered_json hk_case_json(const std::string& name, const WeightedComplex& X,
                          const std::vector<HkResult>& hs, const std::vector<long long>& betti) {
    ordered_json j;
    j["name"] = name;
    j["top_dim"] = X.D;
    j["top_faces"] = X.f_top;
    std::vector<int> level_sizes;
    for (int k = 0; k <= X.D; ++k) level_sizes.push_back(X.n_faces(k));
    j["level_sizes"] = level_sizes;
    ordered_json rows = ordered_json::array();
    bool consistent = true;
    for (const auto& h : hs) {
        ordered_json e = hk_result_json(h, betti);
        consistent = consistent && e["matches_cohomology"].get<bool>();
        rows.push_back(e);
    }
    j["h"] = rows;
    j["reduced_betti"] = betti;
    j["consistent"] = consistent;
    return j;
}

ordered_json hbox_json(const MultipartiteHypergraph& H, const HBox& b) {
    ordered_json j;
    std::vector<int> sizes;
    for (int c = 0; c < H.parts(); ++c) sizes.push_back(H.class_size(c));
    j["class_sizes"] = sizes;
    j["edges"] = H.edge_count();
    j["m"] = b.m;
    ordered_json parts = ordered_json::array();
    for (int c = 0; c < int(b.parts.size()); ++c) {
        ordered_json lbl = ordered_json::array();
        for (int v : b.parts[c]) lbl.push_back(H.labels[c][v]);
        parts.push_back(lbl);
    }
    j["parts"] = parts;
    j["complete"] = b.m == 0 || box_complete(H, b.parts);
    return j;
}

ordered_json baseline_json(const AffineBaselineReport& r) {
    ordered_json j;
    j["mode"] = r.mode;
    j["d"] = r.d;
    j["n"] = r.n;
    j["seed"] = r.seed;
    j["perturbed"] = r.perturbed;
    j["m"] = r.m;
    ordered_json parts = ordered_json::array();
    for (const auto& p : r.parts) parts.push_back(p);
    j["parts"] = parts;
    if (!r.at.empty()) j["at"] = point_json(r.at);
    j["simplices"] = r.simplices;
    return j;
}

ordered_json run_all(uint64_t seed) {
    int violations = 0;
    ordered_json doc;
    doc["format"] = "pachgap-report";
    doc["version"] = "1.0.0";
    doc["seed"] = seed;

    GradedLattice L = build_subspace_lattice(3, 2);
    ValidationReport val = validate_lattice(L, seed);
    if (!val.all_pass) ++violations;
    {
        ordered_json sec = lattice_info_json(L);
        sec["validation"] = validation_json(val);
        doc["lattice"] = sec;
    }

    BipartiteIncidence inc = incidence_from_lattice(L);
    {
        ordered_json sec = expansion_json(inc, 1, inc.atoms());
        sec["chain_sample"] = corradi_chain_json(corradi_chain(2, 2, 2));
        doc["expansion"] = sec;
    }

    PLMap M = build_pl_map(L, seed, VerifyMode::Exhaustive, budgets().verify_samples);
    if (!M.emb.log.ok) ++violations;
    doc["embedding"] = embedding_json(M.emb);

    {
        long long maxdeg = 0;
        for (size_t i = 0; i < L.atoms.size(); ++i)
            maxdeg = std::max(maxdeg, (long long)L.coatoms_above_atom(int(i)).count());
        Int bound = Int(M.d) * maxdeg;

        std::vector<std::pair<std::string, Point>> samples;
        samples.emplace_back("top_vertex", M.emb.point_of(L.top));
        {
            std::vector<Point> atom_pts;
            for (int a : L.atoms) atom_pts.push_back(M.emb.point_of(a));
            samples.emplace_back("atom_barycenter", barycenter(atom_pts));
        }
        SplitMix64 rng = substream(seed, 0x5a17);
        for (int i = 0; i < 5; ++i) {
            Point u;
            for (int c = 0; c < M.d; ++c) u.push_back(Rat(Int(rng.u16()), Int(65536)));
            samples.emplace_back("random_" + std::to_string(i), u);
        }

        ordered_json sec;
        sec["bound"] = int_str(bound);
        int max_count = 0;
        ordered_json rows = ordered_json::array();
        for (const auto& [name, u] : samples) {
            CoverCertificate c = cover_certificate(M, u);
            max_count = std::max(max_count, c.count);
            if (!c.valid || Int(c.count) > bound) ++violations;
            ordered_json e;
            e["name"] = name;
            e["at"] = point_json(u);
            e["count"] = c.count;
            e["interior_count"] = c.interior_count;
            e["valid"] = c.valid;
            if (!c.diagnostic.empty()) e["diagnostic"] = c.diagnostic;
            e["t_prime_size"] = int(c.t_prime.size());
            e["sum_bound"] = int_str(c.sum_bound);
            e["boundary_cases"] = c.boundary_cases;
            rows.push_back(e);
        }
        sec["samples"] = rows;
        sec["max_count"] = max_count;
        doc["map"] = sec;
    }

    TauReport tau = tau_workbench(M, 2, seed);
    doc["tau"] = tau_section_json(M, tau, &violations);

    {
        TauBoundChain ch = tau_bound_chain(16, 2);
        if (!ch.all_hold) ++violations;
        doc["chain"] = chain_json(ch);
    }

    {
        ordered_json cases = ordered_json::array();
        auto run_case = [&](const std::string& name, const WeightedComplex& X) {
            std::vector<HkResult> hs;
            for (int k = 0; k <= X.D; ++k) hs.push_back(cosystolic_expansion(X, k));
            auto betti = reduced_betti(X);
            ordered_json e = hk_case_json(name, X, hs, betti);
            if (!e["consistent"].get<bool>()) ++violations;
            cases.push_back(e);
        };
        run_case("triangle", build_weighted_complex({{0, 1, 2}}));
        run_case("hollow_triangle", build_weighted_complex({{0, 1}, {0, 2}, {1, 2}}));
        run_case("four_cycle", build_weighted_complex(transversal_top_faces({2, 2})));
        run_case("octahedron", build_weighted_complex(transversal_top_faces({2, 2, 2})));
        doc["hk"] = cases;
    }

    {
        SplitMix64 rng = substream(seed, 0xb07);
        MultipartiteHypergraph H = make_hypergraph({4, 4, 4});
        std::vector<int> t(3, 0);
        bool more = true;
        while (more) {
            if (rng.next() & 1) H.edges.push_back(t);
            more = false;
            for (size_t c = 0; c < t.size(); ++c) {
                if (++t[c] < 4) {
                    more = true;
                    break;
                }
                t[c] = 0;
            }
        }
        H.finalize();
        HBox b = max_box_exact(H);
        ordered_json e = hbox_json(H, b);
        if (!e["complete"].get<bool>()) ++violations;
        doc["extract"] = e;
    }

    {
        ordered_json sec;
        std::vector<std::vector<Point>> classes(2);
        for (int i = 0; i < 4; ++i) {
            classes[0].push_back({Rat(i)});
            classes[1].push_back({Rat(10 + i)});
        }
        AffineBaselineReport pr = affine_baseline(classes, "pach", seed);
        if (pr.m != 4) ++violations;
        ordered_json pj = baseline_json(pr);
        pj["expected_m"] = 4;
        sec["interval_pach"] = pj;

        SplitMix64 rng = substream(seed, 0xba5e);
        std::vector<std::vector<Point>> one(1);
        for (int i = 0; i < 5; ++i) {
            Point p;
            for (int c = 0; c < 2; ++c) p.push_back(Rat(Int(rng.u16()), Int(65536)));
            one[0].push_back(p);
        }
        AffineBaselineReport fs = affine_baseline(one, "first_selection", seed);
        sec["first_selection"] = baseline_json(fs);
        doc["baseline"] = sec;
    }

    doc["violations"] = violations;
    return doc;
}

} // namespace pachgap
