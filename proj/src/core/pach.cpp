#include "core/pach.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/geometry.hpp"
#include "core/rng.hpp"

namespace pachgap {

namespace {

struct PointLess {
    bool operator()(const Point& a, const Point& b) const { return point_cmp(a, b) < 0; }
};

Int binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

bool advance_mixed(std::vector<int>& idx, int radix) {
    for (size_t i = 0; i < idx.size(); ++i) {
        if (++idx[i] < radix) return true;
        idx[i] = 0;
    }
    return false;
}

bool next_combination(std::vector<int>& c, int n) {
    int m = int(c.size());
    for (int i = m - 1; i >= 0; --i) {
        if (c[i] < n - (m - i)) {
            ++c[i];
            for (int j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void partition_rec(std::vector<int>& pool, int n, std::vector<std::vector<int>>& acc,
                   std::vector<PartitionSpec>& out) {
    if (pool.empty()) {
        PartitionSpec P;
        P.classes = acc;
        out.push_back(std::move(P));
        return;
    }
    // the least remaining element anchors the next class, so class order is
    // forced and every unordered partition shows up exactly once
    int head = pool[0];
    std::vector<int> rest(pool.begin() + 1, pool.end());
    if (int(rest.size()) < n - 1) return;
    std::vector<int> comb(n - 1);
    for (int i = 0; i < n - 1; ++i) comb[i] = i;
    bool more = true;
    while (more) {
        std::vector<int> cls{head};
        std::vector<char> taken(rest.size(), 0);
        for (int i : comb) {
            cls.push_back(rest[i]);
            taken[i] = 1;
        }
        std::vector<int> next_pool;
        for (size_t i = 0; i < rest.size(); ++i)
            if (!taken[i]) next_pool.push_back(rest[i]);
        acc.push_back(std::move(cls));
        partition_rec(next_pool, n, acc, out);
        acc.pop_back();
        more = n > 1 ? next_combination(comb, int(rest.size())) : false;
    }
}

// chains the flag of a permutation collapses to: prefix joins, consecutive
// repeats dropped
std::vector<int> flag_chain(const GradedLattice& L, const std::vector<int>& perm) {
    std::vector<int> chain;
    int cur = -1;
    for (int a : perm) {
        cur = cur < 0 ? a : L.join(cur, a);
        if (chain.empty() || chain.back() != cur) chain.push_back(cur);
    }
    return chain;
}

} // namespace

Int count_partitions(const GradedLattice& L, int n) {
    if (n < 1) throw_param("class size must be positive");
    int k = L.dim_d() + 1;
    long long need = (long long)k * n;
    long long A = (long long)L.atoms.size();
    if (A < need) throw_precondition("not enough atoms for the classes");
    Int total = binom(A, need);
    Int arrange = 1;
    for (long long i = 2; i <= need; ++i) arrange *= i;
    Int nf = 1;
    for (long long i = 2; i <= n; ++i) nf *= i;
    Int div = 1;
    for (int i = 0; i < k; ++i) div *= nf;
    for (int i = 2; i <= k; ++i) div *= i;
    return total * arrange / div;
}

std::vector<PartitionSpec> enumerate_partitions(const GradedLattice& L, int n, long long cap,
                                                bool* truncated) {
    if (truncated) *truncated = false;
    Int total = count_partitions(L, n);
    if (total > cap) {
        if (truncated) *truncated = true;
        return {};
    }
    int k = L.dim_d() + 1;
    int need = k * n;
    int A = int(L.atoms.size());
    std::vector<PartitionSpec> out;
    std::vector<int> sub(need);
    for (int i = 0; i < need; ++i) sub[i] = i;
    bool more = true;
    while (more) {
        std::vector<int> pool;
        for (int i : sub) pool.push_back(L.atoms[i]);
        std::vector<std::vector<int>> acc;
        partition_rec(pool, n, acc, out);
        more = next_combination(sub, A);
    }
    return out;
}

PartitionSpec sample_partition(const GradedLattice& L, int n, uint64_t seed, uint64_t index) {
    if (n < 1) throw_param("class size must be positive");
    int k = L.dim_d() + 1;
    int need = k * n;
    int A = int(L.atoms.size());
    if (A < need) throw_precondition("not enough atoms for the classes");
    SplitMix64 rng = substream(seed, (0x5041ULL << 32) + index);
    std::vector<int> idx(A);
    for (int i = 0; i < A; ++i) idx[i] = i;
    for (int i = 0; i < need; ++i) {
        int j = i + int(rng.below(uint64_t(A - i)));
        std::swap(idx[i], idx[j]);
    }
    std::vector<int> chosen(idx.begin(), idx.begin() + need);
    for (int i = need - 1; i > 0; --i) {
        int j = int(rng.below(uint64_t(i + 1)));
        std::swap(chosen[i], chosen[j]);
    }
    PartitionSpec P;
    for (int c = 0; c < k; ++c) {
        std::vector<int> cls;
        for (int i = 0; i < n; ++i) cls.push_back(L.atoms[chosen[c * n + i]]);
        std::sort(cls.begin(), cls.end());
        P.classes.push_back(std::move(cls));
    }
    std::sort(P.classes.begin(), P.classes.end());
    return P;
}

std::vector<Point> candidate_points(const PLMap& M, const PartitionSpec& P) {
    const GradedLattice& L = M.L;
    int k = int(P.classes.size());
    if (k != M.d + 1) throw_param("partition class count must be d+1");
    int n = int(P.classes[0].size());
    for (const auto& c : P.classes)
        if (int(c.size()) != n) throw_param("classes must share one size");

    std::set<Point, PointLess> seen;
    std::vector<Point> out;
    auto add = [&](const Point& p) {
        if (seen.insert(p).second) out.push_back(p);
    };

    // joins of partial transversals
    std::vector<int> sel(k, 0);
    while (advance_mixed(sel, n + 1)) {
        std::vector<int> atoms;
        for (int c = 0; c < k; ++c)
            if (sel[c] > 0) atoms.push_back(P.classes[c][sel[c] - 1]);
        add(M.emb.point_of(M.join_of(atoms)));
    }

    // flag simplices of the full transversals: barycenters now, edges kept for
    // the pairwise crossing pass
    std::vector<std::pair<Point, Point>> edges;
    std::vector<int> t(k, 0);
    bool more = true;
    while (more) {
        std::vector<int> sigma;
        for (int c = 0; c < k; ++c) sigma.push_back(P.classes[c][t[c]]);
        std::sort(sigma.begin(), sigma.end());
        do {
            std::vector<int> chain = flag_chain(L, sigma);
            std::vector<Point> pts;
            for (int x : chain) pts.push_back(M.emb.point_of(x));
            add(barycenter(pts));
            for (size_t i = 0; i < pts.size(); ++i)
                for (size_t j = i + 1; j < pts.size(); ++j) {
                    if (point_cmp(pts[i], pts[j]) <= 0)
                        edges.emplace_back(pts[i], pts[j]);
                    else
                        edges.emplace_back(pts[j], pts[i]);
                }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        more = advance_mixed(t, n);
    }

    if (M.d == 2) {
        auto less = [](const std::pair<Point, Point>& a, const std::pair<Point, Point>& b) {
            int c = point_cmp(a.first, b.first);
            if (c) return c < 0;
            return point_cmp(a.second, b.second) < 0;
        };
        std::sort(edges.begin(), edges.end(), less);
        edges.erase(std::unique(edges.begin(), edges.end(),
                                [](const auto& a, const auto& b) {
                                    return point_cmp(a.first, b.first) == 0 &&
                                           point_cmp(a.second, b.second) == 0;
                                }),
                    edges.end());
        for (size_t i = 0; i < edges.size(); ++i)
            for (size_t j = i + 1; j < edges.size(); ++j) {
                auto x = segment_intersection(edges[i].first, edges[i].second, edges[j].first,
                                              edges[j].second);
                if (x) add(*x);
            }
    }
    return out;
}

BoxResult homogeneous_box_at(const PLMap& M, const PartitionSpec& P, const Point& u) {
    int k = int(P.classes.size());
    if (k != M.d + 1) throw_param("partition class count must be d+1");
    int n = int(P.classes[0].size());
    MultipartiteHypergraph H = make_hypergraph(std::vector<int>(k, n));
    std::vector<int> t(k, 0);
    bool more = true;
    while (more) {
        std::vector<int> sigma;
        for (int c = 0; c < k; ++c) sigma.push_back(P.classes[c][t[c]]);
        if (point_in_face_image(M, u, sigma).member) H.edges.push_back(t);
        more = advance_mixed(t, n);
    }
    H.finalize();
    HBox b = max_box_exact(H);
    if (b.m > 0 && !box_complete(H, b.parts)) throw_internal("box recheck failed");
    BoxResult r;
    r.m = b.m;
    r.at = u;
    for (int c = 0; c < int(b.parts.size()); ++c) {
        std::vector<int> ids;
        for (int i : b.parts[c]) ids.push_back(P.classes[c][i]);
        r.parts.push_back(std::move(ids));
    }
    return r;
}

TauReport tau_workbench(const PLMap& M, int n, uint64_t seed) {
    TauReport R;
    R.d = M.d;
    R.n = n;
    R.seed = seed;
    R.partitions_total = count_partitions(M.L, n);
    long long cap = budgets().partitions;
    std::vector<PartitionSpec> parts;
    bool truncated = false;
    parts = enumerate_partitions(M.L, n, cap, &truncated);
    if (truncated) {
        R.sampled = true;
        for (long long i = 0; i < cap; ++i)
            parts.push_back(sample_partition(M.L, n, seed, uint64_t(i)));
    }
    R.tau_hat = INT_MAX;
    for (const auto& P : parts) {
        PartitionTau row;
        row.partition = P;
        auto cands = candidate_points(M, P);
        for (const auto& u : cands) {
            ++row.candidates;
            BoxResult b = homogeneous_box_at(M, P, u);
            if (b.m > row.box.m) row.box = b;
            if (row.box.m == n) break;
        }
        row.tau = row.box.m;
        R.tau_hat = std::min(R.tau_hat, row.tau);
        R.rows.push_back(std::move(row));
    }
    R.partitions_tested = (long long)R.rows.size();
    if (R.rows.empty()) R.tau_hat = 0;
    return R;
}

BoxCoatomAnalysis box_coatom_analysis(const PLMap& M, const BoxResult& box) {
    const GradedLattice& L = M.L;
    int d = M.d;
    int k = d + 1;
    if (box.m < 1) throw_param("box analysis needs a nonempty box");
    if (int(box.parts.size()) != k) throw_param("box must have d+1 parts");

    BipartiteIncidence inc = incidence_from_lattice(L);
    auto atom_index = [&](int elem) {
        auto it = std::lower_bound(L.atoms.begin(), L.atoms.end(), elem);
        if (it == L.atoms.end() || *it != elem) throw_param("box vertex is not an atom");
        return int(it - L.atoms.begin());
    };

    BoxCoatomAnalysis A;
    A.m = box.m;
    Bitset common;
    for (int c = 0; c < k; ++c) {
        if (int(box.parts[c].size()) != box.m) throw_param("box parts must have size m");
        std::vector<int> idx;
        for (int e : box.parts[c]) idx.push_back(atom_index(e));
        Bitset g = neighborhood(inc, idx);
        A.gamma_sizes.push_back((long long)g.count());
        if (c == 0)
            common = g;
        else
            common &= g;
    }
    A.common = (long long)common.count();

    ExpansionRecord er = min_vertex_expansion(inc, box.m);
    A.min_gamma_m = er.min_gamma;

    long long C = (long long)L.coatoms.size();
    long long maxdeg = 0;
    for (size_t i = 0; i < L.atoms.size(); ++i)
        maxdeg = std::max(maxdeg, (long long)L.coatoms_above_atom(int(i)).count());
    A.incl_excl_lower = Int(k) * A.min_gamma_m - Int(d) * C;
    A.cover_upper = Int(d) * maxdeg;
    A.implied_bound = Rat(Int(d) * (C + maxdeg), Int(k));

    CoverReport cov = coatom_cover_count(M, box.at);
    A.cover_count = cov.count;
    for (auto i = common.find_first(); i != Bitset::npos; i = common.find_next(i)) {
        int coatom_elem = inc.coatom_ids[int(i)];
        if (!std::binary_search(cov.covering.begin(), cov.covering.end(), coatom_elem))
            A.common_covers = false;
    }

    A.incl_excl_holds = A.incl_excl_lower <= Int(A.common);
    A.cover_holds = A.common_covers && A.common <= A.cover_count && Int(A.cover_count) <= A.cover_upper;
    A.gamma_bound_holds = Rat(A.min_gamma_m) <= A.implied_bound;
    return A;
}

TauBoundChain tau_bound_chain(long long n, int d) {
    if (d < 1) throw_param("dimension must be at least 1");
    if (n < 1) throw_param("n must be positive");
    TauBoundChain ch;
    ch.d = d;
    ch.n = n;
    ch.window = find_prime_q(n, d); // throws Precondition below (2d)^d

    long long q = ch.window.q;
    Int qd = ipow(Int(q), unsigned(d));
    Int Nd = (ipow(Int(q), unsigned(d + 1)) - 1) / (q - 1);
    Int Nd1 = (qd - 1) / (q - 1);

    auto step = [&](const std::string& label, const std::string& lhs, const std::string& rel,
                    const std::string& rhs, bool holds) {
        ch.steps.push_back({label, lhs, rel, rhs, holds});
    };

    Int need = ipow(Int(2 * d), unsigned(d));
    step("n_floor", int_str(Int(n)), ">=", int_str(need), Int(n) >= need);
    step("window_lower", int_str(qd), ">=", int_str(ch.window.lower_pow),
         qd >= ch.window.lower_pow);
    step("window_upper", int_str(qd), "<=", int_str(ch.window.upper_pow),
         qd <= ch.window.upper_pow);
    step("q_floor", int_str(Int(q)), ">=", int_str(Int(2 * d)), q >= 2 * d);
    Rat ratio(Int(q), Int(q - d));
    step("ratio_step", rat_str(ratio), "<=", "2/1", ratio <= 2);
    step("atoms_cover_classes", int_str(Nd), ">=", int_str(Int(d + 1) * n),
         Nd >= Int(d + 1) * n);
    step("count_le_2qd", int_str(Nd), "<=", int_str(2 * qd), Nd <= 2 * qd);

    ch.final_bound.coeff = Int(4) * (d + 1);
    ch.final_bound.radicand = Int(d + 1) * (d + 1) * n;
    ch.final_bound.degree = d;
    Int powed = ipow(ch.final_bound.coeff, unsigned(d)) * ch.final_bound.radicand;
    Int rt;
    ch.final_bound.exact = perfect_root(powed, unsigned(d), rt);
    ch.final_bound.value_floor = ch.final_bound.exact ? rt : iroot_floor(powed, unsigned(d));
    ch.m_refuted = ch.final_bound.value_floor + 1;

    if (d >= 2) {
        if (ch.m_refuted > Int(LLONG_MAX)) throw_capacity("refutation point out of range");
        CorradiChain cc = corradi_chain((long long)ch.m_refuted, q, d);
        step("b_chain", rat_str(cc.b1) + " >= " + rat_str(cc.b2) + " >= " + rat_str(cc.b3),
             ">=", "count - count^(1+1/d)/m", cc.all_hold);
    }

    // at m = bound + 1 the expansion floor exceeds the covering ceiling, so no
    // homogeneous box that large survives
    Rat rhs_cover(Int(d) * (Nd + Nd1), Int(d + 1));
    Rat gap = Rat(Nd) - rhs_cover;
    Rat X = Rat(ch.m_refuted) * gap;
    bool refutes = gap > 0 && cmp_rat_vs_root(X, Rat(1), ipow(Nd, unsigned(d + 1)), unsigned(d)) > 0;
    step("sandwich_refutes", rat_str(X), ">",
         int_str(ipow(Nd, unsigned(d + 1))) + "^(1/" + std::to_string(d) + ")", refutes);

    ch.all_hold = true;
    for (const auto& s : ch.steps) ch.all_hold = ch.all_hold && s.holds;
    return ch;
}

AffineBaselineReport affine_baseline(const std::vector<std::vector<Point>>& classes_in,
                                     const std::string& mode, uint64_t seed) {
    if (mode != "pach" && mode != "first_selection") throw_param("unknown baseline mode");
    if (classes_in.empty() || classes_in[0].empty()) throw_param("empty point classes");
    int dpt = int(classes_in[0][0].size());
    if (dpt < 1) throw_param("points need at least one coordinate");
    for (const auto& cls : classes_in)
        for (const auto& p : cls)
            if (int(p.size()) != dpt) throw_param("points must share one dimension");

    AffineBaselineReport R;
    R.mode = mode;
    R.d = dpt;
    R.seed = seed;
    int k = int(classes_in.size());
    if (mode == "pach") {
        if (k != dpt + 1) throw_param("pach mode needs d+1 classes");
        for (const auto& cls : classes_in)
            if (cls.size() != classes_in[0].size()) throw_param("classes must share one size");
    } else {
        if (k != 1) throw_param("first_selection mode takes a single class");
        if (int(classes_in[0].size()) < dpt + 1)
            throw_param("need at least d+1 points for a simplex");
    }
    R.n = int(classes_in[0].size());

    auto degenerate = [&](const std::vector<std::vector<Point>>& cls) {
        std::vector<Point> all;
        for (const auto& c : cls) all.insert(all.end(), c.begin(), c.end());
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = i + 1; j < all.size(); ++j)
                if (points_equal(all[i], all[j])) return true;
        if (dpt == 2 && has_collinear_triple(all)) return true;
        return false;
    };

    std::vector<std::vector<Point>> classes = classes_in;
    for (int attempt = 0; degenerate(classes); ++attempt) {
        if (attempt >= 8) throw_verify("could not perturb the input into general position");
        SplitMix64 rng = substream(seed, 0xAFF1BEULL + uint64_t(attempt));
        classes = classes_in;
        for (auto& cls : classes)
            for (auto& p : cls)
                for (auto& coord : p)
                    coord += Rat(Int(int(rng.u16()) - 32768), Int(1) << 30);
        R.perturbed = true;
    }

    std::set<Point, PointLess> seen;
    std::vector<Point> cands;
    auto add = [&](const Point& p) {
        if (seen.insert(p).second) cands.push_back(p);
    };

    if (mode == "pach") {
        int n = R.n;
        for (const auto& cls : classes)
            for (const auto& p : cls) add(p);
        std::vector<int> t(k, 0);
        bool more = true;
        long long count = 0;
        while (more) {
            std::vector<Point> pts;
            for (int c = 0; c < k; ++c) pts.push_back(classes[c][t[c]]);
            add(barycenter(pts));
            if (++count > budgets().subset_enum) throw_capacity("too many transversals");
            more = advance_mixed(t, n);
        }
        if (dpt == 2) {
            std::vector<std::pair<Point, Point>> edges;
            for (int c1 = 0; c1 < k; ++c1)
                for (int c2 = c1 + 1; c2 < k; ++c2)
                    for (const auto& p1 : classes[c1])
                        for (const auto& p2 : classes[c2]) edges.emplace_back(p1, p2);
            for (size_t i = 0; i < edges.size(); ++i)
                for (size_t j = i + 1; j < edges.size(); ++j) {
                    auto x = segment_intersection(edges[i].first, edges[i].second, edges[j].first,
                                                  edges[j].second);
                    if (x) add(*x);
                }
        }
        for (const auto& u : cands) {
            MultipartiteHypergraph H = make_hypergraph(std::vector<int>(k, n));
            std::vector<int> tt(k, 0);
            bool mm = true;
            while (mm) {
                std::vector<Point> pts;
                for (int c = 0; c < k; ++c) pts.push_back(classes[c][tt[c]]);
                if (conv_contains(pts, u)) H.edges.push_back(tt);
                mm = advance_mixed(tt, n);
            }
            H.finalize();
            HBox b = max_box_exact(H);
            if (b.m > R.m) {
                R.m = b.m;
                R.parts = b.parts;
                R.at = u;
            }
            if (R.m == n) break;
        }
        R.simplices = count;
    } else {
        const auto& pts = classes[0];
        int n = R.n;
        for (const auto& p : pts) add(p);
        if (dpt == 2) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    for (int a = i; a < n; ++a)
                        for (int b = (a == i ? j + 1 : a + 1); b < n; ++b) {
                            auto x = segment_intersection(pts[i], pts[j], pts[a], pts[b]);
                            if (x) add(*x);
                        }
        }
        Int total = binom(n, dpt + 1);
        if (total > budgets().subset_enum) throw_capacity("too many simplices");
        R.simplices = (long long)total;
        std::vector<int> comb(dpt + 1);
        for (int i = 0; i <= dpt; ++i) comb[i] = i;
        bool more = true;
        while (more) {
            std::vector<Point> sp;
            for (int i : comb) sp.push_back(pts[i]);
            add(barycenter(sp));
            more = next_combination(comb, n);
        }
        for (const auto& u : cands) {
            int depth = 0;
            for (int i = 0; i <= dpt; ++i) comb[i] = i;
            more = true;
            while (more) {
                std::vector<Point> sp;
                for (int i : comb) sp.push_back(pts[i]);
                if (conv_contains(sp, u)) ++depth;
                more = next_combination(comb, n);
            }
            if (depth > R.m) {
                R.m = depth;
                R.at = u;
            }
        }
    }
    return R;
}

} // namespace pachgap
