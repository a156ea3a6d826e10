#include "core/plmap.hpp"

#include <algorithm>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/geometry.hpp"

namespace pachgap {

namespace {

std::vector<int> atom_ids_below(const GradedLattice& L, int x) {
    std::vector<int> out;
    Bitset b = L.atoms_below(x);
    for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i))
        out.push_back(L.atoms[int(i)]);
    return out;
}

} // namespace

int PLMap::join_of(const std::vector<int>& atom_elems) const {
    if (atom_elems.empty()) throw_param("join of an empty atom set");
    int cur = -1;
    for (int a : atom_elems) {
        if (a < 0 || a >= L.size()) throw_param("atom id out of range");
        cur = cur < 0 ? a : L.join(cur, a);
    }
    return cur;
}

Point PLMap::vertex_image(const std::vector<int>& atom_elems) const {
    return emb.point_of(join_of(atom_elems));
}

PLMap build_pl_map(const GradedLattice& L, uint64_t seed, VerifyMode mode, long long samples) {
    PLMap M;
    M.L = L;
    M.d = L.dim_d();
    if (M.d < 1) throw_precondition("map needs top rank at least 2");
    M.emb = sample_generic_embedding(L, M.d, seed, mode, samples);
    return M;
}

FaceMembership point_in_face_image(const PLMap& M, const Point& u, const std::vector<int>& sigma) {
    const GradedLattice& L = M.L;
    if (sigma.empty()) throw_param("empty atom set");
    if (int(u.size()) != M.d) throw_param("query point has the wrong dimension");
    std::vector<int> s = sigma;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw_param("repeated atom id");
    for (int a : s) {
        if (a < 0 || a >= L.size() || L.rank_of(a) != 1) throw_param("not an atom id");
    }
    long long flags = 1;
    for (int i = 2; i <= int(s.size()); ++i) {
        flags *= i;
        if (flags > budgets().flag_cap) throw_capacity("too many flags for this face");
    }

    FaceMembership best;
    std::vector<int> perm = s;
    do {
        // prefix joins collapse to a chain; repeated joins are consecutive
        std::vector<int> chain;
        int cur = -1;
        for (int a : perm) {
            cur = cur < 0 ? a : L.join(cur, a);
            if (chain.empty() || chain.back() != cur) chain.push_back(cur);
        }
        std::vector<Point> pts;
        pts.reserve(chain.size());
        for (int x : chain) pts.push_back(M.emb.point_of(x));
        auto w = conv_witness(pts, u);
        if (!w) continue;
        FaceMembership fm;
        fm.member = true;
        fm.interior = w->support.size() == pts.size();
        for (int k = 1; k <= int(perm.size()); ++k) {
            std::vector<int> pre(perm.begin(), perm.begin() + k);
            std::sort(pre.begin(), pre.end());
            fm.witness_flag.push_back(std::move(pre));
        }
        fm.witness_chain = chain;
        for (int idx : w->support) fm.carrier.push_back(chain[idx]);
        if (fm.interior) return fm;
        if (!best.member) best = std::move(fm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

CoverReport coatom_cover_count(const PLMap& M, const Point& u) {
    CoverReport r;
    for (int c : M.L.coatoms) {
        auto fm = point_in_face_image(M, u, atom_ids_below(M.L, c));
        if (!fm.member) continue;
        ++r.count;
        if (fm.interior) ++r.interior_count;
        r.covering.push_back(c);
    }
    return r;
}

CoverCertificate cover_certificate(const PLMap& M, const Point& u) {
    const GradedLattice& L = M.L;
    CoverCertificate cert;
    cert.valid = true;
    auto fail = [&](const std::string& why) {
        cert.valid = false;
        if (cert.diagnostic.empty()) cert.diagnostic = why;
    };

    for (int c : L.coatoms) {
        auto fm = point_in_face_image(M, u, atom_ids_below(L, c));
        if (!fm.member) continue;
        cert.covering.push_back(c);
        cert.carriers.push_back(fm.carrier);
        ++cert.count;
        if (fm.interior) ++cert.interior_count;
        if (fm.carrier.size() < fm.witness_chain.size()) ++cert.boundary_cases;
    }

    // audit each carrier: a chain below its coatom, holding u with strictly
    // positive coordinates, and no longer than d
    for (size_t i = 0; i < cert.carriers.size(); ++i) {
        const auto& eta = cert.carriers[i];
        if (eta.empty()) {
            fail("empty carrier");
            continue;
        }
        if (int(eta.size()) > M.d) fail("carrier has more than d elements");
        for (size_t k = 0; k + 1 < eta.size(); ++k) {
            if (!(L.rank_of(eta[k]) < L.rank_of(eta[k + 1])) || !L.leq(eta[k], eta[k + 1]))
                fail("carrier is not an increasing chain");
        }
        for (int x : eta) {
            if (!L.leq(x, cert.covering[i])) fail("carrier leaves its coatom");
        }
        std::vector<Point> pts;
        for (int x : eta) pts.push_back(M.emb.point_of(x));
        auto w = conv_witness(pts, u);
        if (!w || w->support.size() != pts.size()) fail("carrier is not minimal for the point");
    }

    // distinct carriers, then a greedy maximal pairwise disjoint subfamily
    std::vector<std::vector<int>> tu = cert.carriers;
    std::sort(tu.begin(), tu.end());
    tu.erase(std::unique(tu.begin(), tu.end()), tu.end());
    std::vector<char> used(L.size(), 0);
    for (const auto& eta : tu) {
        bool free = true;
        for (int x : eta)
            if (used[x]) free = false;
        if (!free) continue;
        for (int x : eta) used[x] = 1;
        cert.t_prime.push_back(eta);
    }
    if (int(cert.t_prime.size()) > M.d) fail("disjoint carrier family has more than d members");

    Int max_deg = 0;
    for (size_t i = 0; i < L.atoms.size(); ++i) {
        Int deg = Int(L.coatoms_above_atom(int(i)).count());
        if (deg > max_deg) max_deg = deg;
    }
    cert.global_bound = Int(M.d) * max_deg;

    for (const auto& eta : cert.t_prime) {
        Bitset below = L.atoms_below(eta[0]);
        auto fi = below.find_first();
        if (fi == Bitset::npos) {
            fail("carrier minimum has no atom below it");
            cert.atom_of.push_back(-1);
            continue;
        }
        int a = L.atoms[int(fi)];
        for (int x : eta) {
            if (!L.leq(a, x)) fail("chosen atom escapes the carrier chain");
        }
        cert.atom_of.push_back(a);
        cert.sum_bound += Int(L.coatoms_above_atom(int(fi)).count());
    }

    for (size_t i = 0; i < cert.covering.size(); ++i) {
        int pick = -1, shared = -1;
        for (size_t j = 0; j < cert.t_prime.size() && pick < 0; ++j) {
            for (int x : cert.carriers[i]) {
                if (std::find(cert.t_prime[j].begin(), cert.t_prime[j].end(), x) !=
                    cert.t_prime[j].end()) {
                    pick = int(j);
                    shared = x;
                    break;
                }
            }
        }
        cert.assignment.push_back(pick);
        cert.shared_elem.push_back(shared);
        if (pick < 0) {
            fail("carrier meets no member of the disjoint family");
            continue;
        }
        if (cert.atom_of[pick] >= 0 && !L.leq(cert.atom_of[pick], cert.covering[i]))
            fail("assigned atom is not below the covering coatom");
    }

    if (Int(cert.count) > cert.sum_bound && !cert.covering.empty())
        fail("covering count exceeds the carrier sum bound");
    if (cert.valid && cert.sum_bound > cert.global_bound)
        fail("carrier sum bound exceeds the global bound");
    return cert;
}

} // namespace pachgap
