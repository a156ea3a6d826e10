#include "core/expander.hpp"

#include <algorithm>
#include <sstream>

#include "core/config.hpp"
#include "core/error.hpp"

namespace pachgap {

Int BipartiteIncidence::N(int k) const {
    if (q <= 0) throw_param("projective counts need q > 0");
    if (k < 0) return 0;
    return (ipow(Int(q), unsigned(k + 1)) - 1) / (q - 1);
}

BipartiteIncidence incidence_from_lattice(const GradedLattice& L) {
    BipartiteIncidence G;
    G.q = L.q;
    G.d = L.dim_d();
    G.atom_ids = L.atoms;
    G.coatom_ids = L.coatoms;
    G.nbr.reserve(L.atoms.size());
    for (size_t i = 0; i < L.atoms.size(); ++i) G.nbr.push_back(L.coatoms_above_atom(int(i)));
    return G;
}

BipartiteIncidence incidence_projective(int d, long long q) {
    if (d < 1) throw_param("incidence_projective needs d >= 1");
    if (q < 2 || !is_prime_ll(q)) throw_param("q must be prime");
    const int r = d + 1;
    // canonical projective points: nonzero vectors scaled to leading 1, in lex order
    std::vector<std::vector<int>> pts;
    std::vector<int> v(r, 0);
    while (true) {
        int i = r - 1;
        while (i >= 0 && v[i] == q - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
        int lead = 0;
        while (lead < r && v[lead] == 0) ++lead;
        if (v[lead] == 1) pts.push_back(v);
    }
    Int expect = (ipow(Int(q), unsigned(r)) - 1) / (q - 1);
    if (Int(pts.size()) != expect) throw_internal("projective point count mismatch");
    if ((long long)pts.size() * (long long)pts.size() / 8 > budgets().subset_enum)
        throw_capacity("projective incidence too large");

    BipartiteIncidence G;
    G.q = int(q);
    G.d = d;
    const int n = int(pts.size());
    G.atom_ids.resize(n);
    G.coatom_ids.resize(n);
    for (int i = 0; i < n; ++i) G.atom_ids[i] = G.coatom_ids[i] = i;
    G.nbr.assign(n, Bitset(n));
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            long long dot = 0;
            for (int k = 0; k < r; ++k) dot += (long long)pts[a][k] * pts[c][k];
            if (dot % q == 0) G.nbr[a].set(c);
        }
    return G;
}

Bitset neighborhood(const BipartiteIncidence& G, const std::vector<int>& atom_indices) {
    Bitset out(G.coatoms());
    for (int i : atom_indices) {
        if (i < 0 || i >= G.atoms()) throw_param("unknown atom index " + std::to_string(i));
        out |= G.nbr[i];
    }
    return out;
}

namespace {

Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int acc = 1;
    for (long long i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    return acc;
}

} // namespace

ExpansionRecord min_vertex_expansion(const BipartiteIncidence& G, long long m) {
    const int n = G.atoms();
    if (m < 1 || m > n) throw_param("m out of range for min_vertex_expansion");
    Int combos = binomial(n, m);
    if (combos > budgets().subset_enum)
        throw_capacity("C(" + std::to_string(n) + "," + std::to_string(m) + ") = " + combos.str() +
                       " exceeds the subset budget");

    std::vector<int> idx(m);
    for (long long i = 0; i < m; ++i) idx[i] = int(i);
    long long best = -1;
    std::vector<int> witness;
    while (true) {
        Bitset gamma(G.coatoms());
        for (int i : idx) gamma |= G.nbr[i];
        long long cnt = (long long)gamma.count();
        if (best < 0 || cnt < best) { // strict: keeps the lexicographically first witness
            best = cnt;
            witness = idx;
        }
        // next combination in lex order
        long long i = m - 1;
        while (i >= 0 && idx[i] == n - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (long long j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }

    ExpansionRecord rec;
    rec.m = m;
    rec.min_gamma = best;
    rec.witness = std::move(witness);
    if (G.q > 0) {
        rec.corradi = corradi_lower_bound(m, G.q, G.d);
        if (Rat(best) < rec.corradi)
            throw_verify("expansion minimum fell below the design lower bound");
    }
    if (G.d >= 1) rec.rhs21 = expansion_upper_rhs(G);
    return rec;
}

Rat corradi_lower_bound(long long m, long long q, int d) {
    if (m < 1) throw_param("corradi_lower_bound needs m >= 1");
    if (d < 1) throw_param("corradi_lower_bound needs d >= 1");
    if (q < 2) throw_param("corradi_lower_bound needs q >= 2");
    Int Nd1 = (ipow(Int(q), unsigned(d)) - 1) / (q - 1);     // N_{d-1}
    Int Nd2 = d >= 2 ? (ipow(Int(q), unsigned(d - 1)) - 1) / (q - 1) : Int(0); // N_{d-2}
    return Rat(m * Nd1 * Nd1, Nd1 + (m - 1) * Nd2);
}

CorradiChain corradi_chain(long long m, long long q, int d) {
    if (d < 2) throw_param("corradi_chain needs d >= 2 (the d = 1 chain divides by zero)");
    if (m < 1 || q < 2) throw_param("corradi_chain needs m >= 1, q >= 2");
    Int Nd = (ipow(Int(q), unsigned(d + 1)) - 1) / (q - 1);
    Int Nd1 = (ipow(Int(q), unsigned(d)) - 1) / (q - 1);
    Int Nd2 = (ipow(Int(q), unsigned(d - 1)) - 1) / (q - 1);
    Int qd1 = ipow(Int(q), unsigned(d - 1));

    CorradiChain ch;
    ch.b1 = corradi_lower_bound(m, q, d);
    ch.b1_alt = Rat(Nd) - Rat(qd1 * (Nd - m), qd1 + m * Nd2);
    ch.alt_equal = ch.b1 == ch.b1_alt;
    ch.b2 = Rat(Nd) - Rat(qd1 * Nd, m * Nd2);
    ch.b3 = Rat(Nd) - Rat(q * Nd, m);
    ch.s12 = ch.b1 >= ch.b2;
    ch.s23 = ch.b2 >= ch.b3;
    // b3 >= N_d - N_d^(1+1/d)/m  <=>  N_d^(1/d) >= q  <=>  N_d >= q^d
    ch.s34 = cmp_rat_vs_root(Rat(q), 1, Nd, unsigned(d)) <= 0;
    ch.all_hold = ch.alt_equal && ch.s12 && ch.s23 && ch.s34;
    return ch;
}

Rat expansion_upper_rhs(const BipartiteIncidence& G) {
    if (G.d < 1) throw_param("expansion bound degenerate: rank-1 lattice has d = 0");
    size_t max_ca = 0;
    for (const auto& b : G.nbr) max_ca = std::max(max_ca, b.count());
    return Rat(Int(G.d) * (Int(max_ca) + G.coatoms()), G.d + 1);
}

std::string expansion_csv(const BipartiteIncidence& G, long long m_lo, long long m_hi) {
    if (m_lo < 1 || m_hi < m_lo || m_hi > G.atoms()) throw_param("bad m range for expansion table");
    std::ostringstream out;
    out << "m,min_gamma,corradi_num,corradi_den,rhs21_num,rhs21_den,witness\n";
    for (long long m = m_lo; m <= m_hi; ++m) {
        ExpansionRecord r = min_vertex_expansion(G, m);
        out << r.m << ',' << r.min_gamma << ',' << rat_num(r.corradi) << ',' << rat_den(r.corradi)
            << ',' << rat_num(r.rhs21) << ',' << rat_den(r.rhs21) << ',';
        for (size_t i = 0; i < r.witness.size(); ++i) {
            if (i) out << ';';
            out << G.atom_ids[r.witness[i]];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace pachgap
