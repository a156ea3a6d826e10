#pragma once

#include <string>
#include <vector>

#include "core/lattice.hpp"

namespace pachgap {

// Atom/coatom incidence graph of a graded lattice: a ~ c iff a <= c.
// For subspace lattices carries (q, d) so projective counts are available.
struct BipartiteIncidence {
    int q = 0;
    int d = 0;                 // top_rank - 1
    std::vector<int> atom_ids; // lattice element ids (or synthetic when built directly)
    std::vector<int> coatom_ids;
    std::vector<Bitset> nbr; // per atom index: coatoms above it

    int atoms() const { return int(atom_ids.size()); }
    int coatoms() const { return int(coatom_ids.size()); }
    Int N(int k) const;
};

BipartiteIncidence incidence_from_lattice(const GradedLattice& L);

// Direct projective construction (points vs hyperplanes of PG(d, q)); skips
// building the middle ranks, for larger q.
BipartiteIncidence incidence_projective(int d, long long q);

// Union of neighborhoods of the listed atom indices.
Bitset neighborhood(const BipartiteIncidence& G, const std::vector<int>& atom_indices);

struct ExpansionRecord {
    long long m = 0;
    long long min_gamma = 0;
    std::vector<int> witness; // atom indices, lexicographically first minimizer
    Rat corradi;              // design lower bound
    Rat rhs21;                // (d/(d+1)) (max |C_a| + |C|)
};

// Exact minimum of |Gamma(Z)| over all m-subsets. C(atoms, m) must stay under
// the subset budget.
ExpansionRecord min_vertex_expansion(const BipartiteIncidence& G, long long m);

// m N_{d-1}^2 / (N_{d-1} + (m-1) N_{d-2}), exact.
Rat corradi_lower_bound(long long m, long long q, int d);

// The weakening chain from the design bound down to N_d - N_d^(1+1/d)/m.
// Defined for d >= 2 (the d = 1 chain divides by N_{-1} = 0).
struct CorradiChain {
    Rat b1;            // design bound
    Rat b1_alt;        // N_d - q^(d-1)(N_d - m)/(q^(d-1) + m N_{d-2})
    bool alt_equal;    // b1 == b1_alt, an identity
    Rat b2;            // N_d - q^(d-1) N_d / (m N_{d-2})
    Rat b3;            // N_d - q N_d / m
    bool s12, s23;     // b1 >= b2 >= b3
    bool s34;          // b3 >= N_d - N_d^(1+1/d)/m, via d-th powers
    bool all_hold;
};
CorradiChain corradi_chain(long long m, long long q, int d);

// Upper bound for the minimum expansion: (d/(d+1)) (max_a |C_a| + |C|), from
// the actual brute-force counts. Degenerate d = 0 is a parameter error.
Rat expansion_upper_rhs(const BipartiteIncidence& G);

// CSV table: m,min_gamma,corradi_num,corradi_den,rhs21_num,rhs21_den,witness
std::string expansion_csv(const BipartiteIncidence& G, long long m_lo, long long m_hi);

} // namespace pachgap
