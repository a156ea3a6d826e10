#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <vector>

#include "core/fq.hpp"
#include "core/rat.hpp"

namespace pachgap {

using Bitset = boost::dynamic_bitset<>;

// A finite graded lattice. Elements are dense ids 0..size()-1, sorted by
// (rank, canonical subspace order) for field lattices. q == 0 marks an
// abstract lattice (order given explicitly, no coordinates).
class GradedLattice {
  public:
    struct Elem {
        int rank = 0;
        std::optional<Subspace> sub;
    };

    int q = 0;
    int top_rank = 0; // rank of the top element; d = top_rank - 1
    std::vector<Elem> elems;
    int bottom = -1;
    int top = -1;
    std::vector<int> atoms;   // element ids, ascending
    std::vector<int> coatoms; // element ids, ascending

    int size() const { return int(elems.size()); }
    int dim_d() const { return top_rank - 1; }
    int rank_of(int x) const { return elems[x].rank; }
    bool leq(int x, int y) const { return up_[x].test(y); }

    // join/meet assume the structure is a lattice (validate_lattice checks).
    int join(int x, int y) const;
    int meet(int x, int y) const;
    // nullopt when no unique least upper / greatest lower bound exists.
    std::optional<int> join_checked(int x, int y) const;
    std::optional<int> meet_checked(int x, int y) const;

    // index into `atoms` / `coatoms`, not element ids
    Bitset atoms_below(int x) const;
    const Bitset& coatoms_above_atom(int atom_index) const { return coatom_sets_[atom_index]; }
    Bitset coatoms_above(int x) const;

    std::vector<int> rank_profile() const; // counts per rank 0..top_rank

    const Bitset& up_set(int x) const { return up_[x]; }
    const Bitset& down_set(int x) const { return down_[x]; }

    // Projective counts N_k = (q^(k+1)-1)/(q-1); requires q > 0. N_{-1} = 0.
    Int N(int k) const;

    void finalize(); // derive bottom/top/atoms/coatoms/caches from up_

    std::vector<Bitset> up_, down_;

  private:
    std::vector<Bitset> coatom_sets_; // per atom index: coatoms above it
    std::vector<int32_t> join_tab_, meet_tab_;
    bool tables_ = false;
};

// Full subspace lattice of F_q^r. Guards: q prime, r >= 1, q^r and the element
// count within budget.
GradedLattice build_subspace_lattice(int r, long long q);

// Assemble from parts; order either given as strict pairs (x < y), closed
// transitively here, or derived from subspace containment when derive_order.
GradedLattice build_lattice(int q, int top_rank, std::vector<GradedLattice::Elem> elems,
                            const std::vector<std::pair<int, int>>& leq_pairs, bool derive_order);

struct ValidationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass = true;
};

// Structural audit: unique bottom/top, grading by covers, join/meet existence
// and uniqueness on all pairs, lattice identities on (sampled) triples.
// Failures are report entries, not exceptions.
ValidationReport validate_lattice(const GradedLattice& L, uint64_t seed = 0);

} // namespace pachgap
