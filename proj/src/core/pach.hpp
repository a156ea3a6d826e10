#pragma once

#include <string>
#include <vector>

#include "core/expander.hpp"
#include "core/hypergraph.hpp"
#include "core/plmap.hpp"
#include "core/primes.hpp"

namespace pachgap {

// A colored instance: d+1 disjoint atom classes of size n each. Classes are
// sorted and ordered by their least element, so each unordered partition
// appears exactly once.
struct PartitionSpec {
    std::vector<std::vector<int>> classes; // atom element ids
};

// All canonical partitions in lex order, up to cap; sets *truncated when the
// total count exceeds the cap (callers switch to sampling then).
std::vector<PartitionSpec> enumerate_partitions(const GradedLattice& L, int n, long long cap,
                                                bool* truncated);
Int count_partitions(const GradedLattice& L, int n);
PartitionSpec sample_partition(const GradedLattice& L, int n, uint64_t seed, uint64_t index);

// Candidate meeting points for a partition: embedded joins of partial
// transversals, then barycenters of the witness-flag simplices of full
// transversals, then pairwise edge intersections of those simplices (plane
// only). Deduplicated exactly, first occurrence kept.
std::vector<Point> candidate_points(const PLMap& M, const PartitionSpec& P);

// Largest homogeneous box at u: parts U_i within the classes, all transversal
// face images containing u. Membership is exact; the box is rechecked.
struct BoxResult {
    int m = 0;
    std::vector<std::vector<int>> parts; // atom element ids per class
    Point at;
};
BoxResult homogeneous_box_at(const PLMap& M, const PartitionSpec& P, const Point& u);

struct PartitionTau {
    PartitionSpec partition;
    int tau = 0; // largest certified box over the candidate points
    BoxResult box;
    long long candidates = 0;
};

struct TauReport {
    int d = 0;
    int n = 0;
    uint64_t seed = 0;
    Int partitions_total = 0;
    long long partitions_tested = 0;
    bool sampled = false;
    int tau_hat = 0; // min over tested partitions
    std::vector<PartitionTau> rows;
};
TauReport tau_workbench(const PLMap& M, int n, uint64_t seed);

// Coatom book-keeping for a witnessed box: class neighborhoods, their common
// coatoms, the inclusion-exclusion lower bound and the covering upper bound,
// and the expansion bound the sandwich implies.
struct BoxCoatomAnalysis {
    int m = 0;
    std::vector<long long> gamma_sizes; // per class
    long long common = 0;
    long long min_gamma_m = 0; // over all m-subsets of atoms
    Int incl_excl_lower;  // (d+1) min_gamma - d |C|
    Int cover_upper;      // d max_a |C_a|
    Rat implied_bound;    // (d |C| + cover_upper) / (d+1)
    int cover_count = 0;  // coatoms covering the witness point
    bool common_covers = true;   // every common coatom covers the witness
    bool incl_excl_holds = true; // incl_excl_lower <= common
    bool cover_holds = true;     // common <= cover_count <= cover_upper
    bool gamma_bound_holds = true; // min_gamma <= implied_bound
};
BoxCoatomAnalysis box_coatom_analysis(const PLMap& M, const BoxResult& box);

// The size bound pipeline for the lattice construction at parameters (n, d):
// prime choice, window membership, ratio step, count comparisons, and the
// final contradiction certifying m <= 4(d+1)((d+1)^2 n)^(1/d). Each step is an
// exact comparison; roots are compared through d-th powers.
struct ChainStep {
    std::string label;
    std::string lhs;
    std::string rel;
    std::string rhs;
    bool holds = false;
};

struct FinalBound {
    Int coeff;     // 4(d+1)
    Int radicand;  // (d+1)^2 n
    int degree = 1;
    bool exact = false; // radicand is a perfect degree-th power
    Int value_floor;    // floor of the bound
};

struct TauBoundChain {
    int d = 0;
    long long n = 0;
    PrimeWindow window;
    std::vector<ChainStep> steps;
    FinalBound final_bound;
    Int m_refuted; // value_floor + 1, where the sandwich contradicts
    bool all_hold = false;
};
TauBoundChain tau_bound_chain(long long n, int d);

// Straight-simplex references: the same box search over affine simplices on
// colored point classes, and the single-class selection depth. Degenerate
// inputs (collinear triples in the plane) get a seeded perturbation first.
struct AffineBaselineReport {
    std::string mode; // "pach" or "first_selection"
    int d = 0;
    int n = 0;
    uint64_t seed = 0;
    bool perturbed = false;
    int m = 0; // pach: box size; first_selection: maximum depth
    std::vector<std::vector<int>> parts; // pach witness (indices into classes)
    Point at;
    long long simplices = 0; // simplices considered per candidate point
};
AffineBaselineReport affine_baseline(const std::vector<std::vector<Point>>& classes,
                                     const std::string& mode, uint64_t seed);

} // namespace pachgap
