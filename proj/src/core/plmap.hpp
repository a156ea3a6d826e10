#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/embedding.hpp"
#include "core/lattice.hpp"

namespace pachgap {

// The composite map: barycentric subdivision of the atom simplex, a vertex of
// the subdivision (a nonempty atom set sigma) goes to the embedded join of
// sigma. Affine on each flag simplex of the subdivision.
struct PLMap {
    GradedLattice L;
    GenericEmbedding emb;
    int d = 0;

    int join_of(const std::vector<int>& atom_elems) const; // element id of the join
    Point vertex_image(const std::vector<int>& atom_elems) const;
};

PLMap build_pl_map(const GradedLattice& L, uint64_t seed, VerifyMode mode, long long samples);

// Membership of u in the image of the closed face spanned by the atom set
// sigma: some maximal flag of subsets of sigma carries u in the convex hull of
// its (join-collapsed, deduplicated) vertex images.
struct FaceMembership {
    bool member = false;
    bool interior = false; // strictly positive coordinates on the whole witness simplex
    std::vector<std::vector<int>> witness_flag; // prefix subsets sigma_0 c ... c sigma
    std::vector<int> witness_chain;  // deduplicated joins, a chain in the order complex
    std::vector<int> carrier;        // minimal subchain whose hull holds u (relint carrier)
};
FaceMembership point_in_face_image(const PLMap& M, const Point& u, const std::vector<int>& sigma);

struct CoverReport {
    int count = 0;          // closed-hull covering coatoms
    int interior_count = 0; // those with a full-interior witness
    std::vector<int> covering; // coatom element ids
};
CoverReport coatom_cover_count(const PLMap& M, const Point& u);

// Constructive audit of the covering bound: relint carriers of the covering
// witnesses, a maximal pairwise disjoint subfamily T', one atom below each
// member, and the assignment sending every covering coatom to a member it
// meets. Valid certificates give count <= sum |C_a| <= d max |C_a|.
struct CoverCertificate {
    bool valid = false;
    std::string diagnostic;
    int count = 0;
    int interior_count = 0;
    std::vector<int> covering;                  // coatom element ids
    std::vector<std::vector<int>> carriers;     // per covering coatom, its carrier chain
    std::vector<std::vector<int>> t_prime;      // maximal disjoint carriers (element ids)
    std::vector<int> atom_of;                   // per t_prime member, chosen atom element id
    std::vector<int> assignment;                // per covering coatom, index into t_prime
    std::vector<int> shared_elem;               // per covering coatom, the common element
    Int sum_bound = 0;                          // sum over t_prime of |C_{a}|
    Int global_bound = 0;                       // d * max_a |C_a|
    int boundary_cases = 0;                     // witnesses with carrier smaller than the flag
};
CoverCertificate cover_certificate(const PLMap& M, const Point& u);

} // namespace pachgap
