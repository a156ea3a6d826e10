#pragma once

#include <vector>

#include "core/lattice.hpp"

namespace pachgap {

// Order complex of L minus its bottom: vertices are the elements of positive
// rank, faces are the strictly increasing chains. Chains are stored as
// ascending element-id vectors (ids ascend with rank by construction).
struct OrderComplex {
    std::vector<int> ground;                          // element ids, ascending
    std::vector<std::vector<std::vector<int>>> faces; // faces[k] = chains of k+1 elements
    int max_chain_len = 0;

    long long face_count() const;
    const std::vector<std::vector<int>>& maximal_candidates() const { return faces.back(); }
    // maximal chains = chains of the full rank length
    std::vector<std::vector<int>> maximal_chains() const;
};

OrderComplex order_complex(const GradedLattice& L);

// Chains confined to { y : y <= x }.
std::vector<std::vector<int>> chains_below(const GradedLattice& L, const OrderComplex& oc, int x);

// True when every face extends to a face containing the apex (cone test).
bool is_cone_with_apex(const OrderComplex& oc, const GradedLattice& L, int apex);

} // namespace pachgap
