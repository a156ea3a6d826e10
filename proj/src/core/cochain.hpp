#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/rat.hpp"

namespace pachgap {

// Pure simplicial complex with the balanced weights: a face of dimension k
// gets w = c / (binom(D+1, k+1) f_top), c the number of top faces over it.
// Each level then sums to one, and norms share a level denominator, so the
// search loops stay in integer arithmetic.
struct WeightedComplex {
    int D = 0;
    std::vector<int> vertex_ids; // original labels, ascending; dense ids index this
    std::vector<std::vector<std::vector<int>>> faces; // faces[k]: sorted (k+1)-sets, lex order
    std::vector<std::vector<long long>> counts;       // aligned with faces[k]
    std::vector<long long> denom;                     // binom(D+1, k+1) * f_top
    long long f_top = 0;

    int n_faces(int k) const;
    Rat weight(int k, int idx) const;
    int face_index(int k, const std::vector<int>& f) const; // -1 when absent
};

WeightedComplex build_weighted_complex(const std::vector<std::vector<int>>& top_faces);

// One top face per line, vertex ids whitespace-separated; # starts a comment.
WeightedComplex parse_complex_text(const std::string& text);
std::string complex_text(const WeightedComplex& X);

// Join of discrete vertex classes: top faces are the transversals. Sizes
// (2, 2) is the 4-cycle, (2, 2, 2) the octahedron boundary.
std::vector<std::vector<int>> transversal_top_faces(const std::vector<int>& sizes);

// Cochains over F_2 as bit masks on faces[k]. Degree 0 uses the reduced
// convention: the constants {0, 1} count as coboundaries.
Rat cochain_norm(const WeightedComplex& X, int k, uint32_t phi);
Rat cosystolic_norm(const WeightedComplex& X, int k, uint32_t phi); // min over the class

struct HkResult {
    int k = 0;
    bool defined = false; // false when every k-cochain is a coboundary
    Rat h;
    uint32_t minimizer = 0; // lex-least minimizing cochain
    Rat minimizer_norm_d;
    Rat minimizer_norm_class;
    long long tested = 0; // cochains outside B^k
};

// min over phi outside B^k of |d phi| / |[phi]|, by exhaustive search.
// Feasible when |X(k)| + |X(k-1)| stays within the cochain bit budget.
HkResult cosystolic_expansion(const WeightedComplex& X, int k);

// Reduced F_2 cohomology dimensions for k = 0..D, by rank computations on the
// augmented coboundary matrices. Independent of the search path above.
std::vector<long long> reduced_betti(const WeightedComplex& X);

} // namespace pachgap
