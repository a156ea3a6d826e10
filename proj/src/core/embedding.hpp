#pragma once

#include <optional>
#include <vector>

#include "core/geometry.hpp"
#include "core/lattice.hpp"

namespace pachgap {

enum class VerifyMode { Sampled, Exhaustive };

struct FamilyFailure {
    std::vector<std::vector<int>> family; // indices into the point list
};

struct EmbeddingLog {
    VerifyMode mode = VerifyMode::Sampled;
    long long families_tested = 0;
    int retries = 0;
    bool ok = false;
};

// Generic embedding of the bottomless lattice into Q^d: seeded rational
// coordinates with denominator 2^16, verified against the general-position
// requirement: for pairwise disjoint S_1..S_{d+1} with |S_i| <= d, the affine
// hulls of the image sets have empty common intersection.
struct GenericEmbedding {
    uint64_t seed = 0;
    int d = 0;
    std::vector<int> ground; // lattice element ids (bottom excluded), ascending
    std::vector<Point> pts;  // aligned with ground
    std::vector<int> index_of_elem; // element id -> ground index, -1 for bottom
    EmbeddingLog log;

    const Point& point_of(int elem) const;
};

GenericEmbedding sample_generic_embedding(const GradedLattice& L, int d, uint64_t seed,
                                          VerifyMode mode, long long samples);

// Standalone verifier, also used to audit hand-built point sets. Returns the
// first violating family, nullopt when the tested families all pass.
std::optional<FamilyFailure> verify_points_generic(const std::vector<Point>& pts, int d,
                                                   VerifyMode mode, long long samples,
                                                   uint64_t seed, long long* families_tested);

} // namespace pachgap
