#pragma once

#include <optional>
#include <vector>

#include "core/rat.hpp"

namespace pachgap {

using Point = std::vector<Rat>; // length = ambient dimension

// Rank of a rational matrix by Gaussian elimination. Exact.
int rat_rank(std::vector<std::vector<Rat>> m);

// Consistency of A x = b via rank(A) == rank([A | b]).
bool system_consistent(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b);

// Orientation of the triple (a, b, c) in the plane: sign of the 2x2 area det.
int orient2(const Point& a, const Point& b, const Point& c);

bool points_equal(const Point& a, const Point& b);
// Lexicographic comparison, for deterministic ordering and dedup.
int point_cmp(const Point& a, const Point& b);

// Whether the affine hulls of the given point families have empty common
// intersection. Families must be nonempty. Exact; the plane case runs on a
// specialized point/line calculus, other dimensions on rank computations.
bool affine_hulls_empty(const std::vector<std::vector<Point>>& families);
// Rank-based path only (the oracle route for tests).
bool affine_hulls_empty_generic(const std::vector<std::vector<Point>>& families);

// Closed convex hull membership. Fast orientation path for <= 3 points in the
// plane, Caratheodory subset search otherwise.
bool conv_contains(const std::vector<Point>& pts, const Point& u);

// Minimal carrier: the smallest subset of pts whose hull contains u, with its
// strictly positive barycentric coordinates (u lies in the relative interior
// of that subset's hull). nullopt when u is outside the hull.
struct HullWitness {
    std::vector<int> support;
    std::vector<Rat> coords;
};
std::optional<HullWitness> conv_witness(const std::vector<Point>& pts, const Point& u);

// Single intersection point of two closed segments in the plane; nullopt for
// parallel or collinear pairs and for lines crossing outside the segments.
std::optional<Point> segment_intersection(const Point& a1, const Point& a2, const Point& b1,
                                          const Point& b2);

Point barycenter(const std::vector<Point>& pts);

// Any three collinear points (plane)? Used by the general-position checks of
// the affine baselines.
bool has_collinear_triple(const std::vector<Point>& pts);

} // namespace pachgap
