#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace pachgap {

bool is_prime_ll(long long n);
int mod_inv(int a, int q); // q prime, a != 0 mod q

// Dense row-major matrix over F_q, q a small prime. Entries live in [0, q).
struct FqMatrix {
    int q = 2;
    int rows = 0;
    int cols = 0;
    std::vector<int16_t> a;

    FqMatrix() = default;
    FqMatrix(int q_, int rows_, int cols_) : q(q_), rows(rows_), cols(cols_), a(size_t(rows_) * cols_, 0) {}

    int16_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
    int16_t at(int i, int j) const { return a[size_t(i) * cols + j]; }
};

// In-place Gauss-Jordan to reduced row echelon form; returns the rank.
// Rows at index >= rank come out zero.
int rref_inplace(FqMatrix& m);

// A subspace of F_q^ambient in canonical form: the rref basis with no zero
// rows. Structural equality is subspace equality.
struct Subspace {
    int q = 2;
    int ambient = 0;
    FqMatrix basis; // rows == dim, canonical rref

    int dim() const { return basis.rows; }
    bool operator==(const Subspace& o) const { return q == o.q && ambient == o.ambient && basis.a == o.basis.a && basis.rows == o.basis.rows; }
};

// Canonical lexicographic order: by dim, then flattened rref entries.
int subspace_cmp(const Subspace& x, const Subspace& y);

Subspace subspace_zero(int q, int ambient);
Subspace subspace_full(int q, int ambient);
Subspace subspace_from_rows(int q, int ambient, const std::vector<std::vector<int>>& rows);

Subspace subspace_sum(const Subspace& x, const Subspace& y);
// Orthogonal complement with respect to the standard dot product.
Subspace subspace_perp(const Subspace& x);
// Intersection, computed as perp(perp(x) + perp(y)).
Subspace subspace_intersect(const Subspace& x, const Subspace& y);
bool subspace_leq(const Subspace& x, const Subspace& y);

// Every subspace of F_q^r, each exactly once, by direct enumeration of
// canonical rref matrices (pivot pattern + free entries).
std::vector<Subspace> enumerate_subspaces(int r, int q);

} // namespace pachgap
