#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "core/fq.hpp"
#include "core/rat.hpp"
#include "core/rng.hpp"

using namespace pachgap;

// ---- oracles ----------------------------------------------------------

// Independent rank: naive elimination, no pivoting order tricks shared with
// the implementation.
static int oracle_rank(std::vector<std::vector<int>> m, int q) {
    int rows = int(m.size());
    if (rows == 0) return 0;
    int cols = int(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] % q != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] % q == 0) continue;
            int f = (m[r][c] % q) * mod_inv(m[rank][c] % q, q) % q;
            for (int cc = 0; cc < cols; ++cc)
                m[r][cc] = ((m[r][cc] - f * m[rank][cc]) % q + q * q) % q;
        }
        ++rank;
    }
    return rank;
}

// The full vector set of a subspace, by enumerating all coefficient tuples
// over the rref basis. Canonical ground truth for leq / sum / intersect.
static std::set<std::vector<int>> vector_set(const Subspace& s) {
    std::set<std::vector<int>> out;
    int k = s.dim();
    std::vector<int> coeff(k, 0);
    while (true) {
        std::vector<int> v(s.ambient, 0);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < s.ambient; ++j)
                v[j] = (v[j] + coeff[i] * s.basis.at(i, j)) % s.q;
        out.insert(v);
        int pos = 0;
        while (pos < k && ++coeff[pos] == s.q) coeff[pos++] = 0;
        if (pos == k) break;
    }
    return out;
}

// Gaussian binomial [r choose k]_q, the number of k-dim subspaces of F_q^r.
static Int gaussian_binomial(int r, int k, int q) {
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= ipow(Int(q), unsigned(r - i)) - 1;
        den *= ipow(Int(q), unsigned(i + 1)) - 1;
    }
    return num / den;
}

static FqMatrix random_matrix(int q, int rows, int cols, SplitMix64& rng) {
    FqMatrix m(q, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = int16_t(rng.below(uint64_t(q)));
    return m;
}

// ---- tests ------------------------------------------------------------

TEST_CASE("primality on known values") {
    for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 97, 32749}) CHECK(is_prime_ll(p));
    for (long long c : {0LL, 1LL, 4LL, 9LL, 49LL, 91LL, 32767LL, 1000000LL}) CHECK(!is_prime_ll(c));
}

TEST_CASE("modular inverses multiply back to one") {
    for (int q : {2, 3, 5, 7, 13, 31}) {
        for (int a = 1; a < q; ++a) {
            int inv = mod_inv(a, q);
            CHECK(inv >= 1);
            CHECK(inv < q);
            CHECK(a * inv % q == 1);
        }
    }
}

TEST_CASE("rref: shape invariants, idempotence, rank oracle") {
    SplitMix64 rng(2024);
    for (int q : {2, 3, 5, 7}) {
        for (int trial = 0; trial < 40; ++trial) {
            int rows = 1 + int(rng.below(5));
            int cols = 1 + int(rng.below(5));
            FqMatrix m = random_matrix(q, rows, cols, rng);
            std::vector<std::vector<int>> copy(rows, std::vector<int>(cols));
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) copy[i][j] = m.at(i, j);

            int rank = rref_inplace(m);
            CHECK(rank == oracle_rank(copy, q));

            // pivot structure: leading ones, strictly increasing columns,
            // pivot columns clean elsewhere
            int prev = -1;
            for (int i = 0; i < rank; ++i) {
                int lead = -1;
                for (int j = 0; j < cols; ++j)
                    if (m.at(i, j) != 0) {
                        lead = j;
                        break;
                    }
                REQUIRE(lead >= 0);
                CHECK(lead > prev);
                prev = lead;
                CHECK(m.at(i, lead) == 1);
                for (int r = 0; r < rows; ++r)
                    if (r != i) CHECK(m.at(r, lead) == 0);
            }
            for (int i = rank; i < rows; ++i)
                for (int j = 0; j < cols; ++j) CHECK(m.at(i, j) == 0);

            FqMatrix again = m;
            CHECK(rref_inplace(again) == rank);
            CHECK(again.a == m.a);
        }
    }
}

TEST_CASE("subspace enumeration matches Gaussian binomials and is canonical") {
    struct Case {
        int r, q;
    };
    for (Case c : {Case{2, 2}, Case{3, 2}, Case{2, 3}, Case{3, 3}, Case{2, 5}}) {
        std::vector<Subspace> subs = enumerate_subspaces(c.r, c.q);
        Int total = 0;
        for (int k = 0; k <= c.r; ++k) total += gaussian_binomial(c.r, k, c.q);
        CHECK(Int(subs.size()) == total);

        std::vector<long long> by_dim(c.r + 1, 0);
        for (const auto& s : subs) {
            CHECK(s.q == c.q);
            CHECK(s.ambient == c.r);
            ++by_dim[s.dim()];
            // canonical: rref fixes the basis
            FqMatrix b = s.basis;
            CHECK(rref_inplace(b) == s.dim());
            CHECK(b.a == s.basis.a);
        }
        for (int k = 0; k <= c.r; ++k) CHECK(Int(by_dim[k]) == gaussian_binomial(c.r, k, c.q));

        // all distinct under the canonical order
        for (size_t i = 0; i + 1 < subs.size(); ++i)
            for (size_t j = i + 1; j < subs.size(); ++j)
                CHECK(subspace_cmp(subs[i], subs[j]) != 0);
    }
}

TEST_CASE("subspace operations against the vector-set oracle") {
    for (int q : {2, 3}) {
        const int r = 3;
        std::vector<Subspace> subs = enumerate_subspaces(r, q);
        for (const auto& x : subs) {
            auto vx = vector_set(x);
            CHECK(Int(vx.size()) == ipow(Int(q), unsigned(x.dim())));
            for (const auto& y : subs) {
                auto vy = vector_set(y);
                CHECK(subspace_leq(x, y) == std::includes(vy.begin(), vy.end(), vx.begin(), vx.end()));

                Subspace s = subspace_sum(x, y);
                Subspace i = subspace_intersect(x, y);
                std::set<std::vector<int>> vi;
                std::set_intersection(vx.begin(), vx.end(), vy.begin(), vy.end(),
                                      std::inserter(vi, vi.begin()));
                CHECK(vector_set(i) == vi);
                // dimension formula pins the sum given the intersection
                CHECK(s.dim() == x.dim() + y.dim() - i.dim());
                CHECK(subspace_leq(x, s));
                CHECK(subspace_leq(y, s));
            }
        }
    }
}

TEST_CASE("orthogonal complements") {
    for (int q : {2, 3, 5}) {
        std::vector<Subspace> subs = enumerate_subspaces(2, q);
        for (const auto& x : subs) {
            Subspace p = subspace_perp(x);
            CHECK(p.dim() == x.ambient - x.dim());
            CHECK(subspace_perp(p) == x);
            for (int i = 0; i < x.dim(); ++i)
                for (int j = 0; j < p.dim(); ++j) {
                    int dot = 0;
                    for (int c = 0; c < x.ambient; ++c) dot += x.basis.at(i, c) * p.basis.at(j, c);
                    CHECK(dot % q == 0);
                }
        }
    }
}

TEST_CASE("zero and full subspaces") {
    Subspace z = subspace_zero(3, 4);
    CHECK(z.dim() == 0);
    CHECK(vector_set(z).size() == 1);
    Subspace f = subspace_full(3, 4);
    CHECK(f.dim() == 4);
    CHECK(subspace_leq(z, f));
    CHECK(subspace_cmp(z, f) < 0);
}

TEST_CASE("subspace_from_rows canonicalizes") {
    // two bases of the same plane in F_2^3
    Subspace a = subspace_from_rows(2, 3, {{1, 0, 1}, {0, 1, 1}});
    Subspace b = subspace_from_rows(2, 3, {{1, 1, 0}, {0, 1, 1}});
    CHECK(a == b);
    CHECK(a.dim() == 2);
}
