#include "core/fq.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace pachgap {

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

int mod_inv(int a, int q) {
    // extended Euclid
    int t = 0, new_t = 1, r = q, new_r = a % q;
    while (new_r != 0) {
        int quot = r / new_r;
        t -= quot * new_t;
        std::swap(t, new_t);
        r -= quot * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw_internal("mod_inv of a non-unit");
    return ((t % q) + q) % q;
}

int rref_inplace(FqMatrix& m) {
    const int q = m.q;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        int inv = mod_inv(m.at(rank, col), q);
        for (int j = col; j < m.cols; ++j)
            m.at(rank, j) = int16_t(int(m.at(rank, j)) * inv % q);
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank) continue;
            int f = m.at(i, col);
            if (f == 0) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = int16_t(((int(m.at(i, j)) - f * int(m.at(rank, j))) % q + q) % q);
        }
        ++rank;
    }
    return rank;
}

namespace {

Subspace canonical(int q, int ambient, FqMatrix m) {
    int rank = rref_inplace(m);
    FqMatrix basis(q, rank, ambient);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < ambient; ++j) basis.at(i, j) = m.at(i, j);
    return Subspace{q, ambient, std::move(basis)};
}

} // namespace

int subspace_cmp(const Subspace& x, const Subspace& y) {
    if (x.dim() != y.dim()) return x.dim() < y.dim() ? -1 : 1;
    if (x.basis.a != y.basis.a) return x.basis.a < y.basis.a ? -1 : 1;
    return 0;
}

Subspace subspace_zero(int q, int ambient) { return Subspace{q, ambient, FqMatrix(q, 0, ambient)}; }

Subspace subspace_full(int q, int ambient) {
    FqMatrix m(q, ambient, ambient);
    for (int i = 0; i < ambient; ++i) m.at(i, i) = 1;
    return Subspace{q, ambient, std::move(m)};
}

Subspace subspace_from_rows(int q, int ambient, const std::vector<std::vector<int>>& rows) {
    FqMatrix m(q, int(rows.size()), ambient);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (int(rows[i].size()) != ambient) throw_param("subspace row of wrong length");
        for (int j = 0; j < ambient; ++j)
            m.at(int(i), j) = int16_t(((rows[i][j] % q) + q) % q);
    }
    return canonical(q, ambient, std::move(m));
}

Subspace subspace_sum(const Subspace& x, const Subspace& y) {
    if (x.q != y.q || x.ambient != y.ambient) throw_param("subspace_sum over mismatched spaces");
    FqMatrix m(x.q, x.dim() + y.dim(), x.ambient);
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.ambient; ++j) m.at(i, j) = x.basis.at(i, j);
    for (int i = 0; i < y.dim(); ++i)
        for (int j = 0; j < x.ambient; ++j) m.at(x.dim() + i, j) = y.basis.at(i, j);
    return canonical(x.q, x.ambient, std::move(m));
}

Subspace subspace_perp(const Subspace& x) {
    // Null space of the basis matrix. Pivot/free split of the rref, then one
    // kernel vector per free column.
    const FqMatrix& b = x.basis;
    const int q = x.q, n = x.ambient, k = x.dim();
    std::vector<int> pivot_col(k, -1);
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < n; ++j)
            if (b.at(i, j) != 0) { pivot_col[i] = j; is_pivot[j] = true; break; }
    }
    std::vector<std::vector<int>> gens;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<int> v(n, 0);
        v[f] = 1;
        for (int i = 0; i < k; ++i)
            v[pivot_col[i]] = (q - b.at(i, f)) % q;
        gens.push_back(std::move(v));
    }
    return subspace_from_rows(q, n, gens);
}

Subspace subspace_intersect(const Subspace& x, const Subspace& y) {
    return subspace_perp(subspace_sum(subspace_perp(x), subspace_perp(y)));
}

bool subspace_leq(const Subspace& x, const Subspace& y) {
    if (x.dim() > y.dim()) return false;
    return subspace_sum(x, y) == y;
}

std::vector<Subspace> enumerate_subspaces(int r, int q) {
    std::vector<Subspace> out;
    std::vector<int> pivots;
    // all pivot-column subsets, all dims
    for (int k = 0; k <= r; ++k) {
        pivots.assign(k, 0);
        for (int i = 0; i < k; ++i) pivots[i] = i;
        while (true) {
            // free cells: (i, j) with j > pivots[i] and j not a pivot column
            std::vector<std::pair<int, int>> free_cells;
            std::vector<bool> is_pivot(r, false);
            for (int p : pivots) is_pivot[p] = true;
            for (int i = 0; i < k; ++i)
                for (int j = pivots[i] + 1; j < r; ++j)
                    if (!is_pivot[j]) free_cells.emplace_back(i, j);
            std::vector<int> fill(free_cells.size(), 0);
            while (true) {
                FqMatrix m(q, k, r);
                for (int i = 0; i < k; ++i) m.at(i, pivots[i]) = 1;
                for (size_t c = 0; c < free_cells.size(); ++c)
                    m.at(free_cells[c].first, free_cells[c].second) = int16_t(fill[c]);
                out.push_back(Subspace{q, r, std::move(m)});
                // odometer
                size_t c = 0;
                for (; c < fill.size(); ++c) {
                    if (++fill[c] < q) break;
                    fill[c] = 0;
                }
                if (c == fill.size()) break;
            }
            if (k == 0) break;
            // next pivot combination
            int i = k - 1;
            while (i >= 0 && pivots[i] == r - k + i) --i;
            if (i < 0) break;
            ++pivots[i];
            for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
        }
    }
    return out;
}

} // namespace pachgap
