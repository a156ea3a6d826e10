#include "core/geometry.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace pachgap {

int rat_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        Rat inv = m[rank][col];
        for (size_t j = col; j < cols; ++j) m[rank][j] /= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return int(rank);
}

bool system_consistent(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b) {
    std::vector<std::vector<Rat>> aug = a;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    return rat_rank(a) == rat_rank(aug);
}

int orient2(const Point& a, const Point& b, const Point& c) {
    Rat det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    return sign_of(det);
}

bool points_equal(const Point& a, const Point& b) { return a == b; }

int point_cmp(const Point& a, const Point& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool affine_hulls_empty_generic(const std::vector<std::vector<Point>>& families) {
    if (families.empty()) throw_param("affine_hulls_empty needs at least one family");
    const size_t d = families[0][0].size();
    size_t vars = d;
    for (const auto& f : families) {
        if (f.empty()) throw_param("empty family in affine_hulls_empty");
        vars += f.size();
    }
    // rows: per family, d coordinate equations (x - sum lambda p = 0) and one
    // normalization (sum lambda = 1)
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    size_t lam_base = d;
    for (const auto& f : families) {
        for (size_t coord = 0; coord < d; ++coord) {
            std::vector<Rat> row(vars, Rat(0));
            row[coord] = 1;
            for (size_t j = 0; j < f.size(); ++j) row[lam_base + j] = -f[j][coord];
            a.push_back(std::move(row));
            b.push_back(0);
        }
        std::vector<Rat> row(vars, Rat(0));
        for (size_t j = 0; j < f.size(); ++j) row[lam_base + j] = 1;
        a.push_back(std::move(row));
        b.push_back(1);
        lam_base += f.size();
    }
    return !system_consistent(a, b);
}

namespace {

// Plane fast path: intersect point/line objects family by family.
struct PlaneFlat {
    // 0 = empty, 1 = point, 2 = line (through p, q), 3 = whole plane
    int kind = 3;
    Point p, q;
};

bool on_line(const Point& u, const Point& a, const Point& b) { return orient2(a, b, u) == 0; }

std::optional<Point> line_line(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
    // nullopt: parallel (possibly equal) lines
    Rat dx1 = a2[0] - a1[0], dy1 = a2[1] - a1[1];
    Rat dx2 = b2[0] - b1[0], dy2 = b2[1] - b1[1];
    Rat den = dx1 * dy2 - dy1 * dx2;
    if (den == 0) return std::nullopt;
    Rat t = ((b1[0] - a1[0]) * dy2 - (b1[1] - a1[1]) * dx2) / den;
    return Point{a1[0] + t * dx1, a1[1] + t * dy1};
}

PlaneFlat meet_flat(const PlaneFlat& f, const std::vector<Point>& fam) {
    PlaneFlat g;
    if (fam.size() == 1 || (fam.size() == 2 && points_equal(fam[0], fam[1]))) {
        g.kind = 1;
        g.p = fam[0];
    } else {
        g.kind = 2;
        g.p = fam[0];
        g.q = fam[1];
    }
    switch (f.kind) {
    case 0: return f;
    case 3: return g;
    case 1:
        if (g.kind == 1) return points_equal(f.p, g.p) ? f : PlaneFlat{0, {}, {}};
        return on_line(f.p, g.p, g.q) ? f : PlaneFlat{0, {}, {}};
    case 2:
        if (g.kind == 1) return on_line(g.p, f.p, f.q) ? g : PlaneFlat{0, {}, {}};
        if (auto x = line_line(f.p, f.q, g.p, g.q)) return PlaneFlat{1, *x, {}};
        // parallel: equal lines keep the line, disjoint ones are empty
        if (on_line(g.p, f.p, f.q)) return f;
        return PlaneFlat{0, {}, {}};
    }
    return g;
}

} // namespace

bool affine_hulls_empty(const std::vector<std::vector<Point>>& families) {
    if (families.empty()) throw_param("affine_hulls_empty needs at least one family");
    const size_t d = families[0][0].size();
    bool plane_sized = d == 2;
    for (const auto& f : families)
        if (f.size() > 2) plane_sized = false;
    if (!plane_sized) return affine_hulls_empty_generic(families);
    PlaneFlat acc; // whole plane
    for (const auto& f : families) {
        acc = meet_flat(acc, f);
        if (acc.kind == 0) return true;
    }
    return false;
}

namespace {

// Unique barycentric coordinates of u over an affinely independent subset.
std::optional<std::vector<Rat>> barycentric(const std::vector<Point>& pts,
                                            const std::vector<int>& sub, const Point& u) {
    const size_t d = u.size(), k = sub.size();
    // solve: sum l_j p_j = u, sum l_j = 1  (d+1 equations, k unknowns)
    std::vector<std::vector<Rat>> m(d + 1, std::vector<Rat>(k + 1, Rat(0)));
    for (size_t coord = 0; coord < d; ++coord) {
        for (size_t j = 0; j < k; ++j) m[coord][j] = pts[sub[j]][coord];
        m[coord][k] = u[coord];
    }
    for (size_t j = 0; j < k; ++j) m[d][j] = 1;
    m[d][k] = 1;
    // forward elimination with full accounting; k small
    size_t rank = 0;
    std::vector<int> pivot_col_of_row;
    for (size_t col = 0; col < k && rank < m.size(); ++col) {
        size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) return std::nullopt; // dependent subset: caller filters
        std::swap(m[pivot], m[rank]);
        Rat inv = m[rank][col];
        for (size_t j = col; j <= k; ++j) m[rank][j] /= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j <= k; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    // consistency: all remaining rows must have zero rhs
    for (size_t i = rank; i < m.size(); ++i)
        if (m[i][k] != 0) return std::nullopt;
    std::vector<Rat> lambda(k);
    for (size_t i = 0; i < rank; ++i) {
        size_t col = 0;
        while (col < k && m[i][col] == 0) ++col;
        if (col < k) lambda[col] = m[i][k];
    }
    return lambda;
}

bool affinely_independent(const std::vector<Point>& pts, const std::vector<int>& sub) {
    if (sub.size() <= 1) return true;
    std::vector<std::vector<Rat>> diff;
    for (size_t j = 1; j < sub.size(); ++j) {
        std::vector<Rat> row(pts[sub[0]].size());
        for (size_t c = 0; c < row.size(); ++c) row[c] = pts[sub[j]][c] - pts[sub[0]][c];
        diff.push_back(std::move(row));
    }
    return rat_rank(diff) == int(sub.size()) - 1;
}

bool in_triangle_closed(const Point& u, const Point& a, const Point& b, const Point& c) {
    int o1 = orient2(a, b, u), o2 = orient2(b, c, u), o3 = orient2(c, a, u);
    bool nonneg = o1 >= 0 && o2 >= 0 && o3 >= 0;
    bool nonpos = o1 <= 0 && o2 <= 0 && o3 <= 0;
    return nonneg || nonpos;
}

bool on_segment_closed(const Point& u, const Point& a, const Point& b) {
    if (orient2(a, b, u) != 0) return false;
    for (size_t c = 0; c < u.size(); ++c) {
        Rat lo = std::min(a[c], b[c]), hi = std::max(a[c], b[c]);
        if (u[c] < lo || u[c] > hi) return false;
    }
    return true;
}

} // namespace

bool conv_contains(const std::vector<Point>& pts, const Point& u) {
    if (pts.empty()) return false;
    const size_t d = u.size();
    if (d == 2) {
        if (pts.size() == 1) return points_equal(pts[0], u);
        if (pts.size() == 2) return on_segment_closed(u, pts[0], pts[1]);
        if (pts.size() == 3) {
            if (orient2(pts[0], pts[1], pts[2]) != 0) return in_triangle_closed(u, pts[0], pts[1], pts[2]);
            // degenerate triangle: union of its edges
            return on_segment_closed(u, pts[0], pts[1]) || on_segment_closed(u, pts[1], pts[2]) ||
                   on_segment_closed(u, pts[0], pts[2]);
        }
    }
    return conv_witness(pts, u).has_value();
}

std::optional<HullWitness> conv_witness(const std::vector<Point>& pts, const Point& u) {
    const size_t n = pts.size();
    const size_t d = u.size();
    // subsets by ascending size: the first nonnegative solution is supported on
    // an affinely independent set and, by minimality, strictly positive.
    for (size_t k = 1; k <= std::min(n, d + 1); ++k) {
        std::vector<int> sub(k);
        for (size_t i = 0; i < k; ++i) sub[i] = int(i);
        while (true) {
            if (affinely_independent(pts, sub)) {
                if (auto lam = barycentric(pts, sub, u)) {
                    bool ok = true;
                    for (const Rat& l : *lam)
                        if (l < 0) { ok = false; break; }
                    if (ok) return HullWitness{sub, *lam};
                }
            }
            // next k-combination
            int i = int(k) - 1;
            while (i >= 0 && sub[i] == int(n - k + i)) --i;
            if (i < 0) break;
            ++sub[i];
            for (size_t j = i + 1; j < k; ++j) sub[j] = sub[j - 1] + 1;
        }
    }
    return std::nullopt;
}

std::optional<Point> segment_intersection(const Point& a1, const Point& a2, const Point& b1,
                                          const Point& b2) {
    auto x = line_line(a1, a2, b1, b2);
    if (!x) return std::nullopt;
    if (!on_segment_closed(*x, a1, a2) || !on_segment_closed(*x, b1, b2)) return std::nullopt;
    return x;
}

Point barycenter(const std::vector<Point>& pts) {
    if (pts.empty()) throw_param("barycenter of nothing");
    Point c(pts[0].size(), Rat(0));
    for (const auto& p : pts)
        for (size_t i = 0; i < c.size(); ++i) c[i] += p[i];
    for (auto& v : c) v /= int(pts.size());
    return c;
}

bool has_collinear_triple(const std::vector<Point>& pts) {
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            for (size_t k = j + 1; k < pts.size(); ++k)
                if (orient2(pts[i], pts[j], pts[k]) == 0) return true;
    return false;
}

} // namespace pachgap
