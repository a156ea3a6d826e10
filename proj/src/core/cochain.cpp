#include "core/cochain.hpp"

#include <algorithm>
#include <sstream>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/lattice.hpp" // Bitset

namespace pachgap {

namespace {

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// facet incidence of level k+1 over level k, as bit masks
std::vector<uint32_t> facet_masks(const WeightedComplex& X, int k) {
    if (X.n_faces(k) > 31) throw_capacity("cochain level does not fit in the mask width");
    std::vector<uint32_t> out(X.n_faces(k + 1), 0);
    for (int t = 0; t < X.n_faces(k + 1); ++t) {
        const auto& face = X.faces[k + 1][t];
        std::vector<int> sub;
        for (size_t drop = 0; drop < face.size(); ++drop) {
            sub.clear();
            for (size_t i = 0; i < face.size(); ++i)
                if (i != drop) sub.push_back(face[i]);
            int idx = X.face_index(k, sub);
            if (idx < 0) throw_internal("missing facet in a closed complex");
            out[t] |= uint32_t(1) << idx;
        }
    }
    return out;
}

uint32_t echelon_reduce(const std::vector<uint32_t>& basis, uint32_t v) {
    for (uint32_t b : basis) {
        uint32_t p = b & (~b + 1);
        if (v & p) v ^= b;
    }
    return v;
}

void echelon_insert(std::vector<uint32_t>& basis, uint32_t v) {
    v = echelon_reduce(basis, v);
    if (!v) return;
    uint32_t p = v & (~v + 1);
    for (uint32_t& b : basis)
        if (b & p) b ^= v;
    auto pos = std::lower_bound(basis.begin(), basis.end(), v,
                                [](uint32_t a, uint32_t x) { return (a & (~a + 1)) < (x & (~x + 1)); });
    basis.insert(pos, v);
}

// echelonized basis of the coboundary space B^k; degree 0 is the span of the
// all-ones cochain (reduced convention)
std::vector<uint32_t> coboundary_basis(const WeightedComplex& X, int k) {
    int nk = X.n_faces(k);
    if (nk > 31) throw_capacity("cochain level does not fit in the mask width");
    std::vector<uint32_t> basis;
    if (k == 0) {
        if (nk > 0) echelon_insert(basis, nk == 32 ? ~uint32_t(0) : (uint32_t(1) << nk) - 1);
        return basis;
    }
    int nkm = X.n_faces(k - 1);
    std::vector<uint32_t> cols(nkm, 0);
    auto masks = facet_masks(X, k - 1);
    for (int t = 0; t < X.n_faces(k); ++t) {
        uint32_t fm = masks[t];
        while (fm) {
            int i = __builtin_ctz(fm);
            fm &= fm - 1;
            cols[i] |= uint32_t(1) << t;
        }
    }
    for (uint32_t c : cols) echelon_insert(basis, c);
    return basis;
}

long long norm_num(const std::vector<long long>& counts, uint32_t phi) {
    long long num = 0;
    while (phi) {
        num += counts[__builtin_ctz(phi)];
        phi &= phi - 1;
    }
    return num;
}

long long min_class_num(const std::vector<long long>& counts, const std::vector<uint32_t>& basis,
                        uint32_t phi) {
    long long best = norm_num(counts, phi);
    uint32_t cur = phi;
    uint64_t span = uint64_t(1) << basis.size();
    for (uint64_t i = 1; i < span; ++i) {
        cur ^= basis[__builtin_ctzll(i)];
        best = std::min(best, norm_num(counts, cur));
    }
    return best;
}

} // namespace

int WeightedComplex::n_faces(int k) const {
    if (k < 0 || k > D) return 0;
    return int(faces[k].size());
}

Rat WeightedComplex::weight(int k, int idx) const {
    if (k < 0 || k > D || idx < 0 || idx >= n_faces(k)) throw_param("face out of range");
    return Rat(Int(counts[k][idx]), Int(denom[k]));
}

int WeightedComplex::face_index(int k, const std::vector<int>& f) const {
    if (k < 0 || k > D) return -1;
    auto it = std::lower_bound(faces[k].begin(), faces[k].end(), f);
    if (it == faces[k].end() || *it != f) return -1;
    return int(it - faces[k].begin());
}

WeightedComplex build_weighted_complex(const std::vector<std::vector<int>>& top_faces) {
    if (top_faces.empty()) throw_param("no top faces");
    WeightedComplex X;
    size_t arity = top_faces[0].size();
    if (arity == 0) throw_param("empty top face");
    X.D = int(arity) - 1;

    std::vector<std::vector<int>> tops;
    for (const auto& f : top_faces) {
        if (f.size() != arity) throw_param("top faces must share one dimension");
        std::vector<int> s = f;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw_param("repeated vertex in a face");
        for (int v : s) X.vertex_ids.push_back(v);
        tops.push_back(std::move(s));
    }
    std::sort(tops.begin(), tops.end());
    if (std::adjacent_find(tops.begin(), tops.end()) != tops.end())
        throw_param("repeated top face");
    std::sort(X.vertex_ids.begin(), X.vertex_ids.end());
    X.vertex_ids.erase(std::unique(X.vertex_ids.begin(), X.vertex_ids.end()), X.vertex_ids.end());
    X.f_top = (long long)tops.size();
    if (X.f_top * (1LL << (X.D + 1)) > budgets().subset_enum)
        throw_capacity("complex too large for the face tables");

    auto dense = [&](int v) {
        return int(std::lower_bound(X.vertex_ids.begin(), X.vertex_ids.end(), v) -
                   X.vertex_ids.begin());
    };
    for (auto& f : tops)
        for (int& v : f) v = dense(v);
    std::sort(tops.begin(), tops.end()); // dense relabeling keeps order, but be safe

    X.faces.assign(X.D + 1, {});
    X.counts.assign(X.D + 1, {});
    X.denom.assign(X.D + 1, 0);
    for (int k = 0; k <= X.D; ++k) {
        std::vector<std::vector<int>> all;
        std::vector<int> comb(k + 1);
        for (const auto& f : tops) {
            for (int i = 0; i <= k; ++i) comb[i] = i;
            bool more = true;
            while (more) {
                std::vector<int> sub;
                for (int i : comb) sub.push_back(f[i]);
                all.push_back(std::move(sub));
                int m = k + 1, n = int(f.size());
                more = false;
                for (int i = m - 1; i >= 0; --i) {
                    if (comb[i] < n - (m - i)) {
                        ++comb[i];
                        for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
                        more = true;
                        break;
                    }
                }
            }
        }
        std::sort(all.begin(), all.end());
        // run lengths are exactly the top-face counts
        for (size_t i = 0; i < all.size();) {
            size_t j = i;
            while (j < all.size() && all[j] == all[i]) ++j;
            X.faces[k].push_back(all[i]);
            X.counts[k].push_back((long long)(j - i));
            i = j;
        }
        X.denom[k] = binom_ll(X.D + 1, k + 1) * X.f_top;
    }
    return X;
}

WeightedComplex parse_complex_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> tops;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        std::vector<int> face;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            try {
                size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size() || v < 0 || v > 1000000000)
                    throw std::invalid_argument(tok);
                face.push_back(int(v));
            } catch (const std::exception&) {
                throw_param("line " + std::to_string(lineno) + ": bad vertex id " + tok);
            }
        }
        if (!face.empty()) tops.push_back(std::move(face));
    }
    return build_weighted_complex(tops);
}

std::string complex_text(const WeightedComplex& X) {
    std::string out;
    for (const auto& f : X.faces[X.D]) {
        for (size_t i = 0; i < f.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(X.vertex_ids[f[i]]);
        }
        out += "\n";
    }
    return out;
}

std::vector<std::vector<int>> transversal_top_faces(const std::vector<int>& sizes) {
    if (sizes.empty()) throw_param("need at least one class");
    std::vector<int> offset(sizes.size(), 0);
    for (size_t c = 1; c < sizes.size(); ++c) {
        if (sizes[c - 1] < 1) throw_param("class sizes must be positive");
        offset[c] = offset[c - 1] + sizes[c - 1];
    }
    if (sizes.back() < 1) throw_param("class sizes must be positive");
    std::vector<std::vector<int>> tops;
    std::vector<int> t(sizes.size(), 0);
    bool more = true;
    while (more) {
        std::vector<int> f;
        for (size_t c = 0; c < sizes.size(); ++c) f.push_back(offset[c] + t[c]);
        tops.push_back(std::move(f));
        more = false;
        for (size_t c = 0; c < sizes.size(); ++c) {
            if (++t[c] < sizes[c]) {
                more = true;
                break;
            }
            t[c] = 0;
        }
    }
    return tops;
}

Rat cochain_norm(const WeightedComplex& X, int k, uint32_t phi) {
    if (k < 0 || k > X.D) throw_param("degree out of range");
    int nk = X.n_faces(k);
    if (nk > 31) throw_capacity("cochain level does not fit in the mask width");
    if (nk < 32 && (phi >> nk)) throw_param("cochain has bits beyond the level");
    return Rat(Int(norm_num(X.counts[k], phi)), Int(X.denom[k]));
}

Rat cosystolic_norm(const WeightedComplex& X, int k, uint32_t phi) {
    if (k < 0 || k > X.D) throw_param("degree out of range");
    int nk = X.n_faces(k);
    if (nk < 32 && (phi >> nk)) throw_param("cochain has bits beyond the level");
    auto basis = coboundary_basis(X, k);
    if (int(basis.size()) > budgets().cochain_bits)
        throw_capacity("coboundary space too large to sweep");
    return Rat(Int(min_class_num(X.counts[k], basis, phi)), Int(X.denom[k]));
}

HkResult cosystolic_expansion(const WeightedComplex& X, int k) {
    if (k < 0 || k > X.D) throw_param("degree out of range");
    HkResult R;
    R.k = k;
    int nk = X.n_faces(k);
    int nkm = k >= 1 ? X.n_faces(k - 1) : 1;
    if (nk + nkm > budgets().cochain_bits)
        throw_capacity("cochain search needs " + std::to_string(nk + nkm) + " bits");

    auto basis = coboundary_basis(X, k);
    std::vector<uint32_t> dmask;
    if (k < X.D) dmask = facet_masks(X, k);
    const std::vector<long long>* up_counts = k < X.D ? &X.counts[k + 1] : nullptr;
    long long denom_k = X.denom[k];
    long long denom_up = k < X.D ? X.denom[k + 1] : 1;

    long long best_d = 0, best_c = 1; // incumbent ratio dnum/cnum (shared denominators)
    bool have = false;
    uint32_t best_phi = 0;
    uint64_t total = nk > 0 ? (uint64_t(1) << nk) : 0;
    for (uint64_t p = 0; p < total; ++p) {
        uint32_t phi = uint32_t(p);
        if (echelon_reduce(basis, phi) == 0) continue;
        ++R.tested;
        long long dnum = 0;
        if (k < X.D) {
            for (size_t t = 0; t < dmask.size(); ++t)
                if (__builtin_popcount(phi & dmask[t]) & 1) dnum += (*up_counts)[t];
        }
        long long cnum = min_class_num(X.counts[k], basis, phi);
        if (cnum <= 0) throw_internal("zero class norm outside the coboundaries");
        // cross-multiplied: dnum/cnum < best_d/best_c
        if (!have || dnum * best_c < best_d * cnum) {
            have = true;
            best_d = dnum;
            best_c = cnum;
            best_phi = phi;
        }
    }
    R.defined = have;
    if (have) {
        R.h = Rat(Int(best_d) * denom_k, Int(denom_up) * best_c);
        R.minimizer = best_phi;
        R.minimizer_norm_d = k < X.D ? Rat(Int(best_d), Int(denom_up)) : Rat(0);
        R.minimizer_norm_class = Rat(Int(best_c), Int(denom_k));
    }
    return R;
}

std::vector<long long> reduced_betti(const WeightedComplex& X) {
    // independent route: ranks of the coboundary maps with dynamic bitset rows
    auto rank_of = [](std::vector<Bitset> rows) {
        long long rank = 0;
        size_t cols = rows.empty() ? 0 : rows[0].size();
        size_t row = 0;
        for (size_t c = 0; c < cols && row < rows.size(); ++c) {
            size_t pivot = row;
            while (pivot < rows.size() && !rows[pivot].test(c)) ++pivot;
            if (pivot == rows.size()) continue;
            std::swap(rows[row], rows[pivot]);
            for (size_t r = 0; r < rows.size(); ++r)
                if (r != row && rows[r].test(c)) rows[r] ^= rows[row];
            ++row;
            ++rank;
        }
        return rank;
    };

    std::vector<long long> rank_d(X.D + 2, 0); // rank_d[k] = rank of d_k: C^k -> C^{k+1}
    for (int k = 0; k < X.D; ++k) {
        std::vector<Bitset> rows;
        for (int t = 0; t < X.n_faces(k + 1); ++t) {
            const auto& face = X.faces[k + 1][t];
            Bitset row(X.n_faces(k));
            std::vector<int> sub;
            for (size_t drop = 0; drop < face.size(); ++drop) {
                sub.clear();
                for (size_t i = 0; i < face.size(); ++i)
                    if (i != drop) sub.push_back(face[i]);
                int idx = X.face_index(k, sub);
                if (idx < 0) throw_internal("missing facet in a closed complex");
                row.set(idx);
            }
            rows.push_back(std::move(row));
        }
        rank_d[k] = rank_of(std::move(rows));
    }

    std::vector<long long> betti(X.D + 1, 0);
    for (int k = 0; k <= X.D; ++k) {
        long long cycles = X.n_faces(k) - rank_d[k];
        long long bounds = k == 0 ? (X.n_faces(0) > 0 ? 1 : 0) : rank_d[k - 1];
        betti[k] = cycles - bounds;
    }
    return betti;
}

} // namespace pachgap
