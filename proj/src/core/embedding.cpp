#include "core/embedding.hpp"

#include <algorithm>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/rng.hpp"

namespace pachgap {

namespace {

constexpr int kRetryCap = 8;
constexpr uint64_t kCoordTag = 0xc0;
constexpr uint64_t kVerifyTag = 0x5a;

std::vector<Point> draw_points(size_t n, int d, uint64_t seed, int attempt) {
    SplitMix64 rng = substream(seed, kCoordTag + uint64_t(attempt) * 1021);
    std::vector<Point> pts(n, Point(d));
    for (auto& p : pts)
        for (int c = 0; c < d; ++c) p[c] = Rat(int(rng.u16()), 65536);
    return pts;
}

bool all_distinct(const std::vector<Point>& pts) {
    std::vector<Point> sorted = pts;
    std::sort(sorted.begin(), sorted.end(),
              [](const Point& a, const Point& b) { return point_cmp(a, b) < 0; });
    for (size_t i = 1; i < sorted.size(); ++i)
        if (points_equal(sorted[i - 1], sorted[i])) return false;
    return true;
}

// All pairwise disjoint unordered families {S_1,...,S_{d+1}}, 1 <= |S_i| <= d.
// Exhaustive mode is guarded to small ground sets (plane instances).
std::optional<FamilyFailure> verify_exhaustive(const std::vector<Point>& pts, int d,
                                               long long* tested) {
    const int n = int(pts.size());
    if (n > 16 || d != 2)
        throw_capacity("exhaustive general-position verification is limited to <= 16 points, d = 2");
    // candidate subsets: singletons then pairs, lex order; disjointness by mask
    std::vector<std::pair<uint32_t, std::vector<int>>> subs;
    for (int i = 0; i < n; ++i) subs.push_back({1u << i, {i}});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) subs.push_back({(1u << i) | (1u << j), {i, j}});
    const size_t ns = subs.size();
    for (size_t a = 0; a < ns; ++a)
        for (size_t b = a + 1; b < ns; ++b) {
            if (subs[a].first & subs[b].first) continue;
            for (size_t c = b + 1; c < ns; ++c) {
                if ((subs[a].first | subs[b].first) & subs[c].first) continue;
                ++*tested;
                std::vector<std::vector<Point>> fams = {{}, {}, {}};
                for (int i : subs[a].second) fams[0].push_back(pts[i]);
                for (int i : subs[b].second) fams[1].push_back(pts[i]);
                for (int i : subs[c].second) fams[2].push_back(pts[i]);
                if (!affine_hulls_empty(fams))
                    return FamilyFailure{{subs[a].second, subs[b].second, subs[c].second}};
            }
        }
    return std::nullopt;
}

std::optional<FamilyFailure> verify_sampled(const std::vector<Point>& pts, int d, long long samples,
                                            uint64_t seed, long long* tested) {
    const int n = int(pts.size());
    if (n < (d + 1)) throw_precondition("too few points for a disjoint family");
    SplitMix64 rng = substream(seed, kVerifyTag);
    for (long long it = 0; it < samples; ++it) {
        // family sizes in [1, d], distinct indices across the family
        std::vector<std::vector<int>> fam(d + 1);
        std::vector<int> used;
        bool ok = true;
        for (auto& s : fam) {
            int sz = 1 + int(rng.below(uint64_t(d)));
            for (int t = 0; t < sz; ++t) {
                if (int(used.size()) >= n) { ok = false; break; }
                int pick;
                do {
                    pick = int(rng.below(uint64_t(n)));
                } while (std::find(used.begin(), used.end(), pick) != used.end());
                used.push_back(pick);
                s.push_back(pick);
            }
            if (!ok) break;
        }
        if (!ok) continue;
        ++*tested;
        std::vector<std::vector<Point>> fams;
        for (const auto& s : fam) {
            fams.emplace_back();
            for (int i : s) fams.back().push_back(pts[i]);
        }
        if (!affine_hulls_empty(fams)) return FamilyFailure{fam};
    }
    return std::nullopt;
}

} // namespace

std::optional<FamilyFailure> verify_points_generic(const std::vector<Point>& pts, int d,
                                                   VerifyMode mode, long long samples,
                                                   uint64_t seed, long long* families_tested) {
    long long local = 0;
    long long* tested = families_tested ? families_tested : &local;
    if (mode == VerifyMode::Exhaustive) return verify_exhaustive(pts, d, tested);
    return verify_sampled(pts, d, samples, seed, tested);
}

const Point& GenericEmbedding::point_of(int elem) const {
    if (elem < 0 || elem >= int(index_of_elem.size()) || index_of_elem[elem] < 0)
        throw_param("element has no embedded point (bottom or unknown id)");
    return pts[index_of_elem[elem]];
}

GenericEmbedding sample_generic_embedding(const GradedLattice& L, int d, uint64_t seed,
                                          VerifyMode mode, long long samples) {
    if (d < 1) throw_param("embedding needs d >= 1");
    if (samples <= 0) samples = budgets().verify_samples;

    GenericEmbedding emb;
    emb.seed = seed;
    emb.d = d;
    emb.index_of_elem.assign(L.size(), -1);
    for (int x = 0; x < L.size(); ++x)
        if (x != L.bottom) {
            emb.index_of_elem[x] = int(emb.ground.size());
            emb.ground.push_back(x);
        }

    std::optional<FamilyFailure> fail;
    for (int attempt = 0; attempt <= kRetryCap; ++attempt) {
        emb.pts = draw_points(emb.ground.size(), d, seed, attempt);
        if (!all_distinct(emb.pts)) continue;
        emb.log = EmbeddingLog{};
        emb.log.mode = mode;
        fail = verify_points_generic(emb.pts, d, mode, samples, seed + uint64_t(attempt),
                                     &emb.log.families_tested);
        emb.log.retries = attempt;
        if (!fail) {
            emb.log.ok = true;
            return emb;
        }
    }
    std::string family_text;
    for (const auto& s : fail->family) {
        family_text += "{";
        for (size_t i = 0; i < s.size(); ++i)
            family_text += (i ? "," : "") + std::to_string(emb.ground[s[i]]);
        family_text += "}";
    }
    throw_verify("general position failed after retries; offending family " + family_text);
}

} // namespace pachgap
