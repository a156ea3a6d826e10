#include "core/lattice.hpp"

#include <algorithm>
#include <map>

#include "core/config.hpp"
#include "core/error.hpp"
#include "core/rng.hpp"

namespace pachgap {

namespace {
constexpr int kTableMax = 1024; // precompute join/meet tables up to this size
}

Int GradedLattice::N(int k) const {
    if (q <= 0) throw_param("projective counts need a field lattice (q > 0)");
    if (k < 0) return 0;
    return (ipow(Int(q), unsigned(k + 1)) - 1) / (q - 1);
}

std::optional<int> GradedLattice::join_checked(int x, int y) const {
    Bitset common = up_[x] & up_[y];
    if (common.none()) return std::nullopt;
    // candidate: a common upper bound below all others
    for (size_t z = common.find_first(); z != Bitset::npos; z = common.find_next(z))
        if (common.is_subset_of(up_[z])) return int(z);
    return std::nullopt;
}

std::optional<int> GradedLattice::meet_checked(int x, int y) const {
    Bitset common = down_[x] & down_[y];
    if (common.none()) return std::nullopt;
    for (size_t z = common.find_first(); z != Bitset::npos; z = common.find_next(z))
        if (common.is_subset_of(down_[z])) return int(z);
    return std::nullopt;
}

int GradedLattice::join(int x, int y) const {
    if (tables_) return join_tab_[size_t(x) * size() + y];
    auto j = join_checked(x, y);
    if (!j) throw_verify("join does not exist: not a lattice");
    return *j;
}

int GradedLattice::meet(int x, int y) const {
    if (tables_) return meet_tab_[size_t(x) * size() + y];
    auto m = meet_checked(x, y);
    if (!m) throw_verify("meet does not exist: not a lattice");
    return *m;
}

Bitset GradedLattice::atoms_below(int x) const {
    Bitset out(atoms.size());
    for (size_t i = 0; i < atoms.size(); ++i)
        if (leq(atoms[i], x)) out.set(i);
    return out;
}

Bitset GradedLattice::coatoms_above(int x) const {
    Bitset out(coatoms.size());
    for (size_t i = 0; i < coatoms.size(); ++i)
        if (leq(x, coatoms[i])) out.set(i);
    return out;
}

std::vector<int> GradedLattice::rank_profile() const {
    std::vector<int> prof(top_rank + 1, 0);
    for (const auto& e : elems) {
        if (e.rank < 0 || e.rank > top_rank) throw_verify("element rank out of range");
        ++prof[e.rank];
    }
    return prof;
}

void GradedLattice::finalize() {
    const int n = size();
    down_.assign(n, Bitset(n));
    for (int x = 0; x < n; ++x)
        for (size_t y = up_[x].find_first(); y != Bitset::npos; y = up_[x].find_next(y))
            down_[y].set(x);

    bottom = top = -1;
    for (int x = 0; x < n; ++x) {
        if (down_[x].count() == 1) {
            if (bottom >= 0) throw_verify("multiple minimal elements");
            bottom = x;
        }
        if (up_[x].count() == 1) {
            if (top >= 0) throw_verify("multiple maximal elements");
            top = x;
        }
    }
    if (bottom < 0 || top < 0) throw_verify("missing bottom or top");
    top_rank = elems[top].rank;

    atoms.clear();
    coatoms.clear();
    for (int x = 0; x < n; ++x) {
        if (elems[x].rank == 1) atoms.push_back(x);
        if (elems[x].rank == top_rank - 1) coatoms.push_back(x);
    }

    coatom_sets_.assign(atoms.size(), Bitset(coatoms.size()));
    for (size_t i = 0; i < atoms.size(); ++i)
        for (size_t c = 0; c < coatoms.size(); ++c)
            if (leq(atoms[i], coatoms[c])) coatom_sets_[i].set(c);

    // Join/meet tables; left unset (and reported by validate_lattice instead)
    // if some pair has no unique bound, so broken fixtures stay constructible.
    tables_ = false;
    if (n <= kTableMax) {
        join_tab_.assign(size_t(n) * n, -1);
        meet_tab_.assign(size_t(n) * n, -1);
        bool complete = true;
        for (int x = 0; x < n && complete; ++x)
            for (int y = x; y < n; ++y) {
                auto j = join_checked(x, y), m = meet_checked(x, y);
                if (!j || !m) {
                    complete = false;
                    break;
                }
                join_tab_[size_t(x) * n + y] = join_tab_[size_t(y) * n + x] = *j;
                meet_tab_[size_t(x) * n + y] = meet_tab_[size_t(y) * n + x] = *m;
            }
        tables_ = complete;
    }
}

GradedLattice build_subspace_lattice(int r, long long q) {
    if (r < 1) throw_param("subspace lattice needs rank r >= 1");
    if (q < 2 || q > 32749 || !is_prime_ll(q)) throw_param("q must be prime and at most 32749, got " + std::to_string(q));
    Int vectors = ipow(Int(q), unsigned(r));
    if (vectors > budgets().lattice_vectors)
        throw_capacity("q^r = " + vectors.str() + " exceeds the lattice vector budget");

    std::vector<Subspace> subs = enumerate_subspaces(r, int(q));
    if ((long long)subs.size() > budgets().lattice_elems)
        throw_capacity("lattice would have " + std::to_string(subs.size()) + " elements, over budget");
    std::sort(subs.begin(), subs.end(), [](const Subspace& a, const Subspace& b) { return subspace_cmp(a, b) < 0; });

    GradedLattice L;
    L.q = int(q);
    L.top_rank = r;
    const int n = int(subs.size());
    L.elems.resize(n);
    for (int i = 0; i < n; ++i) L.elems[i] = {subs[i].dim(), subs[i]};

    L.up_.assign(n, Bitset(n));
    for (int x = 0; x < n; ++x) {
        L.up_[x].set(x);
        for (int y = 0; y < n; ++y) {
            if (subs[x].dim() >= subs[y].dim() || x == y) continue;
            if (subspace_leq(subs[x], subs[y])) L.up_[x].set(y);
        }
    }
    L.finalize();
    return L;
}

GradedLattice build_lattice(int q, int top_rank, std::vector<GradedLattice::Elem> elems,
                            const std::vector<std::pair<int, int>>& leq_pairs, bool derive_order) {
    GradedLattice L;
    L.q = q;
    L.top_rank = top_rank;
    L.elems = std::move(elems);
    const int n = L.size();
    if (n == 0) throw_param("lattice needs at least one element");
    if (n > budgets().lattice_elems) throw_capacity("lattice element count over budget");
    L.up_.assign(n, Bitset(n));
    for (int x = 0; x < n; ++x) L.up_[x].set(x);
    if (derive_order) {
        for (int x = 0; x < n; ++x) {
            if (!L.elems[x].sub) throw_param("derived order needs coordinates on every element");
            for (int y = 0; y < n; ++y) {
                if (x == y || L.elems[x].sub->dim() >= L.elems[y].sub->dim()) continue;
                if (subspace_leq(*L.elems[x].sub, *L.elems[y].sub)) L.up_[x].set(y);
            }
        }
    } else {
        for (auto [x, y] : leq_pairs) {
            if (x < 0 || y < 0 || x >= n || y >= n) throw_param("leq pair references unknown element");
            L.up_[x].set(y);
        }
        // transitive closure
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < n; ++x)
                for (size_t y = L.up_[x].find_first(); y != Bitset::npos; y = L.up_[x].find_next(y)) {
                    Bitset merged = L.up_[x] | L.up_[y];
                    if (merged != L.up_[x]) {
                        L.up_[x] = std::move(merged);
                        changed = true;
                    }
                }
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && L.up_[x].test(y) && L.up_[y].test(x))
                    throw_param("order contains a cycle");
    }
    L.finalize();
    return L;
}

ValidationReport validate_lattice(const GradedLattice& L, uint64_t seed) {
    ValidationReport rep;
    auto add = [&rep](const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back({name, pass, detail});
        if (!pass) rep.all_pass = false;
    };
    const int n = L.size();

    int minimal = 0, maximal = 0;
    for (int x = 0; x < n; ++x) {
        if (L.down_set(x).count() == 1) ++minimal;
        if (L.up_set(x).count() == 1) ++maximal;
    }
    add("unique_bottom", minimal == 1, "minimal elements: " + std::to_string(minimal));
    add("unique_top", maximal == 1, "maximal elements: " + std::to_string(maximal));
    add("bottom_rank_zero", L.rank_of(L.bottom) == 0,
        "rank(bottom) = " + std::to_string(L.rank_of(L.bottom)));
    add("top_rank", L.rank_of(L.top) == L.top_rank,
        "rank(top) = " + std::to_string(L.rank_of(L.top)));

    // grading: every cover step raises rank by exactly one
    bool graded = true;
    std::string grade_detail;
    for (int x = 0; x < n && graded; ++x) {
        const Bitset& up = L.up_set(x);
        for (size_t y = up.find_first(); y != Bitset::npos; y = up.find_next(y)) {
            if (int(y) == x) continue;
            Bitset between = L.up_set(x) & L.down_set(int(y));
            if (between.count() == 2 && L.rank_of(int(y)) != L.rank_of(x) + 1) {
                graded = false;
                grade_detail = "cover " + std::to_string(x) + " < " + std::to_string(y) +
                               " jumps rank " + std::to_string(L.rank_of(x)) + " -> " +
                               std::to_string(L.rank_of(int(y)));
                break;
            }
        }
    }
    add("graded_by_covers", graded, grade_detail);

    bool joins = true, meets = true;
    std::string join_detail, meet_detail;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (joins && !L.join_checked(x, y)) {
                joins = false;
                join_detail = "pair (" + std::to_string(x) + "," + std::to_string(y) + ")";
            }
            if (meets && !L.meet_checked(x, y)) {
                meets = false;
                meet_detail = "pair (" + std::to_string(x) + "," + std::to_string(y) + ")";
            }
        }
    add("join_exists_unique", joins, join_detail);
    add("meet_exists_unique", meets, meet_detail);

    if (joins && meets) {
        // identity checks on triples: all when small, sampled otherwise
        bool assoc = true, absorb = true;
        std::string assoc_detail, absorb_detail;
        auto check_triple = [&](int x, int y, int z) {
            if (L.join(L.join(x, y), z) != L.join(x, L.join(y, z)) ||
                L.meet(L.meet(x, y), z) != L.meet(x, L.meet(y, z))) {
                assoc = false;
                assoc_detail = "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
            }
            if (L.join(x, L.meet(x, y)) != x || L.meet(x, L.join(x, y)) != x) {
                absorb = false;
                absorb_detail = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
            }
        };
        if (n <= 40) {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    for (int z = 0; z < n; ++z) check_triple(x, y, z);
        } else {
            SplitMix64 rng = substream(seed, 0x1a771ce);
            for (int t = 0; t < 10'000; ++t)
                check_triple(int(rng.below(n)), int(rng.below(n)), int(rng.below(n)));
        }
        add("associativity", assoc, assoc_detail);
        add("absorption", absorb, absorb_detail);
    }

    return rep;
}

} // namespace pachgap
