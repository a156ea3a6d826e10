#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "core/error.hpp"
#include "core/lattice.hpp"
#include "core/lattice_json.hpp"
#include "core/primes.hpp"

using namespace pachgap;

// ---- oracles ----------------------------------------------------------

// Independent order test on field lattices, straight from the subspace data.
static bool oracle_leq(const GradedLattice& L, int x, int y) {
    return subspace_leq(*L.elems[x].sub, *L.elems[y].sub);
}

// The Boolean lattice of subsets of {0,1,2} as an abstract fixture, built
// from explicit cover pairs. Element i represents the bitmask i.
static GradedLattice boolean3() {
    std::vector<GradedLattice::Elem> elems(8);
    for (int i = 0; i < 8; ++i) elems[i].rank = __builtin_popcount(unsigned(i));
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            if (a != b && (a & b) == a) pairs.push_back({a, b});
    return build_lattice(0, 3, elems, pairs, false);
}

// A graded poset that is not a lattice: two incomparable joins for {a, b}.
static GradedLattice bowtie() {
    std::vector<GradedLattice::Elem> elems(6);
    elems[0].rank = 0;
    elems[1].rank = elems[2].rank = 1;
    elems[3].rank = elems[4].rank = 2;
    elems[5].rank = 3;
    std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {1, 3}, {1, 4},
                                              {2, 3}, {2, 4}, {3, 5}, {4, 5}};
    return build_lattice(0, 3, elems, pairs, false);
}

// ---- tests ------------------------------------------------------------

TEST_CASE("frozen rank profiles") {
    CHECK(build_subspace_lattice(3, 2).rank_profile() == std::vector<int>{1, 7, 7, 1});
    CHECK(build_subspace_lattice(3, 3).rank_profile() == std::vector<int>{1, 13, 13, 1});
    CHECK(build_subspace_lattice(2, 5).rank_profile() == std::vector<int>{1, 6, 1});
    CHECK(build_subspace_lattice(2, 3).rank_profile() == std::vector<int>{1, 4, 1});
    CHECK(build_subspace_lattice(1, 7).rank_profile() == std::vector<int>{1, 1});
}

TEST_CASE("projective counts") {
    GradedLattice L = build_subspace_lattice(3, 2);
    CHECK(L.N(-1) == 0);
    CHECK(L.N(0) == 1);
    CHECK(L.N(1) == 3);
    CHECK(L.N(2) == 7);
    CHECK(build_subspace_lattice(3, 3).N(2) == 13);
    CHECK(Int(L.atoms.size()) == L.N(L.dim_d()));
    CHECK(Int(L.coatoms.size()) == L.N(L.dim_d()));
}

TEST_CASE("order relation matches the subspace oracle") {
    for (auto [r, q] : {std::pair<int, int>{3, 2}, {2, 5}, {3, 3}}) {
        GradedLattice L = build_subspace_lattice(r, q);
        for (int x = 0; x < L.size(); ++x)
            for (int y = 0; y < L.size(); ++y) CHECK(L.leq(x, y) == oracle_leq(L, x, y));
    }
}

TEST_CASE("join and meet match subspace sum and intersection") {
    GradedLattice L = build_subspace_lattice(3, 2);
    for (int x = 0; x < L.size(); ++x)
        for (int y = 0; y < L.size(); ++y) {
            int j = L.join(x, y);
            int m = L.meet(x, y);
            CHECK(*L.elems[j].sub == subspace_sum(*L.elems[x].sub, *L.elems[y].sub));
            CHECK(*L.elems[m].sub == subspace_intersect(*L.elems[x].sub, *L.elems[y].sub));
            CHECK(L.join_checked(x, y) == j);
            CHECK(L.meet_checked(x, y) == m);
        }
}

TEST_CASE("ids are sorted by rank, bottom and top sit at the ends") {
    GradedLattice L = build_subspace_lattice(3, 3);
    for (int x = 0; x + 1 < L.size(); ++x) CHECK(L.rank_of(x) <= L.rank_of(x + 1));
    CHECK(L.bottom == 0);
    CHECK(L.top == L.size() - 1);
    CHECK(L.rank_of(L.bottom) == 0);
    CHECK(L.rank_of(L.top) == L.top_rank);
}

TEST_CASE("atomisticity: every element is the join of the atoms below it") {
    GradedLattice L = build_subspace_lattice(3, 2);
    for (int x = 0; x < L.size(); ++x) {
        Bitset below = L.atoms_below(x);
        int acc = L.bottom;
        for (size_t i = below.find_first(); i != Bitset::npos; i = below.find_next(i))
            acc = L.join(acc, L.atoms[i]);
        CHECK(acc == x);
    }
}

TEST_CASE("atom and coatom incidence caches agree with direct loops") {
    GradedLattice L = build_subspace_lattice(3, 2);
    for (int x = 0; x < L.size(); ++x) {
        Bitset ab = L.atoms_below(x);
        for (size_t i = 0; i < L.atoms.size(); ++i) CHECK(ab.test(i) == L.leq(L.atoms[i], x));
        Bitset ca = L.coatoms_above(x);
        for (size_t i = 0; i < L.coatoms.size(); ++i) CHECK(ca.test(i) == L.leq(x, L.coatoms[i]));
    }
    for (size_t a = 0; a < L.atoms.size(); ++a) {
        const Bitset& c = L.coatoms_above_atom(int(a));
        CHECK(c == L.coatoms_above(L.atoms[a]));
    }
}

TEST_CASE("validation passes on genuine lattices") {
    CHECK(validate_lattice(build_subspace_lattice(3, 2), 7).all_pass);
    CHECK(validate_lattice(build_subspace_lattice(2, 5), 7).all_pass);
    CHECK(validate_lattice(boolean3(), 7).all_pass);
}

TEST_CASE("validation flags a graded non-lattice") {
    ValidationReport r = validate_lattice(bowtie(), 7);
    CHECK(!r.all_pass);
    bool join_failure = false;
    for (const auto& c : r.checks)
        if (!c.pass) join_failure = true;
    CHECK(join_failure);
}

TEST_CASE("boolean fixture behaves like subset algebra") {
    GradedLattice B = boolean3();
    CHECK(B.rank_profile() == std::vector<int>{1, 3, 3, 1});
    CHECK(B.q == 0);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            CHECK(B.leq(a, b) == ((a & b) == a));
            CHECK(B.join(a, b) == (a | b));
            CHECK(B.meet(a, b) == (a & b));
        }
    CHECK_THROWS_AS(B.N(1), Error);
}

TEST_CASE("prime window selection") {
    CHECK(find_prime_q(16, 2).q == 7);
    CHECK(find_prime_q(81, 2).q == 17);
    CHECK(find_prime_q(256, 2).q == 29);

    PrimeWindow w = find_prime_q(16, 2);
    CHECK(w.lower_pow == 48);  // (d+1) n
    CHECK(w.upper_pow == 192); // 2^d (d+1) n
    CHECK(prime_in_window(7, w));
    CHECK(prime_in_window(13, w));
    CHECK(!prime_in_window(5, w));
    CHECK(!prime_in_window(17, w)); // 289 > 192
    CHECK(!prime_in_window(9, w));  // in range but composite

    try {
        find_prime_q(2, 2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == ErrKind::Precondition);
    }
    try {
        find_prime_q(16, 0);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == ErrKind::Param);
    }
}

TEST_CASE("non-prime q and capacity guards are parameter errors") {
    try {
        build_subspace_lattice(3, 4);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == ErrKind::Param);
        CHECK(std::string(e.what()).find("q must be prime") != std::string::npos);
    }
    try {
        build_subspace_lattice(30, 2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == ErrKind::Capacity);
    }
    CHECK_THROWS_AS(build_subspace_lattice(0, 2), Error);
}

TEST_CASE("serialization round trips byte-exactly, both forms") {
    for (const GradedLattice& L : {build_subspace_lattice(3, 2), boolean3()}) {
        std::string t1 = lattice_to_json_text(L);
        GradedLattice L2 = lattice_from_json_text(t1);
        std::string t2 = lattice_to_json_text(L2);
        CHECK(t1 == t2);
        CHECK(L2.size() == L.size());
        CHECK(L2.rank_profile() == L.rank_profile());
        for (int x = 0; x < L.size(); ++x)
            for (int y = 0; y < L.size(); ++y) CHECK(L2.leq(x, y) == L.leq(x, y));
    }
}

TEST_CASE("malformed lattice text is rejected") {
    CHECK_THROWS_AS(lattice_from_json_text("not json"), Error);
    CHECK_THROWS_AS(lattice_from_json_text("{}"), Error);
}
