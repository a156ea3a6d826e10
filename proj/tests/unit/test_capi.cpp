#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <string>

#include "pachgap/pachgap.h"

using nlohmann::json;

// take ownership of an out string, free it, hand back a std::string
static std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    pg_string_free(s);
    return out;
}

static json take_json(char* s) { return json::parse(take(s)); }

struct Lat {
    pg_lattice* p = nullptr;
    ~Lat() { pg_lattice_free(p); }
};
struct Map {
    pg_map* p = nullptr;
    ~Map() { pg_map_free(p); }
};
struct Cx {
    pg_complex* p = nullptr;
    ~Cx() { pg_complex_free(p); }
};
struct Hg {
    pg_hypergraph* p = nullptr;
    ~Hg() { pg_hypergraph_free(p); }
};

TEST_CASE("version and error plumbing") {
    CHECK(std::string(pg_version()) == "1.0.0");
    CHECK(pg_lattice_build(3, 2, nullptr) == PG_ERR_PARAM);
    CHECK(std::string(pg_last_error()).size() > 0);
    pg_string_free(nullptr); // must be a no-op
    pg_lattice_free(nullptr);
    pg_map_free(nullptr);
    pg_complex_free(nullptr);
    pg_hypergraph_free(nullptr);
}

TEST_CASE("budget scaling validates its argument") {
    CHECK(pg_budget_scale(nullptr) == PG_ERR_PARAM);
    CHECK(pg_budget_scale("0") == PG_ERR_PARAM);
    CHECK(pg_budget_scale("-1") == PG_ERR_PARAM);
    CHECK(pg_budget_scale("x") == PG_ERR_PARAM);
    CHECK(pg_budget_scale("2") == PG_OK);
    CHECK(pg_budget_scale("1/2") == PG_OK); // back to where we started
}

TEST_CASE("lattice lifecycle") {
    Lat L;
    REQUIRE(pg_lattice_build(3, 2, &L.p) == PG_OK);

    char* s = nullptr;
    REQUIRE(pg_lattice_info(L.p, &s) == PG_OK);
    json info = take_json(s);
    CHECK(info["profile"] == json::array({1, 7, 7, 1}));
    CHECK(info["atoms"] == 7);
    CHECK(info["coatoms"] == 7);

    REQUIRE(pg_lattice_validate(L.p, 5, &s) == PG_OK);
    CHECK(take_json(s)["all_pass"] == true);

    REQUIRE(pg_lattice_to_json(L.p, &s) == PG_OK);
    std::string text = take(s);
    Lat L2;
    REQUIRE(pg_lattice_from_json(text.c_str(), &L2.p) == PG_OK);
    REQUIRE(pg_lattice_to_json(L2.p, &s) == PG_OK);
    CHECK(take(s) == text);

    CHECK(pg_lattice_from_json("{", &L2.p) == PG_ERR_IO);

    pg_lattice* bad = nullptr;
    CHECK(pg_lattice_build(3, 4, &bad) == PG_ERR_PARAM);
    CHECK(std::string(pg_last_error()).find("prime") != std::string::npos);
    CHECK(bad == nullptr);
    CHECK(pg_lattice_build(0, 2, &bad) == PG_ERR_PARAM);
}

TEST_CASE("prime window and expansion tables") {
    long long q = 0;
    char* s = nullptr;
    REQUIRE(pg_prime_window(16, 2, &q, &s) == PG_OK);
    CHECK(q == 7);
    json w = take_json(s);
    CHECK(w["q"] == 7);

    CHECK(pg_prime_window(2, 2, &q, &s) == PG_ERR_PRECONDITION);

    Lat L;
    REQUIRE(pg_lattice_build(3, 2, &L.p) == PG_OK);
    REQUIRE(pg_expansion_table(L.p, 1, 7, 1, &s) == PG_OK);
    std::string csv = take(s);
    CHECK(csv.rfind("m,min_gamma,corradi_num,corradi_den,rhs21_num,rhs21_den,witness", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);

    REQUIRE(pg_expansion_table(L.p, 3, 3, 0, &s) == PG_OK);
    json t = take_json(s);
    REQUIRE(t["rows"].size() == 1);
    CHECK(t["rows"][0]["m"] == 3);
    CHECK(t["rows"][0]["min_gamma"] == 6);

    REQUIRE(pg_corradi_chain(2, 2, 2, &s) == PG_OK);
    json c = take_json(s);
    CHECK(c["all_hold"] == true);
    CHECK(pg_corradi_chain(2, 2, 0, &s) == PG_ERR_PARAM);
}

TEST_CASE("map, cover, membership, tau") {
    Lat L;
    REQUIRE(pg_lattice_build(3, 2, &L.p) == PG_OK);
    Map M;
    REQUIRE(pg_map_build(L.p, 42, 1, &M.p) == PG_OK);

    char* s = nullptr;
    REQUIRE(pg_map_summary(M.p, &s) == PG_OK);
    json sum = take_json(s);
    CHECK(sum["embedding"]["ok"] == true);
    CHECK(sum["d"] == 2);

    REQUIRE(pg_map_cover(M.p, "0 0", &s) == PG_OK);
    json cov = take_json(s);
    CHECK(cov["certificate"]["valid"] == true);
    CHECK(cov["certificate"]["count"].is_number());

    CHECK(pg_map_cover(M.p, "0", &s) == PG_ERR_PARAM);     // wrong dimension
    CHECK(pg_map_cover(M.p, "1/x 0", &s) == PG_ERR_PARAM); // bad rational

    // element ids sort by rank: 0 is bottom, 1..7 the atoms of L(3,2)
    int atoms[1] = {1};
    REQUIRE(pg_map_membership(M.p, "0 0", atoms, 1, &s) == PG_OK);
    json mem = take_json(s);
    CHECK(mem["membership"]["member"].is_boolean());
    int bad_atoms[1] = {0};
    CHECK(pg_map_membership(M.p, "0 0", bad_atoms, 1, &s) == PG_ERR_PARAM);
    CHECK(pg_map_membership(M.p, "0 0", nullptr, 1, &s) == PG_ERR_PARAM);

    REQUIRE(pg_tau(M.p, 1, 7, &s) == PG_OK);
    json tau = take_json(s);
    CHECK(tau["partitions_tested"] == 35);
    CHECK(tau["sampled"] == false);
    CHECK(tau["tau_hat"] == 1);
    CHECK(tau["box_analyses"].size() >= 1);
    for (const auto& a : tau["box_analyses"]) {
        CHECK(a["incl_excl_holds"] == true);
        CHECK(a["cover_holds"] == true);
        CHECK(a["gamma_bound_holds"] == true);
    }
}

TEST_CASE("bound chain") {
    char* s = nullptr;
    REQUIRE(pg_bound_chain(16, 2, &s) == PG_OK);
    json c = take_json(s);
    CHECK(c["window"]["q"] == 7);
    CHECK(c["final_bound"]["value_floor"] == "144");
    CHECK(c["all_hold"] == true);
    CHECK(pg_bound_chain(15, 2, &s) == PG_ERR_PRECONDITION);
}

TEST_CASE("weighted complexes") {
    Cx X;
    int sizes[3] = {2, 2, 2};
    REQUIRE(pg_complex_transversal(sizes, 3, &X.p) == PG_OK);
    char* s = nullptr;
    REQUIRE(pg_complex_info(X.p, &s) == PG_OK);
    json info = take_json(s);
    CHECK(info["top_dim"] == 2);
    CHECK(info["level_sizes"] == json::array({6, 12, 8}));
    CHECK(info["reduced_betti"] == json::array({0, 0, 1}));

    REQUIRE(pg_complex_hk(X.p, 0, &s) == PG_OK);
    json h0 = take_json(s);
    CHECK(h0["h"] == "1/1");
    CHECK(h0["matches_cohomology"] == true);
    CHECK(pg_complex_hk(X.p, 5, &s) == PG_ERR_PARAM);

    Cx Y;
    REQUIRE(pg_complex_parse("0 1 2\n", &Y.p) == PG_OK);
    REQUIRE(pg_complex_info(Y.p, &s) == PG_OK);
    CHECK(take_json(s)["top_faces"] == 1);
    CHECK(pg_complex_parse("0 x\n", &Y.p) == PG_ERR_PARAM);
    int bad_sizes[1] = {0};
    CHECK(pg_complex_transversal(bad_sizes, 1, &X.p) == PG_ERR_PARAM);
}

TEST_CASE("hypergraphs") {
    Hg H;
    std::string text = "classes a0 a1 | b0 b1\nedge a0 b0\nedge a0 b1\nedge a1 b0\nedge a1 b1\n";
    REQUIRE(pg_hypergraph_parse(text.c_str(), &H.p) == PG_OK);
    char* s = nullptr;
    REQUIRE(pg_hypergraph_text(H.p, &s) == PG_OK);
    CHECK(take(s) == text);

    REQUIRE(pg_hypergraph_extract(H.p, 2, &s) == PG_OK);
    json e = take_json(s);
    CHECK(e["m_requested"] == 2);
    CHECK(e["found"] == true);
    CHECK(e["box"]["m"] == 2);

    REQUIRE(pg_hypergraph_extract(H.p, 3, &s) == PG_OK);
    CHECK(take_json(s)["found"] == false);

    REQUIRE(pg_hypergraph_max_box(H.p, &s) == PG_OK);
    CHECK(take_json(s)["m"] == 2);

    CHECK(pg_hypergraph_parse("edge a b\n", &H.p) == PG_ERR_PARAM);
    CHECK(pg_hypergraph_extract(H.p, 0, &s) == PG_ERR_PARAM);
}

TEST_CASE("affine baselines") {
    char* s = nullptr;
    REQUIRE(pg_baseline("first_selection", "0,0 1,0 0,1 1/3,1/3\n", 1, &s) == PG_OK);
    json r = take_json(s);
    CHECK(r["mode"] == "first_selection");
    CHECK(r["m"].get<int>() >= 1);

    REQUIRE(pg_baseline("pach", "0 1\n10 11\n", 2, &s) == PG_OK);
    CHECK(take_json(s)["m"] == 2);

    CHECK(pg_baseline("nonsense", "0 1\n", 1, &s) == PG_ERR_PARAM);
    CHECK(pg_baseline("pach", "", 1, &s) == PG_ERR_PARAM);
    CHECK(pg_baseline(nullptr, "0 1\n", 1, &s) == PG_ERR_PARAM);
}

TEST_CASE("whole pipeline runs clean") {
    char* s = nullptr;
    REQUIRE(pg_run_all(7, &s) == PG_OK);
    json all = take_json(s);
    CHECK(all["violations"] == 0);
    CHECK(all["seed"] == 7);
    CHECK(all.contains("lattice"));
    CHECK(all.contains("tau"));
    CHECK(all.contains("baseline"));
}
