#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "json.hpp"
#include "spectraham.h"

extern "C" int capi_compat_smoke(void);

using Json = nlohmann::ordered_json;

namespace {

struct Handle {
    sp_graph* g = nullptr;
    ~Handle() { sp_graph_free(g); }
};

struct Str {
    char* s = nullptr;
    ~Str() { sp_string_free(s); }
    std::string str() const { return s ? s : ""; }
};

} // namespace

TEST_CASE("c translation unit links and runs") { CHECK(capi_compat_smoke() == 0); }

TEST_CASE("graph lifecycle through the C surface") {
    Handle h;
    REQUIRE(sp_graph_from_graph6("Bw", &h.g) == SP_OK);
    CHECK(sp_graph_order(h.g) == 3);
    CHECK(sp_graph_edge_count(h.g) == 3);
    CHECK(sp_graph_has_edge(h.g, 0, 1) == 1);
    CHECK(sp_graph_is_connected(h.g) == 1);
    CHECK(sp_graph_is_two_connected(h.g) == 1);
    CHECK(sp_graph_degree(h.g, 0) == 2);
    CHECK(sp_graph_x_size(h.g) == -1);

    Str g6;
    REQUIRE(sp_graph_to_graph6(h.g, &g6.s) == SP_OK);
    CHECK(g6.str() == "Bw");

    Str digest;
    REQUIRE(sp_graph_digest(h.g, &digest.s) == SP_OK);
    CHECK(digest.str().rfind("fnv1a64:", 0) == 0);

    Handle comp;
    REQUIRE(sp_graph_complement(h.g, &comp.g) == SP_OK);
    CHECK(sp_graph_edge_count(comp.g) == 0);
}

TEST_CASE("error reporting") {
    Handle h;
    CHECK(sp_graph_from_graph6("B", &h.g) == SP_ERR_PARSE);
    CHECK(std::strlen(sp_last_error()) > 0);

    int32_t self_loop[] = {1, 1};
    CHECK(sp_graph_from_edges(3, self_loop, 1, &h.g) == SP_ERR_INVALID_EDGE);
    CHECK(sp_graph_from_edges(3, nullptr, 2, &h.g) == SP_ERR_INVALID_ARGUMENT);

    REQUIRE(sp_graph_from_graph6("C~", &h.g) == SP_OK);
    CHECK(sp_graph_set_x_size(h.g, 2) == SP_ERR_INVALID_ARGUMENT); // K4 is not bipartite
    Handle qc;
    CHECK(sp_graph_quasi_complement(h.g, &qc.g) == SP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("bipartite handles") {
    int32_t cross[] = {0, 0, 0, 1, 1, 0, 1, 1, 2, 0, 2, 1};
    Handle h;
    REQUIRE(sp_bipartite_from_edges(3, 2, cross, 6, &h.g) == SP_OK); // K_{3,2}
    CHECK(sp_graph_order(h.g) == 5);
    CHECK(sp_graph_x_size(h.g) == 3);

    sp_spectral_info info{};
    REQUIRE(sp_spectral_radius(h.g, SP_MATRIX_SIGNLESS_LAPLACIAN, 1e-10, SP_METHOD_AUTO, &info) == SP_OK);
    CHECK(info.value == doctest::Approx(5.0)); // q(K_{3,2}) = 5

    Handle qc;
    REQUIRE(sp_graph_quasi_complement(h.g, &qc.g) == SP_OK);
    CHECK(sp_graph_edge_count(qc.g) == 0);
}

TEST_CASE("spectral vector and bounds json") {
    Handle h;
    REQUIRE(sp_graph_from_graph6("C~", &h.g) == SP_OK); // K4
    double vec[4];
    sp_spectral_info info{};
    REQUIRE(sp_spectral_radius_vector(h.g, SP_MATRIX_ADJACENCY, 1e-10, SP_METHOD_DENSE, &info, vec) ==
            SP_OK);
    CHECK(info.value == doctest::Approx(3.0));
    for (double x : vec) CHECK(x == doctest::Approx(0.5));
    CHECK(info.residual <= 1e-9);

    Str bounds;
    REQUIRE(sp_bounds_json(h.g, 1, 1e-10, &bounds.s) == SP_OK);
    Json j = Json::parse(bounds.str());
    CHECK(j["bounds"]["hong_shu_upper"].get<double>() == doctest::Approx(3.0));
    CHECK(j["mu"]["value"].get<double>() == doctest::Approx(3.0));
}

TEST_CASE("closure through the C surface") {
    Handle h; // K4 minus the 0-1 edge
    int32_t edges[] = {0, 2, 0, 3, 1, 2, 1, 3, 2, 3};
    REQUIRE(sp_graph_from_edges(4, edges, 5, &h.g) == SP_OK);
    sp_graph* closed = nullptr;
    int32_t* added = nullptr;
    size_t count = 0;
    REQUIRE(sp_closure(h.g, 4, &closed, &added, &count) == SP_OK);
    Handle hc{};
    hc.g = closed;
    CHECK(sp_graph_edge_count(closed) == 6);
    REQUIRE(count == 1);
    CHECK(added[0] == 0);
    CHECK(added[1] == 1);
    sp_buffer_free(added);
}

TEST_CASE("oracle and families through the C surface") {
    Handle ex;
    REQUIRE(sp_family_build("K2JoinSplit", 9, 2, 0, &ex.g) == SP_OK);
    CHECK(sp_graph_order(ex.g) == 9);
    CHECK(sp_graph_edge_count(ex.g) == 30);

    sp_oracle_info info{};
    int32_t* witness = nullptr;
    size_t len = 0;
    REQUIRE(sp_oracle_check(ex.g, SP_PROP_HAMILTON_CONNECTED, 0, 24, &info, &witness, &len) == SP_OK);
    CHECK(info.holds == 0);
    CHECK(info.failing_u >= 0);
    sp_buffer_free(witness);

    int member = 0;
    Str wit;
    REQUIRE(sp_family_membership(ex.g, "K2JoinSplit", 9, 2, &member, &wit.s) == SP_OK);
    CHECK(member == 1);

    Handle cnk;
    REQUIRE(sp_family_build("Cnk", 6, 2, 0, &cnk.g) == SP_OK);
    CHECK(sp_graph_x_size(cnk.g) == 5);
    REQUIRE(sp_oracle_check(cnk.g, SP_PROP_TRACEABLE, 0, 24, &info, &witness, &len) == SP_OK);
    CHECK(info.holds == 0);
    sp_buffer_free(witness);

    Handle sample;
    REQUIRE(sp_family_sample("ESn", 8, 0, 3, 7, 1, &sample.g) == SP_OK);
    CHECK(sp_graph_order(sample.g) == 8);
    REQUIRE(sp_family_membership(sample.g, "ESn", 8, 0, &member, nullptr) == SP_OK);
    CHECK(member == 1);

    CHECK(sp_family_build("NoSuchFamily", 4, 1, 0, &sample.g) == SP_ERR_INVALID_FAMILY_PARAMS);
}

TEST_CASE("theorem check and validation json") {
    Handle k9;
    REQUIRE(sp_graph_from_edges(9, nullptr, 0, &k9.g) == SP_OK);
    // build K9 via complement of the empty graph
    Handle full;
    REQUIRE(sp_graph_complement(k9.g, &full.g) == SP_OK);

    Str verdict;
    REQUIRE(sp_theorem_check(full.g, "T2_10", 2, 1e-10, 1e-6, 0, 1, 24, &verdict.s) == SP_OK);
    Json j = Json::parse(verdict.str());
    CHECK(j["hypothesis"] == "met");
    CHECK(j["conclusion"]["type"] == "certified");
    CHECK(j["validation"]["agreed"] == true);

    CHECK(sp_theorem_check(full.g, "T9_9", 2, 0, 0, 0, 0, 0, &verdict.s) == SP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("sharpness, remark and survey json") {
    Str sharp;
    REQUIRE(sp_sharpness("L2_9", 9, 2, 1e-10, &sharp.s) == SP_OK);
    Json js = Json::parse(sharp.str());
    CHECK(js["all_strict"] == true);
    CHECK(sp_sharpness("L2_9", 8, 2, 1e-10, &sharp.s) == SP_ERR_HYPOTHESIS_NOT_MET);

    Str remark;
    REQUIRE(sp_remark_3_11(9, 2, 1e-10, &remark.s) == SP_OK);
    Json jr = Json::parse(remark.str());
    CHECK(jr["f_negative"] == true);
    CHECK(jr["codings_agree"] == true);

    Str survey;
    Json params;
    params["regime"] = "simple";
    params["n"] = 8;
    params["k"] = 2;
    params["samples"] = 40;
    params["seed"] = 1;
    params["threads"] = 1;
    REQUIRE(sp_survey(params.dump().c_str(), &survey.s) == SP_OK);
    Json jv = Json::parse(survey.str());
    CHECK(jv["per_theorem"]["T2_10"]["considered"] == 40);
    CHECK(sp_survey("{\"bogus\":1}", &survey.s) == SP_ERR_INVALID_ARGUMENT);
}
