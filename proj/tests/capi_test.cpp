// Exercises the shared-library surface the way an external client would.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qhopf.h"

namespace {

struct Engine {
    qhopf_engine* eng = qhopf_engine_new();
    ~Engine() { qhopf_engine_free(eng); }
};

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    qhopf_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("engine lifecycle and normalize") {
    Engine e;
    REQUIRE(e.eng != nullptr);
    char* out = nullptr;
    CHECK(qhopf_normalize(e.eng, "s7", "x2*x1", &out) == QHOPF_OK);
    CHECK(take(out) == "q^-1*x1*x2");

    out = nullptr;
    CHECK(qhopf_normalize(e.eng, "s7", "xb1*x1", &out) == QHOPF_OK);
    CHECK(take(out) == "1 - xb4*x4 - xb3*x3 - xb2*x2");

    out = nullptr;
    CHECK(qhopf_normalize(e.eng, "su2", "alpha*alphab + q^2*gammab*gamma", &out) == QHOPF_OK);
    CHECK(take(out) == "1");
}

TEST_CASE("error paths set codes and messages") {
    Engine e;
    char* out = nullptr;
    CHECK(qhopf_normalize(e.eng, "frobenius", "x1", &out) == QHOPF_ERR_BAD_ARG);
    CHECK(std::strlen(qhopf_last_error(e.eng)) > 0);
    CHECK(qhopf_normalize(e.eng, "s7", "x1 * * x2", &out) == QHOPF_ERR_PARSE);
    CHECK(std::string(qhopf_last_error(e.eng)).find("position") != std::string::npos);
    CHECK(qhopf_normalize(e.eng, "s7", "wibble", &out) == QHOPF_ERR_PARSE);
    CHECK(qhopf_derive_relations(e.eng, 3, "xx", 0, &out) == QHOPF_ERR_BAD_ARG);
    CHECK(qhopf_derive_relations(e.eng, 2, "zz", 0, &out) == QHOPF_ERR_BAD_ARG);
    CHECK(qhopf_index_pairing(e.eng, 1.5, 30, 30, 0, &out) == QHOPF_ERR_BAD_ARG);
    CHECK(qhopf_run_suite(e.eng, "nonsuite", nullptr, 0, &out) == QHOPF_ERR_BAD_ARG);
}

TEST_CASE("derive-relations output") {
    Engine e;
    char* out = nullptr;
    REQUIRE(qhopf_derive_relations(e.eng, 2, "xx", 1, &out) == QHOPF_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["family"] == "xx");
    REQUIRE(j["rules"].size() == 6);
    CHECK(j["rules"][0]["lhs"] == "x2*x1");
    CHECK(j["rules"][0]["rhs"] == "q^-1*x1*x2");

    out = nullptr;
    REQUIRE(qhopf_derive_relations(e.eng, 2, "xv", 0, &out) == QHOPF_OK);
    std::string text = take(out);
    CHECK(text.find("x1*xb4 -> q^-2*xb4*x1") != std::string::npos);
}

TEST_CASE("pairing report") {
    Engine e;
    char* out = nullptr;
    REQUIRE(qhopf_index_pairing(e.eng, 0.5, 30, 30, 0, &out) == QHOPF_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(std::abs(j["pairing_value"].get<double>() + 1.0) < 1e-9);
    CHECK(j["tau0_value"].get<double>() == 2.0);
    CHECK(j["trivial_pairing"].get<double>() == 0.0);
}

TEST_CASE("suite runner: pass, fail and report shape") {
    Engine e;
    qhopf_options opt;
    qhopf_options_init(&opt);
    CHECK(opt.samples == 2000000);

    char* out = nullptr;
    REQUIRE(qhopf_run_suite(e.eng, "relations", &opt, 1, &out) == QHOPF_OK);
    auto j = nlohmann::json::parse(take(out));
    CHECK(j["all_ok"].get<bool>());

    opt.inject_failure = 1;
    out = nullptr;
    CHECK(qhopf_run_suite(e.eng, "relations", &opt, 0, &out) == QHOPF_ERR_VERIFY);
    std::string text = take(out);
    CHECK(text.find("[FAIL]") != std::string::npos);
}
