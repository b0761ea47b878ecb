#include <set>

#include "doctest.h"
#include "json.hpp"
#include "qhopf/report.hpp"

using namespace qhopf;

namespace {

Engine& engine() {
    static Engine e;
    return e;
}

}  // namespace

TEST_CASE("normalize_expr dispatches on the algebra name") {
    CHECK(engine().normalize_expr("s7", "x2*x1") == "q^-1*x1*x2");
    CHECK(engine().normalize_expr("su2", "alphab*alpha + gamma*gammab") == "1");
    CHECK(engine().normalize_expr("s4", "b*a") == "q^-4*a*b");
    CHECK_THROWS_AS(engine().normalize_expr("nope", "x1"), std::invalid_argument);
}

TEST_CASE("relations suite passes and the negative control fails") {
    Report ok = engine().run_relations(false);
    CHECK(ok.all_ok());
    Report bad = engine().run_relations(true);
    CHECK_FALSE(bad.all_ok());
}

TEST_CASE("properties suite") {
    Report rep = engine().run_properties(2024);
    for (const auto& e : rep.entries) {
        INFO(e.id, " ", e.residual);
        CHECK(e.ok);
    }
}

TEST_CASE("json report shape") {
    Report rep = engine().run_relations(false);
    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["all_ok"].get<bool>());
    REQUIRE(j["checks"].is_array());
    REQUIRE(!j["checks"].empty());
    std::set<std::string> ids;
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("description"));
        CHECK((c["status"] == "pass" || c["status"] == "fail"));
        CHECK(c.contains("wall_ms"));
        CHECK(ids.insert(c["id"].get<std::string>()).second);  // ids unique
    }
}

TEST_CASE("criterion coverage ids all appear in the full report") {
    VerifyOptions opt;
    opt.samples = 40000;  // smoke-sized classical run; ids are what matter here
    Report rep = engine().verify_all(opt);
    std::set<std::string> ids;
    for (const auto& e : rep.entries) CHECK(ids.insert(e.id).second);
    auto coverage = Engine::criterion_coverage();
    std::set<int> criteria;
    for (const auto& [criterion, checks] : coverage) {
        criteria.insert(criterion);
        for (const auto& id : checks) {
            INFO("criterion ", criterion, " id ", id);
            CHECK(ids.count(id) == 1);
        }
    }
    for (int i = 1; i <= 11; ++i) CHECK(criteria.count(i) == 1);
}
