#include <doctest.h>

#include "fracgrad/harness.hpp"
#include "fracgrad/report.hpp"

#include <algorithm>
#include <cmath>

using namespace fracgrad;

TEST_CASE("report relations") {
    ExperimentReport r("demo", 7);
    CHECK(r.check("rel", 1.0 + 1e-13, 1.0, Provenance::ClosedForm, Relation::Relative, 1e-12));
    CHECK_FALSE(r.check("abs", 0.5, 0.0, Provenance::Constant, Relation::Absolute, 0.1));
    CHECK(r.check("at most", 1.01, 1.0, Provenance::Constant, Relation::AtMost, 0.02));
    CHECK(r.check("at least", 0.99, 1.0, Provenance::Constant, Relation::AtLeast, 0.02));
    CHECK_FALSE(r.check("below", 1.0, 1.0, Provenance::Constant, Relation::Below, 0.0));
    CHECK(r.check("above", 2.0, 1.0, Provenance::Oracle, Relation::Above, 0.0));
    CHECK_FALSE(r.pass());
    CHECK(r.value("at most") == 1.01);
    CHECK_THROWS(r.value("missing"));
}

TEST_CASE("report serialization") {
    ExperimentReport r("demo", 3);
    r.param("n", 2);
    r.check("x", 1.0, 1.0, Provenance::Constant, Relation::Relative, 0.0);
    r.note("extra", 4.0);
    const auto j = r.to_json(false);
    CHECK(j["name"] == "demo");
    CHECK(j["seed"] == 3);
    CHECK(j["verdict"] == "pass");
    CHECK(j["entries"].size() == 1);
    CHECK_FALSE(j.contains("timestamp"));
    CHECK(r.to_json(true).contains("timestamp"));
    const std::string csv = r.to_csv(true);
    CHECK(csv.rfind(report_csv_header(), 0) == 0);
    CHECK(csv.find("demo,x,1,1,constant,relative,0,true") != std::string::npos);
}

TEST_CASE("tolerance overrides") {
    Tolerances t;
    t.update({{"quadrature", 0.05}});
    CHECK(t.quadrature == 0.05);
    CHECK_THROWS_AS(t.update({{"nonsense", 1.0}}), std::invalid_argument);
}

TEST_CASE("named experiments") {
    const auto names = experiment_names();
    CHECK(names.size() == 9);
    CHECK(std::find(names.begin(), names.end(), "hardy") != names.end());
    CHECK_THROWS_AS(run_named_experiment("nope", nlohmann::json::object(), 1), std::invalid_argument);
    CHECK_THROWS_AS(run_named_experiment("liouville", {{"bogus", 1}}, 1), std::invalid_argument);
    const ExperimentReport r = run_named_experiment("liouville", {{"N", 128}}, 1);
    CHECK(r.pass());
}

TEST_CASE("identity suite passes on small grids") {
    for (int n : {1, 2, 3}) {
        const GridSpec g{n, 1.0, n == 3 ? 16 : 32, true};
        CHECK(identity_suite(g, 0.25, 12, {}, 3).pass());
    }
}

TEST_CASE("experiments are reproducible for a fixed seed") {
    const nlohmann::json params = {{"n", 2}, {"s", 0.5}, {"p", 1.5}, {"samples", 5}};
    const auto a = run_named_experiment("hardy", params, 17).to_json(false);
    const auto b = run_named_experiment("hardy", params, 17).to_json(false);
    CHECK(a.dump() == b.dump());
}

TEST_CASE("random atomic measures") {
    const AtomicMeasure mu = random_atomic_measure(3, 6, 2);
    CHECK(mu.atoms.size() == 6);
    CHECK_NOTHROW(mu.validate());
    for (const auto& a : mu.atoms)
        for (int d = 0; d < 3; ++d) CHECK(std::fabs(a.location[d]) <= 1.0);
}
