#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "dgr/experiment.hpp"

using namespace dgr;

namespace {

SearchParams small_blackboard() {
    SearchParams p;
    p.strategy = Strategy::blackboard;
    p.agents = 10;
    p.board_size = 7;
    return p;
}

}  // namespace

TEST_CASE("seed derivation is fixed and distinct per run") {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t r = 0; r < 1000; ++r) seeds.insert(derive_seed(7, r));
    CHECK(seeds.size() == 1000);
    CHECK(derive_seed(7, 0) == splitmix64(7 + 0x9E3779B97F4A7C15ULL));
    CHECK(derive_seed(7, 3) != derive_seed(8, 3));
}

TEST_CASE("batches do not depend on the thread count") {
    const auto p = small_blackboard();
    const auto one = run_batch(p, 40, 11, 1);
    const auto four = run_batch(p, 40, 11, 4);
    REQUIRE(one.size() == 40);
    CHECK(one == four);
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].run_id == i);
        CHECK(one[i].seed == derive_seed(11, i));
    }
}

TEST_CASE("record CSV and JSON round trips") {
    SearchParams p = small_blackboard();
    p.imitation_prob = 0.1;
    p.max_time = max_time_for_cost(0.005, p.agents);
    for (const auto& r : run_batch(p, 30, 3, 1)) {
        CHECK(record_from_csv(record_to_csv(r)) == r);
        CHECK(record_from_json(nlohmann::json::parse(record_to_json(r).dump())) == r);
        CHECK(record_from_csv(record_to_csv(record_from_json(record_to_json(r)))) == r);
    }
    CHECK_THROWS(record_from_csv("1,2,3"));
    CHECK_THROWS(record_from_csv("0,independent,1,0,351,5,1x,0,1,0,0,0"));
    std::ostringstream os;
    write_records_csv(os, {});
    CHECK(os.str() == std::string(kRecordCsvHeader) + "\n");
}

TEST_CASE("batch summary and its JSON") {
    SearchParams p = small_blackboard();
    const auto records = run_batch(p, 120, 5, 1);
    const auto s = summarize_batch(p, records);
    CHECK(s.n_runs == 120);
    REQUIRE(s.cost);
    REQUIRE(s.fit);
    REQUIRE(s.phi);
    REQUIRE(s.phi_null);
    CHECK(*s.phi_null == doctest::Approx(6.0 / 351));
    const auto j = summary_to_json(s);
    for (const char* key : {"strategy", "M", "p", "B", "n_runs", "mean_C", "stderr_C", "rate", "ks",
                            "phi", "phi_null", "censored"})
        CHECK(j.contains(key));
    CHECK(j["strategy"] == "blackboard");

    SearchParams q;
    q.max_time = 1.0;
    const auto censored = summarize_batch(q, run_batch(q, 5, 1, 1));
    CHECK(censored.censored == 5);
    CHECK_FALSE(censored.cost);
    CHECK(summary_to_json(censored)["mean_C"].is_null());
}

TEST_CASE("catalog outputs") {
    std::ostringstream os;
    write_catalog_csv(os, catalog());
    std::istringstream in(os.str());
    std::string line;
    int rows = -1, correct = 0;
    while (std::getline(in, line)) {
        ++rows;
        correct += rows > 0 && line.back() == '1';
    }
    CHECK(rows == 351);
    CHECK(correct == 6);
    const auto j = catalog_to_json(catalog());
    CHECK(j["total"] == 351);
    CHECK(j["correct"] == 6);
    CHECK(j["hints"][0]["text"] == "col=0 eps=0 D=1,T=2");
}

TEST_CASE("sweeps and null-model tables") {
    SearchParams p = small_blackboard();
    const auto rows = run_sweep(p, SweepAxis::board_size, {3, 7}, 20, 9, 1, 0.2);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].summary.board_size == 7);
    std::ostringstream os;
    write_sweep_csv(os, SweepAxis::board_size, rows);
    CHECK(os.str().rfind("B,n_runs,mean_C", 0) == 0);
    CHECK(sweep_to_json(SweepAxis::board_size, rows)["rows"].size() == 2);
    CHECK_THROWS(run_sweep(p, SweepAxis::agents, {2.5}, 2, 1, 1));
    CHECK_THROWS(run_sweep(p, SweepAxis::agents, {}, 2, 1, 1));

    SearchParams n = p;
    n.max_time = max_time_for_cost(0.002, n.agents);
    const auto table = run_null_model_table(n, {7, 351}, 30, 2, 1);
    REQUIRE(table.size() == 2);
    CHECK(table[0].analytic == doctest::Approx(6.0 / 351));
    CHECK(table[1].simulated.selections > 0);
    std::ostringstream ns;
    write_null_model_csv(ns, table);
    CHECK(ns.str().rfind("B,phi_simulated", 0) == 0);
    CHECK(null_model_to_json(table).size() == 2);
}
