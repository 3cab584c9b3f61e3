#include <gtest/gtest.h>

#include <algorithm>

#include "bpfib/audit.hpp"
#include "bpfib/errors.hpp"

using namespace bpfib;
using namespace bpfib::audit;

namespace {

ParamGrid small_grid() {
    ParamGrid g = ParamGrid::defaults();
    g.n_max = 12;
    g.m_max = 8;
    return g;
}

const AuditReport& find(const std::vector<AuditReport>& rs, const std::string& id) {
    auto it = std::find_if(rs.begin(), rs.end(), [&](const AuditReport& r) { return r.identity_id == id; });
    if (it == rs.end()) throw std::runtime_error("missing report " + id);
    return *it;
}

bool has_counterexample(const AuditReport& r, const std::string& a, const std::string& b, std::int64_t n,
                        const std::string& quantity, const std::string& expected, const std::string& actual) {
    return std::any_of(r.counterexamples.begin(), r.counterexamples.end(), [&](const Counterexample& c) {
        return c.a == a && c.b == b && c.n == n && c.quantity == quantity && c.expected == expected &&
               c.actual == actual;
    });
}

} // namespace

TEST(Audit, FullRunOnSmallGrid) {
    auto reports = run_audit(small_grid(), all_suites());
    std::vector<std::string> ids;
    for (const auto& r : reports) ids.push_back(r.identity_id);
    EXPECT_EQ(ids, required_identity_ids());
    EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
    EXPECT_FALSE(any_fail(reports));
    for (const auto& r : reports) {
        EXPECT_GT(r.checked_points, 0u) << r.identity_id;
        if (r.suite == Suite::errata) {
            EXPECT_EQ(r.status, Status::pass_with_correction) << r.identity_id;
            EXPECT_FALSE(r.counterexamples.empty()) << r.identity_id;
        } else {
            EXPECT_EQ(r.status, Status::pass) << r.identity_id;
            EXPECT_TRUE(r.counterexamples.empty()) << r.identity_id;
        }
    }
}

TEST(Audit, ErrataCounterexamples) {
    auto reports = run_audit(small_grid(), {Suite::errata});
    ASSERT_EQ(reports.size(), 4u);
    EXPECT_TRUE(has_counterexample(find(reports, "errata-lucas-hadamard-odd-sign"), "1", "1", 1, "trace", "12/5",
                                   "-12/5"));
    EXPECT_TRUE(has_counterexample(find(reports, "errata-inverse-transpose-even"), "2", "3", 2, "H_l^-1",
                                   "[[7/13, 9/13], [4/13, 7/13]]", "[[7/13, 4/13], [9/13, 7/13]]"));
    EXPECT_TRUE(has_counterexample(find(reports, "errata-parity-convention"), "2", "3", 2, "q(n)(x)",
                                   R"(["0","3"])", R"(["0","2"])"));
    EXPECT_TRUE(has_counterexample(find(reports, "errata-hadamard-q-odd-inverse"), "1", "1", 1, "H_q^-1",
                                   "[[0, 1], [1, 2]]", "[[0, 1], [1, 0]]"));
}

TEST(Audit, Deterministic) {
    ParamGrid g = small_grid();
    auto suites = parse_suite_list("spectra,errata,binet");
    EXPECT_EQ(to_json(run_audit(g, suites)).dump(), to_json(run_audit(g, suites)).dump());
    EXPECT_EQ(format_text(run_audit(g, suites)), format_text(run_audit(g, suites)));
}

TEST(Audit, SubsetRunSkipsCompletenessCheck) {
    auto reports = run_audit(small_grid(), {Suite::cassini});
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_EQ(reports[0].identity_id, "cassini-l");
    EXPECT_EQ(reports[1].identity_id, "cassini-q");
}

TEST(Audit, DegenerateGridPointsAreSkippedNotFailed) {
    ParamGrid g = small_grid();
    g.a_values = {Rational{-2}};
    g.b_values = {Rational{2}};
    g.x_values = {Rational{1}};
    auto reports = run_audit(g, all_suites());
    EXPECT_FALSE(any_fail(reports));
    EXPECT_GT(find(reports, "cassini-l").skipped_points, 0u);
}

TEST(Audit, Errors) {
    ParamGrid g = small_grid();
    g.a_values.clear();
    EXPECT_THROW(run_audit(g, all_suites()), UsageError);
    EXPECT_THROW(run_audit(small_grid(), {}), UsageError);
    EXPECT_THROW(parse_suite("nope"), UsageError);
    EXPECT_THROW(parse_suite_list(""), UsageError);
    g = small_grid();
    g.n_max = 0;
    EXPECT_THROW(run_audit(g, all_suites()), UsageError);
}

TEST(Audit, GridJson) {
    ParamGrid g = ParamGrid::from_json(Json::parse(R"({"a": ["1", "-1/2"], "b": [3], "nMax": 7})"));
    EXPECT_EQ(g.a_values, (std::vector<Rational>{Rational{1}, Rational(-1, 2)}));
    EXPECT_EQ(g.b_values, (std::vector<Rational>{Rational{3}}));
    EXPECT_EQ(g.n_max, 7);
    EXPECT_EQ(g.m_max, 25);
    ParamGrid back = ParamGrid::from_json(g.to_json());
    EXPECT_EQ(back.a_values, g.a_values);
    EXPECT_EQ(back.x_values, g.x_values);
    EXPECT_THROW(ParamGrid::from_json(Json::parse(R"({"a": "1"})")), UsageError);
    EXPECT_THROW(ParamGrid::from_json(Json::parse(R"({"nMax": "4"})")), UsageError);
    EXPECT_THROW(ParamGrid::from_json(Json::parse("[]")), UsageError);
}

TEST(Audit, ReportJsonShape) {
    auto reports = run_audit(small_grid(), {Suite::errata});
    Json j = Json::parse(to_json(reports).dump());
    ASSERT_TRUE(j.is_array());
    for (const auto& r : j) {
        for (const char* key : {"identityId", "suite", "statement", "status", "checkedPoints", "failedPoints",
                                "skippedPoints", "counterexamples", "notes"})
            EXPECT_TRUE(r.contains(key)) << key;
        EXPECT_EQ(r["status"], "PASS-WITH-CORRECTION");
        for (const auto& c : r["counterexamples"])
            for (const char* key : {"a", "b", "n", "m", "x", "quantity", "expected", "actual"})
                EXPECT_TRUE(c.contains(key)) << key;
    }
}
