#include <string>

#include <gtest/gtest.h>

#include "prymcheck/config.hpp"
#include "prymcheck/suites.hpp"

using namespace prymcheck;
using nlohmann::json;

namespace {

std::string cfg(const char* name) { return std::string(PRYMCHECK_CONFIG_DIR) + "/" + name; }

const report::Report& verify_all() {
    static const report::Report r = suites::run_subcommand("verify-all", std::nullopt);
    return r;
}

} // namespace

TEST(Report, StatusesAndExitCodes) {
    report::Report r("t");
    r.expect("a", "TRIVIAL", json::object(), 1, 1);
    EXPECT_EQ(r.exit_code(true), 0);
    r.compare_stated("b", json::object(), 2, 3, "cause");
    EXPECT_EQ(r.records().back().status, report::Status::discrepancy);
    EXPECT_EQ(r.records().back().cause, "cause");
    EXPECT_EQ(r.exit_code(true), 1);
    r.expect("c", "TRIVIAL", json::object(), 1, 2);
    EXPECT_EQ(r.exit_code(true), 2);
    EXPECT_EQ(r.exit_code(false), 0);
    auto s = r.summary();
    EXPECT_EQ(s.total, 3u);
    EXPECT_EQ(s.pass + s.fail + s.discrepancy, s.total);
    r.compare_stated("d", json::object(), 4, 4, "unused");
    EXPECT_TRUE(r.records().back().cause.empty());
}

TEST(Report, TextAndJsonShape) {
    report::Report r("t");
    r.expect("x.one", "PAPER", {{"n", 1}}, 5, 5, "a note");
    r.note("global");
    r.note("global");
    auto j = r.to_json();
    EXPECT_EQ(j["toolkit_version"], "0.1.0");
    EXPECT_EQ(j["records"][0]["provenance"], "PAPER");
    EXPECT_EQ(j["records"][0]["note"], "a note");
    EXPECT_EQ(j["notes"].size(), 1u);
    EXPECT_EQ(j["summary"]["pass"], 1);
    EXPECT_FALSE(j.contains("metadata"));
    auto t = r.to_text();
    EXPECT_NE(t.find("PASS  x.one"), std::string::npos);
    EXPECT_NE(t.find("summary: 1 checks, 1 pass, 0 fail, 0 discrepancy"), std::string::npos);
}

TEST(Report, LargeIntegersBecomeStrings) {
    EXPECT_EQ(report::num(Integer(42)), json(42));
    Integer big = Integer(1) << 80;
    EXPECT_EQ(report::num(big), json(big.str()));
}

TEST(Report, FilterKeepsMatchingChecks) {
    auto r = suites::run_subcommand("verify-all", std::nullopt);
    r.filter("euler.cubic");
    ASSERT_FALSE(r.records().empty());
    for (const auto& x : r.records())
        EXPECT_NE(x.check.find("euler.cubic"), std::string::npos);
}

TEST(Subcommands, UnknownRejected) {
    EXPECT_FALSE(suites::known_subcommand("frobnicate"));
    EXPECT_THROW(suites::run_subcommand("frobnicate", std::nullopt), schema_error);
}

TEST(Subcommands, VerifyAllContents) {
    const auto& r = verify_all();
    auto s = r.summary();
    EXPECT_EQ(s.fail, 0u);
    EXPECT_EQ(s.discrepancy, 1u);
    EXPECT_EQ(r.exit_code(true), 1);
    for (const auto& x : r.records())
        EXPECT_FALSE(x.provenance.empty()) << x.check;
    auto value = [&](const char* name) {
        auto* rec = r.find(name);
        EXPECT_NE(rec, nullptr) << name;
        return rec ? rec->computed : json();
    };
    EXPECT_EQ(value("euler.cubic.paper_total"), 2283);
    EXPECT_EQ(value("euler.dp2.paper_total"), 212);
    EXPECT_EQ(value("euler.cubic.derived_total"), 2355);
    EXPECT_EQ(value("cover.theta_odd_g4"), 120);
    EXPECT_EQ(value("lines27.tritangents"), 45);
    const auto* o = r.find("euler.cubic.o.chi_base");
    ASSERT_NE(o, nullptr);
    EXPECT_EQ(o->status, report::Status::discrepancy);
    EXPECT_EQ(o->expected, 864);
    EXPECT_EQ(o->computed, 936);
}

TEST(Subcommands, VerifyAllIsDeterministic) {
    auto again = suites::run_subcommand("verify-all", std::nullopt);
    EXPECT_EQ(verify_all().to_json().dump(2), again.to_json().dump(2));
    EXPECT_EQ(verify_all().to_text(), again.to_text());
}

TEST(Subcommands, PlueckerRecordsBothBitangentValues) {
    auto r = suites::run_subcommand("pluecker", std::nullopt);
    const auto* rec = r.find("pluecker.sextic.bitangents_flexes");
    ASSERT_NE(rec, nullptr);
    EXPECT_EQ(rec->computed, (json{{"b", 96}, {"f", 36}}));
    EXPECT_NE(rec->note.find("90"), std::string::npos);
    EXPECT_EQ(r.find("pluecker.sextic.dual_degree")->computed, 18);
}

TEST(Subcommands, EulerModes) {
    auto paper = suites::run_subcommand("euler", std::nullopt, {LedgerMode::paper});
    EXPECT_EQ(paper.exit_code(true), 0);
    EXPECT_EQ(paper.find("euler.cubic.o.chi_base"), nullptr);
    auto derived = suites::run_subcommand("euler", std::nullopt, {LedgerMode::derived});
    EXPECT_EQ(derived.exit_code(true), 1);
}

TEST(Subcommands, EverySuiteRunsClean) {
    for (auto name : suites::subcommands) {
        if (name == "verify-all" || name == "euler")
            continue;
        auto r = suites::run_subcommand(name, std::nullopt);
        EXPECT_GT(r.summary().total, 0u) << name;
        EXPECT_EQ(r.exit_code(true), 0) << name;
    }
}

TEST(Config, BundledConfigsPass) {
    struct Case {
        const char* file;
        const char* sub;
        int code;
    };
    for (auto c : {Case{"actions.json", "invariants", 0}, Case{"groups.json", "singularity", 0},
                   Case{"curves.json", "pluecker", 0}, Case{"curves.json", "cover", 0},
                   Case{"intersection.json", "intersect", 0}, Case{"intersection.json", "lines27", 0},
                   Case{"ledger_cubic.json", "euler", 1}, Case{"ledger_dp2.json", "euler", 0}}) {
        auto doc = config::load(cfg(c.file));
        auto r = suites::run_subcommand(c.sub, doc, {LedgerMode::derived});
        EXPECT_EQ(r.summary().fail, 0u) << c.file << " " << c.sub;
        EXPECT_EQ(r.exit_code(true), c.code) << c.file << " " << c.sub;
    }
}

TEST(Config, IncompleteLedgerIsSchemaError) {
    EXPECT_THROW(config::load(cfg("ledger_incomplete.json")), schema_error);
}

TEST(Config, SchemaViolations) {
    auto bad = [](const char* text) { return config::parse(json::parse(text)); };
    EXPECT_THROW(bad("[]"), schema_error);
    EXPECT_THROW(bad(R"({"unknown": 1})"), schema_error);
    EXPECT_THROW(bad(R"({"pluecker": [{"d": 6.5}]})"), schema_error);
    EXPECT_THROW(bad(R"({"pluecker": [{"d": "6"}]})"), schema_error);
    EXPECT_THROW(bad(R"({"pluecker": [{"d": -1}]})"), schema_error);
    EXPECT_THROW(bad(R"({"actions": [{"name": "x"}]})"), schema_error);
    EXPECT_THROW(bad(R"({"actions": [{"name": "x", "ambient_dim": 2, "torus_weights": [[1]]}]})"), schema_error);
    EXPECT_THROW(bad(R"({"actions": [{"name": "x", "ambient_dim": 2, "sign_rows": [[1, 2]]}]})"), schema_error);
    EXPECT_THROW(bad(R"({"actions": [{"name": "x", "ambient_dim": 3, "involution": {"image": [1, 2, 0]}}]})"),
                 schema_error);
    EXPECT_THROW(bad(R"({"groups": [{"name": "g"}]})"), schema_error);
    EXPECT_THROW(bad(R"({"groups": [{"name": "g", "sign_vectors": [[-1]], "expect": "smooth"}]})"), schema_error);
    EXPECT_THROW(bad(R"({"thetas": [{"g": 2, "parity": "both"}]})"), schema_error);
    EXPECT_THROW(bad(R"({"polystable": [{"genera": [0, 1], "intersections": [[0, 1], [2, 0]], "total_chi": 0}]})"),
                 schema_error);
    EXPECT_THROW(bad(R"({"intersection": {"labels": ["a"], "pairing": [[0]], "products": [{"left": ["b"], "right": ["a"]}]}})"),
                 schema_error);
    EXPECT_THROW(bad(R"({"ledger": {"schema": "quartic", "entries": []}})"), schema_error);
    EXPECT_THROW(bad(R"({"ledger": {"schema": "dp2", "entries": [{"label": "k2", "dimension": 0, "chi_fiber": 2}]}})"),
                 schema_error);
    EXPECT_THROW(config::load(cfg("does_not_exist.json")), schema_error);
}

TEST(Config, UnsupportedLinesDegree) {
    auto doc = config::parse(json::parse(R"({"lines27": {"del_pezzo_degree": 2}})"));
    EXPECT_THROW(suites::run_subcommand("lines27", doc), unsupported_configuration);
}

TEST(Config, MismatchedExpectationFails) {
    auto doc = config::parse(json::parse(R"({"covers": [{"g_source": 4, "g_target": 0, "degree": 6, "expect": 17}]})"));
    auto r = suites::run_subcommand("cover", doc);
    EXPECT_EQ(r.summary().fail, 1u);
    EXPECT_EQ(r.exit_code(true), 2);
}
