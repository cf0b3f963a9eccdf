#pragma once

// Verification records and the canonical report (text and JSON).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lattice.hpp"

namespace prymcheck::report {

using json = nlohmann::json;

inline constexpr std::string_view toolkit_version = "0.1.0";

enum class Status { pass, fail, discrepancy };

inline std::string_view to_string(Status s) {
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::discrepancy:
        return "discrepancy";
    }
    return "?";
}

/// Exact integers go to JSON as numbers when they fit in 64 bits, as
/// decimal strings otherwise.
inline json num(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline json num(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& x : v)
        a.push_back(num(x));
    return a;
}

struct Record {
    std::string check;
    std::string provenance; // PAPER, DERIVED, TRIVIAL or CONFIG
    json inputs = json::object();
    json expected;
    json computed;
    Status status = Status::pass;
    std::string cause; // upstream operation, for discrepancies
    std::string note;
};

struct Summary {
    std::size_t total = 0, pass = 0, fail = 0, discrepancy = 0;
};

class Report {
public:
    explicit Report(std::string subcommand) : subcommand_(std::move(subcommand)) {}

    /// pass iff computed == expected.
    Record& expect(std::string check, std::string provenance, json inputs, json expected, json computed,
                   std::string note = {}) {
        Status s = expected == computed ? Status::pass : Status::fail;
        records_.push_back({std::move(check), std::move(provenance), std::move(inputs), std::move(expected),
                            std::move(computed), s, {}, std::move(note)});
        return records_.back();
    }

    /// A stated value against an independent recomputation: a mismatch is a
    /// discrepancy, not a failure.
    Record& compare_stated(std::string check, json inputs, json stated, json derived, std::string cause,
                           std::string note = {}) {
        Status s = stated == derived ? Status::pass : Status::discrepancy;
        records_.push_back({std::move(check), "PAPER", std::move(inputs), std::move(stated), std::move(derived), s,
                            s == Status::discrepancy ? std::move(cause) : std::string{}, std::move(note)});
        return records_.back();
    }

    void note(std::string text) {
        if (std::find(notes_.begin(), notes_.end(), text) == notes_.end())
            notes_.push_back(std::move(text));
    }

    /// Keep only records whose name contains `filter`.
    void filter(std::string_view filter) {
        if (filter.empty())
            return;
        std::erase_if(records_, [&](const Record& r) { return r.check.find(filter) == std::string::npos; });
    }

    const std::vector<Record>& records() const noexcept { return records_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }
    const std::string& subcommand() const noexcept { return subcommand_; }

    const Record* find(std::string_view check) const {
        for (const auto& r : records_)
            if (r.check == check)
                return &r;
        return nullptr;
    }

    Summary summary() const {
        Summary s;
        for (const auto& r : records_) {
            ++s.total;
            switch (r.status) {
            case Status::pass:
                ++s.pass;
                break;
            case Status::fail:
                ++s.fail;
                break;
            case Status::discrepancy:
                ++s.discrepancy;
                break;
            }
        }
        return s;
    }

    /// 0 all pass, 1 discrepancy only, 2 any failure. Non-strict runs exit 0.
    int exit_code(bool strict) const {
        if (!strict)
            return 0;
        auto s = summary();
        return s.fail ? 2 : s.discrepancy ? 1 : 0;
    }

    /// Canonical form: no timestamps, object keys sorted, records in run order.
    json to_json() const {
        json recs = json::array();
        for (const auto& r : records_) {
            json j{{"check", r.check},       {"provenance", r.provenance}, {"inputs", r.inputs},
                   {"expected", r.expected}, {"computed", r.computed},     {"status", to_string(r.status)}};
            if (!r.cause.empty())
                j["cause"] = r.cause;
            if (!r.note.empty())
                j["note"] = r.note;
            recs.push_back(std::move(j));
        }
        auto s = summary();
        return {{"toolkit_version", toolkit_version},
                {"subcommand", subcommand_},
                {"records", std::move(recs)},
                {"notes", notes_},
                {"summary", {{"total", s.total}, {"pass", s.pass}, {"fail", s.fail}, {"discrepancy", s.discrepancy}}}};
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "prymcheck " << toolkit_version << " " << subcommand_ << "\n";
        for (const auto& r : records_) {
            static constexpr std::string_view tag[] = {"PASS", "FAIL", "DISC"};
            os << tag[static_cast<int>(r.status)] << "  " << r.check << "  expected " << r.expected.dump() << " ["
               << r.provenance << "]  computed " << r.computed.dump();
            if (!r.cause.empty())
                os << "  cause: " << r.cause;
            os << "\n";
            if (!r.note.empty())
                os << "      " << r.note << "\n";
        }
        for (const auto& n : notes_)
            os << "note: " << n << "\n";
        auto s = summary();
        os << "summary: " << s.total << " checks, " << s.pass << " pass, " << s.fail << " fail, " << s.discrepancy
           << " discrepancy\n";
        return os.str();
    }

private:
    std::string subcommand_;
    std::vector<Record> records_;
    std::vector<std::string> notes_;
};

} // namespace prymcheck::report
