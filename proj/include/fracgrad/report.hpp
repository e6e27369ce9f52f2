#pragma once

// Structured record of one verification run.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace fracgrad {

enum class Provenance { ClosedForm, Constant, Oracle };
std::string to_string(Provenance p);

/// How a measured value is compared with its reference.
enum class Relation {
    Relative,  ///< |m - r| <= tol |r|
    Absolute,  ///< |m - r| <= tol
    AtMost,    ///< m <= r (1 + tol)
    AtLeast,   ///< m >= r (1 - tol)
    Below,     ///< m < r
    Above,     ///< m > r
};
std::string to_string(Relation r);

struct ReportEntry {
    std::string label;
    double measured = 0.0;
    double reference = 0.0;
    Provenance provenance = Provenance::ClosedForm;
    Relation relation = Relation::Relative;
    double tolerance = 0.0;
    bool pass = false;
};

class ExperimentReport {
public:
    explicit ExperimentReport(std::string name, std::uint64_t seed = 0);

    const std::string& name() const { return name_; }
    std::uint64_t seed() const { return seed_; }

    void param(const std::string& key, const nlohmann::ordered_json& value) { params_[key] = value; }
    const nlohmann::ordered_json& params() const { return params_; }

    /// Adds an entry and evaluates it. Returns the pass flag.
    bool check(std::string label, double measured, double reference, Provenance prov, Relation rel, double tol);

    /// Unasserted value kept for the record (raw quadratures, fixtures, margins).
    void note(std::string label, double value) { notes_.emplace_back(std::move(label), value); }

    const std::vector<ReportEntry>& entries() const { return entries_; }
    const std::vector<std::pair<std::string, double>>& notes() const { return notes_; }

    /// True iff every entry passes (an empty report passes).
    bool pass() const;

    /// Looks up a measured entry or note by label; throws std::out_of_range if absent.
    double value(const std::string& label) const;

    double runtime_seconds = 0.0;

    /// Full report. Runtime and timestamp are omitted when `with_timestamp` is false.
    nlohmann::ordered_json to_json(bool with_timestamp = true) const;
    /// Header row plus one row per entry and per note.
    std::string to_csv(bool header = true) const;

private:
    std::string name_;
    std::uint64_t seed_;
    nlohmann::ordered_json params_ = nlohmann::ordered_json::object();
    std::vector<ReportEntry> entries_;
    std::vector<std::pair<std::string, double>> notes_;
};

/// CSV column header shared by all reports.
std::string report_csv_header();

/// "# generated <UTC ISO-8601>" line.
std::string timestamp_line();

}  // namespace fracgrad
