#include "fracgrad/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fracgrad {

namespace {

std::string csv_number(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string csv_text(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json number(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
}

}  // namespace

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::ClosedForm: return "closed-form";
        case Provenance::Constant: return "constant";
        case Provenance::Oracle: return "oracle";
    }
    return "?";
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::Relative: return "relative";
        case Relation::Absolute: return "absolute";
        case Relation::AtMost: return "at_most";
        case Relation::AtLeast: return "at_least";
        case Relation::Below: return "below";
        case Relation::Above: return "above";
    }
    return "?";
}

ExperimentReport::ExperimentReport(std::string name, std::uint64_t seed) : name_(std::move(name)), seed_(seed) {}

bool ExperimentReport::check(std::string label, double measured, double reference, Provenance prov, Relation rel,
                             double tol) {
    bool ok = false;
    switch (rel) {
        case Relation::Relative: ok = std::fabs(measured - reference) <= tol * std::fabs(reference); break;
        case Relation::Absolute: ok = std::fabs(measured - reference) <= tol; break;
        case Relation::AtMost: ok = measured <= reference * (1.0 + tol); break;
        case Relation::AtLeast: ok = measured >= reference * (1.0 - tol); break;
        case Relation::Below: ok = measured < reference; break;
        case Relation::Above: ok = measured > reference; break;
    }
    if (std::isnan(measured) || std::isnan(reference)) ok = false;
    entries_.push_back({std::move(label), measured, reference, prov, rel, tol, ok});
    return ok;
}

bool ExperimentReport::pass() const {
    for (const auto& e : entries_)
        if (!e.pass) return false;
    return true;
}

double ExperimentReport::value(const std::string& label) const {
    for (const auto& e : entries_)
        if (e.label == label) return e.measured;
    for (const auto& [k, v] : notes_)
        if (k == label) return v;
    throw std::out_of_range("ExperimentReport::value: no entry " + label);
}

nlohmann::ordered_json ExperimentReport::to_json(bool with_timestamp) const {
    nlohmann::ordered_json j;
    j["name"] = name_;
    j["seed"] = seed_;
    j["params"] = params_;
    auto& entries = j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : entries_) {
        entries.push_back({{"label", e.label},
                           {"measured", number(e.measured)},
                           {"reference", number(e.reference)},
                           {"provenance", to_string(e.provenance)},
                           {"relation", to_string(e.relation)},
                           {"tolerance", e.tolerance},
                           {"pass", e.pass}});
    }
    auto& notes = j["notes"] = nlohmann::ordered_json::array();
    for (const auto& [k, v] : notes_) notes.push_back({{"label", k}, {"value", number(v)}});
    j["verdict"] = pass() ? "pass" : "fail";
    if (with_timestamp) {
        j["runtime_seconds"] = runtime_seconds;
        const std::string line = timestamp_line();
        j["timestamp"] = line.substr(std::string("# generated ").size());
    }
    return j;
}

std::string report_csv_header() { return "experiment,label,measured,reference,provenance,relation,tolerance,pass"; }

std::string ExperimentReport::to_csv(bool header) const {
    std::ostringstream os;
    if (header) os << report_csv_header() << "\n";
    for (const auto& e : entries_) {
        os << csv_text(name_) << ',' << csv_text(e.label) << ',' << csv_number(e.measured) << ','
           << csv_number(e.reference) << ',' << to_string(e.provenance) << ',' << to_string(e.relation) << ','
           << csv_number(e.tolerance) << ',' << (e.pass ? "true" : "false") << "\n";
    }
    for (const auto& [k, v] : notes_)
        os << csv_text(name_) << ',' << csv_text(k) << ',' << csv_number(v) << ",,note,,,\n";
    return os.str();
}

std::string timestamp_line() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << "# generated " << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

}  // namespace fracgrad
