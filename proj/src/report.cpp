#include <cstdio>
#include <string>

#include <json.hpp>

#include "mealy/verify.hpp"

namespace mealy {

bool VerificationReport::expect(bool ok, const std::string& check, const std::string& witness,
                                const std::string& detail) {
    ++checks_run;
    if (!ok)
        fail(check, witness, detail);
    return ok;
}

namespace {

// Keep every field on its own line.
std::string one_line(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c == '\n' || c == '\r')
            c = ' ';
    return out;
}

const char* status_of(const VerificationReport& r) {
    if (!r.passed())
        return "FAIL";
    return r.incomplete ? "INCOMPLETE" : "PASS";
}

std::string seconds_text(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

} // namespace

std::string to_text(const VerificationReport& r, bool with_timing) {
    std::string s = "suite " + r.suite + "\n";
    for (const auto& [k, v] : r.parameters)
        s += "param " + k + " = " + one_line(v) + "\n";
    s += "checks " + std::to_string(r.checks_run) + "\n";
    for (const auto& [k, v] : r.records)
        s += "record " + k + " = " + one_line(v) + "\n";
    for (const auto& f : r.failures) {
        s += "failure " + one_line(f.check) + "\n";
        s += "  witness " + one_line(f.witness) + "\n";
        if (!f.detail.empty())
            s += "  detail " + one_line(f.detail) + "\n";
    }
    if (r.incomplete)
        s += "incomplete " + one_line(r.incomplete_reason) + "\n";
    s += "failures " + std::to_string(r.failures.size()) + "\n";
    if (with_timing)
        s += "seconds " + seconds_text(r.seconds) + "\n";
    s += std::string("status ") + status_of(r) + "\n";
    return s;
}

std::string to_json(const VerificationReport& r, bool with_timing) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["suite"] = r.suite;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.parameters)
        params[k] = v;
    j["parameters"] = params;
    j["checks_run"] = r.checks_run;
    ordered_json records = ordered_json::array();
    for (const auto& [k, v] : r.records)
        records.push_back({{"key", k}, {"value", v}});
    j["records"] = records;
    ordered_json failures = ordered_json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"check", f.check}, {"witness", f.witness}, {"detail", f.detail}});
    j["failures"] = failures;
    j["incomplete"] = r.incomplete;
    if (r.incomplete)
        j["incomplete_reason"] = r.incomplete_reason;
    j["passed"] = r.passed();
    j["status"] = status_of(r);
    if (with_timing)
        j["seconds"] = r.seconds;
    return j.dump(2) + "\n";
}

const char* to_string(OrbitClaim claim) {
    switch (claim) {
    case OrbitClaim::pattern: return "pattern";
    case OrbitClaim::marked: return "marked";
    case OrbitClaim::no_double_letter: return "no_double_letter";
    }
    return "?";
}

} // namespace mealy
