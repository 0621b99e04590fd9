#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpade/errors.hpp"
#include "qpade/params.hpp"

namespace qpade {

/// Registry of identity tags a check can certify.  Every check id in a
/// report maps to exactly one of these.
inline const std::set<std::string>& identity_registry() {
    static const std::set<std::string> reg = [] {
        std::set<std::string> r{"q-pade", "qJacobi", "base-points"};
        for (const char* t : {"E7", "E6", "D5", "A4", "A21"})
            for (const char* fam : {"D", "L2L3", "eq", "C0C1", "L1L2", "sol"})
                r.insert(std::string(t) + fam);
        return r;
    }();
    return reg;
}

inline std::string type_tag(PainleveType t) {
    switch (t) {
        case PainleveType::E7: return "E7";
        case PainleveType::E6: return "E6";
        case PainleveType::D5: return "D5";
        case PainleveType::A4: return "A4";
        case PainleveType::A2A1: return "A21";
    }
    return "?";
}

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "?";
}

struct CheckResult {
    std::string id;
    std::string identity;
    CheckStatus status = CheckStatus::Skip;
    std::string witness;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ReportError {
    std::string kind;
    std::string message;

    friend bool operator==(const ReportError&, const ReportError&) = default;
};

struct Summary {
    size_t pass = 0, fail = 0, skipped = 0;

    size_t total() const { return pass + fail + skipped; }
    friend bool operator==(const Summary&, const Summary&) = default;
};

struct VerificationReport {
    Params instance;
    int steps = 0;
    std::vector<CheckResult> checks;
    std::optional<ReportError> error;

    Summary summary() const {
        Summary s;
        for (const auto& c : checks) {
            if (c.status == CheckStatus::Pass) ++s.pass;
            else if (c.status == CheckStatus::Fail) ++s.fail;
            else ++s.skipped;
        }
        return s;
    }
    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return !error.has_value();
    }
};

inline bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.instance == b.instance && a.steps == b.steps && a.checks == b.checks &&
           a.error == b.error;
}

// ---- JSON (rationals serialize as "num/den" strings, never floats) ----

inline nlohmann::ordered_json to_json(const Params& p) {
    nlohmann::ordered_json j;
    j["type"] = to_string(p.type);
    j["q"] = p.q.to_string();
    nlohmann::ordered_json aj = nlohmann::ordered_json::array();
    for (const Rat& v : p.a) aj.push_back(v.to_string());
    nlohmann::ordered_json bj = nlohmann::ordered_json::array();
    for (const Rat& v : p.b) bj.push_back(v.to_string());
    j["a"] = aj;
    j["b"] = bj;
    if (has_c(p.type)) j["c"] = p.c.to_string();
    if (has_d(p.type)) j["d"] = p.d.to_string();
    j["m"] = p.m;
    j["n"] = p.n;
    return j;
}

inline Params params_from_json(const nlohmann::json& j) {
    Params p;
    p.type = type_from_string(j.at("type").get<std::string>());
    p.q = Rat::from_string(j.at("q").get<std::string>());
    for (const auto& v : j.at("a")) p.a.push_back(Rat::from_string(v.get<std::string>()));
    for (const auto& v : j.at("b")) p.b.push_back(Rat::from_string(v.get<std::string>()));
    if (j.contains("c")) p.c = Rat::from_string(j.at("c").get<std::string>());
    if (j.contains("d")) p.d = Rat::from_string(j.at("d").get<std::string>());
    p.m = j.at("m").get<int>();
    p.n = j.at("n").get<int>();
    return p;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["instance"] = to_json(r.instance);
    j["steps"] = r.steps;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["identity"] = c.identity;
        cj["status"] = to_string(c.status);
        if (!c.witness.empty()) cj["witness"] = c.witness;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    Summary s = r.summary();
    j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped},
                    {"total", s.total()}};
    if (r.error) j["error"] = {{"kind", r.error->kind}, {"message", r.error->message}};
    return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.instance = params_from_json(j.at("instance"));
    r.steps = j.at("steps").get<int>();
    for (const auto& cj : j.at("checks")) {
        CheckResult c;
        c.id = cj.at("id").get<std::string>();
        c.identity = cj.at("identity").get<std::string>();
        std::string st = cj.at("status").get<std::string>();
        c.status = st == "pass" ? CheckStatus::Pass
                                : st == "fail" ? CheckStatus::Fail : CheckStatus::Skip;
        if (cj.contains("witness")) c.witness = cj.at("witness").get<std::string>();
        r.checks.push_back(std::move(c));
    }
    if (j.contains("error"))
        r.error = ReportError{j.at("error").at("kind").get<std::string>(),
                              j.at("error").at("message").get<std::string>()};
    return r;
}

// ---- CSV: one row per check ----

inline std::string to_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "id,identity,status,witness\n";
    for (const auto& c : r.checks) {
        std::string w = c.witness;
        for (char& ch : w)
            if (ch == ',') ch = ';';
        os << c.id << "," << c.identity << "," << to_string(c.status) << "," << w << "\n";
    }
    return os.str();
}

// ---- plain text ----

inline std::string to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "instance: type=" << to_string(r.instance.type) << " q=" << r.instance.q;
    for (size_t i = 0; i < r.instance.a.size(); ++i)
        os << " a" << i + 1 << "=" << r.instance.a[i];
    for (size_t i = 0; i < r.instance.b.size(); ++i)
        os << " b" << i + 1 << "=" << r.instance.b[i];
    if (has_c(r.instance.type)) os << " c=" << r.instance.c;
    if (has_d(r.instance.type)) os << " d=" << r.instance.d;
    os << " m=" << r.instance.m << " n=" << r.instance.n << " steps=" << r.steps << "\n";
    for (const auto& c : r.checks) {
        os << "  [" << to_string(c.status) << "] " << c.id << " (" << c.identity << ")";
        if (!c.witness.empty()) os << "  " << c.witness;
        os << "\n";
    }
    Summary s = r.summary();
    os << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.skipped
       << " skipped\n";
    if (r.error) os << "error: " << r.error->kind << ": " << r.error->message << "\n";
    return os.str();
}

/// Error kind string for reports and exit-code mapping.
inline std::string error_kind(const Error& e) {
    if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
    if (dynamic_cast<const NonGenericParameters*>(&e)) return "NonGenericParameters";
    if (dynamic_cast<const ShapeMismatch*>(&e)) return "ShapeMismatch";
    if (dynamic_cast<const IndeterminateEvaluation*>(&e)) return "IndeterminateEvaluation";
    if (dynamic_cast<const ConstraintViolation*>(&e)) return "ConstraintViolation";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    return "Error";
}

} // namespace qpade
