// Command-line front end: exact verification of the interpolation-based
// construction of the five q-Painleve systems, plus small inspection
// commands for the interpolating pair, the tau determinants and the base
// points.  All values are exact rationals; output never contains floats.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpade/qpade.hpp"

namespace {

using namespace qpade;

struct ParamFlags {
    std::string type;
    std::string q, a1, a2, a3, b1, b2, b3, c, d;
    int m = 0, n = 0;
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf, bool need_type = true) {
    auto* t = cmd->add_option("--type", pf.type, "instance type: e7, e6, d5, a4, a2a1");
    if (need_type) t->required();
    cmd->add_option("--q", pf.q, "base q (rational, e.g. 2 or 1/2)");
    cmd->add_option("--a1", pf.a1, "parameter a1");
    cmd->add_option("--a2", pf.a2, "parameter a2");
    cmd->add_option("--a3", pf.a3, "parameter a3");
    cmd->add_option("--b1", pf.b1, "parameter b1");
    cmd->add_option("--b2", pf.b2, "parameter b2");
    cmd->add_option("--b3", pf.b3, "parameter b3 (e7; omit to close the constraint)");
    cmd->add_option("--c", pf.c, "parameter c (d5, a4)");
    cmd->add_option("--d", pf.d, "parameter d (a2a1)");
    cmd->add_option("--m", pf.m, "degree m of the first interpolating polynomial");
    cmd->add_option("--n", pf.n, "degree n of the second interpolating polynomial");
}

Params params_from_flags(const ParamFlags& pf) {
    Params p;
    p.type = type_from_string(pf.type);
    if (pf.q.empty()) throw DomainError("--q is required");
    p.q = Rat::from_string(pf.q);
    p.m = pf.m;
    p.n = pf.n;
    const std::string* as[] = {&pf.a1, &pf.a2, &pf.a3};
    const std::string* bs[] = {&pf.b1, &pf.b2, &pf.b3};
    for (size_t i = 0; i < a_count(p.type); ++i) {
        if (as[i]->empty()) throw DomainError("missing --a" + std::to_string(i + 1));
        p.a.push_back(Rat::from_string(*as[i]));
    }
    size_t nb = b_count(p.type);
    for (size_t i = 0; i < nb; ++i) {
        if (bs[i]->empty()) {
            // e7 convenience: close the constraint when b3 is omitted
            if (p.type == PainleveType::E7 && i == 2) {
                p.b.push_back(p.a[0] * p.a[1] * p.a[2] * p.q.pow(p.m - p.n) /
                              (p.b[0] * p.b[1]));
                continue;
            }
            throw DomainError("missing --b" + std::to_string(i + 1));
        }
        p.b.push_back(Rat::from_string(*bs[i]));
    }
    if (has_c(p.type)) {
        if (pf.c.empty()) throw DomainError("missing --c");
        p.c = Rat::from_string(pf.c);
    }
    if (has_d(p.type)) {
        if (pf.d.empty()) throw DomainError("missing --d");
        p.d = Rat::from_string(pf.d);
    }
    return p;
}

std::set<std::string> parse_checks(const std::string& filter) {
    std::set<std::string> out;
    std::stringstream ss(filter);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.insert(tok);
    return out;
}

/// One instance per line, "key=value" tokens: type=a2a1 q=2 d=3 m=3 n=1 steps=3
std::vector<std::pair<Params, int>> load_sweep(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open sweep file '" + path + "'");
    std::vector<std::pair<Params, int>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::map<std::string, std::string> kv;
        std::stringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                throw DomainError("sweep: bad token '" + tok + "'");
            kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        ParamFlags pf;
        pf.type = kv.count("type") ? kv["type"] : "";
        if (pf.type.empty()) throw DomainError("sweep: missing type");
        pf.q = kv.count("q") ? kv["q"] : "";
        pf.a1 = kv.count("a1") ? kv["a1"] : "";
        pf.a2 = kv.count("a2") ? kv["a2"] : "";
        pf.a3 = kv.count("a3") ? kv["a3"] : "";
        pf.b1 = kv.count("b1") ? kv["b1"] : "";
        pf.b2 = kv.count("b2") ? kv["b2"] : "";
        pf.b3 = kv.count("b3") ? kv["b3"] : "";
        pf.c = kv.count("c") ? kv["c"] : "";
        pf.d = kv.count("d") ? kv["d"] : "";
        pf.m = kv.count("m") ? std::stoi(kv["m"]) : 0;
        pf.n = kv.count("n") ? std::stoi(kv["n"]) : 0;
        int steps = kv.count("steps") ? std::stoi(kv["steps"]) : 1;
        out.emplace_back(params_from_flags(pf), steps);
    }
    return out;
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& format) {
    if (format == "json") {
        if (reports.size() == 1) {
            std::cout << to_json(reports[0]).dump(2) << "\n";
        } else {
            nlohmann::ordered_json j;
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            size_t pass = 0, fail = 0, skipped = 0;
            for (const auto& r : reports) {
                arr.push_back(to_json(r));
                Summary s = r.summary();
                pass += s.pass;
                fail += s.fail;
                skipped += s.skipped;
            }
            j["instances"] = arr;
            j["summary"] = {{"pass", pass},
                            {"fail", fail},
                            {"skipped", skipped},
                            {"total", pass + fail + skipped}};
            std::cout << j.dump(2) << "\n";
        }
    } else if (format == "csv") {
        std::cout << "instance,id,identity,status,witness\n";
        for (size_t i = 0; i < reports.size(); ++i)
            for (const auto& c : reports[i].checks) {
                std::string w = c.witness;
                for (char& ch : w)
                    if (ch == ',') ch = ';';
                std::cout << i << "," << c.id << "," << c.identity << ","
                          << to_string(c.status) << "," << w << "\n";
            }
    } else {
        for (const auto& r : reports) std::cout << to_text(r);
    }
    int code = 0;
    for (const auto& r : reports) {
        int ec = exit_code_for(r);
        if (ec == 2) return 2;
        if (ec > code) code = ec;
    }
    return code;
}

std::string rat_list(const std::vector<Rat>& v) {
    std::string s = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + "]";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of q-Painleve structures built from "
                 "q-grid interpolation problems"};
    app.require_subcommand(1);

    // ---- verify ----
    ParamFlags vf;
    int steps = 1;
    int random_draws = 0;
    unsigned long long seed = 0;
    std::string format = "text";
    std::string checks_filter;
    std::string sweep_file;
    auto* verify = app.add_subcommand("verify", "run the full identity pipeline");
    add_param_flags(verify, vf, false);
    verify->add_option("--steps", steps, "orbit length K (needs K <= m)");
    verify->add_option("--random-draws", random_draws, "verify N random instances");
    verify->add_option("--seed", seed, "seed for --random-draws");
    verify->add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--checks", checks_filter,
                       "comma list of check families to run (residual, dual_oracle, shapes, "
                       "contiguity, c0c1, evolution, lax, basepoints, solution)");
    verify->add_option("--sweep", sweep_file, "flat key-value sweep file, one instance per line");

    // ---- pade ----
    ParamFlags pf;
    std::string pformat = "text";
    auto* pade = app.add_subcommand("pade", "print the interpolating pair P, Q");
    add_param_flags(pade, pf);
    pade->add_option("--format", pformat, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // ---- tau ----
    ParamFlags tf;
    int kmin = 0, kmax = -1;
    std::string tformat = "text";
    auto* taucmd = app.add_subcommand("tau", "print tau determinant values");
    add_param_flags(taucmd, tf);
    taucmd->add_option("--k", kmin, "third tau index (d5, a4, a2a1)");
    taucmd->add_option("--kmax", kmax, "print the whole range k..kmax");
    taucmd->add_option("--format", tformat, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    // ---- basepoints ----
    ParamFlags bf;
    std::string bformat = "text";
    auto* bp = app.add_subcommand("basepoints", "print the eight indeterminacy points");
    add_param_flags(bp, bf);
    bp->add_option("--format", bformat, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            VerifyOptions opt;
            opt.steps = steps;
            opt.families = parse_checks(checks_filter);
            std::vector<VerificationReport> reports;
            if (!sweep_file.empty()) {
                for (auto& [p, st] : load_sweep(sweep_file)) {
                    VerifyOptions o = opt;
                    o.steps = st;
                    reports.push_back(run_verification(p, o));
                }
            } else if (random_draws > 0) {
                if (vf.type.empty()) throw DomainError("--type is required for --random-draws");
                std::mt19937_64 rng(seed);
                PainleveType t = type_from_string(vf.type);
                for (int i = 0; i < random_draws; ++i) {
                    Params p = random_params(t, vf.m, vf.n, rng);
                    reports.push_back(run_verification(p, opt));
                }
            } else {
                if (vf.type.empty()) throw DomainError("--type is required");
                reports.push_back(run_verification(params_from_flags(vf), opt));
            }
            return emit_reports(reports, format);
        }

        if (pade->parsed()) {
            Params p = params_from_flags(pf);
            PadePair pair = solve_linear(p);
            if (pformat == "json") {
                nlohmann::ordered_json j;
                j["instance"] = to_json(p);
                nlohmann::ordered_json pc = nlohmann::ordered_json::array();
                for (int i = 0; i <= pair.P.degree(); ++i) pc.push_back(pair.P[i].to_string());
                nlohmann::ordered_json qc = nlohmann::ordered_json::array();
                for (int i = 0; i <= pair.Q.degree(); ++i) qc.push_back(pair.Q[i].to_string());
                j["P"] = pc;
                j["Q"] = qc;
                j["gauge"] = pair.gauge.to_string();
                std::cout << j.dump(2) << "\n";
            } else {
                std::vector<Rat> pc, qc;
                for (int i = 0; i <= pair.P.degree(); ++i) pc.push_back(pair.P[i]);
                for (int i = 0; i <= pair.Q.degree(); ++i) qc.push_back(pair.Q[i]);
                std::cout << "P = " << rat_list(pc) << "\n";
                std::cout << "Q = " << rat_list(qc) << "\n";
            }
            return 0;
        }

        if (taucmd->parsed()) {
            Params p = params_from_flags(tf);
            if (kmax < kmin) kmax = kmin;
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int k = kmin; k <= kmax; ++k) {
                Rat v = tau(TauSpec{p, k});
                if (tformat == "json")
                    rows.push_back({{"m", p.m}, {"n", p.n}, {"k", k}, {"tau", v.to_string()}});
                else
                    std::cout << "m=" << p.m << " n=" << p.n << " k=" << k << "  tau = " << v
                              << "\n";
            }
            if (tformat == "json") std::cout << rows.dump(2) << "\n";
            return 0;
        }

        if (bp->parsed()) {
            Params p = params_from_flags(bf);
            BasePointList list = check_base_points(p);
            auto coord = [](const Coord& c) { return c.infinite ? std::string("inf") : c.value.to_string(); };
            if (bformat == "json") {
                nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                for (const auto& q : list.points) {
                    nlohmann::ordered_json r;
                    r["f"] = coord(q.f);
                    r["g"] = coord(q.g);
                    r["locus"] = q.locus;
                    if (q.tangent) r["tangent_g_over_f"] = q.tangent->to_string();
                    r["on_locus"] = q.on_locus;
                    rows.push_back(r);
                }
                std::cout << rows.dump(2) << "\n";
            } else {
                for (const auto& q : list.points) {
                    std::cout << "(" << coord(q.f) << ", " << coord(q.g) << ")  on " << q.locus;
                    if (q.tangent) std::cout << "  tangent g/f = " << *q.tangent;
                    std::cout << (q.on_locus ? "  ok" : "  VIOLATION") << "\n";
                }
            }
            return base_points_ok(list) ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << error_kind(e) << ": " << e.what() << "\n";
        return 2;
    }
    return 0;
}
