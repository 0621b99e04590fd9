#pragma once

#include <set>
#include <sstream>
#include <string>

#include "qpade/casorati.hpp"
#include "qpade/errors.hpp"
#include "qpade/evolution.hpp"
#include "qpade/pade.hpp"
#include "qpade/params.hpp"
#include "qpade/report.hpp"
#include "qpade/special.hpp"

namespace qpade {

/// Round-trip reconstruction: rebuild each Y-normalized determinant from the
/// extracted constants and compare with the computed one.
inline bool reconstruct_shapes(const Params& p, const CasoratiData& cd, const FGData& fg) {
    SystemData sd = system_data(p);
    Poly NN = grid_vanishing_poly(p.q, p.m, p.n);
    auto lin = [](const Rat& c) { return Poly::linear(Rat(1), -c); };
    Poly R1, R2, R3;
    switch (p.type) {
        case PainleveType::E7: {
            const Rat &a2 = p.a[1], &b3 = p.b[2];
            R1 = Poly::monomial(1, fg.c0) * lin(fg.f);
            R2 = lin(b3 / (a2 * p.q.pow(p.m) * fg.g)) * fg.c1;
            R3 = lin(b3) * lin(Rat(1) / fg.g) * fg.c1;
            break;
        }
        case PainleveType::E6:
            R1 = Poly::monomial(1, fg.c0) * lin(fg.f);
            R2 = Poly(fg.c1);
            R3 = lin(Rat(1) / fg.g) * fg.c1;
            break;
        default:
            R1 = lin(fg.f) * fg.c0;
            R2 = Poly(fg.c1);
            R3 = Poly(*fg.c2);
            break;
    }
    return cd.D1n == RatFun(R1 * NN, sd.G_den) && cd.D2n == RatFun(R2 * NN, sd.K_den) &&
           cd.D3n == RatFun(R3 * NN, sd.H);
}

struct VerifyOptions {
    int steps = 1;
    std::set<std::string> families; // empty = all; else filter by family name
};

namespace detail {

inline bool family_enabled(const VerifyOptions& opt, const std::string& fam) {
    return opt.families.empty() || opt.families.count(fam) > 0;
}

} // namespace detail

/// Runs the whole pipeline on one instance: orbit construction, residuals,
/// the two independent solvers, shape extraction with reconstruction,
/// contiguity, C0*C1, evolution, the Lax relation with its elimination
/// cross-check, base points, and the special-solution formulae.  Known
/// domain errors are captured in the report instead of propagating.
inline VerificationReport run_verification(const Params& p, const VerifyOptions& opt) {
    VerificationReport rep;
    rep.instance = p;
    rep.steps = opt.steps;
    const std::string T = type_tag(p.type);

    auto add = [&](const std::string& fam, const std::string& id, const std::string& identity,
                   auto&& run) {
        CheckResult c;
        c.id = id;
        c.identity = identity;
        if (!detail::family_enabled(opt, fam)) {
            c.status = CheckStatus::Skip;
            rep.checks.push_back(std::move(c));
            return;
        }
        bool ok = run(c);
        c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        rep.checks.push_back(std::move(c));
    };

    try {
        validate(p);
        const int K = opt.steps;
        OrbitData orbit = make_orbit(p, K);

        for (int k = 0; k <= K; ++k)
            add("residual", "residual[k=" + std::to_string(k) + "]", "q-pade", [&](CheckResult&) {
                return residual_check(orbit.steps[k].params, orbit.steps[k].pair);
            });

        for (int k = 0; k <= K; ++k)
            add("dual_oracle", "dual_oracle[k=" + std::to_string(k) + "]", "qJacobi",
                [&](CheckResult&) {
                    PadePair j = solve_jacobi(orbit.steps[k].params);
                    return j.P == orbit.steps[k].pair.P && j.Q == orbit.steps[k].pair.Q;
                });

        for (int k = 0; k < K; ++k)
            add("shapes", "shapes[k=" + std::to_string(k) + "]", T + "D", [&](CheckResult& c) {
                CasoratiData cd = compute_D(orbit.steps[k].params, orbit.steps[k].pair,
                                            orbit.steps[k + 1].pair);
                const FGData& fg = orbit.fg_at(k);
                c.witness = "f=" + fg.f.to_string() + " g=" + fg.g.to_string();
                return reconstruct_shapes(orbit.steps[k].params, cd, fg);
            });

        for (int k = 0; k < K; ++k)
            add("contiguity", "contiguity_l2[k=" + std::to_string(k) + "]", T + "L2L3",
                [&](CheckResult&) {
                    ThreeTermRelation l2 = build_L2(orbit.steps[k].params, orbit.fg_at(k));
                    return verify_contiguity(orbit.steps[k].params, l2, orbit.steps[k].pair,
                                             orbit.steps[k + 1].pair);
                });
        for (int k = 0; k + 1 < K; ++k)
            add("contiguity", "contiguity_l3[k=" + std::to_string(k) + "]", T + "L2L3",
                [&](CheckResult&) {
                    ThreeTermRelation l3 = build_L3(orbit.steps[k].params, orbit.fg_at(k),
                                                    orbit.fg_at(k + 1));
                    return verify_contiguity(orbit.steps[k].params, l3, orbit.steps[k].pair,
                                             orbit.steps[k + 1].pair);
                });

        for (int k = 0; k + 1 < K; ++k)
            add("c0c1", "c0c1[k=" + std::to_string(k) + "]", T + "C0C1", [&](CheckResult&) {
                return check_c0c1(orbit.steps[k].params, orbit.fg_at(k), orbit.fg_at(k + 1));
            });

        for (int k = 1; k + 1 < K; ++k)
            add("evolution", "evolution[k=" + std::to_string(k) + "]", T + "eq",
                [&](CheckResult&) { return check_evolution(orbit, k); });

        for (int k = 0; k < K; ++k)
            add("lax", "lax_l1[k=" + std::to_string(k) + "]", T + "L1L2", [&](CheckResult&) {
                ThreeTermRelation l1 = build_L1(orbit.steps[k].params, orbit.fg_at(k));
                return verify_L1(orbit.steps[k].params, l1, orbit.steps[k].pair);
            });
        for (int k = 0; k + 1 < K; ++k)
            add("lax", "lax_triangle[k=" + std::to_string(k) + "]", T + "L1L2",
                [&](CheckResult&) {
                    const Params& pk = orbit.steps[k].params;
                    ThreeTermRelation l1 = build_L1(pk, orbit.fg_at(k));
                    ThreeTermRelation elim =
                        eliminate_to_L1(pk, build_L2(pk, orbit.fg_at(k)),
                                        build_L3(pk, orbit.fg_at(k), orbit.fg_at(k + 1)));
                    return proportional(elim, l1);
                });

        add("basepoints", "base_points", "base-points", [&](CheckResult& c) {
            BasePointList list = check_base_points(p);
            c.witness = std::to_string(list.points.size()) + " points";
            return base_points_ok(list);
        });

        for (int k = 0; k < K; ++k)
            add("solution", "solution[k=" + std::to_string(k) + "]", T + "sol",
                [&](CheckResult&) { return check_solution(orbit, k); });
    } catch (const Error& e) {
        rep.error = ReportError{error_kind(e), e.what()};
    }
    return rep;
}

/// 0 all pass, 1 some check failed, 2 input/genericity error.
inline int exit_code_for(const VerificationReport& r) {
    if (r.error) return 2;
    return r.summary().fail == 0 ? 0 : 1;
}

} // namespace qpade
