// Acceptance suite: runs every criterion at its stated (zero) tolerance and
// prints one pass/fail line per criterion.  Exit status 0 iff all pass.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qpade/qpade.hpp"

using namespace qpade;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, double seconds) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << what
              << "  (" << seconds << " s)\n";
    if (!ok) ++g_failures;
}

std::vector<PainleveType> all_types() {
    return {PainleveType::E7, PainleveType::E6, PainleveType::D5, PainleveType::A4,
            PainleveType::A2A1};
}

constexpr int kDraws = 3;

// ---- criterion 1: dual-oracle Pade solves, m+n <= 6, residuals exact ----
bool criterion1() {
    for (auto t : all_types()) {
        auto t0 = Clock::now();
        std::mt19937_64 rng(1000 + static_cast<int>(t));
        for (int m = 0; m <= 6; ++m)
            for (int n = 0; m + n <= 6; ++n)
                for (int draw = 0; draw < kDraws; ++draw) {
                    Params p = random_params(t, m, n, rng);
                    PadePair lin = solve_linear(p);
                    PadePair jac = solve_jacobi(p);
                    if (lin.P != jac.P || lin.Q != jac.Q) return false;
                    if (!residual_check(p, lin)) return false;
                    if (lin.P.degree() != m || lin.Q.degree() != n) return false;
                }
        double dt = std::chrono::duration<double>(Clock::now() - t0).count();
        if (dt >= 10.0) {
            std::cout << "  (runtime target exceeded for one type: " << dt << " s)\n";
            return false;
        }
    }
    return true;
}

// ---- criterion 2: shape certificates with exact reconstruction, m, n <= 4 ----
// (m starts at 1: the extraction consumes the T-shifted problem at m-1)
bool criterion2() {
    for (auto t : all_types()) {
        std::mt19937_64 rng(2000 + static_cast<int>(t));
        for (int m = 1; m <= 4; ++m)
            for (int n = 0; n <= 4; ++n)
                for (int draw = 0; draw < kDraws; ++draw) {
                    Params p = random_params(t, m, n, rng);
                    PadePair pair = solve_linear(p);
                    PadePair shifted = solve_linear(apply_T(p, +1));
                    CasoratiData cd = compute_D(p, pair, shifted);
                    FGData fg = match_shapes(p, cd.D1n, cd.D2n, cd.D3n);
                    if (!reconstruct_shapes(p, cd, fg)) return false;
                }
    }
    return true;
}

// ---- criterion 3: L2 and L3 annihilate both solutions ----
bool criterion3() {
    for (auto t : all_types()) {
        std::mt19937_64 rng(3000 + static_cast<int>(t));
        for (int m = 1; m <= 4; ++m)
            for (int n = 0; n <= 4; ++n) {
                int K = std::min(m, 2);
                Params p = random_params(t, m, n, rng, K);
                OrbitData orbit = make_orbit(p, K);
                ThreeTermRelation l2 = build_L2(p, orbit.fg_at(0));
                if (!verify_contiguity(p, l2, orbit.steps[0].pair, orbit.steps[1].pair))
                    return false;
                if (K >= 2) {
                    ThreeTermRelation l3 = build_L3(p, orbit.fg_at(0), orbit.fg_at(1));
                    if (!verify_contiguity(p, l3, orbit.steps[0].pair, orbit.steps[1].pair))
                        return false;
                }
            }
    }
    return true;
}

// ---- criterion 4: evolution equations at every interior orbit step ----
bool criterion4() {
    for (auto t : all_types()) {
        auto t0 = Clock::now();
        std::mt19937_64 rng(4000 + static_cast<int>(t));
        for (int m : {3, 4})
            for (int n : {1, 2, 3})
                for (int draw = 0; draw < kDraws; ++draw) {
                    Params p = random_params(t, m, n, rng, m);
                    OrbitData orbit = make_orbit(p, m);
                    for (size_t k = 1; k + 2 < orbit.steps.size(); ++k)
                        if (!check_evolution(orbit, k)) return false;
                }
        double dt = std::chrono::duration<double>(Clock::now() - t0).count();
        if (dt >= 30.0) {
            std::cout << "  (runtime target exceeded for one type: " << dt << " s)\n";
            return false;
        }
    }
    return true;
}

// ---- criterion 5: C0*C1 closed forms, invariant under pair rescaling ----
bool criterion5() {
    for (auto t : all_types()) {
        std::mt19937_64 rng(5000 + static_cast<int>(t));
        for (int draw = 0; draw < kDraws; ++draw) {
            Params p = random_params(t, 2, 1, rng, 2);
            OrbitData orbit = make_orbit(p, 2);
            if (!check_c0c1(p, orbit.fg_at(0), orbit.fg_at(1))) return false;

            Rat base = orbit.fg_at(0).C0 * compute_C1(p, orbit.fg_at(0), orbit.fg_at(1));
            PadePair p0 = orbit.steps[0].pair, p1 = orbit.steps[1].pair;
            std::uniform_int_distribution<int> sc(2, 9);
            Rat l0(sc(rng)), l1(sc(rng), sc(rng));
            p0.P = p0.P * l0;
            p0.Q = p0.Q * l0;
            p1.P = p1.P * l1;
            p1.Q = p1.Q * l1;
            CasoratiData cd0 = compute_D(p, p0, p1);
            FGData fg0 = match_shapes(p, cd0.D1n, cd0.D2n, cd0.D3n);
            CasoratiData cd1 = compute_D(orbit.steps[1].params, p1, orbit.steps[2].pair);
            FGData fg1 = match_shapes(orbit.steps[1].params, cd1.D1n, cd1.D2n, cd1.D3n);
            if (fg0.C0 * compute_C1(p, fg0, fg1) != base) return false;
        }
    }
    return true;
}

// ---- criterion 6: L1 annihilates both solutions and matches the
//      elimination of the shifted terms from L2(x/q), L2(x), L3(x) ----
bool criterion6() {
    for (auto t : all_types()) {
        std::mt19937_64 rng(6000 + static_cast<int>(t));
        for (int draw = 0; draw < kDraws; ++draw) {
            Params p = random_params(t, 2, 2, rng, 2);
            OrbitData orbit = make_orbit(p, 2);
            ThreeTermRelation l1 = build_L1(p, orbit.fg_at(0));
            if (!verify_L1(p, l1, orbit.steps[0].pair)) return false;
            ThreeTermRelation elim = eliminate_to_L1(
                p, build_L2(p, orbit.fg_at(0)), build_L3(p, orbit.fg_at(0), orbit.fg_at(1)));
            if (!proportional(elim, l1)) return false;
        }
    }
    return true;
}

// ---- criterion 7: special-solution formulae, m, n <= 3 ----
bool criterion7() {
    for (auto t : all_types()) {
        std::mt19937_64 rng(7000 + static_cast<int>(t));
        for (int m = 1; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n)
                for (int draw = 0; draw < kDraws; ++draw) {
                    // a draw can put a shifted a-parameter on the q-grid and
                    // make a tau entry singular; that is a genericity
                    // rejection, not a formula violation, so redraw on error
                    for (int attempt = 0;; ++attempt) {
                        Params p = random_params(t, m, n, rng);
                        try {
                            OrbitData orbit = make_orbit(p, 1);
                            if (!check_solution(orbit, 0)) return false;
                            break;
                        } catch (const Error&) {
                            if (attempt >= 50) throw;
                        }
                    }
                }
    }
    return true;
}

// ---- criterion 8: base-point locus membership ----
bool criterion8() {
    for (auto t : all_types()) {
        std::mt19937_64 rng(8000 + static_cast<int>(t));
        for (int draw = 0; draw < kDraws; ++draw) {
            Params p = random_params(t, 2, 1, rng);
            BasePointList list = check_base_points(p);
            if (!base_points_ok(list)) return false;
        }
    }
    return true;
}

// ---- criterion 9: negative controls ----
bool criterion9(const std::string& cli) {
    // (a) f -> f+1 must break L2
    {
        Params p;
        p.type = PainleveType::A2A1;
        p.q = Rat(2);
        p.d = Rat(3);
        p.m = 2;
        p.n = 1;
        OrbitData orbit = make_orbit(p, 1);
        FGData fg = orbit.fg_at(0);
        fg.f += Rat(1);
        if (verify_contiguity(p, build_L2(p, fg), orbit.steps[0].pair, orbit.steps[1].pair))
            return false;
    }
    // (b) fbar -> 2 fbar must break the evolution
    {
        Params p;
        p.type = PainleveType::A2A1;
        p.q = Rat(2);
        p.d = Rat(3);
        p.m = 3;
        p.n = 1;
        OrbitData orbit = make_orbit(p, 3);
        orbit.steps[2].fg->f *= Rat(2);
        if (check_evolution(orbit, 1)) return false;
    }
    // (c) broken E7 constraint: ConstraintViolation in the library,
    //     exit code 2 through the CLI
    {
        Params e7 = e7_close_constraint(Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(13), 2, 1);
        e7.b[2] += Rat(1);
        VerificationReport rep = run_verification(e7, VerifyOptions{1, {}});
        if (!rep.error || rep.error->kind != "ConstraintViolation") return false;
        if (exit_code_for(rep) != 2) return false;
    }
    if (!cli.empty()) {
        auto run = [&](const std::string& args) {
            int rc = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
            return WEXITSTATUS(rc);
        };
        if (run("verify --type a2a1 --q 2 --d 3 --m 3 --n 1 --steps 3 --format json") != 0)
            return false;
        if (run("verify --type e7 --q 2 --a1 3 --a2 5 --a3 7 --b1 11 --b2 13 --b3 9 "
                "--m 2 --n 1 --steps 1") != 2)
            return false;
        if (run("verify --type a2a1 --q 2 --d 3 --m 1 --n 1 --steps 3") != 2) return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    auto timed = [](auto&& fn) {
        auto t0 = Clock::now();
        bool ok = false;
        try {
            ok = fn();
        } catch (const Error& e) {
            std::cout << "  (error: " << e.what() << ")\n";
        }
        return std::pair<bool, double>(ok,
                                       std::chrono::duration<double>(Clock::now() - t0).count());
    };

    auto total0 = Clock::now();
    {
        auto [ok, dt] = timed(criterion1);
        report(1, "dual-oracle interpolation solves, m+n <= 6, exact residuals", ok, dt);
    }
    {
        auto [ok, dt] = timed(criterion2);
        report(2, "shape certificates with exact reconstruction, m, n <= 4", ok, dt);
    }
    {
        auto [ok, dt] = timed(criterion3);
        report(3, "contiguity relations annihilate both solutions", ok, dt);
    }
    {
        auto [ok, dt] = timed(criterion4);
        report(4, "evolution equations at every interior orbit step", ok, dt);
    }
    {
        auto [ok, dt] = timed(criterion5);
        report(5, "C0*C1 closed forms, gauge invariant", ok, dt);
    }
    {
        auto [ok, dt] = timed(criterion6);
        report(6, "Lax relation annihilated and proportional to the elimination", ok, dt);
    }
    {
        auto [ok, dt] = timed(criterion7);
        report(7, "special-solution determinant formulae, m, n <= 3", ok, dt);
    }
    {
        auto [ok, dt] = timed(criterion8);
        report(8, "base points on their assigned loci", ok, dt);
    }
    {
        auto [ok, dt] = timed([&] { return criterion9(cli); });
        report(9, "negative controls flip to fail / exit 2", ok, dt);
    }
    double total = std::chrono::duration<double>(Clock::now() - total0).count();
    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << "  (total "
              << total << " s)\n";
    return g_failures == 0 ? 0 : 1;
}
