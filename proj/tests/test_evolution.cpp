#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qpade/draws.hpp"
#include "qpade/evolution.hpp"

using namespace qpade;

namespace {

Params a2a1(const Rat& q, const Rat& d, int m, int n) {
    Params p;
    p.type = PainleveType::A2A1;
    p.q = q;
    p.d = d;
    p.m = m;
    p.n = n;
    return p;
}

std::vector<PainleveType> all_types() {
    return {PainleveType::E7, PainleveType::E6, PainleveType::D5, PainleveType::A4,
            PainleveType::A2A1};
}

} // namespace

TEST_CASE("orbit construction invariants", "[evolution]") {
    Params p = a2a1(Rat(2), Rat(3), 3, 1);
    OrbitData orbit = make_orbit(p, 3);
    REQUIRE(orbit.steps.size() == 4);
    for (size_t k = 0; k + 1 < orbit.steps.size(); ++k) {
        CHECK(orbit.steps[k + 1].params == apply_T(orbit.steps[k].params, +1));
        CHECK(residual_check(orbit.steps[k].params, orbit.steps[k].pair));
        CHECK(orbit.steps[k].fg.has_value());
    }
    CHECK(!orbit.steps.back().fg.has_value());
    CHECK(orbit.fg_at(0).C1.has_value());
    CHECK(orbit.fg_at(1).C1.has_value());
    CHECK(!orbit.fg_at(2).C1.has_value());
    CHECK_THROWS_AS(make_orbit(p, 4), DomainError); // m would go negative
}

TEST_CASE("evolution equations hold at interior steps", "[evolution]") {
    OrbitData orbit = make_orbit(a2a1(Rat(2), Rat(3), 3, 1), 3);
    CHECK(check_evolution(orbit, 1));

    std::mt19937_64 rng(101);
    for (auto t : all_types()) {
        Params p = random_params(t, 3, 1, rng, 3);
        OrbitData o = make_orbit(p, 3);
        REQUIRE(check_evolution(o, 1));
    }
}

TEST_CASE("perturbing the next step breaks the evolution", "[evolution]") {
    OrbitData orbit = make_orbit(a2a1(Rat(2), Rat(3), 3, 1), 3);
    orbit.steps[2].fg->f *= Rat(2);
    CHECK(!check_evolution(orbit, 1));
    CHECK_THROWS_AS(check_evolution(orbit, 0), DomainError);
}

TEST_CASE("the D5 equations with a1 = 0 match the A4 equations", "[evolution]") {
    // right-hand sides, as functions of the scalar value, agree coefficientwise
    Rat q(2), c(7), b1(5);
    int m = 2, n = 1;
    for (const Rat& f : {Rat(3), Rat(-5, 2), Rat(11, 3)}) {
        Rat d5 = (f - Rat(0)) * (f - q.pow(-(m + n))) / (c * (f - b1) * (f - q));
        Rat a4 = f * (f - q.pow(-(m + n))) / (c * (f - b1) * (f - q));
        REQUIRE(d5 == a4);
    }
    for (const Rat& g : {Rat(3), Rat(-5, 2), Rat(11, 3)}) {
        Rat d5 = q * b1 * (g - q.pow(-m)) * (g - Rat(0) / (b1 * q.pow(n) * c)) /
                 ((g - Rat(1)) * (g - Rat(1) / c));
        Rat a4 = q * b1 * g * (g - q.pow(-m)) / ((g - Rat(1)) * (g - Rat(1) / c));
        REQUIRE(d5 == a4);
    }
}

TEST_CASE("L1 annihilates both solutions", "[evolution]") {
    std::mt19937_64 rng(103);
    for (auto t : all_types()) {
        Params p = random_params(t, 1, 1, rng);
        OrbitData o = make_orbit(p, 1);
        ThreeTermRelation l1 = build_L1(p, o.fg_at(0));
        REQUIRE(verify_L1(p, l1, o.steps[0].pair));
    }
}

TEST_CASE("L1 with a wrong g fails", "[evolution]") {
    Params p = a2a1(Rat(2), Rat(3), 2, 1);
    OrbitData o = make_orbit(p, 1);
    FGData fg = o.fg_at(0);
    fg.g *= Rat(3);
    ThreeTermRelation l1 = build_L1(p, fg);
    CHECK(!verify_L1(p, l1, o.steps[0].pair));
}

TEST_CASE("L1 shift tags and tabulated coefficients", "[evolution]") {
    Params p = a2a1(Rat(2), Rat(3), 2, 1);
    OrbitData o = make_orbit(p, 1);
    const FGData& fg = o.fg_at(0);
    ThreeTermRelation l1 = build_L1(p, fg);
    CHECK(l1.terms[0].x_shift == -1);
    CHECK(l1.terms[1].x_shift == 0);
    CHECK(l1.terms[2].x_shift == 1);
    for (const auto& t : l1.terms) CHECK(t.param_shift == 0);
    // y(qx) coefficient is g(q^(m+n) - x)/(f x - 1)
    RatFun expect(Poly::linear(p.q.pow(p.m + p.n), Rat(-1)) * fg.g,
                  Poly::linear(Rat(-1), fg.f));
    CHECK(l1.terms[2].coeff == expect);

    // D5: y(x/q) block carries c q^(m+n) g (x-1)(b1 x - q)/(f x - q)
    std::mt19937_64 rng(107);
    Params d5 = random_params(PainleveType::D5, 1, 1, rng);
    OrbitData od = make_orbit(d5, 1);
    const FGData& fgd = od.fg_at(0);
    ThreeTermRelation l1d = build_L1(d5, fgd);
    RatFun expect_d(Poly::linear(Rat(-1), Rat(1)) * Poly::linear(-d5.q, d5.b[0]) *
                        (d5.c * d5.q.pow(d5.m + d5.n) * fgd.g),
                    Poly::linear(-d5.q, fgd.f));
    CHECK(l1d.terms[0].coeff == expect_d);
}

TEST_CASE("degenerate single-node L1", "[evolution]") {
    std::mt19937_64 rng(109);
    PadePair ones{Poly(1), Poly(1), Rat(1)};
    PadePair degen{Poly(), Poly(1), Rat(1)};
    for (auto t : all_types()) {
        Params p = random_params(t, 0, 0, rng);
        CasoratiData cd = compute_D(p, ones, degen);
        FGData fg = match_shapes(p, cd.D1n, cd.D2n, cd.D3n);
        ThreeTermRelation l1 = build_L1(p, fg);
        REQUIRE(verify_L1(p, l1, ones));
    }
}

TEST_CASE("eliminating the shifted terms from L2, L3 reproduces L1", "[evolution]") {
    std::mt19937_64 rng(113);
    for (auto t : all_types()) {
        Params p = random_params(t, 2, 1, rng, 2);
        OrbitData o = make_orbit(p, 2);
        ThreeTermRelation l1 = build_L1(p, o.fg_at(0));
        ThreeTermRelation elim = eliminate_to_L1(
            p, build_L2(p, o.fg_at(0)), build_L3(p, o.fg_at(0), o.fg_at(1)));
        REQUIRE(proportional(elim, l1));
        // and the eliminated relation annihilates the P-solution directly
        REQUIRE(verify_L1(p, elim, o.steps[0].pair));
    }
}

TEST_CASE("base point loci", "[evolution]") {
    std::mt19937_64 rng(127);
    for (auto t : all_types()) {
        Params p = random_params(t, 2, 1, rng);
        BasePointList list = check_base_points(p);
        REQUIRE(list.points.size() == 8);
        CHECK(base_points_ok(list));
    }

    // E7: the point (a2, 1/a2) sits on fg = 1
    Params e7 = e7_close_constraint(Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(13), 2, 1);
    BasePointList le7 = check_base_points(e7);
    CHECK(le7.points[0].f.value == e7.a[1]);
    CHECK(le7.points[0].g.value == Rat(1) / e7.a[1]);
    CHECK(le7.points[0].locus == "fg=1");

    // E6: (0, 1/(a2 q^m)) lies on f = 0
    std::mt19937_64 rng2(131);
    Params e6 = random_params(PainleveType::E6, 2, 1, rng2);
    BasePointList le6 = check_base_points(e6);
    bool found = false;
    for (const auto& bp : le6.points)
        if (!bp.f.infinite && bp.f.value.is_zero() && !bp.g.infinite &&
            bp.g.value == Rat(1) / (e6.a[1] * e6.q.pow(e6.m)))
            found = bp.locus == "f=0";
    CHECK(found);

    // D5: 2+2+2+2 over the four lines
    Params d5 = random_params(PainleveType::D5, 2, 1, rng2);
    BasePointList ld5 = check_base_points(d5);
    std::map<std::string, int> counts;
    for (const auto& bp : ld5.points) counts[bp.locus]++;
    CHECK(counts["f=0"] == 2);
    CHECK(counts["f=inf"] == 2);
    CHECK(counts["g=0"] == 2);
    CHECK(counts["g=inf"] == 2);

    // A4 and A2A1 carry tangent data at their double points
    Params a4 = random_params(PainleveType::A4, 2, 1, rng2);
    BasePointList la4 = check_base_points(a4);
    int tangents = 0;
    for (const auto& bp : la4.points)
        if (bp.tangent) {
            ++tangents;
            CHECK(*bp.tangent == -Rat(1) / (a4.b[0] * a4.c * a4.q.pow(a4.n)));
        }
    CHECK(tangents == 2);

    Params a21 = a2a1(Rat(2), Rat(3), 2, 1);
    BasePointList la21 = check_base_points(a21);
    int t00 = 0, tinf = 0;
    for (const auto& bp : la21.points) {
        if (!bp.tangent) continue;
        if (bp.f.infinite) {
            ++tinf;
            CHECK(*bp.tangent == Rat(1) / a21.d);
        } else {
            ++t00;
            CHECK(*bp.tangent == Rat(1) / (a21.d * a21.q.pow(a21.n)));
        }
    }
    CHECK(t00 == 2);
    CHECK(tinf == 2);
}
