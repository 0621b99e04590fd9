#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qpade/draws.hpp"
#include "qpade/params.hpp"

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

Params d5(const Rat& q, const Rat& a1, const Rat& b1, const Rat& c, int m, int n) {
    Params p;
    p.type = PainleveType::D5;
    p.q = q;
    p.a = {a1};
    p.b = {b1};
    p.c = c;
    p.m = m;
    p.n = n;
    return p;
}

std::vector<Params> one_of_each(std::mt19937_64& rng, int m, int n) {
    std::vector<Params> out;
    for (auto t : {PainleveType::E7, PainleveType::E6, PainleveType::D5, PainleveType::A4,
                   PainleveType::A2A1})
        out.push_back(random_params(t, m, n, rng));
    return out;
}

} // namespace

TEST_CASE("interpolated sequence values", "[systems]") {
    // first value is 1 for every type
    std::mt19937_64 rng(23);
    for (const Params& p : one_of_each(rng, 2, 1))
        CHECK(y_sequence(p)[0] == Rat(1));

    auto y = y_sequence(a2a1(Rat(2), Rat(3), 1, 1));
    REQUIRE(y.size() == 3);
    CHECK(y[0] == Rat(1));
    CHECK(y[1] == Rat(3));
    CHECK(y[2] == Rat(18));

    CHECK(y_sequence(d5(Rat(2), Rat(3), Rat(5), Rat(7), 1, 0))[1] == Rat(14));
}

TEST_CASE("per-type ratio tables", "[systems]") {
    SystemData sd = system_data(a2a1(Rat(2), Rat(3), 1, 1));
    CHECK(sd.G == RatFun(Poly::monomial(1, Rat(3))));
    CHECK(sd.K == RatFun(Rat(1)));
    CHECK(sd.H == Poly(1));

    Params a4;
    a4.type = PainleveType::A4;
    a4.q = Rat(2);
    a4.b = {Rat(5)};
    a4.c = Rat(7);
    a4.m = a4.n = 1;
    SystemData sd4 = system_data(a4);
    CHECK(sd4.G == RatFun(Poly{Rat(7), Rat(-35)}));
    CHECK(sd4.K == RatFun(Rat(1)));
    CHECK(sd4.H == Poly(1));
}

TEST_CASE("grid consistency of G and K", "[systems]") {
    std::mt19937_64 rng(29);
    for (int draw = 0; draw < 3; ++draw) {
        for (Params p : one_of_each(rng, 2, 2)) {
            SystemData sd = system_data(p);
            auto Y = y_sequence(p);
            auto Yb = y_sequence(apply_T(p, +1));
            for (int s = 0; s <= p.m + p.n - 1; ++s)
                REQUIRE(sd.G.eval(p.q.pow(s)) * Y[s] == Y[s + 1]);
            for (int s = 0; s <= p.m + p.n - 1; ++s)
                REQUIRE(sd.K.eval(p.q.pow(s)) * Y[s] == Yb[s]);
        }
    }
}

TEST_CASE("H divides the denominator products", "[systems]") {
    std::mt19937_64 rng(31);
    for (Params p : one_of_each(rng, 2, 1)) {
        SystemData sd = system_data(p);
        // H is a common multiple of G_den and K_den up to scalars
        CHECK(divrem(sd.H, sd.G_den).second.is_zero());
        CHECK(divrem(sd.H, sd.K_den).second.is_zero());
        CHECK(sd.H.degree() <= sd.G_den.degree() + sd.K_den.degree());
    }
}

TEST_CASE("time evolution", "[systems]") {
    Params p = a2a1(Rat(2), Rat(3), 2, 1);
    Params up = apply_T(p, +1);
    CHECK(up.d == Rat(3));
    CHECK(up.m == 1);
    CHECK(up.n == 1);

    std::mt19937_64 rng(37);
    for (const Params& r : one_of_each(rng, 2, 1)) {
        Params back = apply_T(apply_T(r, +1), -1);
        CHECK(back == r);
    }

    // E7 constraint survives T in both directions
    Params e7 = e7_close_constraint(Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(13), 2, 1);
    CHECK_NOTHROW(validate(apply_T(e7, +1)));
    CHECK_NOTHROW(validate(apply_T(e7, -1)));

    Params m0 = a2a1(Rat(2), Rat(3), 0, 1);
    CHECK_THROWS_AS(apply_T(m0, +1), DomainError);
}

TEST_CASE("parameter shifts", "[systems]") {
    Params e6;
    e6.type = PainleveType::E6;
    e6.q = Rat(2);
    e6.a = {Rat(3), Rat(5)};
    e6.b = {Rat(7), Rat(11)};
    e6.m = e6.n = 1;

    CHECK(shift_param(shift_param(e6, "a1", 1), "a1", -1) == e6);
    Params s = shift_param(e6, "b1", 2);
    CHECK(s.b[0] == Rat(28));
    CHECK(s.a == e6.a);
    CHECK_NOTHROW(validate(shift_param(e6, "a1", 1)));
    CHECK_THROWS_AS(shift_param(e6, "a3", 1), DomainError);
    CHECK_THROWS_AS(shift_param(e6, "zz", 1), DomainError);

    // composite shift moves both components
    Params d = d5(Rat(2), Rat(3), Rat(5), Rat(7), 1, 1);
    Params both = shift_param(d, "a1b1", 1);
    CHECK(both.a[0] == Rat(6));
    CHECK(both.b[0] == Rat(10));

    // shifts on disjoint parameters commute with T
    Params viaT = apply_T(shift_param(e6, "b2", 1), +1);
    Params viaS = shift_param(apply_T(e6, +1), "b2", 1);
    CHECK(viaT == viaS);
}

TEST_CASE("closing the E7 constraint", "[systems]") {
    Params p = e7_close_constraint(Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(13), 2, 1);
    CHECK(p.b[2] == Rat(210, 143));
    CHECK_NOTHROW(validate(p));
    CHECK(e7_close_constraint(Rat(2), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), 1, 1).b[2] ==
          Rat(1));
}

TEST_CASE("genericity guards", "[systems]") {
    CHECK_THROWS_AS(validate(a2a1(Rat(1), Rat(3), 1, 1)), NonGenericParameters);
    CHECK_THROWS_AS(validate(a2a1(Rat(-1), Rat(3), 1, 1)), NonGenericParameters);
    CHECK_THROWS_AS(validate(a2a1(Rat(2), Rat(0), 1, 1)), NonGenericParameters);
    Params bad = a2a1(Rat(2), Rat(3), -1, 0);
    CHECK_THROWS_AS(validate(bad), DomainError);

    // a1 = q^-s poisons the sequence denominators
    Params d = d5(Rat(2), Rat(1, 4), Rat(5), Rat(7), 1, 1);
    CHECK_THROWS_AS(validate(d), NonGenericParameters);

    Params e7 = e7_close_constraint(Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(13), 2, 1);
    e7.b[2] = Rat(9, 99);
    CHECK_THROWS_AS(validate(e7), ConstraintViolation);
}
