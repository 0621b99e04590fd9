#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpade/casorati.hpp"
#include "qpade/errors.hpp"
#include "qpade/pade.hpp"
#include "qpade/params.hpp"

namespace qpade {

/// One step of a T-orbit.  fg is present for every step that has a
/// successor (it needs the shifted interpolating pair); fg->C1 additionally
/// needs the successor's fg.
struct OrbitStep {
    Params params;
    PadePair pair;
    std::optional<FGData> fg;
};

struct OrbitData {
    std::vector<OrbitStep> steps;

    const FGData& fg_at(size_t k) const {
        if (k >= steps.size() || !steps[k].fg)
            throw DomainError("orbit: no extracted data at step " + std::to_string(k));
        return *steps[k].fg;
    }
};

/// Builds steps 0..K with step k+1 = T(step k), solving each interpolation
/// problem and extracting f, g along the way.  Requires K <= initial m.
inline OrbitData make_orbit(const Params& p0, int K) {
    if (K < 0) throw DomainError("make_orbit: negative length");
    OrbitData orbit;
    Params cur = p0;
    for (int k = 0; k <= K; ++k) {
        validate(cur);
        OrbitStep step;
        step.params = cur;
        step.pair = solve_linear(cur);
        orbit.steps.push_back(std::move(step));
        if (k < K) cur = apply_T(cur, +1);
    }
    for (int k = 0; k < K; ++k) {
        CasoratiData cd =
            compute_D(orbit.steps[k].params, orbit.steps[k].pair, orbit.steps[k + 1].pair);
        orbit.steps[k].fg = match_shapes(orbit.steps[k].params, cd.D1n, cd.D2n, cd.D3n);
    }
    for (int k = 0; k + 1 < K; ++k)
        orbit.steps[k].fg->C1 =
            compute_C1(orbit.steps[k].params, *orbit.steps[k].fg, *orbit.steps[k + 1].fg);
    return orbit;
}

namespace detail {

/// Exact equality a/b = c/d with vanishing-denominator guard.
inline bool cleared_ratio_equal(const Rat& a, const Rat& b, const Rat& c, const Rat& d,
                                const char* what) {
    if (b.is_zero() || d.is_zero())
        throw IndeterminateEvaluation(std::string(what) + ": cleared denominator vanished");
    return a * d == c * b;
}

} // namespace detail

/// Checks the pair of evolution equations at an interior orbit step k:
/// the g-direction equation links (f_k, g_k, g_{k-1}) and the f-direction
/// equation links (g_k, f_k, f_{k+1}), with parameters taken at step k.
/// Both are tested in cleared-denominator form.
inline bool check_evolution(const OrbitData& orbit, size_t k) {
    if (k < 1 || k + 1 >= orbit.steps.size())
        throw DomainError("check_evolution: k must be interior to the orbit");
    const Params& p = orbit.steps[k].params;
    const Rat& q = p.q;
    const Rat one(1);
    Rat f = orbit.fg_at(k).f;
    Rat g = orbit.fg_at(k).g;
    Rat gdn = orbit.fg_at(k - 1).g;
    Rat fup = orbit.fg_at(k + 1).f;
    int m = p.m, n = p.n;

    switch (p.type) {
        case PainleveType::E7: {
            const Rat &a1 = p.a[0], &a2 = p.a[1], &a3 = p.a[2];
            const Rat &b1 = p.b[0], &b2 = p.b[1], &b3 = p.b[2];
            auto A1 = [&](const Rat& X) {
                return (one - a2 * X) * (one - q * X) * (one - b1 * X) * (one - b2 * X);
            };
            auto A2 = [&](const Rat& X) {
                return (one - b3 * X) * (one - X / q.pow(m + n)) * (one - a1 * X) *
                       (one - a3 * X);
            };
            Rat r = b3 / (a2 * q.pow(m));
            if (f.is_zero()) throw IndeterminateEvaluation("E7 evolution: f = 0");
            bool e1 = detail::cleared_ratio_equal(
                (f * g - one) * (f * gdn - one), (f * g - r) * (f * gdn - r / q), A1(one / f),
                A2(one / f), "E7 evolution (g)");
            bool e2 = detail::cleared_ratio_equal(
                (one - f * g) * (one - fup * g),
                (one - f * g / r) * (one - fup * g / (q * r)), A1(g), A2(g / r),
                "E7 evolution (f)");
            return e1 && e2;
        }
        case PainleveType::E6: {
            const Rat &a1 = p.a[0], &a2 = p.a[1];
            const Rat &b1 = p.b[0], &b2 = p.b[1];
            bool e1 = detail::cleared_ratio_equal(
                (f * g - one) * (f * gdn - one), g * gdn,
                (f - a2) * (f - b1) * (f - b2) * (f - q), (f - a1) * (f - q.pow(-(m + n))),
                "E6 evolution (g)");
            bool e2 = detail::cleared_ratio_equal(
                (f * g - one) * (fup * g - one), f * fup,
                (g - one / a2) * (g - one / b1) * (g - one / b2) * (g - one / q),
                (g - q.pow(-m) / a2) * (g - a1 / (b1 * b2 * q.pow(n))), "E6 evolution (f)");
            return e1 && e2;
        }
        case PainleveType::D5: {
            const Rat &a1 = p.a[0], &b1 = p.b[0], &c = p.c;
            bool e1 = detail::cleared_ratio_equal(g * gdn, Rat(1),
                                                  (f - a1) * (f - q.pow(-(m + n))),
                                                  c * (f - b1) * (f - q), "D5 evolution (g)");
            bool e2 = detail::cleared_ratio_equal(
                f * fup, Rat(1), q * b1 * (g - q.pow(-m)) * (g - a1 / (b1 * q.pow(n) * c)),
                (g - one) * (g - one / c), "D5 evolution (f)");
            return e1 && e2;
        }
        case PainleveType::A4: {
            const Rat &b1 = p.b[0], &c = p.c;
            bool e1 = detail::cleared_ratio_equal(g * gdn, Rat(1),
                                                  f * (f - q.pow(-(m + n))),
                                                  c * (f - b1) * (f - q), "A4 evolution (g)");
            bool e2 = detail::cleared_ratio_equal(f * fup, Rat(1),
                                                  q * b1 * g * (g - q.pow(-m)),
                                                  (g - one) * (g - one / c), "A4 evolution (f)");
            return e1 && e2;
        }
        case PainleveType::A2A1: {
            const Rat& d = p.d;
            bool e1 = detail::cleared_ratio_equal(g * gdn, Rat(1), f * (f - q.pow(-(m + n))),
                                                  d * (f - q), "A2A1 evolution (g)");
            bool e2 = detail::cleared_ratio_equal(f * fup, Rat(1),
                                                  q * d * g * (g - q.pow(-m)), g - one,
                                                  "A2A1 evolution (f)");
            return e1 && e2;
        }
    }
    throw DomainError("check_evolution: bad type");
}

/// The y(x/q), y(x), y(qx) relation whose compatibility with L2 generates
/// the evolution.  Coefficients depend only on f, g and the parameters.
inline ThreeTermRelation build_L1(const Params& p, const FGData& fg) {
    const Rat& q = p.q;
    const Rat one(1);
    const Rat &f = fg.f, &g = fg.g;
    int m = p.m, n = p.n;
    if (f.is_zero() || g.is_zero())
        throw IndeterminateEvaluation("build_L1: f or g vanishes");
    RatFun cm, c0, cp;
    auto lin = [](const Rat& c0_, const Rat& c1_) { return Poly::linear(c0_, c1_); };
    try {
        switch (p.type) {
            case PainleveType::E7: {
                const Rat &a1 = p.a[0], &a2 = p.a[1], &a3 = p.a[2];
                const Rat &b1 = p.b[0], &b2 = p.b[1], &b3 = p.b[2];
                Rat qm = q.pow(m);
                Rat r = a2 * qm / b3; // 1/(b3/(a2 q^m))
                auto A1s = [&](const Rat& X) {
                    return (one - a2 * X) * (one - q * X) * (one - b1 * X) * (one - b2 * X);
                };
                auto A2s = [&](const Rat& X) {
                    return (one - b3 * X) * (one - X / q.pow(m + n)) * (one - a1 * X) *
                           (one - a3 * X);
                };
                // A1(x/q) and A2(x) as polynomials in x
                Poly A1xq = lin(one, -a2 / q) * lin(one, -one) * lin(one, -b1 / q) *
                            lin(one, -b2 / q);
                Poly A2x = lin(one, -b3) * lin(one, -q.pow(-(m + n))) * lin(one, -a1) *
                           lin(one, -a3);
                cm = RatFun(q.pow(2) * lin(q, -b3) * A1xq,
                            lin(q, -a2) * lin(q, -f));
                cp = RatFun(lin(one, -a2) * A2x, lin(one, -b3) * lin(one, -f));
                RatFun bracket =
                    RatFun(Poly(A1s(g) / (f * g - one)), lin(q * g, -one)) -
                    RatFun(Poly(A2s(r * g) / (r * f * g - one)), lin(r * g, -one));
                RatFun t1 = RatFun(Poly::monomial(2, (b3 - a2 * qm) / (a2 * qm * g))) * bracket;
                RatFun t2 = cm * RatFun(b3 * lin(r * q * g, -one) * lin(q, -a2),
                                        a2 * qm * lin(q * g, -one) * lin(q, -b3));
                RatFun t3 = cp * RatFun(a2 * qm * lin(g, -one) * lin(one, -b3),
                                        b3 * lin(r * g, -one) * lin(one, -a2));
                c0 = t1 - t2 - t3;
                break;
            }
            case PainleveType::E6: {
                const Rat &a1 = p.a[0], &a2 = p.a[1];
                const Rat &b1 = p.b[0], &b2 = p.b[1];
                Rat qmn = q.pow(m + n);
                cm = RatFun(qmn * g * lin(one, -one) * lin(q, -b1) * lin(q, -b2), lin(q, -f));
                cp = RatFun(g * lin(qmn, -one) * lin(one, -a1) * lin(one, -a2), lin(one, -f));
                RatFun t2 = cm * RatFun(g * lin(q, -a2), lin(q * g, -one));
                RatFun t3 = cp * RatFun(lin(g, -one), g * lin(one, -a2));
                RatFun t1 =
                    RatFun(Poly::monomial(2)) *
                    (RatFun(Rat((a2 * q.pow(m) * g - one) * (b1 * b2 * q.pow(n) * g - a1) / f)) -
                     RatFun(Poly(qmn * (a2 * g - one) * (b1 * g - one) * (b2 * g - one) *
                                 (q * g - one) / (f * g - one)),
                            lin(q * g, -one)));
                c0 = t1 - t2 - t3;
                break;
            }
            case PainleveType::D5: {
                const Rat &a1 = p.a[0], &b1 = p.b[0], &c = p.c;
                Rat qmn = q.pow(m + n);
                cp = RatFun(g * lin(-qmn, one) * lin(-one, a1), lin(-one, f));
                cm = RatFun(c * qmn * g * lin(-one, one) * lin(-q, b1), lin(-q, f));
                c0 = RatFun(Poly::monomial(1, (q.pow(m) * g - one) * (b1 * c * q.pow(n) * g - a1) / f) +
                            Poly(-qmn * (g - one) * (c * g - one))) -
                     cp / g - cm * g;
                break;
            }
            case PainleveType::A4: {
                const Rat &b1 = p.b[0], &c = p.c;
                Rat qmn = q.pow(m + n);
                cm = RatFun(c * g * qmn * lin(one, -one) * lin(q, -b1), lin(q, -f));
                cp = RatFun(g * lin(qmn, -one), lin(one, -f));
                c0 = RatFun(Poly(q.pow(n) * q.pow(m) * (one - g) * (one - c * g)) +
                            Poly::monomial(1, q.pow(n) * b1 * c * g * (one - q.pow(m) * g) / f)) -
                     cm * g - cp / g;
                break;
            }
            case PainleveType::A2A1: {
                const Rat& d = p.d;
                Rat qmn = q.pow(m + n);
                cm = RatFun(d * g * qmn * lin(one, -one) * Poly::monomial(1), lin(-q, f));
                cp = RatFun(g * lin(qmn, -one), lin(-one, f));
                c0 = RatFun(Poly(q.pow(n) * q.pow(m) * (g - one)) +
                            Poly::monomial(1, -q.pow(n) * d * g * (g * q.pow(m) - one) / f)) -
                     cm * g - cp / g;
                break;
            }
        }
    } catch (const DivisionByZero&) {
        throw IndeterminateEvaluation("build_L1: a coefficient denominator vanished");
    }
    return ThreeTermRelation{ThreeTermRelation::Kind::L1,
                             {ThreeTermRelation::Term{0, -1, cm},
                              ThreeTermRelation::Term{0, 0, c0},
                              ThreeTermRelation::Term{0, +1, cp}}};
}

inline bool verify_L1(const Params& p, const ThreeTermRelation& rel, const PadePair& pair) {
    return verify_relation(p, rel, pair, nullptr);
}

namespace detail {

inline const RatFun& term_coeff(const ThreeTermRelation& rel, int param_shift, int x_shift) {
    for (const auto& t : rel.terms)
        if (t.param_shift == param_shift && t.x_shift == x_shift) return t.coeff;
    throw DomainError("relation: missing term");
}

} // namespace detail

/// Eliminates the ybar terms from L2(x/q), L2(x) and L3(x), leaving a
/// relation between y(x/q), y(x), y(qx).  Up to an overall factor this must
/// reproduce build_L1.
inline ThreeTermRelation eliminate_to_L1(const Params& p, const ThreeTermRelation& L2,
                                         const ThreeTermRelation& L3) {
    const Rat& q = p.q;
    Rat inv_q = Rat(1) / q;
    const RatFun& a0 = detail::term_coeff(L2, 1, 0);  // ybar(x)
    const RatFun& a1 = detail::term_coeff(L2, 0, 1);  // y(qx)
    const RatFun& a2 = detail::term_coeff(L2, 0, 0);  // y(x)
    RatFun g0 = a0.scale_arg(inv_q);                  // ybar(x/q)
    RatFun g1 = a1.scale_arg(inv_q);                  // y(x)
    RatFun g2 = a2.scale_arg(inv_q);                  // y(x/q)
    const RatFun& b0 = detail::term_coeff(L3, 0, 0);  // y(x)
    const RatFun& b1 = detail::term_coeff(L3, 1, 0);  // ybar(x)
    const RatFun& b2 = detail::term_coeff(L3, 1, -1); // ybar(x/q)
    RatFun w_up = -(b1 * a1 * g0);
    RatFun w_dn = -(b2 * g2 * a0);
    RatFun w_same = b0 * a0 * g0 - b1 * a2 * g0 - b2 * g1 * a0;
    return ThreeTermRelation{ThreeTermRelation::Kind::L1,
                             {ThreeTermRelation::Term{0, -1, w_dn},
                              ThreeTermRelation::Term{0, 0, w_same},
                              ThreeTermRelation::Term{0, +1, w_up}}};
}

/// Coefficient vectors proportional as rational functions (all 2x2 cross
/// products vanish), with matching shift tags.
inline bool proportional(const ThreeTermRelation& A, const ThreeTermRelation& B) {
    for (const auto& ta : A.terms) {
        if (ta.param_shift != 0) return false;
        const RatFun& cb = detail::term_coeff(B, 0, ta.x_shift);
        for (const auto& ta2 : A.terms) {
            const RatFun& cb2 = detail::term_coeff(B, 0, ta2.x_shift);
            if (ta.coeff * cb2 != ta2.coeff * cb) return false;
        }
    }
    return true;
}

/// A point of the (f, g) plane, possibly at infinity in either coordinate.
struct Coord {
    bool infinite = false;
    Rat value;

    static Coord inf() { return Coord{true, Rat(0)}; }
    static Coord at(const Rat& v) { return Coord{false, v}; }
};

struct BasePoint {
    Coord f;
    Coord g;
    std::string locus;           // "fg=1", "fg=b3/(a2*q^m)", "f=0", "g=inf", ...
    std::optional<Rat> tangent;  // g/f at a double point, carried as data
    bool on_locus = false;
};

struct BasePointList {
    std::vector<BasePoint> points;
};

/// The eight indeterminacy points with the parameters substituted.  Each
/// finite point is verified against its stated curve or line; an infinite
/// coordinate is checked in the reciprocal coordinate.
inline BasePointList check_base_points(const Params& p) {
    validate(p);
    const Rat& q = p.q;
    const Rat one(1);
    BasePointList out;
    auto fin = [](const Rat& a, const Rat& b, const std::string& locus) {
        return BasePoint{Coord::at(a), Coord::at(b), locus, std::nullopt, false};
    };
    switch (p.type) {
        case PainleveType::E7: {
            const Rat &a1 = p.a[0], &a2 = p.a[1], &a3 = p.a[2];
            const Rat &b1 = p.b[0], &b2 = p.b[1], &b3 = p.b[2];
            Rat r = b3 / (a2 * q.pow(p.m));
            out.points = {fin(a2, one / a2, "fg=1"),
                          fin(b1, one / b1, "fg=1"),
                          fin(b2, one / b2, "fg=1"),
                          fin(q, one / q, "fg=1"),
                          fin(a1, b3 / (a1 * a2 * q.pow(p.m)), "fg=b3/(a2*q^m)"),
                          fin(b3, one / (a2 * q.pow(p.m)), "fg=b3/(a2*q^m)"),
                          fin(q.pow(-(p.m + p.n)), b3 * q.pow(p.n) / a2, "fg=b3/(a2*q^m)"),
                          fin(a3, b3 / (a2 * a3 * q.pow(p.m)), "fg=b3/(a2*q^m)")};
            for (auto& bp : out.points) {
                Rat prod = bp.f.value * bp.g.value;
                bp.on_locus = bp.locus == "fg=1" ? prod == one : prod == r;
            }
            return out;
        }
        case PainleveType::E6: {
            const Rat &a1 = p.a[0], &a2 = p.a[1];
            const Rat &b1 = p.b[0], &b2 = p.b[1];
            out.points = {fin(a2, one / a2, "fg=1"),
                          fin(b1, one / b1, "fg=1"),
                          fin(b2, one / b2, "fg=1"),
                          fin(q, one / q, "fg=1"),
                          fin(a1, Rat(0), "g=0"),
                          fin(q.pow(-(p.m + p.n)), Rat(0), "g=0"),
                          fin(Rat(0), one / (a2 * q.pow(p.m)), "f=0"),
                          fin(Rat(0), a1 / (b1 * b2 * q.pow(p.n)), "f=0")};
            for (auto& bp : out.points) {
                if (bp.locus == "fg=1") bp.on_locus = bp.f.value * bp.g.value == one;
                else if (bp.locus == "g=0") bp.on_locus = bp.g.value.is_zero();
                else bp.on_locus = bp.f.value.is_zero();
            }
            return out;
        }
        case PainleveType::D5: {
            const Rat &a1 = p.a[0], &b1 = p.b[0], &c = p.c;
            out.points = {fin(a1, Rat(0), "g=0"),
                          fin(q.pow(-(p.m + p.n)), Rat(0), "g=0"),
                          fin(Rat(0), q.pow(-p.m), "f=0"),
                          fin(Rat(0), a1 / (b1 * c * q.pow(p.n)), "f=0"),
                          BasePoint{Coord::inf(), Coord::at(one), "f=inf", std::nullopt, false},
                          BasePoint{Coord::inf(), Coord::at(one / c), "f=inf", std::nullopt, false},
                          BasePoint{Coord::at(b1), Coord::inf(), "g=inf", std::nullopt, false},
                          BasePoint{Coord::at(q), Coord::inf(), "g=inf", std::nullopt, false}};
            break;
        }
        case PainleveType::A4: {
            const Rat &b1 = p.b[0], &c = p.c;
            out.points = {fin(q.pow(-(p.m + p.n)), Rat(0), "g=0"),
                          fin(Rat(0), q.pow(-p.m), "f=0"),
                          BasePoint{Coord::inf(), Coord::at(one), "f=inf", std::nullopt, false},
                          BasePoint{Coord::inf(), Coord::at(one / c), "f=inf", std::nullopt, false},
                          BasePoint{Coord::at(b1), Coord::inf(), "g=inf", std::nullopt, false},
                          BasePoint{Coord::at(q), Coord::inf(), "g=inf", std::nullopt, false},
                          // double point: counted twice, tangent g/f carried as data
                          BasePoint{Coord::at(Rat(0)), Coord::at(Rat(0)), "f=0",
                                    -Rat(1) / (b1 * c * q.pow(p.n)), false},
                          BasePoint{Coord::at(Rat(0)), Coord::at(Rat(0)), "g=0",
                                    -Rat(1) / (b1 * c * q.pow(p.n)), false}};
            break;
        }
        case PainleveType::A2A1: {
            const Rat& d = p.d;
            out.points = {fin(q.pow(-(p.m + p.n)), Rat(0), "g=0"),
                          fin(Rat(0), q.pow(-p.m), "f=0"),
                          BasePoint{Coord::inf(), Coord::at(one), "f=inf", std::nullopt, false},
                          BasePoint{Coord::at(q), Coord::inf(), "g=inf", std::nullopt, false},
                          BasePoint{Coord::at(Rat(0)), Coord::at(Rat(0)), "f=0",
                                    Rat(1) / (d * q.pow(p.n)), false},
                          BasePoint{Coord::at(Rat(0)), Coord::at(Rat(0)), "g=0",
                                    Rat(1) / (d * q.pow(p.n)), false},
                          BasePoint{Coord::inf(), Coord::inf(), "f=inf", Rat(1) / d, false},
                          BasePoint{Coord::inf(), Coord::inf(), "g=inf", Rat(1) / d, false}};
            break;
        }
    }
    // line membership for the four-line types: reciprocal coordinate for inf
    for (auto& bp : out.points) {
        if (bp.locus == "f=0") bp.on_locus = !bp.f.infinite && bp.f.value.is_zero();
        else if (bp.locus == "g=0") bp.on_locus = !bp.g.infinite && bp.g.value.is_zero();
        else if (bp.locus == "f=inf") bp.on_locus = bp.f.infinite;
        else if (bp.locus == "g=inf") bp.on_locus = bp.g.infinite;
    }
    return out;
}

inline bool base_points_ok(const BasePointList& list) {
    if (list.points.size() != 8) return false;
    for (const auto& bp : list.points)
        if (!bp.on_locus) return false;
    return true;
}

} // namespace qpade
