#pragma once

#include <array>
#include <optional>
#include <string>

#include "qpade/errors.hpp"
#include "qpade/pade.hpp"
#include "qpade/params.hpp"
#include "qpade/polynomial.hpp"
#include "qpade/qseries.hpp"
#include "qpade/rational_function.hpp"

namespace qpade {

/// Quantities read off the factored Casorati determinants.  f and g are the
/// dependent variables of the evolution; c0, c1, c2 are the shape constants
/// (c2 only for D5/A4/A2A1, where g = c1/c2).  C0 is the normalized
/// ybar-coefficient of L2; C1 additionally needs c0 of the T-shifted
/// instance and is attached once that is known.
struct FGData {
    Rat f;
    Rat g;
    Rat c0;
    Rat c1;
    std::optional<Rat> c2;
    Rat C0;
    std::optional<Rat> C1;
};

/// A linear three-term q-difference relation.  Each term carries the
/// parameter shift (0 = current instance, 1 = T-shifted), the argument shift
/// (y(q^k x) for k in {-1,0,+1}) and a rational-function coefficient.
struct ThreeTermRelation {
    enum class Kind { L1, L2, L3 };
    struct Term {
        int param_shift;
        int x_shift;
        RatFun coeff;
    };
    Kind kind;
    std::array<Term, 3> terms;
};

/// The Y-normalized Casorati determinants D_i(x)/Y(x):
///   D1n = {G_num P(x) Q(qx) - G_den P(qx) Q(x)} / G_den
///   D2n = {K_num P(x) Qb(x) - K_den Pb(x) Q(x)} / K_den
///   D3n = {(H/K_den) K_num P(qx) Qb(x) - (H/G_den) G_num Pb(x) Q(qx)} / H
struct CasoratiData {
    RatFun D1n, D2n, D3n;
};

inline CasoratiData compute_D(const Params& p, const PadePair& pair, const PadePair& shifted) {
    SystemData sd = system_data(p);
    const Rat& q = p.q;
    const Poly &P = pair.P, &Q = pair.Q;
    const Poly &Pb = shifted.P, &Qb = shifted.Q;
    Poly Pq = P.scale_arg(q), Qq = Q.scale_arg(q);

    Poly U1 = sd.G_num * P * Qq - sd.G_den * Pq * Q;
    Poly U2 = sd.K_num * P * Qb - sd.K_den * Pb * Q;
    Poly U3 = divide_exact(sd.H, sd.K_den) * sd.K_num * Pq * Qb -
              divide_exact(sd.H, sd.G_den) * sd.G_num * Pb * Qq;
    return CasoratiData{RatFun(U1, sd.G_den), RatFun(U2, sd.K_den), RatFun(U3, sd.H)};
}

namespace detail {

/// Recovers the brace polynomial U from D = U/den and strips the forced
/// N(x) factor; anything left over must match the predicted shape.
inline Poly strip_known_factors(const RatFun& D, const Poly& den, const Poly& NN,
                                const char* which) {
    RatFun U = D * RatFun(den);
    if (!U.is_poly())
        throw ShapeMismatch(std::string(which) + ": determinant is not polynomial over "
                                                 "its conventional denominator");
    auto [quo, rem] = divrem(U.as_poly(), NN);
    if (!rem.is_zero())
        throw ShapeMismatch(std::string(which) + ": grid zeros are not all present");
    return quo;
}

} // namespace detail

/// Divides each determinant by its predicted known factors and reads the
/// constants off the leftover.  Exact division certifies the whole shape;
/// any wrong degree or missing root is reported as ShapeMismatch.
inline FGData match_shapes(const Params& p, const RatFun& D1n, const RatFun& D2n,
                           const RatFun& D3n) {
    SystemData sd = system_data(p);
    Poly NN = grid_vanishing_poly(p.q, p.m, p.n);
    Poly R1 = detail::strip_known_factors(D1n, sd.G_den, NN, "D1");
    Poly R2 = detail::strip_known_factors(D2n, sd.K_den, NN, "D2");
    Poly R3 = detail::strip_known_factors(D3n, sd.H, NN, "D3");

    FGData fg;
    bool xfactor = p.type == PainleveType::E7 || p.type == PainleveType::E6;
    if (xfactor) {
        // R1 = c0 x (1 - f x)
        if (R1.degree() > 2 || !R1[0].is_zero() || R1[1].is_zero())
            throw ShapeMismatch("D1: leftover is not c0*x*(1-f*x)");
        fg.c0 = R1[1];
        fg.f = -R1[2] / fg.c0;
    } else {
        // R1 = c0 (1 - f x)
        if (R1.degree() > 1 || R1[0].is_zero())
            throw ShapeMismatch("D1: leftover is not c0*(1-f*x)");
        fg.c0 = R1[0];
        fg.f = -R1[1] / fg.c0;
    }

    switch (p.type) {
        case PainleveType::E7: {
            const Rat &a2 = p.a[1], &b3 = p.b[2];
            // R2 = c1 (1 - b3 x / (a2 q^m g))
            if (R2.degree() > 1 || R2[0].is_zero() || R2[1].is_zero())
                throw ShapeMismatch("D2: leftover is not c1*(1-b3*x/(a2*q^m*g))");
            fg.c1 = R2[0];
            fg.g = -fg.c1 * b3 / (a2 * p.q.pow(p.m) * R2[1]);
            // R3 = c1 (1 - b3 x)(1 - x/g); both constants re-read and cross-checked
            auto [L, rem] = divrem(R3, Poly::linear(Rat(1), -b3));
            if (!rem.is_zero() || L.degree() > 1)
                throw ShapeMismatch("D3: leftover is not c1*(1-b3*x)*(1-x/g)");
            if (L[0] != fg.c1) throw ShapeMismatch("D3: c1 differs from the D2 value");
            if (L[1].is_zero() || -fg.c1 / L[1] != fg.g)
                throw ShapeMismatch("D3: g differs from the D2 value");
            break;
        }
        case PainleveType::E6: {
            if (R2.degree() > 0 || R2[0].is_zero())
                throw ShapeMismatch("D2: leftover is not a nonzero constant");
            fg.c1 = R2[0];
            if (R3.degree() > 1 || R3[0] != fg.c1 || R3[1].is_zero())
                throw ShapeMismatch("D3: leftover is not c1*(1-x/g)");
            fg.g = -fg.c1 / R3[1];
            break;
        }
        default: {
            if (R2.degree() > 0 || R2[0].is_zero())
                throw ShapeMismatch("D2: leftover is not a nonzero constant");
            fg.c1 = R2[0];
            if (R3.degree() > 0 || R3[0].is_zero())
                throw ShapeMismatch("D3: leftover is not a nonzero constant");
            fg.c2 = R3[0];
            fg.g = fg.c1 / *fg.c2;
            break;
        }
    }
    fg.C0 = p.type == PainleveType::E7 ? fg.c0 * (Rat(1) - p.b[2]) / fg.c1 : fg.c0 / fg.c1;
    return fg;
}

/// C1 of L3 from the shape constants of this step and the next.
inline Rat compute_C1(const Params& p, const FGData& fg, const FGData& fg_next) {
    const Rat& c0b = fg_next.c0;
    switch (p.type) {
        case PainleveType::E7:
            return c0b * (Rat(1) - p.a[0]) * (Rat(1) - p.a[2]) / (p.q * fg.c1);
        case PainleveType::E6:
            return c0b * (Rat(1) - p.a[0]) / (p.q * fg.c1);
        case PainleveType::D5:
            return -c0b * (Rat(1) - p.a[0]) / fg.c1;
        case PainleveType::A4:
            return -c0b / fg.c1;
        case PainleveType::A2A1:
            return c0b / fg.c1;
    }
    throw DomainError("compute_C1: bad type");
}

inline ThreeTermRelation build_L2(const Params& p, const FGData& fg) {
    const Rat& q = p.q;
    auto lin = [](const Rat& c) { return Poly::linear(Rat(1), -c); };
    RatFun t_bar, t_up, t_same;
    switch (p.type) {
        case PainleveType::E7: {
            const Rat &a2 = p.a[1], &b3 = p.b[2];
            t_bar = RatFun(Poly::monomial(1, fg.C0) * lin(fg.f));
            t_up = RatFun(-(lin(a2) * lin(b3 / (a2 * q.pow(p.m) * fg.g))));
            t_same = RatFun(lin(b3) * lin(Rat(1) / fg.g));
            break;
        }
        case PainleveType::E6: {
            const Rat& a2 = p.a[1];
            t_bar = RatFun(Poly::monomial(1, fg.C0) * lin(fg.f));
            t_up = RatFun(-lin(a2));
            t_same = RatFun(lin(Rat(1) / fg.g));
            break;
        }
        default:
            t_bar = RatFun(lin(fg.f) * fg.C0);
            t_up = RatFun(Rat(-1));
            t_same = RatFun(Rat(1) / fg.g);
            break;
    }
    return ThreeTermRelation{ThreeTermRelation::Kind::L2,
                             {ThreeTermRelation::Term{1, 0, t_bar},
                              ThreeTermRelation::Term{0, +1, t_up},
                              ThreeTermRelation::Term{0, 0, t_same}}};
}

inline ThreeTermRelation build_L3(const Params& p, const FGData& fg, const FGData& fg_next) {
    const Rat& q = p.q;
    const Rat fbar = fg_next.f;
    const Rat C1 = compute_C1(p, fg, fg_next);
    const Rat qmn = q.pow(p.m + p.n);
    auto lin = [](const Rat& c) { return Poly::linear(Rat(1), -c); };
    RatFun t_same, t_bar, t_bar_dn;
    switch (p.type) {
        case PainleveType::E7: {
            const Rat &a1 = p.a[0], &a2 = p.a[1], &a3 = p.a[2];
            const Rat &b1 = p.b[0], &b2 = p.b[1], &b3 = p.b[2];
            t_same = RatFun(Poly::monomial(1, C1) * lin(fbar / q));
            t_bar = RatFun(lin(Rat(1) / qmn) * lin(a1) * lin(a3) * lin(Rat(1) / (q * fg.g)));
            t_bar_dn = RatFun(-(lin(Rat(1)) * lin(b1 / q) * lin(b2 / q) *
                                lin(b3 / (a2 * q.pow(p.m) * fg.g))));
            break;
        }
        case PainleveType::E6: {
            const Rat &a1 = p.a[0];
            const Rat &b1 = p.b[0], &b2 = p.b[1];
            t_same = RatFun(Poly::monomial(1, C1) * lin(fbar / q));
            t_bar = RatFun(lin(a1) * lin(Rat(1) / qmn) * lin(Rat(1) / (q * fg.g)));
            t_bar_dn = RatFun(-(lin(Rat(1)) * lin(b1 / q) * lin(b2 / q)));
            break;
        }
        case PainleveType::D5: {
            const Rat &a1 = p.a[0], &b1 = p.b[0];
            t_same = RatFun(lin(fbar / q) * C1);
            t_bar = RatFun(-(lin(a1) * lin(Rat(1) / qmn)) / fg.g);
            t_bar_dn = RatFun(lin(Rat(1)) * lin(b1 / q) * p.c);
            break;
        }
        case PainleveType::A4: {
            const Rat& b1 = p.b[0];
            t_same = RatFun(lin(fbar / q) * C1);
            t_bar = RatFun(-lin(Rat(1) / qmn) / fg.g);
            t_bar_dn = RatFun(lin(Rat(1)) * lin(b1 / q) * p.c);
            break;
        }
        case PainleveType::A2A1:
            t_same = RatFun(lin(fbar / q) * C1);
            t_bar = RatFun(lin(Rat(1) / qmn) / fg.g);
            t_bar_dn = RatFun(-(Poly::monomial(1, p.d / q) * lin(Rat(1))));
            break;
    }
    return ThreeTermRelation{ThreeTermRelation::Kind::L3,
                             {ThreeTermRelation::Term{0, 0, t_same},
                              ThreeTermRelation::Term{1, 0, t_bar},
                              ThreeTermRelation::Term{1, -1, t_bar_dn}}};
}

namespace detail {

/// Y-ratio Y_ps(q^xs x)/Y(x) for substitution of the second solution y = YQ.
inline RatFun y_ratio(const SystemData& sd, const Rat& q, int param_shift, int x_shift) {
    RatFun r(Rat(1));
    if (param_shift == 1)
        r = x_shift >= 0 ? sd.K.scale_arg(q.pow(x_shift)) : sd.K.scale_arg(Rat(1) / q);
    if (x_shift == 1) r *= sd.G;
    if (x_shift == -1) r /= sd.G.scale_arg(Rat(1) / q);
    return r;
}

} // namespace detail

/// True iff both columns of solutions annihilate the relation identically:
/// y -> P by direct substitution, and y -> Y*Q after normalizing away Y(x)
/// (each term picks up the appropriate G/K ratio).
inline bool verify_relation(const Params& p, const ThreeTermRelation& rel, const PadePair& pair,
                            const PadePair* shifted) {
    SystemData sd = system_data(p);
    const Rat& q = p.q;
    RatFun sumP(Rat(0)), sumQ(Rat(0));
    for (const auto& t : rel.terms) {
        if (t.coeff.is_zero()) continue;
        const PadePair* src = t.param_shift == 0 ? &pair : shifted;
        if (src == nullptr) throw DomainError("verify_relation: shifted pair required");
        Rat scale = q.pow(t.x_shift);
        sumP += t.coeff * RatFun(src->P.scale_arg(scale));
        sumQ += t.coeff * RatFun(src->Q.scale_arg(scale)) *
                detail::y_ratio(sd, q, t.param_shift, t.x_shift);
    }
    return sumP.is_zero() && sumQ.is_zero();
}

inline bool verify_contiguity(const Params& p, const ThreeTermRelation& rel,
                              const PadePair& pair, const PadePair& shifted) {
    return verify_relation(p, rel, pair, &shifted);
}

/// The closed form of the gauge-invariant product C0*C1.
inline bool check_c0c1(const Params& p, const FGData& fg, const FGData& fg_next) {
    const Rat& q = p.q;
    const Rat &f = fg.f, &g = fg.g;
    const Rat fbar = fg_next.f;
    Rat lhs = fg.C0 * compute_C1(p, fg, fg_next);
    Rat one(1);
    switch (p.type) {
        case PainleveType::E7: {
            const Rat &a2 = p.a[1], &b1 = p.b[0], &b2 = p.b[1], &b3 = p.b[2];
            Rat A1g = (one - a2 * g) * (one - q * g) * (one - b1 * g) * (one - b2 * g);
            Rat r = b3 / (a2 * q.pow(p.m));
            return lhs == A1g * (one - r) * (one - r * q) /
                              (q * (one - f * g) * (one - fbar * g) * g.pow(2));
        }
        case PainleveType::E6: {
            const Rat &a2 = p.a[1], &b1 = p.b[0], &b2 = p.b[1];
            return lhs == (one - a2 * g) * (one - b1 * g) * (one - b2 * g) * (one - q * g) /
                              (q * g.pow(2) * (one - f * g) * (one - fbar * g));
        }
        case PainleveType::D5:
        case PainleveType::A4:
            return lhs == -(one - g) * (one - p.c * g) / g.pow(2);
        case PainleveType::A2A1:
            return lhs == (one - g) / g.pow(2);
    }
    throw DomainError("check_c0c1: bad type");
}

} // namespace qpade
