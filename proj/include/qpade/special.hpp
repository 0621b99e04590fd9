#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpade/errors.hpp"
#include "qpade/evolution.hpp"
#include "qpade/matrix.hpp"
#include "qpade/params.hpp"
#include "qpade/qseries.hpp"

namespace qpade {

/// A tau determinant instance: the (n+1)x(n+1) matrix of terminating
/// hypergeometric values of the base pack's type.  k_offset is the third
/// index of the D5/A4/A2A1 family (ignored for E7/E6).
struct TauSpec {
    Params base;
    int k_offset = 0;
};

namespace detail {

inline Rat tau_entry(const Params& p, int N, int i, int j, int k_offset) {
    const Rat& q = p.q;
    Rat qmN = q.pow(-N);
    switch (p.type) {
        case PainleveType::E7:
            return qhyper(make_qhyper_spec({p.b[0], p.b[1], p.b[2], qmN},
                                           {p.a[0], p.a[1], p.a[2]}, q,
                                           q.pow(i + j + 1), N));
        case PainleveType::E6:
            return qhyper(make_qhyper_spec({p.b[0], p.b[1], qmN}, {p.a[0], p.a[1]}, q,
                                           q.pow(i + j + 1), N));
        case PainleveType::D5:
            return qhyper(make_qhyper_spec({p.b[0], qmN}, {p.a[0]}, q,
                                           p.c * q.pow(i + j + k_offset), N));
        case PainleveType::A4:
            return qhyper(make_qhyper_spec({p.b[0], qmN}, {Rat(0)}, q,
                                           p.c * q.pow(i + j + k_offset), N));
        case PainleveType::A2A1:
            return qhyper(make_qhyper_spec({qmN}, {Rat(0)}, q,
                                           -p.d * q.pow(i + j + k_offset), N));
    }
    throw DomainError("tau: bad type");
}

} // namespace detail

/// tau with indices (mm, nn): determinant of size nn+1 whose terminating
/// order is mm+nn.  nn = -1 gives the empty determinant 1.
inline Rat tau_indexed(const Params& p, int mm, int nn, int k_offset = 0) {
    if (nn < -1 || mm + nn < 0)
        throw DomainError("tau: bad indices");
    if (nn == -1) return Rat(1);
    int N = mm + nn;
    size_t dim = static_cast<size_t>(nn) + 1;
    Matrix<Rat> M(dim, dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            M(i, j) = detail::tau_entry(p, N, static_cast<int>(i), static_cast<int>(j), k_offset);
    return det(M);
}

inline Rat tau(const TauSpec& spec) {
    return tau_indexed(spec.base, spec.base.m, spec.base.n, spec.k_offset);
}

/// gamma_i / omega_i prefactors of the E7/E6 determinant formulae.
struct Prefactors {
    Rat gamma1, gamma2;
    Rat omega1, omega2;
};

inline Prefactors prefactors(const Params& p) {
    if (p.type != PainleveType::E7 && p.type != PainleveType::E6)
        throw DomainError("prefactors: defined for E7 and E6 only");
    const Rat& q = p.q;
    const Rat one(1);
    auto gamma = [&](const Rat& ai) {
        Rat den = (one - ai).pow(p.n + 1);
        if (den.is_zero()) throw DivisionByZero("prefactors: (1-a_i)^(n+1) vanished");
        Rat r = ai * (one - ai * q.pow(p.m + p.n)) * (one - ai / q).pow(p.n) / den;
        for (const Rat& bk : p.b) r *= one - bk / ai;
        return r;
    };
    auto omega = [&](const Rat& bi) {
        Rat den = (one - bi / q).pow(p.n);
        if (den.is_zero()) throw DivisionByZero("prefactors: (1-b_i/q)^n vanished");
        return (one - p.a[1] / bi) * (one - bi).pow(p.n) / den;
    };
    return Prefactors{gamma(p.a[0]), gamma(p.a[1]), omega(p.b[0]), omega(p.b[1])};
}

namespace detail {

inline Rat safe_div(const Rat& num, const Rat& den, const char* what) {
    if (den.is_zero())
        throw IndeterminateEvaluation(std::string(what) + ": vanishing denominator");
    return num / den;
}

} // namespace detail

/// Verifies the determinant formulae for the special solution at orbit step
/// k against the extracted f, g.  E7/E6 assert the two tabulated ratios; the
/// other types assert f and g individually.
inline bool check_solution(const OrbitData& orbit, size_t k) {
    if (k >= orbit.steps.size())
        throw DomainError("check_solution: step out of range");
    const Params& p = orbit.steps[k].params;
    const FGData& fg = orbit.fg_at(k);
    const Rat& q = p.q;
    const Rat one(1);
    const Rat &f = fg.f, &g = fg.g;
    int m = p.m, n = p.n;

    switch (p.type) {
        case PainleveType::E7:
        case PainleveType::E6: {
            const Rat &a1 = p.a[0], &a2 = p.a[1];
            const Rat &b1 = p.b[0], &b2 = p.b[1];
            Prefactors pf = prefactors(p);
            // (1 - f/a1)/(1 - f/a2) against the a-shifted tau ratio
            Rat lhs_f = detail::safe_div(one - f / a1, one - f / a2, "f-formula lhs");
            Rat num = pf.gamma1 * tau_indexed(shift_param(p, "a1", 1), m, n) *
                      tau_indexed(shift_param(p, "a1", -1), m + 1, n - 1);
            Rat den = pf.gamma2 * tau_indexed(shift_param(p, "a2", 1), m, n) *
                      tau_indexed(shift_param(p, "a2", -1), m + 1, n - 1);
            if (lhs_f != detail::safe_div(num, den, "f-formula rhs")) return false;
            // (1 - 1/(b1 g))/(1 - 1/(b2 g)) against the b-shifted tau ratio,
            // with the bar meaning the T-shifted pack
            Params pb = apply_T(p, +1);
            Rat lhs_g = detail::safe_div(one - one / (b1 * g), one - one / (b2 * g),
                                         "g-formula lhs");
            Rat numg = pf.omega1 * tau_indexed(shift_param(p, "b1", -1), m, n) *
                       tau_indexed(shift_param(pb, "b1", 1), pb.m + 1, pb.n - 1);
            Rat deng = pf.omega2 * tau_indexed(shift_param(p, "b2", -1), m, n) *
                       tau_indexed(shift_param(pb, "b2", 1), pb.m + 1, pb.n - 1);
            return lhs_g == detail::safe_div(numg, deng, "g-formula rhs");
        }
        case PainleveType::D5: {
            const Rat &a1 = p.a[0], &b1 = p.b[0], &c = p.c;
            Rat denf = q.pow(m) * (one - c) * (one - a1).pow(n + 1);
            if (denf.is_zero()) throw IndeterminateEvaluation("D5 f-formula prefactor");
            Rat pref = c * (one - b1 / a1) * (one - a1 * q.pow(m + n)) *
                       (one - a1 / q).pow(n) / denf;
            Rat rhs_f = pref * tau_indexed(shift_param(p, "a1", 1), m, n, 1) *
                        tau_indexed(shift_param(p, "a1", -1), m + 1, n - 1, 1);
            rhs_f = detail::safe_div(rhs_f,
                                     tau_indexed(p, m, n, 0) * tau_indexed(p, m + 1, n - 1, 2),
                                     "D5 f-formula");
            if (f / a1 - one != rhs_f) return false;
            Rat deng = q.pow(m) * (one - a1) * (one - b1).pow(n);
            if (deng.is_zero()) throw IndeterminateEvaluation("D5 g-formula prefactor");
            Rat pref2 = (one - a1 * q.pow(m + n)) * (one - b1 / q).pow(n) / deng;
            Rat rhs_g = pref2 * tau_indexed(shift_param(p, "a1", 1), m, n, 1) *
                        tau_indexed(p, m, n - 1, 1);
            rhs_g = detail::safe_div(rhs_g,
                                     tau_indexed(shift_param(p, "b1", -1), m, n, 1) *
                                         tau_indexed(shift_param(p, "a1b1", 1), m, n - 1, 1),
                                     "D5 g-formula");
            return g == rhs_g;
        }
        case PainleveType::A4: {
            const Rat &b1 = p.b[0], &c = p.c;
            Rat denf = (c - one) * q.pow(m);
            if (denf.is_zero()) throw IndeterminateEvaluation("A4 f-formula prefactor");
            Rat rhs_f = b1 * c / denf * tau_indexed(p, m, n, 1) *
                        tau_indexed(p, m + 1, n - 1, 1);
            rhs_f = detail::safe_div(rhs_f,
                                     tau_indexed(p, m, n, 0) * tau_indexed(p, m + 1, n - 1, 2),
                                     "A4 f-formula");
            if (f != rhs_f) return false;
            Rat deng = q.pow(m) * (one - b1).pow(n);
            if (deng.is_zero()) throw IndeterminateEvaluation("A4 g-formula prefactor");
            Rat rhs_g = (one - b1 / q).pow(n) / deng * tau_indexed(p, m, n, 1) *
                        tau_indexed(p, m, n - 1, 1);
            rhs_g = detail::safe_div(rhs_g,
                                     tau_indexed(shift_param(p, "b1", -1), m, n, 1) *
                                         tau_indexed(shift_param(p, "b1", 1), m, n - 1, 1),
                                     "A4 g-formula");
            return g == rhs_g;
        }
        case PainleveType::A2A1: {
            const Rat& d = p.d;
            Rat rhs_f = d / q.pow(m) * tau_indexed(p, m, n, 1) *
                        tau_indexed(p, m + 1, n - 1, 1);
            rhs_f = detail::safe_div(rhs_f,
                                     tau_indexed(p, m, n, 0) * tau_indexed(p, m + 1, n - 1, 2),
                                     "A2A1 f-formula");
            if (f != rhs_f) return false;
            Rat rhs_g = q.pow(-(m + n)) * tau_indexed(p, m, n, 1) *
                        tau_indexed(p, m, n - 1, 1);
            rhs_g = detail::safe_div(rhs_g,
                                     tau_indexed(p, m, n, 0) * tau_indexed(p, m, n - 1, 2),
                                     "A2A1 g-formula");
            return g == rhs_g;
        }
    }
    throw DomainError("check_solution: bad type");
}

} // namespace qpade
