#pragma once

#include <string>
#include <vector>

#include "qpade/errors.hpp"
#include "qpade/polynomial.hpp"
#include "qpade/qseries.hpp"
#include "qpade/rational.hpp"
#include "qpade/rational_function.hpp"

namespace qpade {

enum class PainleveType { E7, E6, D5, A4, A2A1 };

inline const char* to_string(PainleveType t) {
    switch (t) {
        case PainleveType::E7: return "e7";
        case PainleveType::E6: return "e6";
        case PainleveType::D5: return "d5";
        case PainleveType::A4: return "a4";
        case PainleveType::A2A1: return "a2a1";
    }
    return "?";
}

inline PainleveType type_from_string(const std::string& s) {
    if (s == "e7") return PainleveType::E7;
    if (s == "e6") return PainleveType::E6;
    if (s == "d5") return PainleveType::D5;
    if (s == "a4") return PainleveType::A4;
    if (s == "a2a1") return PainleveType::A2A1;
    throw DomainError("unknown type '" + s + "'");
}

inline size_t a_count(PainleveType t) {
    switch (t) {
        case PainleveType::E7: return 3;
        case PainleveType::E6: return 2;
        case PainleveType::D5: return 1;
        default: return 0;
    }
}

inline size_t b_count(PainleveType t) {
    switch (t) {
        case PainleveType::E7: return 3;
        case PainleveType::E6: return 2;
        case PainleveType::D5: return 1;
        case PainleveType::A4: return 1;
        case PainleveType::A2A1: return 0;
    }
    return 0;
}

inline bool has_c(PainleveType t) {
    return t == PainleveType::D5 || t == PainleveType::A4;
}

inline bool has_d(PainleveType t) { return t == PainleveType::A2A1; }

/// One interpolation-problem instance: type tag plus the concrete rational
/// parameters (q, a_i, b_i, c, d) and the degrees (m, n).
struct Params {
    PainleveType type = PainleveType::A2A1;
    Rat q;
    std::vector<Rat> a;
    std::vector<Rat> b;
    Rat c;
    Rat d;
    int m = 0;
    int n = 0;
};

inline bool operator==(const Params& a, const Params& b) {
    return a.type == b.type && a.q == b.q && a.a == b.a && a.b == b.b &&
           (!has_c(a.type) || a.c == b.c) && (!has_d(a.type) || a.d == b.d) && a.m == b.m &&
           a.n == b.n;
}

/// Genericity guards.  q must not be 0 or +-1 (so the nodes q^0..q^(m+n) are
/// pairwise distinct), no a_i may be a negative power q^(-s) with s <= m+n
/// (those poison the denominators of the interpolated sequence), all present
/// parameters must be nonzero, and the E7 parameter constraint
/// a1 a2 a3 q^m = b1 b2 b3 q^n must hold exactly.
inline void validate(const Params& p) {
    if (p.m < 0 || p.n < 0) throw DomainError("params: m, n must be >= 0");
    if (p.q.is_zero() || p.q == Rat(1) || p.q == Rat(-1))
        throw NonGenericParameters("params: q must not be 0, 1 or -1");
    if (p.a.size() != a_count(p.type) || p.b.size() != b_count(p.type))
        throw DomainError("params: wrong parameter count for type");
    for (const Rat& ai : p.a) {
        if (ai.is_zero()) throw NonGenericParameters("params: a parameter is zero");
        for (int s = 0; s <= p.m + p.n; ++s)
            if (ai == p.q.pow(-s))
                throw NonGenericParameters("params: a parameter equals q^(-s), s <= m+n");
    }
    for (const Rat& bi : p.b)
        if (bi.is_zero()) throw NonGenericParameters("params: b parameter is zero");
    if (has_c(p.type) && p.c.is_zero())
        throw NonGenericParameters("params: c is zero");
    if (has_d(p.type) && p.d.is_zero())
        throw NonGenericParameters("params: d is zero");
    if (p.type == PainleveType::E7) {
        Rat lhs = p.a[0] * p.a[1] * p.a[2] * p.q.pow(p.m);
        Rat rhs = p.b[0] * p.b[1] * p.b[2] * p.q.pow(p.n);
        if (lhs != rhs)
            throw ConstraintViolation("params: E7 requires a1 a2 a3 q^m = b1 b2 b3 q^n");
        // b3 = 1 collapses the K and H normalizations
        if (p.b[2] == Rat(1))
            throw NonGenericParameters("params: E7 requires b3 != 1");
    }
}

/// Grid values Y_s = Y(q^s) for s = 0..m+n; Y_0 = 1 for every type.
inline std::vector<Rat> y_sequence(const Params& p) {
    validate(p);
    const Rat& q = p.q;
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(p.m + p.n) + 1);
    for (int s = 0; s <= p.m + p.n; ++s) {
        Rat v(1);
        switch (p.type) {
            case PainleveType::E7:
            case PainleveType::E6:
                for (size_t i = 0; i < p.a.size(); ++i) {
                    Rat den = qpoch(p.a[i], q, s);
                    if (den.is_zero())
                        throw DivisionByZero("y_sequence: (a_i;q)_s vanished");
                    v *= qpoch(p.b[i], q, s) / den;
                }
                break;
            case PainleveType::D5: {
                Rat den = qpoch(p.a[0], q, s);
                if (den.is_zero()) throw DivisionByZero("y_sequence: (a_1;q)_s vanished");
                v = p.c.pow(s) * qpoch(p.b[0], q, s) / den;
                break;
            }
            case PainleveType::A4:
                v = p.c.pow(s) * qpoch(p.b[0], q, s);
                break;
            case PainleveType::A2A1:
                v = q.pow(static_cast<long>(s) * (s - 1) / 2) * p.d.pow(s);
                break;
        }
        out.push_back(v);
    }
    return out;
}

/// The ratios G(x) = Y(qx)/Y(x) and K(x) = T(Y)(x)/Y(x), as rational
/// functions and as the per-type numerator/denominator polynomials whose
/// scalar normalization the Casorati shapes are written in.  H is the common
/// multiple of the two denominators, again with its conventional scalar.
struct SystemData {
    RatFun G;
    RatFun K;
    Poly H;
    Poly G_num, G_den;
    Poly K_num, K_den;
};

inline SystemData system_data(const Params& p) {
    validate(p);
    const Rat one(1);
    auto lin = [](const Rat& c) { return Poly::linear(Rat(1), -c); }; // 1 - c*x
    SystemData sd;
    switch (p.type) {
        case PainleveType::E7: {
            const Rat &a1 = p.a[0], &a2 = p.a[1], &a3 = p.a[2];
            const Rat &b1 = p.b[0], &b2 = p.b[1], &b3 = p.b[2];
            sd.G_num = lin(b1) * lin(b2) * lin(b3);
            sd.G_den = lin(a1) * lin(a2) * lin(a3);
            sd.K_num = lin(b3) * ((one - a1) * (one - a3));
            sd.K_den = lin(a1) * lin(a3) * (one - b3);
            sd.H = lin(a1) * lin(a2) * lin(a3) * (one - b3);
            break;
        }
        case PainleveType::E6: {
            const Rat &a1 = p.a[0], &a2 = p.a[1];
            const Rat &b1 = p.b[0], &b2 = p.b[1];
            sd.G_num = lin(b1) * lin(b2);
            sd.G_den = lin(a1) * lin(a2);
            sd.K_num = Poly(one - a1);
            sd.K_den = lin(a1);
            sd.H = lin(a1) * lin(a2);
            break;
        }
        case PainleveType::D5: {
            const Rat &a1 = p.a[0], &b1 = p.b[0];
            sd.G_num = lin(b1) * p.c;
            sd.G_den = lin(a1);
            sd.K_num = Poly(one - a1);
            sd.K_den = lin(a1);
            sd.H = lin(a1);
            break;
        }
        case PainleveType::A4:
            sd.G_num = lin(p.b[0]) * p.c;
            sd.G_den = Poly(one);
            sd.K_num = Poly(one);
            sd.K_den = Poly(one);
            sd.H = Poly(one);
            break;
        case PainleveType::A2A1:
            sd.G_num = Poly::monomial(1, p.d);
            sd.G_den = Poly(one);
            sd.K_num = Poly(one);
            sd.K_den = Poly(one);
            sd.H = Poly(one);
            break;
    }
    sd.G = RatFun(sd.G_num, sd.G_den);
    sd.K = RatFun(sd.K_num, sd.K_den);
    return sd;
}

/// The time evolution: direction +1 shifts selected parameters up by q and
/// decrements m, direction -1 is its inverse.
inline Params apply_T(const Params& p, int direction) {
    if (direction != 1 && direction != -1)
        throw DomainError("apply_T: direction must be +1 or -1");
    Params r = p;
    Rat f = direction == 1 ? p.q : Rat(1) / p.q;
    switch (p.type) {
        case PainleveType::E7:
            r.a[0] *= f;
            r.a[2] *= f;
            r.b[2] *= f;
            break;
        case PainleveType::E6:
        case PainleveType::D5:
            r.a[0] *= f;
            break;
        default:
            break; // A4, A2A1: only m moves
    }
    r.m -= direction;
    if (r.m < 0) throw DomainError("apply_T: m would become negative");
    return r;
}

/// Multiplies the named parameter by q^k.  Composite names such as "a1b1"
/// shift each component.
inline Params shift_param(const Params& p, const std::string& name, int k) {
    Params r = p;
    Rat f = p.q.pow(k);
    size_t pos = 0;
    if (name.empty()) throw DomainError("shift_param: empty parameter name");
    while (pos < name.size()) {
        char kind = name[pos];
        if ((kind == 'a' || kind == 'b') && pos + 1 < name.size() && isdigit(name[pos + 1])) {
            size_t idx = static_cast<size_t>(name[pos + 1] - '1');
            auto& vec = kind == 'a' ? r.a : r.b;
            if (idx >= vec.size())
                throw DomainError("shift_param: no parameter '" + name.substr(pos, 2) +
                                  "' for this type");
            vec[idx] *= f;
            pos += 2;
        } else if (kind == 'c' && has_c(p.type)) {
            r.c *= f;
            pos += 1;
        } else if (kind == 'd' && has_d(p.type)) {
            r.d *= f;
            pos += 1;
        } else {
            throw DomainError("shift_param: unknown parameter name '" + name + "'");
        }
    }
    return r;
}

/// E7 pack with b3 chosen so the parameter constraint holds exactly.
inline Params e7_close_constraint(const Rat& q, const Rat& a1, const Rat& a2, const Rat& a3,
                                  const Rat& b1, const Rat& b2, int m, int n) {
    Rat b1b2 = b1 * b2;
    if (b1b2.is_zero()) throw DivisionByZero("e7_close_constraint: b1 b2 = 0");
    Params p;
    p.type = PainleveType::E7;
    p.q = q;
    p.a = {a1, a2, a3};
    p.b = {b1, b2, a1 * a2 * a3 * q.pow(m - n) / b1b2};
    p.m = m;
    p.n = n;
    return p;
}

} // namespace qpade
