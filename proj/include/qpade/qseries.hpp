#pragma once

#include <vector>

#include "qpade/errors.hpp"
#include "qpade/polynomial.hpp"
#include "qpade/rational.hpp"

namespace qpade {

/// (a;q)_s = prod_{k=0}^{s-1} (1 - a q^k)
inline Rat qpoch(const Rat& a, const Rat& q, int s) {
    if (s < 0) throw DomainError("qpoch: negative order");
    Rat r(1);
    Rat aq = a;
    for (int k = 0; k < s; ++k) {
        r *= Rat(1) - aq;
        aq *= q;
    }
    return r;
}

/// A terminating basic hypergeometric sum: one upper parameter equals
/// q^(-N), so terms beyond s = N vanish.  A literal 0 among the lower
/// parameters is legal and contributes Pochhammer 1.
struct QHyperSpec {
    std::vector<Rat> upper;
    std::vector<Rat> lower;
    Rat q;
    Rat z;
    int termination_order = 0;
};

inline QHyperSpec make_qhyper_spec(std::vector<Rat> upper, std::vector<Rat> lower,
                                   const Rat& q, const Rat& z, int N) {
    if (N < 0) throw DomainError("qhyper: negative termination order");
    Rat qmN = q.pow(-N);
    bool found = false;
    for (const Rat& a : upper)
        if (a == qmN) { found = true; break; }
    if (!found)
        throw DomainError("qhyper: no upper parameter equals q^(-N)");
    return QHyperSpec{std::move(upper), std::move(lower), q, z, N};
}

/// sum_{s=0}^{N} [prod (upper;q)_s / (prod (lower;q)_s (q;q)_s)]
///               * [(-1)^s q^(s(s-1)/2)]^(1+l-k) * z^s
inline Rat qhyper(const QHyperSpec& spec) {
    const Rat& q = spec.q;
    int N = spec.termination_order;
    int e = 1 + static_cast<int>(spec.lower.size()) - static_cast<int>(spec.upper.size());

    // incremental Pochhammer state: value and current (1 - a q^s) factor base
    std::vector<Rat> up_val(spec.upper.size(), Rat(1)), up_cur = spec.upper;
    std::vector<Rat> lo_val(spec.lower.size(), Rat(1)), lo_cur = spec.lower;
    Rat qq_val(1), qq_cur = q;
    Rat zpow(1);
    Rat sign_q(1); // [(-1)^s q^(s choose 2)]^e accumulated incrementally

    Rat total(0);
    for (int s = 0; s <= N; ++s) {
        Rat num = zpow * sign_q;
        for (const Rat& v : up_val) num *= v;
        Rat den = qq_val;
        for (const Rat& v : lo_val) den *= v;
        if (den.is_zero())
            throw DivisionByZero("qhyper: lower Pochhammer vanished before termination");
        total += num / den;
        if (s == N) break;
        for (size_t i = 0; i < up_val.size(); ++i) {
            up_val[i] *= Rat(1) - up_cur[i];
            up_cur[i] *= q;
        }
        for (size_t i = 0; i < lo_val.size(); ++i) {
            lo_val[i] *= Rat(1) - lo_cur[i];
            lo_cur[i] *= q;
        }
        qq_val *= Rat(1) - qq_cur;
        qq_cur *= q;
        zpow *= spec.z;
        if (e != 0) {
            // multiply by ratio of consecutive factors: (-1) q^s, applied e times
            Rat step = (-q.pow(s)).pow(e);
            sign_q *= step;
        }
    }
    return total;
}

/// N(x) = prod_{i=0}^{m+n-1} (1 - x/q^i); vanishes at the first m+n nodes.
inline Poly grid_vanishing_poly(const Rat& q, int m, int n) {
    int mn = m + n;
    if (mn < 0) throw DomainError("grid_vanishing_poly: m+n < 0");
    Poly r(Rat(1));
    for (int i = 0; i < mn; ++i)
        r *= Poly::linear(Rat(1), -q.pow(-i));
    return r;
}

/// F(x) = prod_{i=0}^{N} (x - q^i), the monic node polynomial.
inline Poly node_poly(const Rat& q, int N) {
    Poly r(Rat(1));
    for (int i = 0; i <= N; ++i)
        r *= Poly::linear(-q.pow(i), Rat(1));
    return r;
}

/// F'(q^s) in closed form: (q;q)_s (q;q)_{m+n} / (q^s (q^(-(m+n));q)_s).
/// Equals the direct product prod_{j != s} (q^s - q^j).
inline Rat fprime_at_node(const Rat& q, int m, int n, int s) {
    int N = m + n;
    if (s < 0 || s > N) throw DomainError("fprime_at_node: node index out of range");
    return qpoch(q, q, s) * qpoch(q, q, N) / (q.pow(s) * qpoch(q.pow(-N), q, s));
}

} // namespace qpade
