#pragma once

#include <utility>
#include <vector>

#include "qpade/errors.hpp"
#include "qpade/matrix.hpp"
#include "qpade/params.hpp"
#include "qpade/polynomial.hpp"
#include "qpade/qseries.hpp"

namespace qpade {

/// Interpolating pair: P of degree m, Q of degree n monic, with
/// P(q^s) = Y_s Q(q^s) at all m+n+1 nodes.  gauge records the leading
/// coefficient the raw solution was divided by to make Q monic.
struct PadePair {
    Poly P;
    Poly Q;
    Rat gauge;
};

/// Solves the interpolation conditions as the homogeneous linear system in
/// the m+n+2 unknown coefficients.  Generic instances have a 1-dimensional
/// null space; anything else is rejected.
inline PadePair solve_linear_seq(const Rat& q, const std::vector<Rat>& Y, int m, int n) {
    if (m < 0 || n < 0) throw DomainError("solve_linear: m, n must be >= 0");
    size_t rows = static_cast<size_t>(m + n + 1);
    size_t cols = static_cast<size_t>(m + n + 2);
    if (Y.size() != rows) throw DomainError("solve_linear: wrong sequence length");

    Matrix<Rat> M(rows, cols);
    for (size_t s = 0; s < rows; ++s) {
        Rat xs = q.pow(static_cast<long>(s));
        Rat pw(1);
        for (int i = 0; i <= m; ++i) {
            M(s, static_cast<size_t>(i)) = pw;
            pw *= xs;
        }
        pw = Rat(1);
        for (int j = 0; j <= n; ++j) {
            M(s, static_cast<size_t>(m + 1 + j)) = -Y[s] * pw;
            pw *= xs;
        }
    }

    auto basis = nullspace(M);
    if (basis.size() != 1)
        throw NonGenericParameters("solve_linear: null space dimension is " +
                                   std::to_string(basis.size()) + ", expected 1");
    const auto& v = basis[0];
    Rat lead = v[static_cast<size_t>(m + 1 + n)];
    if (lead.is_zero())
        throw NonGenericParameters("solve_linear: leading Q coefficient vanishes");

    std::vector<Rat> pc(v.begin(), v.begin() + (m + 1));
    std::vector<Rat> qc(v.begin() + (m + 1), v.end());
    for (Rat& c : pc) c /= lead;
    for (Rat& c : qc) c /= lead;
    Poly P{std::vector<Rat>(pc)}, Q{std::vector<Rat>(qc)};
    if (P.degree() != m)
        throw NonGenericParameters("solve_linear: deg P < m");
    return PadePair{std::move(P), std::move(Q), lead};
}

inline PadePair solve_linear(const Params& p) {
    return solve_linear_seq(p.q, y_sequence(p), p.m, p.n);
}

/// The same pair from the determinant formulae: with
/// w_s = Y_s (q^(-(m+n));q)_s / (q;q)_s,
///   P_m(x) = F(x)/(q;q)_{m+n}^{n+1} * det[ sum_s w_s q^(s(i+j+1)) / (x-q^s) ]_{i,j=0..n}
///   Q_n(x) = 1/(q;q)_{m+n}^n       * det[ sum_s w_s q^(s(i+j+1)) (x-q^s) ]_{i,j=0..n-1}
/// Entries of the P determinant share the denominator F(x), so the
/// determinant is evaluated over polynomials and divided by F^n at the end.
inline PadePair solve_jacobi_seq(const Rat& q, const std::vector<Rat>& Y, int m, int n) {
    if (m < 0 || n < 0) throw DomainError("solve_jacobi: m, n must be >= 0");
    int N = m + n;
    if (Y.size() != static_cast<size_t>(N + 1))
        throw DomainError("solve_jacobi: wrong sequence length");

    std::vector<Rat> w(static_cast<size_t>(N) + 1);
    for (int s = 0; s <= N; ++s)
        w[s] = Y[s] * qpoch(q.pow(-N), q, s) / qpoch(q, q, s);
    Rat qqN = qpoch(q, q, N);

    Poly F = node_poly(q, N);
    // F_s = F/(x - q^s), one polynomial per node
    std::vector<Poly> Fs(static_cast<size_t>(N) + 1);
    for (int s = 0; s <= N; ++s)
        Fs[s] = divide_exact(F, Poly::linear(-q.pow(s), Rat(1)));

    Matrix<Poly> MP(static_cast<size_t>(n) + 1, static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            Poly e;
            for (int s = 0; s <= N; ++s)
                e += Fs[s] * (w[s] * q.pow(static_cast<long>(s) * (i + j + 1)));
            MP(i, j) = std::move(e);
        }
    Poly detP = det(MP);
    for (int i = 0; i < n; ++i) detP = divide_exact(detP, F);
    Poly Praw = detP / qqN.pow(n + 1);

    Poly Qraw(Rat(1));
    if (n > 0) {
        Matrix<Poly> MQ(static_cast<size_t>(n), static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Poly e;
                for (int s = 0; s <= N; ++s)
                    e += Poly::linear(-q.pow(s), Rat(1)) *
                         (w[s] * q.pow(static_cast<long>(s) * (i + j + 1)));
                MQ(i, j) = std::move(e);
            }
        Qraw = det(MQ) / qqN.pow(n);
    }

    if (Praw.is_zero() || Qraw.is_zero())
        throw NonGenericParameters("solve_jacobi: determinant formula gave the zero polynomial");
    Rat lead = Qraw[n];
    if (lead.is_zero() || Praw.degree() != m || Qraw.degree() != n)
        throw NonGenericParameters("solve_jacobi: degree loss in determinant formula");
    return PadePair{Praw / lead, Qraw / lead, lead};
}

inline PadePair solve_jacobi(const Params& p) {
    return solve_jacobi_seq(p.q, y_sequence(p), p.m, p.n);
}

/// Exact residual test: P(q^s) = Y_s Q(q^s) for s = 0..m+n.
inline bool residual_check(const Params& p, const PadePair& pair) {
    std::vector<Rat> Y = y_sequence(p);
    for (int s = 0; s <= p.m + p.n; ++s) {
        Rat xs = p.q.pow(s);
        if (pair.P.eval(xs) != Y[static_cast<size_t>(s)] * pair.Q.eval(xs)) return false;
    }
    return true;
}

} // namespace qpade
