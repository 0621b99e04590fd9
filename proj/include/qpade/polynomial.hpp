#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qpade/errors.hpp"
#include "qpade/rational.hpp"

namespace qpade {

/// Dense univariate polynomial over Rat, coefficients lowest degree first.
/// The zero polynomial is the empty coefficient list; otherwise the leading
/// coefficient is nonzero.
class Poly {
  public:
    Poly() = default;
    Poly(const Rat& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    Poly(int c) : Poly(Rat(c)) {}
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(int deg, const Rat& c = Rat(1)) {
        if (c.is_zero()) return Poly();
        std::vector<Rat> v(static_cast<size_t>(deg) + 1, Rat(0));
        v.back() = c;
        return Poly(std::move(v));
    }
    /// c0 + c1*x
    static Poly linear(const Rat& c0, const Rat& c1) { return Poly{c0, c1}; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    /// Coefficient of x^i (zero beyond the stored range).
    const Rat& operator[](int i) const {
        static const Rat zero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(i)];
    }
    const Rat& leading() const {
        if (c_.empty()) throw DomainError("Poly: leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x0) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<Rat> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Rat& s) {
        if (s.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
        return Poly(std::move(r));
    }
    friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }
    friend Poly operator/(const Poly& a, const Rat& s) {
        if (s.is_zero()) throw DivisionByZero("Poly: division by zero scalar");
        std::vector<Rat> r(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] / s;
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
    Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
    Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Quotient and remainder with deg r < deg d.
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& d) {
        if (d.is_zero()) throw DivisionByZero("Poly: division by zero polynomial");
        Poly r = a;
        int dd = d.degree();
        const Rat& lead = d.leading();
        std::vector<Rat> q;
        if (r.degree() >= dd) q.assign(static_cast<size_t>(r.degree() - dd) + 1, Rat(0));
        while (!r.is_zero() && r.degree() >= dd) {
            int k = r.degree() - dd;
            Rat f = r.leading() / lead;
            q[static_cast<size_t>(k)] = f;
            r -= Poly::monomial(k, f) * d;
        }
        return {Poly(std::move(q)), r};
    }

    /// Exact quotient; the remainder must vanish.
    friend Poly divide_exact(const Poly& a, const Poly& d) {
        auto [q, r] = divrem(a, d);
        if (!r.is_zero()) throw DomainError("Poly: division is not exact");
        return q;
    }
    /// Division is exact division; use divrem when a remainder is expected.
    friend Poly operator/(const Poly& a, const Poly& d) { return divide_exact(a, d); }

    /// p(s*x)
    Poly scale_arg(const Rat& s) const {
        std::vector<Rat> r(c_.size());
        Rat p(1);
        for (size_t i = 0; i < c_.size(); ++i) {
            r[i] = c_[i] * p;
            p *= s;
        }
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) throw DomainError("Poly: cannot normalize zero polynomial");
        return *this / leading();
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const Rat& c = (*this)[i];
            if (c.is_zero()) continue;
            if (!s.empty()) s += c.sign() < 0 ? " - " : " + ";
            else if (c.sign() < 0) s += "-";
            Rat a = abs(c);
            if (i == 0 || !a.is_one()) s += a.to_string();
            if (i > 0) {
                if (!a.is_one()) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        return os << p.to_string();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(const Poly& a, const Poly& b) {
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = divrem(u, v).second;
        u = std::move(v);
        // keep remainders monic to bound coefficient growth
        v = r.is_zero() ? Poly() : r.monic();
    }
    return u.is_zero() ? u : u.monic();
}

} // namespace qpade
