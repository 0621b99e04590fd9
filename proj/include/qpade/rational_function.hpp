#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "qpade/errors.hpp"
#include "qpade/polynomial.hpp"

namespace qpade {

/// Rational function over Rat in normal form: gcd(num, den) = 1 and den
/// monic.  The normal form is unique, so equality is plain member equality.
class RatFun {
  public:
    RatFun() : num_(), den_(Rat(1)) {}
    RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFun(int c) : num_(Rat(c)), den_(Rat(1)) {}
    RatFun(const Poly& p) : num_(p), den_(Rat(1)) {}
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("RatFun: zero denominator");
        normalize();
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    /// The numerator when den = 1; throws otherwise.
    const Poly& as_poly() const {
        if (!is_poly()) throw DomainError("RatFun: not a polynomial");
        return num_;
    }

    Rat eval(const Rat& x0) const {
        Rat d = den_.eval(x0);
        if (d.is_zero()) throw DivisionByZero("RatFun: pole at evaluation point");
        return num_.eval(x0) / d;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw DivisionByZero("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& b) { *this = *this + b; return *this; }
    RatFun& operator-=(const RatFun& b) { *this = *this - b; return *this; }
    RatFun& operator*=(const RatFun& b) { *this = *this * b; return *this; }
    RatFun& operator/=(const RatFun& b) { *this = *this / b; return *this; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    /// f(s*x)
    RatFun scale_arg(const Rat& s) const {
        return RatFun(num_.scale_arg(s), den_.scale_arg(s));
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_poly()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFun& f) {
        return os << f.to_string();
    }

  private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
        Rat lead = den_.leading();
        if (!lead.is_one()) {
            num_ = num_ / lead;
            den_ = den_ / lead;
        }
    }

    Poly num_;
    Poly den_;
};

} // namespace qpade
