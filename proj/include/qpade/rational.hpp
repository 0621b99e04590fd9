#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "qpade/errors.hpp"

namespace qpade {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.  Thin wrapper over GMP's mpq_class that canonicalizes on
/// every construction path (mpq_class itself does not canonicalize
/// two-argument constructions).
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(long long n) : v_(static_cast<long>(n)) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw DivisionByZero("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw DivisionByZero("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) {
        v_.canonicalize();
    }

    /// Parses "num" or "num/den" with optional sign.
    static Rat from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw DomainError("Rat: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw DivisionByZero("Rat: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rat(q);
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw DivisionByZero("Rat: division by zero");
        return Rat(mpq_class(a.v_ / b.v_));
    }
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
    Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
    Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }
    Rat& operator/=(const Rat& b) {
        if (b.is_zero()) throw DivisionByZero("Rat: division by zero");
        v_ /= b.v_;
        return *this;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    /// a^e for any integer e; negative e inverts (throws on zero base).
    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        bool inv = e < 0;
        if (inv && is_zero()) throw DivisionByZero("Rat: 0 to a negative power");
        unsigned long ue = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), ue);
        mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), ue);
        r.canonicalize();
        if (inv) r = 1 / r;
        return Rat(r);
    }

    std::string to_string() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.v_.get_str();
    }

  private:
    mpq_class v_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

} // namespace qpade
