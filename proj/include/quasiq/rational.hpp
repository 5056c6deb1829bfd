#pragma once

#include <gmpxx.h>

#include <string>

namespace quasiq {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin wrapper over GMP's mpq_class that canonicalizes on
// every construction path.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
    Rational(long n, long d);
    explicit Rational(const mpq_class& q);

    static Rational parse(const std::string& s);  // "p", "p/q", optional sign

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    std::string str() const;  // "p" or "p/q"

  private:
    mpq_class v_;
};

}  // namespace quasiq
