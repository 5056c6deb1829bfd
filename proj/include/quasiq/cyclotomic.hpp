#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasiq/rational.hpp"

namespace quasiq {

// Exact element of a cyclotomic field Q(zeta_N), the coefficient domain for
// every scalar in the library. A value is stored as a polynomial in zeta_N
// of degree < phi(N) (reduced modulo the N-th cyclotomic polynomial) at the
// smallest admissible order N, so equality is plain structural comparison
// and no floating point appears anywhere.
class Cyclotomic {
  public:
    Cyclotomic() : order_(1), c_{Rational(0)} {}
    Cyclotomic(long n) : order_(1), c_{Rational(n)} {}  // NOLINT: implicit
    Cyclotomic(const Rational& r) : order_(1), c_{r} {}  // NOLINT: implicit

    // zeta_N^k, reduced to canonical form. Requires N >= 1.
    static Cyclotomic root_of_unity(long n, long k);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const { return order_ == 1 && c_[0] == Rational(1); }
    bool is_rational() const { return order_ == 1; }
    const Rational& rational_value() const;  // requires is_rational()

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    Cyclotomic inv() const;
    Cyclotomic pow(long e) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    // Lexicographic order on (order, coeffs); used for deterministic sorting only.
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

    // The minimal (N, k) with *this == zeta_N^k, or nullopt when the value
    // is not a root of unity.
    std::optional<std::pair<long, long>> as_root_of_unity() const;

    // Shorthand where one exists ("1", "-1", "i", "-i", "p/q"), otherwise a
    // polynomial rendering ("1+i", "2-3*i", "z8^3", "1/2*z12-z12^5").
    std::string str() const;
    // Accepts the shorthands above plus rational literals and "zN^k".
    static Cyclotomic parse(const std::string& s);

    // Euler phi; exposed because file formats carry phi(N) coefficients.
    static long euler_phi(long n);

  private:
    long order_;
    std::vector<Rational> c_;  // size euler_phi(order_)

    Cyclotomic(long order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {}
    static Cyclotomic from_poly(long order, std::vector<Rational> poly);
    void canonicalize();
    std::vector<Rational> lifted_poly(long target_order) const;
};

inline Cyclotomic inv(const Cyclotomic& a) { return a.inv(); }
inline Cyclotomic pow(const Cyclotomic& a, long e) { return a.pow(e); }

}  // namespace quasiq
