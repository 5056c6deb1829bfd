#include "quasiq/rational.hpp"

#include "quasiq/error.hpp"

namespace quasiq {

Rational::Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw error("zero denominator in rational");
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
    if (v_.get_den() == 0) throw error("zero denominator in rational");
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpq_class(mpz_class(s)));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw error("zero denominator in rational literal '" + s + "'");
        return Rational(mpq_class(num, den));
    } catch (const std::invalid_argument&) {
        throw error("cannot parse rational literal '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw error("zero divisor in field operation");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace quasiq
