#include "quasiq/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

#include "quasiq/error.hpp"

namespace quasiq {
namespace {

// Dense univariate polynomials over Q, coefficient of x^i at index i.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Remainder of a modulo the monic polynomial m.
Poly rem(Poly a, const Poly& m) {
    trim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        Rational lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (!lead.is_zero()) {
            for (size_t j = 0; j < dm; ++j) a[shift + j] -= lead * m[j];
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

// Exact quotient a / b for polynomials with zero remainder.
Poly exact_div(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    if (a.empty()) return q;
    if (a.size() < b.size()) throw internal_error("inexact polynomial division");
    q.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational lead = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = lead;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= lead * b[j];
        trim(a);
        if (a.empty()) break;
    }
    if (!a.empty()) throw internal_error("inexact polynomial division");
    return q;
}

std::vector<long> divisors_of(long n) {
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::mutex cache_mutex;

// N-th cyclotomic polynomial, computed by dividing x^N - 1 by all
// lower-order cyclotomic polynomials of divisor orders.
const Poly& cyclotomic_poly(long n) {
    static std::map<long, Poly> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<const Poly&(long)> get = [&](long m) -> const Poly& {
        auto jt = cache.find(m);
        if (jt != cache.end()) return jt->second;
        Poly xm1(m + 1, Rational(0));
        xm1[0] = Rational(-1);
        xm1[m] = Rational(1);
        Poly q = xm1;
        for (long d : divisors_of(m)) {
            if (d == m) continue;
            q = exact_div(q, get(d));
        }
        return cache.emplace(m, std::move(q)).first->second;
    };
    return get(n);
}

// Columns of the embedding Q(zeta_M) -> Q(zeta_N) (M | N) in the canonical
// power bases: column j is x^{(N/M) j} reduced mod the N-th cyclotomic
// polynomial.
const std::vector<Poly>& lift_columns(long m, long n) {
    static std::map<std::pair<long, long>, std::vector<Poly>> cache;
    const Poly& phi_n = cyclotomic_poly(n);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(m, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    long phim = Cyclotomic::euler_phi(m);
    long step = n / m;
    std::vector<Poly> cols;
    cols.reserve(phim);
    for (long j = 0; j < phim; ++j) {
        Poly xj(step * j + 1, Rational(0));
        xj[step * j] = Rational(1);
        cols.push_back(rem(std::move(xj), phi_n));
    }
    return cache.emplace(key, std::move(cols)).first->second;
}

// Solve the column system sum_j y_j col_j = target over Q by Gaussian
// elimination; returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_columns(const std::vector<Poly>& cols, size_t rows,
                                                   const std::vector<Rational>& target) {
    size_t ncols = cols.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(ncols + 1, Rational(0)));
    for (size_t j = 0; j < ncols; ++j)
        for (size_t i = 0; i < cols[j].size(); ++i) a[i][j] = cols[j][i];
    for (size_t i = 0; i < rows && i < target.size(); ++i) a[i][ncols] = target[i];

    std::vector<long> pivot_col(rows, -1);
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Rational inv_piv = Rational(1) / a[r][c];
        for (size_t j = c; j <= ncols; ++j) a[r][j] *= inv_piv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (size_t j = c; j <= ncols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col[r] = static_cast<long>(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!a[i][ncols].is_zero()) return std::nullopt;
    std::vector<Rational> y(ncols, Rational(0));
    for (size_t i = 0; i < r; ++i) y[pivot_col[i]] = a[i][ncols];
    return y;
}

}  // namespace

long Cyclotomic::euler_phi(long n) {
    long result = n;
    for (long p : prime_divisors(n)) result = result / p * (p - 1);
    return result;
}

Cyclotomic Cyclotomic::from_poly(long order, std::vector<Rational> poly) {
    Poly r = rem(std::move(poly), cyclotomic_poly(order));
    r.resize(euler_phi(order), Rational(0));
    Cyclotomic out(order, std::move(r));
    out.canonicalize();
    return out;
}

void Cyclotomic::canonicalize() {
    for (;;) {
        if (order_ == 1) return;
        bool all_const = true;
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) { all_const = false; break; }
        if (all_const) {
            c_.resize(1);
            order_ = 1;
            return;
        }
        bool reduced = false;
        for (long p : prime_divisors(order_)) {
            long m = order_ / p;
            auto y = solve_columns(lift_columns(m, order_), c_.size(), c_);
            if (y) {
                order_ = m;
                c_ = std::move(*y);
                c_.resize(euler_phi(m), Rational(0));
                reduced = true;
                break;
            }
        }
        if (!reduced) return;
    }
}

std::vector<Rational> Cyclotomic::lifted_poly(long target_order) const {
    if (target_order == order_) {
        Poly p = c_;
        trim(p);
        return p;
    }
    if (target_order % order_ != 0) throw internal_error("lift requires divisible orders");
    const auto& cols = lift_columns(order_, target_order);
    Poly out;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        const Poly& col = cols[j];
        if (out.size() < col.size()) out.resize(col.size(), Rational(0));
        for (size_t i = 0; i < col.size(); ++i) out[i] += c_[j] * col[i];
    }
    trim(out);
    return out;
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
    if (n < 1) throw error("root of unity order must be positive");
    long kk = ((k % n) + n) % n;
    long g = std::gcd(n, kk == 0 ? n : kk);
    long n2 = (kk == 0) ? 1 : n / g;
    long k2 = (kk == 0) ? 0 : (kk / g) % n2;
    if (n2 == 1) return Cyclotomic(1);
    Poly xk(k2 + 1, Rational(0));
    xk[k2] = Rational(1);
    return from_poly(n2, std::move(xk));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

const Rational& Cyclotomic::rational_value() const {
    if (!is_rational()) throw error("value is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    long n = std::lcm(order_, o.order_);
    Poly a = lifted_poly(n), b = o.lifted_poly(n);
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    *this = from_poly(n, std::move(a));
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    *this += -o;
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    // Scaling by a rational preserves the minimal order, so skip the
    // reduction machinery in that common case.
    if (o.is_rational()) {
        if (o.c_[0].is_zero()) {
            *this = Cyclotomic();
            return *this;
        }
        for (auto& x : c_) x *= o.c_[0];
        return *this;
    }
    if (is_rational()) {
        Rational r = c_[0];
        *this = o;
        return *this *= Cyclotomic(r);
    }
    long n = std::lcm(order_, o.order_);
    Poly a = lifted_poly(n), b = o.lifted_poly(n);
    *this = from_poly(n, mul(a, b));
    return *this;
}

Cyclotomic Cyclotomic::inv() const {
    if (is_zero()) throw error("zero divisor in field operation");
    if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
    // Extended Euclid against the cyclotomic polynomial: find u with
    // u * this == gcd == nonzero constant.
    Poly r0 = cyclotomic_poly(order_);
    Poly r1 = c_;
    trim(r1);
    Poly t0{}, t1{Rational(1)};
    while (!r1.empty() && r1.size() > 1) {
        // r0 = q*r1 + r2
        Poly r2 = r0;
        Poly q(r2.size() >= r1.size() ? r2.size() - r1.size() + 1 : 1, Rational(0));
        while (r2.size() >= r1.size() && !r2.empty()) {
            Rational lead = r2.back() / r1.back();
            size_t shift = r2.size() - r1.size();
            q[shift] = lead;
            for (size_t j = 0; j < r1.size(); ++j) r2[shift + j] -= lead * r1[j];
            trim(r2);
        }
        Poly t2 = t0;
        Poly qt1 = mul(q, t1);
        if (t2.size() < qt1.size()) t2.resize(qt1.size(), Rational(0));
        for (size_t i = 0; i < qt1.size(); ++i) t2[i] -= qt1[i];
        trim(t2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r1.empty()) throw internal_error("cyclotomic inverse hit zero gcd chain");
    // r1 is a nonzero constant; u = t1 / r1.
    Rational c = Rational(1) / r1[0];
    for (auto& x : t1) x *= c;
    return from_poly(order_, std::move(t1));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
    *this *= o.inv();
    return *this;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Cyclotomic acc(1);
    Cyclotomic base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

std::optional<std::pair<long, long>> Cyclotomic::as_root_of_unity() const {
    if (is_zero()) return std::nullopt;
    // Roots of unity in Q(zeta_N) form mu_N for even N and mu_2N for odd N.
    long bound = (order_ % 2 == 0) ? order_ : 2 * order_;
    long ord = 0;
    for (long d : divisors_of(bound)) {
        if (pow(d).is_one()) { ord = d; break; }
    }
    if (ord == 0) return std::nullopt;
    Cyclotomic z = root_of_unity(ord, 1);
    Cyclotomic acc(1);
    for (long k = 0; k < ord; ++k) {
        if (acc == *this) return std::make_pair(ord, k);
        acc *= z;
    }
    return std::nullopt;
}

namespace {

std::string term_str(const Rational& coef, const std::string& sym, bool first) {
    std::string mag;
    Rational a = coef.sign() < 0 ? -coef : coef;
    if (sym.empty()) {
        mag = a.str();
    } else if (a == Rational(1)) {
        mag = sym;
    } else {
        mag = a.str() + "*" + sym;
    }
    if (first) return (coef.sign() < 0 ? "-" : "") + mag;
    return (coef.sign() < 0 ? "-" : "+") + mag;
}

}  // namespace

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    if (is_rational()) return c_[0].str();
    std::string out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        std::string sym;
        if (k > 0) {
            if (order_ == 4) {
                sym = "i";
            } else {
                sym = "z" + std::to_string(order_);
                if (k > 1) sym += "^" + std::to_string(k);
            }
        }
        out += term_str(c_[k], sym, first);
        first = false;
    }
    return out;
}

Cyclotomic Cyclotomic::parse(const std::string& s) {
    if (s == "i") return root_of_unity(4, 1);
    if (s == "-i") return -root_of_unity(4, 1);
    if (!s.empty() && (s[0] == 'z' || (s[0] == '-' && s.size() > 1 && s[1] == 'z'))) {
        bool neg = s[0] == '-';
        std::string body = neg ? s.substr(1) : s;
        auto caret = body.find('^');
        try {
            long n = std::stol(body.substr(1, caret == std::string::npos ? std::string::npos
                                                                         : caret - 1));
            long k = caret == std::string::npos ? 1 : std::stol(body.substr(caret + 1));
            Cyclotomic z = root_of_unity(n, k);
            return neg ? -z : z;
        } catch (const std::exception&) {
            throw error("cannot parse scalar literal '" + s + "'");
        }
    }
    return Cyclotomic(Rational::parse(s));
}

}  // namespace quasiq
