#include "quasiq/cohomology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

#include "quasiq/error.hpp"

namespace quasiq {

int Cochain2::pos(int elt) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), elt);
    if (it == elements.end() || *it != elt)
        throw error("element '" + group.name(elt) + "' is outside the cochain domain");
    return static_cast<int>(it - elements.begin());
}

const Cyclotomic& Cochain2::at(int e, int f) const {
    return values[static_cast<size_t>(pos(e)) * size() + pos(f)];
}

Cochain2 make_cochain2(FiniteGroup group, std::vector<int> elements,
                       std::vector<Cyclotomic> values) {
    Cochain2 c{std::move(group), std::move(elements), std::move(values)};
    if (!std::is_sorted(c.elements.begin(), c.elements.end()))
        throw error("cochain domain must be sorted");
    if (c.values.size() != static_cast<size_t>(c.size()) * c.size())
        throw error("cochain value table has wrong size");
    bool has_identity = std::binary_search(c.elements.begin(), c.elements.end(),
                                           c.group.identity);
    if (!has_identity) throw error("cochain domain must contain the identity");
    for (const auto& v : c.values)
        if (v.is_zero()) throw error("cochain values must be nonzero");
    for (int e : c.elements) {
        if (!c.at(e, c.group.identity).is_one() || !c.at(c.group.identity, e).is_one())
            throw error("cochain is not normalized at '" + c.group.name(e) + "'");
    }
    return c;
}

Cochain2 trivial_cochain2(const FiniteGroup& group, std::vector<int> elements) {
    size_t s = elements.size();
    return make_cochain2(group, std::move(elements),
                         std::vector<Cyclotomic>(s * s, Cyclotomic(1)));
}

Cochain2 trivial_gauge(const FiniteGroup& group) {
    std::vector<int> all(group.order());
    std::iota(all.begin(), all.end(), 0);
    return trivial_cochain2(group, std::move(all));
}

Cochain2 cochain2_product(const Cochain2& a, const Cochain2& b) {
    if (a.elements != b.elements) throw error("cochain product domain mismatch");
    std::vector<Cyclotomic> vals(a.values.size());
    for (size_t i = 0; i < vals.size(); ++i) vals[i] = a.values[i] * b.values[i];
    return make_cochain2(a.group, a.elements, std::move(vals));
}

Cochain2 cochain2_inverse(const Cochain2& a) {
    std::vector<Cyclotomic> vals(a.values.size());
    for (size_t i = 0; i < vals.size(); ++i) vals[i] = a.values[i].inv();
    return make_cochain2(a.group, a.elements, std::move(vals));
}

Cochain3 make_cochain3(FiniteGroup group, std::vector<Cyclotomic> values) {
    Cochain3 c{std::move(group), std::move(values)};
    const int n = c.group.order();
    if (c.values.size() != static_cast<size_t>(n) * n * n)
        throw error("3-cochain value table has wrong size");
    for (const auto& v : c.values)
        if (v.is_zero()) throw error("3-cochain values must be nonzero");
    const int id = c.group.identity;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!c.at(id, a, b).is_one() || !c.at(a, id, b).is_one() || !c.at(a, b, id).is_one())
                throw error("3-cochain is not normalized at ('" + c.group.name(a) + "','" +
                            c.group.name(b) + "')");
        }
    return c;
}

Cochain3 trivial_cochain3(const FiniteGroup& group) {
    const size_t n = group.order();
    return Cochain3{group, std::vector<Cyclotomic>(n * n * n, Cyclotomic(1))};
}

void validate_3cocycle(const Cochain3& phi) {
    const FiniteGroup& g = phi.group;
    const int n = g.order();
    for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f)
            for (int x = 0; x < n; ++x)
                for (int h = 0; h < n; ++h) {
                    Cyclotomic lhs = phi.at(e, f, x) * phi.at(e, g.mul(f, x), h) *
                                     phi.at(f, x, h);
                    Cyclotomic rhs = phi.at(g.mul(e, f), x, h) * phi.at(e, f, g.mul(x, h));
                    if (lhs != rhs)
                        throw error("3-cocycle identity fails at ('" + g.name(e) + "','" +
                                    g.name(f) + "','" + g.name(x) + "','" + g.name(h) + "')");
                }
}

Cochain3 cyclic_cocycle(int n, long q) {
    FiniteGroup g = cyclic_group(n);
    Cochain3 phi = trivial_cochain3(g);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                phi.at(a, b, c) = Cyclotomic::root_of_unity(n, q * a * ((b + c) / n));
    return phi;
}

Cochain3 twist_3cocycle(const Cochain3& phi, const Cochain2& gauge) {
    if (!gauge.on_full_group() || !(gauge.group == phi.group))
        throw error("gauge transformation must live on the same full group");
    const FiniteGroup& g = phi.group;
    const int n = g.order();
    Cochain3 out = phi;
    for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f)
            for (int x = 0; x < n; ++x) {
                out.at(e, f, x) = gauge.at(e, f) * gauge.at(g.mul(e, f), x) /
                                  (gauge.at(e, g.mul(f, x)) * gauge.at(f, x)) * phi.at(e, f, x);
            }
    return out;
}

Cochain3 coboundary_of(const Cochain2& gauge) {
    return twist_3cocycle(trivial_cochain3(gauge.group), gauge);
}

namespace {

// Integer elimination state for the coboundary solver. Works on the
// exponent lattice: unknowns are exponents of the free gauge values, the
// right-hand side carries exponents of phi relative to zeta_N.
struct ExponentSystem {
    std::vector<std::vector<mpz_class>> a;  // rows x cols
    std::vector<mpz_class> b;               // rows
    std::vector<std::vector<mpz_class>> v;  // cols x cols, records column ops

    size_t rows() const { return a.size(); }
    size_t cols() const { return v.size(); }

    void swap_rows(size_t i, size_t j) {
        std::swap(a[i], a[j]);
        std::swap(b[i], b[j]);
    }
    void add_row(size_t dst, size_t src, const mpz_class& f) {  // row_dst -= f*row_src
        for (size_t j = 0; j < a[dst].size(); ++j) a[dst][j] -= f * a[src][j];
        b[dst] -= f * b[src];
    }
    void swap_cols(size_t i, size_t j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : v) std::swap(row[i], row[j]);
    }
    void add_col(size_t dst, size_t src, const mpz_class& f) {  // col_dst -= f*col_src
        for (auto& row : a) row[dst] -= f * row[src];
        for (auto& row : v) row[dst] -= f * row[src];
    }

    // Diagonalize in place; returns the number of nonzero diagonal entries.
    size_t diagonalize() {
        size_t t = 0;
        while (t < rows() && t < cols()) {
            size_t pi = rows(), pj = cols();
            for (size_t i = t; i < rows() && pi == rows(); ++i)
                for (size_t j = t; j < cols(); ++j)
                    if (a[i][j] != 0) { pi = i; pj = j; break; }
            if (pi == rows()) break;
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);
            for (;;) {
                bool clean = true;
                for (size_t i = t + 1; i < rows(); ++i) {
                    while (a[i][t] != 0) {
                        mpz_class q = a[i][t] / a[t][t];
                        add_row(i, t, q);
                        if (a[i][t] != 0) { swap_rows(i, t); clean = false; }
                    }
                }
                for (size_t j = t + 1; j < cols(); ++j) {
                    while (a[t][j] != 0) {
                        mpz_class q = a[t][j] / a[t][t];
                        add_col(j, t, q);
                        if (a[t][j] != 0) { swap_cols(j, t); clean = false; }
                    }
                }
                bool col_clear = true, row_clear = true;
                for (size_t i = t + 1; i < rows(); ++i)
                    if (a[i][t] != 0) col_clear = false;
                for (size_t j = t + 1; j < cols(); ++j)
                    if (a[t][j] != 0) row_clear = false;
                if (clean && col_clear && row_clear) break;
            }
            ++t;
        }
        return t;
    }
};

}  // namespace

std::optional<Cochain2> solve_coboundary(const Cochain3& phi) {
    const FiniteGroup& g = phi.group;
    const int n = g.order();
    const int id = g.identity;

    // Exponent encoding requires torsion values.
    long n0 = 1;
    for (const auto& val : phi.values) {
        auto ru = val.as_root_of_unity();
        if (!ru) throw error("coboundary solver requires torsion coefficients");
        n0 = std::lcm(n0, ru->first);
    }

    std::vector<int> nonid;
    for (int x = 0; x < n; ++x)
        if (x != id) nonid.push_back(x);
    const int m = static_cast<int>(nonid.size());
    auto unknown = [&](int a, int b) -> int {
        int ia = static_cast<int>(std::lower_bound(nonid.begin(), nonid.end(), a) - nonid.begin());
        int ib = static_cast<int>(std::lower_bound(nonid.begin(), nonid.end(), b) - nonid.begin());
        return ia * m + ib;
    };

    ExponentSystem sys;
    size_t ncols = static_cast<size_t>(m) * m;
    sys.v.assign(ncols, std::vector<mpz_class>(ncols, 0));
    for (size_t i = 0; i < ncols; ++i) sys.v[i][i] = 1;
    for (int e : nonid)
        for (int f : nonid)
            for (int x : nonid) {
                std::vector<mpz_class> row(ncols, 0);
                row[unknown(e, f)] += 1;
                int ef = g.mul(e, f), fx = g.mul(f, x);
                if (ef != id) row[unknown(ef, x)] += 1;
                if (fx != id) row[unknown(e, fx)] -= 1;
                row[unknown(f, x)] -= 1;
                auto ru = phi.at(e, f, x).as_root_of_unity();
                sys.a.push_back(std::move(row));
                sys.b.emplace_back(ru->second * (n0 / ru->first));
            }

    size_t r = sys.diagonalize();
    for (size_t i = r; i < sys.rows(); ++i)
        if (sys.b[i] % n0 != 0) return std::nullopt;  // inconsistent: not a coboundary

    // gamma_i = b_i / (d_i * n0) mod 1, free coordinates zero; alpha = V gamma.
    std::vector<Rational> gamma(ncols, Rational(0));
    for (size_t i = 0; i < r; ++i) {
        mpq_class q(sys.b[i], sys.a[i][i] * n0);
        q.canonicalize();
        gamma[i] = Rational(q);
    }
    std::vector<Cyclotomic> values(static_cast<size_t>(n) * n, Cyclotomic(1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == id || b == id) continue;
            Rational alpha(0);
            size_t u = static_cast<size_t>(unknown(a, b));
            for (size_t j = 0; j < ncols; ++j) {
                if (sys.v[u][j] == 0 || gamma[j].is_zero()) continue;
                alpha += Rational(mpq_class(sys.v[u][j])) * gamma[j];
            }
            // Reduce the exponent mod 1 and realize it as a root of unity.
            mpz_class num = alpha.num(), den = alpha.den();
            mpz_class red = num % den;
            if (red < 0) red += den;
            if (!den.fits_slong_p() || !red.fits_slong_p())
                throw internal_error("coboundary exponent overflow");
            values[static_cast<size_t>(a) * n + b] =
                Cyclotomic::root_of_unity(den.get_si(), red.get_si());
        }
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    Cochain2 gauge = make_cochain2(g, std::move(all), std::move(values));
    if (!(coboundary_of(gauge) == phi))
        throw internal_error("coboundary solver produced a non-witness");
    return gauge;
}

Cyclotomic phi_tilde(const Cochain3& phi, int e, int f, int g) {
    const FiniteGroup& gr = phi.group;
    int ef = gr.mul(e, f), fg = gr.mul(f, g);
    int fi = gr.inv(f), ei = gr.inv(e);
    Cyclotomic num = phi.at(e, f, g) * phi.at(ef, fi, ei) * phi.at(e, fg, fi);
    Cyclotomic den = phi.at(gr.mul(e, fg), fi, ei) * phi.at(e, f, fi);
    return num / den;
}

Cochain2 induced_2cocycle(const Cochain3& phi, const ConjugacyData& conj, int cls) {
    const FiniteGroup& g = phi.group;
    const std::vector<int>& z = conj.centralizer[cls];
    const int rep = conj.representative[cls];
    const int s = static_cast<int>(z.size());
    std::vector<Cyclotomic> vals(static_cast<size_t>(s) * s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) vals[static_cast<size_t>(i) * s + j] =
            phi_tilde(phi, z[i], z[j], rep);
    Cochain2 out = make_cochain2(g, z, std::move(vals));
    // Lemma-level guarantee; a failure here means the closed formula was
    // transcribed wrongly.
    for (int e : z)
        for (int f : z)
            for (int h : z) {
                if (out.at(e, f) * out.at(g.mul(e, f), h) !=
                    out.at(f, h) * out.at(e, g.mul(f, h)))
                    throw internal_error("induced 2-cochain violates the cocycle identity at ('" +
                                         g.name(e) + "','" + g.name(f) + "','" + g.name(h) +
                                         "')");
            }
    return out;
}

std::map<int, Cyclotomic> mu_uniform(const Cochain2& gauge, const ConjugacyData& conj, int cls) {
    if (!gauge.on_full_group()) throw error("mu requires a gauge transformation on the group");
    const FiniteGroup& g = gauge.group;
    const int rep = conj.representative[cls];
    std::map<int, Cyclotomic> mu;
    for (int f : conj.centralizer[cls]) {
        int fi = g.inv(f);
        mu[f] = gauge.at(f, fi) / (gauge.at(f, rep) * gauge.at(g.mul(f, rep), fi));
    }
    return mu;
}

QuasiAntipode quasi_antipode(const Cochain3& phi) {
    const FiniteGroup& g = phi.group;
    QuasiAntipode qa;
    qa.antipode.resize(g.order());
    qa.alpha.assign(g.order(), Cyclotomic(1));
    qa.beta.resize(g.order());
    for (int x = 0; x < g.order(); ++x) {
        qa.antipode[x] = g.inv(x);
        qa.beta[x] = phi.at(x, g.inv(x), x).inv();
    }
    return qa;
}

GaugedBetaReadings gauge_beta_readings(const Cochain3& phi, const Cochain2& gauge) {
    const FiniteGroup& g = phi.group;
    QuasiAntipode qa = quasi_antipode(phi);
    GaugedBetaReadings out;
    out.with_alpha.resize(g.order());
    out.with_beta.resize(g.order());
    for (int h = 0; h < g.order(); ++h) {
        Cyclotomic base = gauge.at(h, g.inv(h)).inv();
        out.with_alpha[h] = base * qa.alpha[h];
        out.with_beta[h] = base * qa.beta[h];
    }
    return out;
}

}  // namespace quasiq
