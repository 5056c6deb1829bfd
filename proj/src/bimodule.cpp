#include "quasiq/bimodule.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "quasiq/error.hpp"

namespace quasiq {

namespace {

std::vector<Cyclotomic> scaled(std::vector<Cyclotomic> v, const Cyclotomic& c) {
    for (auto& x : v) x = x * c;
    return v;
}

}  // namespace

std::vector<Cyclotomic> MajidBimodule::unit_vector(int i) const {
    std::vector<Cyclotomic> v(dim());
    v[i] = Cyclotomic(1);
    return v;
}

std::vector<Cyclotomic> MajidBimodule::apply_left(int f,
                                                  const std::vector<Cyclotomic>& v) const {
    std::vector<Cyclotomic> out(dim());
    for (int i = 0; i < dim(); ++i) {
        if (v[i].is_zero()) continue;
        for (const auto& [j, c] : left[f][i]) out[j] += v[i] * c;
    }
    return out;
}

std::vector<Cyclotomic> MajidBimodule::apply_right(const std::vector<Cyclotomic>& v,
                                                   int f) const {
    std::vector<Cyclotomic> out(dim());
    for (int i = 0; i < dim(); ++i) {
        if (v[i].is_zero()) continue;
        for (const auto& [j, c] : right[f][i]) out[j] += v[i] * c;
    }
    return out;
}

int MajidBimodule::component_dim(int left_deg, int right_deg) const {
    int d = 0;
    for (const auto& b : basis)
        if (b.left_deg == left_deg && b.right_deg == right_deg) ++d;
    return d;
}

bool same_bimodule(const MajidBimodule& a, const MajidBimodule& b) {
    if (!(a.group == b.group) || !(a.phi == b.phi) || a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        if (a.basis[i].left_deg != b.basis[i].left_deg ||
            a.basis[i].right_deg != b.basis[i].right_deg)
            return false;
    return a.left == b.left && a.right == b.right;
}

namespace {

void check_shape(const MajidBimodule& m) {
    const int n = m.group.order();
    const int d = m.dim();
    if (m.left.size() != static_cast<size_t>(n) || m.right.size() != static_cast<size_t>(n))
        throw error("bimodule action tables must cover every group element");
    for (int f = 0; f < n; ++f) {
        if (m.left[f].size() != static_cast<size_t>(d) ||
            m.right[f].size() != static_cast<size_t>(d))
            throw error("bimodule action tables must cover every basis element");
        for (int i = 0; i < d; ++i) {
            for (const auto& term : m.left[f][i])
                if (term.first < 0 || term.first >= d || term.second.is_zero())
                    throw error("malformed left action entry");
            for (const auto& term : m.right[f][i])
                if (term.first < 0 || term.first >= d || term.second.is_zero())
                    throw error("malformed right action entry");
        }
    }
    for (const auto& b : m.basis)
        if (b.left_deg < 0 || b.left_deg >= n || b.right_deg < 0 || b.right_deg >= n)
            throw error("basis bidegree out of range");
}

bool equal_vec(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
    return a == b;
}

}  // namespace

void verify_axioms(const MajidBimodule& m) {
    check_shape(m);
    const FiniteGroup& g = m.group;
    const Cochain3& phi = m.phi;
    const int n = g.order();
    const int d = m.dim();
    const int id = g.identity;

    // Unit action on both sides.
    for (int i = 0; i < d; ++i) {
        ActionVec expect{{i, Cyclotomic(1)}};
        if (m.left[id][i] != expect)
            throw error("unit axiom fails: left action of the identity on " +
                        m.basis[i].label);
        if (m.right[id][i] != expect)
            throw error("unit axiom fails: right action of the identity on " +
                        m.basis[i].label);
    }

    // Bidegree compatibility of both actions.
    for (int f = 0; f < n; ++f)
        for (int i = 0; i < d; ++i) {
            int lg = m.basis[i].left_deg, rg = m.basis[i].right_deg;
            for (const auto& [j, c] : m.left[f][i]) {
                (void)c;
                if (m.basis[j].left_deg != g.mul(f, lg) || m.basis[j].right_deg != g.mul(f, rg))
                    throw error("bidegree rule fails: left action of '" + g.name(f) + "' on " +
                                m.basis[i].label);
            }
            for (const auto& [j, c] : m.right[f][i]) {
                (void)c;
                if (m.basis[j].left_deg != g.mul(lg, f) || m.basis[j].right_deg != g.mul(rg, f))
                    throw error("bidegree rule fails: right action of '" + g.name(f) + "' on " +
                                m.basis[i].label);
            }
        }

    // Iterated-action laws.
    for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f)
            for (int i = 0; i < d; ++i) {
                const int lg = m.basis[i].left_deg, rg = m.basis[i].right_deg;
                auto u = m.unit_vector(i);
                // e.(f.m) = [phi(e,f,g)/phi(e,f,h)] (ef).m
                auto lhs = m.apply_left(e, m.apply_left(f, u));
                auto rhs = scaled(m.apply_left(g.mul(e, f), u),
                                  phi.at(e, f, lg) / phi.at(e, f, rg));
                if (!equal_vec(lhs, rhs))
                    throw error("iterated left action law fails at (e='" + g.name(e) + "', f='" +
                                g.name(f) + "', m=" + m.basis[i].label + ")");
                // (m.e).f = [phi(h,e,f)/phi(g,e,f)] m.(ef)
                lhs = m.apply_right(m.apply_right(u, e), f);
                rhs = scaled(m.apply_right(u, g.mul(e, f)),
                             phi.at(rg, e, f) / phi.at(lg, e, f));
                if (!equal_vec(lhs, rhs))
                    throw error("iterated right action law fails at (e='" + g.name(e) +
                                "', f='" + g.name(f) + "', m=" + m.basis[i].label + ")");
                // (e.m).f = [phi(e,h,f)/phi(e,g,f)] e.(m.f)
                lhs = m.apply_right(m.apply_left(e, u), f);
                rhs = scaled(m.apply_left(e, m.apply_right(u, f)),
                             phi.at(e, rg, f) / phi.at(e, lg, f));
                if (!equal_vec(lhs, rhs))
                    throw error("mixed action law fails at (e='" + g.name(e) + "', f='" +
                                g.name(f) + "', m=" + m.basis[i].label + ")");
            }

    // Component dimensions are constant along conjugacy classes.
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            int c = g.mul(y, g.inv(x));
            int cls = m.conj.class_of[c];
            int expect = m.component_dim(m.conj.representative[cls], id);
            if (m.component_dim(y, x) != expect)
                throw error("class dimension law fails at component ('" + g.name(y) + "','" +
                            g.name(x) + "')");
        }
}

MajidBimodule build_from_collection(const AdmissibleCollection& coll) {
    validate_collection(coll);
    const FiniteGroup& g = coll.group;
    const ConjugacyData& conj = coll.conj;
    const int n = g.order();

    MajidBimodule m;
    m.group = g;
    m.conj = conj;
    m.phi = coll.phi;

    // Basis tuples (class, coset position, representation index, x),
    // enumerated in the Hopf quiver arrow order (x outermost) so the
    // degree-one pairing with Q(G, R) is index-aligned.
    std::map<std::array<int, 4>, int> index;
    for (int x = 0; x < n; ++x)
        for (int c = 0; c < conj.num_classes(); ++c) {
            const int dc = coll.reps[c].dim;
            for (size_t j = 0; j < conj.classes[c].size(); ++j)
                for (int lam = 0; lam < dc; ++lam) {
                    index[{c, static_cast<int>(j), lam, x}] =
                        static_cast<int>(m.basis.size());
                    BasisElement b;
                    b.left_deg = g.mul(conj.classes[c][j], x);
                    b.right_deg = x;
                    b.label = "(C=" + g.name(conj.representative[c]) + ", e=" +
                              g.name(conj.coset_reps[c][j]) + ", \xce\xbb=" +
                              std::to_string(lam) + ", x=" + g.name(x) + ")";
                    m.basis.push_back(std::move(b));
                }
        }
    auto index_of = [&](int c, int j, int lam, int x) {
        return index.at({c, j, lam, x});
    };

    const int d = m.dim();
    m.left.assign(n, std::vector<ActionVec>(d));
    m.right.assign(n, std::vector<ActionVec>(d));
    for (int c = 0; c < conj.num_classes(); ++c) {
        const int dc = coll.reps[c].dim;
        const int gc = conj.representative[c];
        const ProjRep& rep = coll.reps[c];
        for (size_t j = 0; j < conj.classes[c].size(); ++j) {
            const int cj = conj.classes[c][j];
            const int ej = conj.coset_reps[c][j];
            for (int lam = 0; lam < dc; ++lam)
                for (int x = 0; x < n; ++x) {
                    const int i = index_of(c, static_cast<int>(j), lam, x);
                    for (int f = 0; f < n; ++f) {
                        // Right action: (v tensor x).f, coefficient from the
                        // trivialized right module structure.
                        Cyclotomic rc = m.phi.at(cj, x, f).inv();
                        m.right[f][i] = ActionVec{
                            {index_of(c, static_cast<int>(j), lam, g.mul(x, f)), rc}};

                        // Left action: factor through the conjugate action on
                        // coinvariants, then restore the kG leg.
                        int t = g.mul(f, ej);
                        int cprime = g.mul(g.mul(t, gc), g.inv(t));
                        int jprime = -1;
                        for (size_t jj = 0; jj < conj.classes[c].size(); ++jj)
                            if (conj.classes[c][jj] == cprime) {
                                jprime = static_cast<int>(jj);
                                break;
                            }
                        int eprime = conj.coset_reps[c][jprime];
                        int z = g.mul(g.inv(eprime), t);
                        Cyclotomic coeff = phi_tilde(m.phi, f, ej, gc) /
                                           phi_tilde(m.phi, eprime, z, gc);
                        int fcf = g.mul(g.mul(f, cj), g.inv(f));
                        coeff *= m.phi.at(f, cj, x) * m.phi.at(g.mul(f, cj), g.inv(f), f) /
                                 (m.phi.at(f, g.inv(f), f) * m.phi.at(fcf, f, x));
                        const Matrix& rz = rep.rho(z);
                        ActionVec img;
                        for (int mu = 0; mu < dc; ++mu) {
                            Cyclotomic entry = rz.at(mu, lam) * coeff;
                            if (entry.is_zero()) continue;
                            img.emplace_back(index_of(c, jprime, mu, g.mul(f, x)), entry);
                        }
                        std::sort(img.begin(), img.end(),
                                  [](const auto& p, const auto& q) { return p.first < q.first; });
                        m.left[f][i] = std::move(img);
                    }
                }
        }
    }
    verify_axioms(m);
    return m;
}

MajidBimodule from_action_tables(FiniteGroup group, Cochain3 phi,
                                 std::vector<BasisElement> basis,
                                 std::vector<std::vector<ActionVec>> left,
                                 std::vector<std::vector<ActionVec>> right) {
    MajidBimodule m;
    m.conj = conjugacy(group);
    m.group = std::move(group);
    m.phi = std::move(phi);
    m.basis = std::move(basis);
    m.left = std::move(left);
    m.right = std::move(right);
    verify_axioms(m);
    return m;
}

TwistedCrossedModule conjugate_action_module(const MajidBimodule& m) {
    const FiniteGroup& g = m.group;
    const int n = g.order();
    const int id = g.identity;

    TwistedCrossedModule t;
    std::vector<int> pos_of(m.dim(), -1);
    for (int i = 0; i < m.dim(); ++i)
        if (m.basis[i].right_deg == id) {
            pos_of[i] = static_cast<int>(t.carrier.size());
            t.carrier.push_back(i);
        }
    const int cd = static_cast<int>(t.carrier.size());

    t.action.assign(n, std::vector<ActionVec>(cd));
    for (int f = 0; f < n; ++f)
        for (int p = 0; p < cd; ++p) {
            auto w = m.apply_right(m.apply_left(f, m.unit_vector(t.carrier[p])), g.inv(f));
            ActionVec av;
            int lg = m.basis[t.carrier[p]].left_deg;
            int expect_deg = g.mul(g.mul(f, lg), g.inv(f));
            for (int i = 0; i < m.dim(); ++i) {
                if (w[i].is_zero()) continue;
                if (pos_of[i] < 0 || m.basis[i].left_deg != expect_deg)
                    throw error("conjugate action degree rule fails at (f='" + g.name(f) +
                                "', v=" + m.basis[t.carrier[p]].label + ")");
                av.emplace_back(pos_of[i], w[i]);
            }
            t.action[f][p] = std::move(av);
        }

    // Twisted composition law against the independently computed scalars.
    auto apply = [&](int f, const std::vector<Cyclotomic>& v) {
        std::vector<Cyclotomic> out(cd);
        for (int p = 0; p < cd; ++p) {
            if (v[p].is_zero()) continue;
            for (const auto& [q, c] : t.action[f][p]) out[q] += v[p] * c;
        }
        return out;
    };
    for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f)
            for (int p = 0; p < cd; ++p) {
                std::vector<Cyclotomic> u(cd);
                u[p] = Cyclotomic(1);
                auto lhs = apply(e, apply(f, u));
                auto rhs = scaled(apply(g.mul(e, f), u),
                                  phi_tilde(m.phi, e, f, m.basis[t.carrier[p]].left_deg));
                if (lhs != rhs)
                    throw error("conjugate action composition law fails at (e='" + g.name(e) +
                                "', f='" + g.name(f) + "', v=" +
                                m.basis[t.carrier[p]].label + ")");
            }
    return t;
}

AdmissibleCollection extract_collection(const MajidBimodule& m) {
    const FiniteGroup& g = m.group;
    const ConjugacyData& conj = m.conj;
    const int id = g.identity;

    AdmissibleCollection coll;
    coll.group = g;
    coll.conj = conj;
    coll.phi = m.phi;
    for (int c = 0; c < conj.num_classes(); ++c) {
        const int gc = conj.representative[c];
        std::vector<int> rows;
        for (int i = 0; i < m.dim(); ++i)
            if (m.basis[i].right_deg == id && m.basis[i].left_deg == gc) rows.push_back(i);
        ProjRep rep;
        rep.cocycle = induced_2cocycle(m.phi, conj, c);
        rep.dim = static_cast<int>(rows.size());
        for (int z : conj.centralizer[c]) {
            Matrix mat(rep.dim, rep.dim);
            for (int col = 0; col < rep.dim; ++col) {
                auto w = m.apply_right(m.apply_left(z, m.unit_vector(rows[col])), g.inv(z));
                for (int i = 0; i < m.dim(); ++i) {
                    if (w[i].is_zero()) continue;
                    auto it = std::find(rows.begin(), rows.end(), i);
                    if (it == rows.end())
                        throw error("conjugate action leaves the coinvariant block at '" +
                                    g.name(z) + "' on " + m.basis[rows[col]].label);
                    mat.at(it - rows.begin(), col) = w[i];
                }
            }
            rep.matrices.push_back(std::move(mat));
        }
        validate_projrep(rep);
        coll.reps.push_back(std::move(rep));
    }
    validate_collection(coll);
    return coll;
}

MajidBimodule gauge_transform_bimodule(const MajidBimodule& m, const Cochain2& gauge) {
    if (!gauge.on_full_group() || !(gauge.group == m.group))
        throw error("gauge transformation must live on the bimodule group");
    MajidBimodule out = m;
    out.phi = twist_3cocycle(m.phi, gauge);
    const int n = m.group.order();
    for (int f = 0; f < n; ++f)
        for (int i = 0; i < m.dim(); ++i) {
            int lg = m.basis[i].left_deg, rg = m.basis[i].right_deg;
            Cyclotomic lc = gauge.at(f, rg) / gauge.at(f, lg);
            for (auto& [j, coeff] : out.left[f][i]) {
                (void)j;
                coeff = coeff * lc;
            }
            Cyclotomic rc = gauge.at(rg, f) / gauge.at(lg, f);
            for (auto& [j, coeff] : out.right[f][i]) {
                (void)j;
                coeff = coeff * rc;
            }
        }
    verify_axioms(out);
    return out;
}

RightTrivialization trivialize_right(const MajidBimodule& m) {
    const FiniteGroup& g = m.group;
    const int n = g.order();
    const int id = g.identity;

    std::vector<int> carrier;
    std::vector<int> pos_of(m.dim(), -1);
    for (int i = 0; i < m.dim(); ++i)
        if (m.basis[i].right_deg == id) {
            pos_of[i] = static_cast<int>(carrier.size());
            carrier.push_back(i);
        }
    if (static_cast<int>(carrier.size()) * n != m.dim())
        throw internal_error("coinvariant dimension does not trivialize the bimodule");

    RightTrivialization tr;
    for (size_t p = 0; p < carrier.size(); ++p)
        for (int x = 0; x < n; ++x) tr.target_basis.emplace_back(static_cast<int>(p), x);
    auto target_index = [&](int p, int x) { return p * n + x; };

    tr.zeta = Matrix(m.dim(), m.dim());
    tr.xi = Matrix(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i) {
        int e = m.basis[i].left_deg, f = m.basis[i].right_deg;
        int fi = g.inv(f);
        Cyclotomic c = m.phi.at(e, fi, f) / m.phi.at(f, fi, f);
        auto w = scaled(m.apply_right(m.unit_vector(i), fi), c);
        for (int k = 0; k < m.dim(); ++k) {
            if (w[k].is_zero()) continue;
            if (pos_of[k] < 0)
                throw internal_error("trivialization image left the coinvariant block");
            tr.zeta.at(target_index(pos_of[k], f), i) = w[k];
        }
    }
    for (size_t p = 0; p < carrier.size(); ++p)
        for (int x = 0; x < n; ++x) {
            auto w = m.apply_right(m.unit_vector(carrier[p]), x);
            for (int k = 0; k < m.dim(); ++k)
                if (!w[k].is_zero()) tr.xi.at(k, target_index(static_cast<int>(p), x)) = w[k];
        }
    if (!(tr.zeta * tr.xi).is_identity() || !(tr.xi * tr.zeta).is_identity())
        throw internal_error("right trivialization maps are not mutually inverse");
    return tr;
}

bool isomorphic(const MajidBimodule& a, const MajidBimodule& b) {
    if (!(a.group == b.group)) throw error("bimodule comparison requires the same group");
    if (!(a.phi == b.phi))
        throw error("reassociator mismatch: gauge one side before comparing");
    AdmissibleCollection ca = extract_collection(a), cb = extract_collection(b);
    for (int c = 0; c < ca.conj.num_classes(); ++c)
        if (!linear_equivalence(ca.reps[c], cb.reps[c])) return false;
    return true;
}

}  // namespace quasiq
