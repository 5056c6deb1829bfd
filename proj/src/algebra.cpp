#include "quasiq/algebra.hpp"

#include <algorithm>

#include "quasiq/error.hpp"

namespace quasiq {

int GradedSubspace::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

PathVector GradedSubspace::row_as_path_vector(int degree, size_t row) const {
    PathVector v;
    const auto& coords = rows[degree].rows()[row];
    for (size_t j = 0; j < coords.size(); ++j)
        if (!coords[j].is_zero()) v[path_basis[degree][j]] = coords[j];
    return v;
}

std::vector<Cyclotomic> GradedSubspace::coordinates(int degree, const PathVector& v) const {
    const auto& paths = path_basis[degree];
    std::vector<Cyclotomic> out(paths.size());
    for (const auto& [p, c] : v) {
        auto it = std::lower_bound(paths.begin(), paths.end(), p);
        if (it == paths.end() || !(*it == p))
            throw error("vector is not homogeneous of degree " + std::to_string(degree));
        out[it - paths.begin()] = c;
    }
    return out;
}

namespace {

int degree_of(const PathVector& v) {
    int deg = -1;
    for (const auto& [p, c] : v) {
        (void)c;
        if (deg < 0) deg = p.length();
        else if (deg != p.length())
            throw error("vector is not homogeneous");
    }
    return deg;  // -1 for the zero vector
}

}  // namespace

GradedSubspace generated_subalgebra(const QuiverAlgebraData& data, int max_degree) {
    if (max_degree < 1) throw error("generated subalgebra needs max degree >= 1");
    const HopfQuiver& q = data.quiver;
    ShuffleCache cache(data);

    GradedSubspace sub;
    for (int d = 0; d <= max_degree; ++d) {
        sub.path_basis.push_back(paths_of_length(q, d));
        sub.rows.emplace_back(sub.path_basis.back().size());
    }

    // Degrees 0 and 1: the group-likes and the whole arrow span.
    for (size_t i = 0; i < sub.path_basis[0].size(); ++i) {
        std::vector<Cyclotomic> unit(sub.path_basis[0].size());
        unit[i] = Cyclotomic(1);
        sub.rows[0].insert(std::move(unit));
    }
    if (max_degree >= 1)
        for (size_t i = 0; i < sub.path_basis[1].size(); ++i) {
            std::vector<Cyclotomic> unit(sub.path_basis[1].size());
            unit[i] = Cyclotomic(1);
            sub.rows[1].insert(std::move(unit));
        }

    for (int d = 2; d <= max_degree; ++d) {
        EchelonBasis& eb = sub.rows[d];
        for (int i = 1; i < d; ++i) {
            int j = d - i;
            for (size_t ri = 0; ri < sub.rows[i].rank(); ++ri)
                for (size_t rj = 0; rj < sub.rows[j].rank(); ++rj) {
                    PathVector prod = cache.product(sub.row_as_path_vector(i, ri),
                                                    sub.row_as_path_vector(j, rj));
                    if (prod.empty()) continue;
                    eb.insert(sub.coordinates(d, prod));
                }
        }
        // Close under the degree-zero actions (vertex products on both sides).
        for (;;) {
            size_t before = eb.rank();
            std::vector<PathVector> snapshot;
            for (size_t r = 0; r < eb.rank(); ++r) {
                PathVector v;
                const auto& coords = eb.rows()[r];
                for (size_t k = 0; k < coords.size(); ++k)
                    if (!coords[k].is_zero()) v[sub.path_basis[d][k]] = coords[k];
                snapshot.push_back(std::move(v));
            }
            for (int x = 0; x < q.group.order(); ++x) {
                PathVector vx = path_vector(vertex_path(x));
                for (const auto& w : snapshot) {
                    eb.insert(sub.coordinates(d, cache.product(vx, w)));
                    eb.insert(sub.coordinates(d, cache.product(w, vx)));
                }
            }
            if (eb.rank() == before) break;
        }
    }
    for (int d = 0; d <= max_degree; ++d)
        sub.dims.push_back(static_cast<int>(sub.rows[d].rank()));
    return sub;
}

BasisReport basis_report(const QuiverAlgebraData& data, const GradedSubspace& sub,
                         const std::vector<std::pair<std::string, PathVector>>* candidates) {
    BasisReport rep;
    rep.dims = sub.dims;
    rep.total = sub.total_dim();
    for (int d = 0; d <= sub.max_degree(); ++d) {
        std::vector<std::string> rendered;
        for (size_t r = 0; r < sub.rows[d].rank(); ++r)
            rendered.push_back(pv_str(data.quiver, sub.row_as_path_vector(d, r)));
        rep.basis.push_back(std::move(rendered));
    }
    if (!candidates) return rep;

    rep.candidate_checked = true;
    rep.candidate_independent = true;
    std::vector<EchelonBasis> check;
    for (int d = 0; d <= sub.max_degree(); ++d)
        check.emplace_back(sub.path_basis[d].size());
    std::vector<int> cand_rank(sub.max_degree() + 1, 0);
    for (const auto& [name, v] : *candidates) {
        int d = degree_of(v);
        if (d < 0 || d > sub.max_degree()) {
            rep.candidate_independent = false;
            rep.dependency_witness = name + " is zero or out of degree range";
            break;
        }
        if (!check[d].insert(sub.coordinates(d, v))) {
            rep.candidate_independent = false;
            rep.dependency_witness =
                name + " depends linearly on the earlier candidates in degree " +
                std::to_string(d);
            break;
        }
        ++cand_rank[d];
    }
    rep.candidate_spanning = rep.candidate_independent;
    if (rep.candidate_independent)
        for (int d = 0; d <= sub.max_degree(); ++d)
            if (cand_rank[d] != sub.dims[d]) {
                rep.candidate_spanning = false;
                break;
            }
    return rep;
}

bool PowerGrowthCheck::all_factorial() const {
    for (bool b : factorial_lead)
        if (!b) return false;
    for (bool b : nonzero)
        if (!b) return false;
    return !factorial_lead.empty();
}

namespace {

PowerGrowthCheck power_growth(const QuiverAlgebraData& data, const Path& base, int max_power) {
    PowerGrowthCheck chk;
    chk.generator = path_str(data.quiver, base);
    Cyclotomic factorial(1);
    PathVector pv = path_vector(base);
    PathVector acc = pv;
    for (int s = 1; s <= max_power; ++s) {
        if (s > 1) {
            acc = shuffle_product(data, acc, pv);
            factorial *= Cyclotomic(s);
        }
        Path repeated{base.source, {}};
        for (int t = 0; t < s; ++t)
            repeated.arrows.insert(repeated.arrows.end(), base.arrows.begin(),
                                   base.arrows.end());
        auto it = acc.find(repeated);
        chk.exponents.push_back(s);
        chk.factorial_lead.push_back(it != acc.end() && it->second == factorial);
        chk.nonzero.push_back(!acc.empty());
    }
    return chk;
}

}  // namespace

FinitenessReport finiteness_evidence(const QuiverAlgebraData& data, int max_degree) {
    if (max_degree < 4) throw error("finiteness evidence needs max degree >= 4");
    const HopfQuiver& q = data.quiver;

    FinitenessReport rep;
    rep.dims = generated_subalgebra(data, max_degree).dims;
    for (int d = 1; d <= max_degree; ++d) {
        if (rep.dims[d] != 0) continue;
        bool tail_zero = true;
        for (int t = d; t <= max_degree; ++t)
            if (rep.dims[t] != 0) tail_zero = false;
        if (tail_zero) {
            rep.first_zero_degree = d;
            break;
        }
    }

    // Loop powers: the first loop at the identity vertex (one loop suffices,
    // all loops behave alike under the identity-vertex splits).
    for (const auto& a : q.arrows) {
        if (a.source != a.target || a.source != q.group.identity) continue;
        rep.obstructions.push_back(
            power_growth(data, Path{a.source, {q.arrow_by_name(a.name)}}, max_degree));
        break;
    }
    // Alternating pairs on a two-parallel-arrow quiver over Z_2: both
    // index mixes, since either can be the surviving growth witness.
    if (q.group.order() == 2) {
        auto find_arrow = [&](bool outgoing, int index) {
            for (size_t i = 0; i < q.arrows.size(); ++i) {
                const auto& a = q.arrows[i];
                if (a.source == a.target || a.index != index) continue;
                if (outgoing == (a.source == q.group.identity)) return static_cast<int>(i);
            }
            return -1;
        };
        for (auto [ui, di] : {std::pair<int, int>{0, 1}, std::pair<int, int>{1, 0}}) {
            int up = find_arrow(true, ui), down = find_arrow(false, di);
            if (up >= 0 && down >= 0)
                rep.obstructions.push_back(power_growth(
                    data, Path{q.group.identity, {up, down}}, max_degree / 2));
        }
    }

    if (rep.first_zero_degree) {
        rep.verdict = "finite through degree " + std::to_string(max_degree);
    } else {
        bool growth = false;
        for (const auto& o : rep.obstructions)
            if (o.all_factorial()) growth = true;
        rep.verdict = growth ? "infinite-dimensional evidence" : "inconclusive";
    }
    rep.caveat =
        "a zero degree alone does not force higher degrees to vanish for a nonassociative "
        "graded product; 'finite' asserts that every generated component from the first zero "
        "degree through the computed bound vanishes";
    return rep;
}

std::optional<Cochain2> gauge_equivalence_search(const MajidBimodule& m1,
                                                 const MajidBimodule& m2, long n_max) {
    if (!(m1.group == m2.group)) throw error("gauge search requires the same group");
    if (n_max < 1) throw error("gauge search needs n_max >= 1");
    const FiniteGroup& g = m1.group;
    const int n = g.order();
    const int id = g.identity;

    std::vector<int> nonid;
    for (int x = 0; x < n; ++x)
        if (x != id) nonid.push_back(x);
    const size_t k = nonid.size() * nonid.size();
    double space = 1;
    for (size_t i = 0; i < k; ++i) {
        space *= static_cast<double>(n_max);
        if (space > 1e7) throw error("search bound exceeded; raise explicitly");
    }

    std::vector<long> expo(k, 0);
    for (;;) {
        std::vector<Cyclotomic> values(static_cast<size_t>(n) * n, Cyclotomic(1));
        size_t u = 0;
        for (int a : nonid)
            for (int b : nonid)
                values[static_cast<size_t>(a) * n + b] =
                    Cyclotomic::root_of_unity(n_max, expo[u++]);
        std::vector<int> all(n);
        for (int x = 0; x < n; ++x) all[x] = x;
        Cochain2 gauge = make_cochain2(g, all, std::move(values));
        if (twist_3cocycle(m1.phi, gauge) == m2.phi) {
            MajidBimodule gauged = gauge_transform_bimodule(m1, gauge);
            if (isomorphic(gauged, m2)) return gauge;
        }
        size_t i = 0;
        while (i < k && expo[i] == n_max - 1) expo[i++] = 0;
        if (i == k) break;
        ++expo[i];
    }
    return std::nullopt;
}

HopfReport hopf_detection(const QuiverAlgebraData& data) {
    HopfReport rep;
    auto witness = solve_coboundary(data.phi());
    if (!witness) {
        rep.verdict = "genuinely quasi (nontrivial class)";
        return rep;
    }
    rep.is_coboundary = true;
    rep.witness = witness;
    MajidBimodule hopf = gauge_transform_bimodule(data.bimodule, cochain2_inverse(*witness));
    if (!(hopf.phi == trivial_cochain3(hopf.group)))
        throw internal_error("coboundary witness did not trivialize the reassociator");
    rep.hopf_gauge_valid = true;
    rep.verdict = "gauge equivalent to a Hopf algebra";
    return rep;
}

}  // namespace quasiq
