#include "quasiq/io.hpp"

#include <fstream>
#include <numeric>

#include "quasiq/error.hpp"

namespace quasiq::io {

namespace {

int element_from_json(const FiniteGroup& g, const json& j) {
    if (j.is_number_integer()) {
        int x = j.get<int>();
        if (x < 0 || x >= g.order()) throw error("element index out of range");
        return x;
    }
    if (j.is_string()) {
        int x = g.element_by_name(j.get<std::string>());
        if (x < 0) throw error("unknown element name '" + j.get<std::string>() + "'");
        return x;
    }
    throw error("element reference must be an index or a name");
}

}  // namespace

json scalar_to_json(const Cyclotomic& c) {
    json coeffs = json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(r.str());
    return json{{"order", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Cyclotomic(j.get<long>());
    if (j.is_string()) return Cyclotomic::parse(j.get<std::string>());
    if (j.is_object()) {
        long order = j.at("order").get<long>();
        if (order < 1) throw error("scalar order must be positive");
        auto coeffs = j.at("coeffs");
        if (!coeffs.is_array() ||
            static_cast<long>(coeffs.size()) != Cyclotomic::euler_phi(order))
            throw error("scalar coeffs must have euler_phi(order) entries");
        Cyclotomic out(0);
        Cyclotomic z = Cyclotomic::root_of_unity(order, 1);
        Cyclotomic zk(1);
        for (size_t k = 0; k < coeffs.size(); ++k) {
            Rational r = coeffs[k].is_string() ? Rational::parse(coeffs[k].get<std::string>())
                                               : Rational(coeffs[k].get<long>());
            out += zk * Cyclotomic(r);
            zk *= z;
        }
        return out;
    }
    throw error("cannot read scalar value");
}

json group_to_json(const FiniteGroup& g) {
    return json{{"names", g.names}, {"table", g.table}};
}

FiniteGroup group_from_json(const json& j) {
    std::vector<std::vector<int>> table = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<std::string> names;
    if (j.contains("names")) {
        names = j.at("names").get<std::vector<std::string>>();
    } else {
        for (size_t i = 0; i < table.size(); ++i) names.push_back("x" + std::to_string(i));
    }
    return make_group(std::move(names), std::move(table));
}

json cocycle_to_json(const Cochain3& phi) {
    const int n = phi.group.order();
    json values = json::array();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (phi.at(a, b, c).is_one()) continue;
                values.push_back(json{{"args", {phi.group.name(a), phi.group.name(b),
                                                phi.group.name(c)}},
                                      {"value", scalar_to_json(phi.at(a, b, c))}});
            }
    return json{{"group", group_to_json(phi.group)}, {"values", values}};
}

Cochain3 cocycle_from_json(const json& j) {
    FiniteGroup g;
    const json& gref = j.at("group");
    if (gref.is_string() && presets::is_group_preset(gref.get<std::string>()))
        g = presets::group(gref.get<std::string>());
    else
        g = group_from_json(gref);
    Cochain3 phi = trivial_cochain3(g);
    if (j.contains("values"))
        for (const auto& entry : j.at("values")) {
            const auto& args = entry.at("args");
            if (!args.is_array() || args.size() != 3)
                throw error("cocycle entry needs three arguments");
            int a = element_from_json(g, args[0]);
            int b = element_from_json(g, args[1]);
            int c = element_from_json(g, args[2]);
            phi.at(a, b, c) = scalar_from_json(entry.at("value"));
        }
    phi = make_cochain3(phi.group, phi.values);  // re-check normalization
    validate_3cocycle(phi);
    return phi;
}

json cochain2_to_json(const Cochain2& f) {
    json values = json::array();
    for (int e : f.elements)
        for (int x : f.elements) {
            if (f.at(e, x).is_one()) continue;
            values.push_back(json{{"args", {f.group.name(e), f.group.name(x)}},
                                  {"value", scalar_to_json(f.at(e, x))}});
        }
    return json{{"group", group_to_json(f.group)}, {"values", values}};
}

Cochain2 cochain2_from_json(const json& j) {
    FiniteGroup g;
    const json& gref = j.at("group");
    if (gref.is_string() && presets::is_group_preset(gref.get<std::string>()))
        g = presets::group(gref.get<std::string>());
    else
        g = group_from_json(gref);
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    std::vector<Cyclotomic> values(static_cast<size_t>(g.order()) * g.order(), Cyclotomic(1));
    if (j.contains("values"))
        for (const auto& entry : j.at("values")) {
            const auto& args = entry.at("args");
            if (!args.is_array() || args.size() != 2)
                throw error("2-cochain entry needs two arguments");
            int a = element_from_json(g, args[0]);
            int b = element_from_json(g, args[1]);
            values[static_cast<size_t>(a) * g.order() + b] = scalar_from_json(entry.at("value"));
        }
    return make_cochain2(g, std::move(all), std::move(values));
}

json collection_to_json(const AdmissibleCollection& coll) {
    json reps = json::array();
    for (int c = 0; c < coll.conj.num_classes(); ++c) {
        const ProjRep& r = coll.reps[c];
        if (r.dim == 0) continue;
        json mats = json::object();
        for (size_t i = 0; i < r.subgroup().size(); ++i) {
            json rows = json::array();
            for (size_t p = 0; p < static_cast<size_t>(r.dim); ++p) {
                json row = json::array();
                for (size_t q = 0; q < static_cast<size_t>(r.dim); ++q)
                    row.push_back(scalar_to_json(r.matrices[i].at(p, q)));
                rows.push_back(row);
            }
            mats[coll.group.name(r.subgroup()[i])] = rows;
        }
        reps.push_back(json{{"class_rep", coll.group.name(coll.conj.representative[c])},
                            {"dim", r.dim},
                            {"matrices", mats}});
    }
    return json{{"phi", cocycle_to_json(coll.phi)}, {"reps", reps}};
}

AdmissibleCollection collection_from_json(const json& j) {
    const json& phiref = j.at("phi");
    Cochain3 phi;
    if (phiref.is_string() && presets::is_cocycle_preset(phiref.get<std::string>()))
        phi = presets::cocycle(phiref.get<std::string>());
    else
        phi = cocycle_from_json(phiref);
    ConjugacyData conj = conjugacy(phi.group);
    std::vector<ProjRep> reps;
    for (int c = 0; c < conj.num_classes(); ++c) {
        ProjRep r;
        r.cocycle = induced_2cocycle(phi, conj, c);
        r.dim = 0;
        r.matrices.assign(r.cocycle.elements.size(), Matrix(0, 0));
        reps.push_back(std::move(r));
    }
    if (j.contains("reps"))
        for (const auto& entry : j.at("reps")) {
            int rep_elt = element_from_json(phi.group, entry.at("class_rep"));
            int cls = conj.class_of[rep_elt];
            ProjRep& r = reps[cls];
            r.dim = entry.at("dim").get<int>();
            r.matrices.assign(r.cocycle.elements.size(), Matrix(r.dim, r.dim));
            for (const auto& [ename, rows] : entry.at("matrices").items()) {
                int e = phi.group.element_by_name(ename);
                if (e < 0) throw error("unknown element name '" + ename + "'");
                Matrix m(r.dim, r.dim);
                for (int p = 0; p < r.dim; ++p)
                    for (int q = 0; q < r.dim; ++q) m.at(p, q) = scalar_from_json(rows[p][q]);
                r.matrices[r.cocycle.pos(e)] = std::move(m);
            }
            // The identity matrix row may be omitted.
            r.matrices[r.cocycle.pos(phi.group.identity)] = Matrix::identity(r.dim);
        }
    return make_collection(phi.group, phi, std::move(reps));
}

json bimodule_to_json(const MajidBimodule& m) {
    json basis = json::array();
    for (const auto& b : m.basis)
        basis.push_back(json{{"left", m.group.name(b.left_deg)},
                             {"right", m.group.name(b.right_deg)},
                             {"label", b.label}});
    auto tables = [&](const std::vector<std::vector<ActionVec>>& t) {
        json out = json::array();
        for (int f = 0; f < m.group.order(); ++f) {
            if (f == m.group.identity) continue;
            for (int i = 0; i < m.dim(); ++i) {
                json terms = json::array();
                for (const auto& [k, c] : t[f][i]) terms.push_back(json::array({k, scalar_to_json(c)}));
                out.push_back(json{{"f", m.group.name(f)}, {"on", i}, {"out", terms}});
            }
        }
        return out;
    };
    return json{{"group", group_to_json(m.group)},
                {"phi", cocycle_to_json(m.phi)},
                {"basis", basis},
                {"left", tables(m.left)},
                {"right", tables(m.right)}};
}

MajidBimodule bimodule_from_json(const json& j) {
    const json& phiref = j.at("phi");
    Cochain3 phi;
    if (phiref.is_string() && presets::is_cocycle_preset(phiref.get<std::string>()))
        phi = presets::cocycle(phiref.get<std::string>());
    else
        phi = cocycle_from_json(phiref);
    FiniteGroup g = phi.group;
    std::vector<BasisElement> basis;
    for (const auto& entry : j.at("basis")) {
        BasisElement b;
        b.left_deg = element_from_json(g, entry.at("left"));
        b.right_deg = element_from_json(g, entry.at("right"));
        b.label = entry.contains("label") ? entry.at("label").get<std::string>()
                                          : "m" + std::to_string(basis.size());
        basis.push_back(std::move(b));
    }
    const int n = g.order(), d = static_cast<int>(basis.size());
    std::vector<std::vector<ActionVec>> left(n, std::vector<ActionVec>(d));
    std::vector<std::vector<ActionVec>> right(n, std::vector<ActionVec>(d));
    std::vector<std::vector<bool>> lset(n, std::vector<bool>(d, false));
    std::vector<std::vector<bool>> rset(n, std::vector<bool>(d, false));
    for (int i = 0; i < d; ++i) {
        left[g.identity][i] = right[g.identity][i] = ActionVec{{i, Cyclotomic(1)}};
        lset[g.identity][i] = rset[g.identity][i] = true;
    }
    auto read_tables = [&](const char* key, std::vector<std::vector<ActionVec>>& t,
                           std::vector<std::vector<bool>>& set) {
        if (!j.contains(key)) return;
        for (const auto& entry : j.at(key)) {
            int f = element_from_json(g, entry.at("f"));
            int on = entry.at("on").get<int>();
            if (on < 0 || on >= d) throw error("action row names an unknown basis element");
            ActionVec av;
            for (const auto& term : entry.at("out")) {
                int k = term.at(0).get<int>();
                if (k < 0 || k >= d) throw error("action term names an unknown basis element");
                Cyclotomic c = scalar_from_json(term.at(1));
                if (!c.is_zero()) av.emplace_back(k, c);
            }
            std::sort(av.begin(), av.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            t[f][on] = std::move(av);
            set[f][on] = true;
        }
    };
    read_tables("left", left, lset);
    read_tables("right", right, rset);
    for (int f = 0; f < n; ++f)
        for (int i = 0; i < d; ++i) {
            if (!lset[f][i])
                throw error("left action of '" + g.name(f) + "' on basis element " +
                            std::to_string(i) + " unspecified");
            if (!rset[f][i])
                throw error("right action of '" + g.name(f) + "' on basis element " +
                            std::to_string(i) + " unspecified");
        }
    return from_action_tables(std::move(g), std::move(phi), std::move(basis), std::move(left),
                              std::move(right));
}

json quiver_to_json(const HopfQuiver& q) {
    json arrows = json::array();
    for (const auto& a : q.arrows)
        arrows.push_back(json{{"name", a.name},
                              {"source", q.group.name(a.source)},
                              {"target", q.group.name(a.target)},
                              {"class", q.group.name(q.conj.representative[a.cls])},
                              {"index", a.index}});
    json ram = json::object();
    for (int c = 0; c < q.conj.num_classes(); ++c)
        if (q.ramification[c] > 0)
            ram[q.group.name(q.conj.representative[c])] = q.ramification[c];
    return json{{"vertices", q.group.names}, {"ramification", ram}, {"arrows", arrows}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw error("cannot parse '" + path + "': " + e.what());
    }
}

FiniteGroup load_group(const std::string& ref) {
    if (presets::is_group_preset(ref)) return presets::group(ref);
    return group_from_json(read_json_file(ref));
}

Cochain3 load_cocycle(const std::string& ref) {
    if (presets::is_cocycle_preset(ref)) return presets::cocycle(ref);
    return cocycle_from_json(read_json_file(ref));
}

Cochain2 load_gauge(const std::string& ref) {
    return cochain2_from_json(read_json_file(ref));
}

AdmissibleCollection load_collection(const std::string& ref) {
    if (presets::is_collection_preset(ref)) return presets::collection(ref);
    return collection_from_json(read_json_file(ref));
}

MajidBimodule load_bimodule_tables(const std::string& ref) {
    if (presets::is_algebra_preset(ref)) return presets::algebra_data(ref).bimodule;
    return bimodule_from_json(read_json_file(ref));
}

}  // namespace quasiq::io
