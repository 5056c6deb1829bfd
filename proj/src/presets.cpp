#include "quasiq/presets.hpp"

#include <algorithm>
#include <cctype>

#include "quasiq/error.hpp"

namespace quasiq::presets {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

ProjRep zero_rep(const Cochain3& phi, const ConjugacyData& conj, int cls) {
    ProjRep r;
    r.cocycle = induced_2cocycle(phi, conj, cls);
    r.dim = 0;
    r.matrices.assign(r.cocycle.elements.size(), Matrix(0, 0));
    return r;
}

// Collection over Z2 with the nontrivial cocycle carrying the given simple
// summands (+1 means S(+i), -1 means S(-i)) on the class of g.
AdmissibleCollection z2_arrow_collection(const std::vector<int>& signs) {
    Cochain3 phi = cyclic_cocycle(2, 1);
    ConjugacyData conj = conjugacy(phi.group);
    auto simples = simples_of_twisted_cyclic(phi.group, conj.centralizer[1],
                                             induced_2cocycle(phi, conj, 1));
    ProjRep rep = signs[0] > 0 ? simples[0] : simples[1];
    for (size_t i = 1; i < signs.size(); ++i)
        rep = direct_sum(rep, signs[i] > 0 ? simples[0] : simples[1]);
    return make_collection(phi.group, phi, {zero_rep(phi, conj, 0), rep});
}

// Collection over Z2 placing a one-dimensional representation of sign +-1
// on the class of the identity (the loop class).
AdmissibleCollection z2_loop_collection(int sign) {
    Cochain3 phi = cyclic_cocycle(2, 1);
    ConjugacyData conj = conjugacy(phi.group);
    auto simples = simples_of_twisted_cyclic(phi.group, conj.centralizer[0],
                                             induced_2cocycle(phi, conj, 0));
    ProjRep rep = sign > 0 ? simples[0] : simples[1];
    return make_collection(phi.group, phi, {rep, zero_rep(phi, conj, 1)});
}

AdmissibleCollection z2_hopf_collection() {
    Cochain3 phi = trivial_cochain3(cyclic_group(2));
    ConjugacyData conj = conjugacy(phi.group);
    auto simples = simples_of_twisted_cyclic(phi.group, conj.centralizer[1],
                                             induced_2cocycle(phi, conj, 1));
    return make_collection(phi.group, phi, {zero_rep(phi, conj, 0), simples[0]});
}

// Sparse table spec: per non-identity group element, images of each basis
// element as a single (index, coefficient) term.
struct TableSpec {
    int f;
    std::vector<std::pair<int, Cyclotomic>> images;  // images[i] = f acting on basis i
};

std::vector<std::vector<ActionVec>> expand_tables(int n, int dim, int identity,
                                                  const std::vector<TableSpec>& specs) {
    std::vector<std::vector<ActionVec>> t(n, std::vector<ActionVec>(dim));
    for (int i = 0; i < dim; ++i) t[identity][i] = ActionVec{{i, Cyclotomic(1)}};
    for (const auto& spec : specs)
        for (int i = 0; i < dim; ++i) t[spec.f][i] = ActionVec{{spec.images[i]}};
    return t;
}

QuiverAlgebraData gamma1_tables(const Cyclotomic& left_scalar) {
    Cochain3 phi = cyclic_cocycle(2, 1);
    FiniteGroup g = phi.group;
    HopfQuiver quiver = build_quiver(g, {{1, 1}});  // one arrow pair on the class of g
    std::vector<BasisElement> basis = {{1, 0, "X"}, {0, 1, "Y"}};
    auto left = expand_tables(2, 2, 0, {{1, {{1, left_scalar}, {0, left_scalar}}}});
    auto right = expand_tables(2, 2, 0, {{1, {{1, Cyclotomic(1)}, {0, Cyclotomic(-1)}}}});
    return make_quiver_algebra(
        quiver, from_action_tables(g, phi, std::move(basis), std::move(left),
                                   std::move(right)));
}

QuiverAlgebraData gamma2_tables(const Cyclotomic& s1, const Cyclotomic& s2) {
    Cochain3 phi = cyclic_cocycle(2, 1);
    FiniteGroup g = phi.group;
    HopfQuiver quiver = build_quiver(g, {{1, 2}});  // X1,X2,Y1,Y2
    std::vector<BasisElement> basis = {{1, 0, "X1"}, {1, 0, "X2"}, {0, 1, "Y1"}, {0, 1, "Y2"}};
    auto left = expand_tables(
        2, 4, 0, {{1, {{2, s1}, {3, s2}, {0, s1}, {1, s2}}}});
    auto right = expand_tables(
        2, 4, 0,
        {{1, {{2, Cyclotomic(1)}, {3, Cyclotomic(1)}, {0, Cyclotomic(-1)},
              {1, Cyclotomic(-1)}}}});
    return make_quiver_algebra(
        quiver, from_action_tables(g, phi, std::move(basis), std::move(left),
                                   std::move(right)));
}

QuiverAlgebraData z2_hopf_data() {
    AdmissibleCollection coll = z2_hopf_collection();
    HopfQuiver quiver = build_quiver(coll.group, {{1, 1}});
    return make_quiver_algebra(quiver, build_from_collection(coll));
}

QuiverAlgebraData z2_loop_data(int sign) {
    AdmissibleCollection coll = z2_loop_collection(sign);
    HopfQuiver quiver = build_quiver(coll.group, {{0, 1}});
    return make_quiver_algebra(quiver, build_from_collection(coll));
}

}  // namespace

bool is_group_preset(const std::string& name) {
    std::string n = lower(name);
    return n == "z2" || n == "z3" || n == "z4" || n == "s3";
}

FiniteGroup group(const std::string& name) {
    std::string n = lower(name);
    if (n == "z2") return cyclic_group(2);
    if (n == "z3") return cyclic_group(3);
    if (n == "z4") return cyclic_group(4);
    if (n == "s3") return symmetric_group_s3();
    throw error("unknown group preset '" + name + "'");
}

bool is_cocycle_preset(const std::string& name) {
    std::string n = lower(name);
    if (n.rfind("trivial:", 0) == 0) return is_group_preset(n.substr(8));
    if (n.size() < 3 || n[0] != 'z') return false;
    auto dash = n.find('-');
    return dash != std::string::npos;
}

Cochain3 cocycle(const std::string& name) {
    std::string n = lower(name);
    if (n.rfind("trivial:", 0) == 0) return trivial_cochain3(group(n.substr(8)));
    auto dash = n.find('-');
    if (n.empty() || n[0] != 'z' || dash == std::string::npos)
        throw error("unknown cocycle preset '" + name + "'");
    int order;
    try {
        order = std::stoi(n.substr(1, dash - 1));
    } catch (const std::exception&) {
        throw error("unknown cocycle preset '" + name + "'");
    }
    std::string kind = n.substr(dash + 1);
    if (kind == "trivial") return cyclic_cocycle(order, 0);
    if (kind == "nontrivial") return cyclic_cocycle(order, 1);
    if (!kind.empty() && kind[0] == 'q') {
        try {
            return cyclic_cocycle(order, std::stol(kind.substr(1)));
        } catch (const std::exception&) {
            throw error("unknown cocycle preset '" + name + "'");
        }
    }
    throw error("unknown cocycle preset '" + name + "'");
}

bool is_collection_preset(const std::string& name) {
    auto names = collection_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> collection_names() {
    return {"Z2:S+i", "Z2:S-i", "Z2:S+i+S-i", "Z2:2S+i", "Z2:2S-i",
            "Z2:loop+1", "Z2:loop-1", "Z2:hopf"};
}

AdmissibleCollection collection(const std::string& name) {
    if (name == "Z2:S+i") return z2_arrow_collection({+1});
    if (name == "Z2:S-i") return z2_arrow_collection({-1});
    if (name == "Z2:S+i+S-i") return z2_arrow_collection({+1, -1});
    if (name == "Z2:2S+i") return z2_arrow_collection({+1, +1});
    if (name == "Z2:2S-i") return z2_arrow_collection({-1, -1});
    if (name == "Z2:loop+1") return z2_loop_collection(+1);
    if (name == "Z2:loop-1") return z2_loop_collection(-1);
    if (name == "Z2:hopf") return z2_hopf_collection();
    throw error("unknown collection preset '" + name + "'");
}

bool is_algebra_preset(const std::string& name) {
    auto names = algebra_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> algebra_names() {
    return {"paper-5.3", "paper-5.5", "example-5.4", "example-5.5",
            "example-5.6", "z2-hopf", "z2-loop", "z2-loop-1"};
}

QuiverAlgebraData algebra_data(const std::string& name) {
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    if (name == "paper-5.3") return gamma1_tables(i);
    if (name == "paper-5.5") return gamma1_tables(-i);
    if (name == "example-5.4") return gamma2_tables(i, -i);
    if (name == "example-5.5") return gamma2_tables(i, i);
    if (name == "example-5.6") return gamma2_tables(-i, -i);
    if (name == "z2-hopf") return z2_hopf_data();
    if (name == "z2-loop") return z2_loop_data(+1);
    if (name == "z2-loop-1") return z2_loop_data(-1);
    throw error("unknown algebra preset '" + name + "'");
}

}  // namespace quasiq::presets
