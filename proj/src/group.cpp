#include "quasiq/group.hpp"

#include <algorithm>
#include <array>

#include "quasiq/error.hpp"

namespace quasiq {

int FiniteGroup::element_by_name(const std::string& n) const {
    for (int i = 0; i < order(); ++i)
        if (names[i] == n) return i;
    return -1;
}

void validate_group(FiniteGroup& g) {
    const int n = g.order();
    if (n == 0) throw error("group validation: empty table");
    if (g.names.size() != static_cast<size_t>(n))
        throw error("group validation: names/table size mismatch");
    for (int a = 0; a < n; ++a) {
        if (g.names[a].empty()) throw error("group validation: empty element name");
        for (int b = a + 1; b < n; ++b)
            if (g.names[a] == g.names[b])
                throw error("group validation: duplicate element name '" + g.names[a] + "'");
    }
    for (int a = 0; a < n; ++a) {
        if (g.table[a].size() != static_cast<size_t>(n))
            throw error("group validation: row " + std::to_string(a) + " has wrong length");
        for (int b = 0; b < n; ++b)
            if (g.table[a][b] < 0 || g.table[a][b] >= n)
                throw error("group validation: entry out of range at (" + std::to_string(a) +
                            "," + std::to_string(b) + ")");
    }
    // Closure: every row and column is a permutation.
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int b = 0; b < n; ++b) {
            if (seen_row[g.table[a][b]])
                throw error("group validation: row of '" + g.names[a] + "' is not a permutation");
            seen_row[g.table[a][b]] = true;
            if (seen_col[g.table[b][a]])
                throw error("group validation: column of '" + g.names[a] +
                            "' is not a permutation");
            seen_col[g.table[b][a]] = true;
        }
    }
    // Two-sided identity.
    g.identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a)
            if (g.table[e][a] != a || g.table[a][e] != a) { ok = false; break; }
        if (ok) { g.identity = e; break; }
    }
    if (g.identity < 0) throw error("group validation: no two-sided identity element");
    // Associativity.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
                    throw error("group validation: associativity fails at ('" + g.names[a] +
                                "','" + g.names[b] + "','" + g.names[c] + "')");
    // Inverses.
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.table[a][b] == g.identity && g.table[b][a] == g.identity) {
                g.inverse[a] = b;
                break;
            }
        if (g.inverse[a] < 0)
            throw error("group validation: element '" + g.names[a] + "' has no inverse");
    }
}

FiniteGroup make_group(std::vector<std::string> names, std::vector<std::vector<int>> table) {
    FiniteGroup g;
    g.names = std::move(names);
    g.table = std::move(table);
    validate_group(g);
    return g;
}

ConjugacyData conjugacy(const FiniteGroup& g) {
    const int n = g.order();
    ConjugacyData cd;
    cd.class_of.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        if (cd.class_of[a] >= 0) continue;
        std::vector<bool> in_class(n, false);
        for (int x = 0; x < n; ++x) in_class[g.mul(g.mul(x, a), g.inv(x))] = true;
        std::vector<int> cls;
        for (int b = 0; b < n; ++b)
            if (in_class[b]) cls.push_back(b);
        int idx = cd.num_classes();
        for (int b : cls) cd.class_of[b] = idx;
        cd.representative.push_back(cls[0]);
        cd.classes.push_back(std::move(cls));
    }
    for (int c = 0; c < cd.num_classes(); ++c) {
        int rep = cd.representative[c];
        std::vector<int> z;
        for (int x = 0; x < n; ++x)
            if (g.mul(x, rep) == g.mul(rep, x)) z.push_back(x);
        // For each class member, the least conjugator; the representative
        // itself gets the identity.
        std::vector<int> reps;
        for (int b : cd.classes[c]) {
            if (b == rep) {
                reps.push_back(g.identity);
                continue;
            }
            int found = -1;
            for (int x = 0; x < n; ++x)
                if (g.mul(g.mul(x, rep), g.inv(x)) == b) { found = x; break; }
            reps.push_back(found);
        }
        if (static_cast<int>(cd.classes[c].size()) * static_cast<int>(z.size()) != n)
            throw internal_error("class equation |C|*|Z_C| = |G| fails");
        cd.centralizer.push_back(std::move(z));
        cd.coset_reps.push_back(std::move(reps));
    }
    return cd;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw error("cyclic group order must be positive");
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    return make_group(std::move(names), std::move(table));
}

FiniteGroup symmetric_group_s3() {
    // Permutations of {0,1,2} listed as images (p[0],p[1],p[2]).
    const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2},  // e
        {1, 0, 2},  // (12)
        {2, 1, 0},  // (13)
        {0, 2, 1},  // (23)
        {1, 2, 0},  // (123): 0->1, 1->2, 2->0
        {2, 0, 1},  // (132)
    }};
    std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    auto compose = [&](int a, int b) {  // (a*b)(x) = a(b(x))
        std::array<int, 3> r{};
        for (int x = 0; x < 3; ++x) r[x] = perms[a][perms[b][x]];
        for (int i = 0; i < 6; ++i)
            if (perms[i] == r) return i;
        throw internal_error("s3 composition fell outside the table");
    };
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) table[a][b] = compose(a, b);
    return make_group(std::move(names), std::move(table));
}

}  // namespace quasiq
