#pragma once

#include <string>
#include <vector>

namespace quasiq {

// Finite group presented by its full multiplication table. Elements are
// dense indices 0..n-1; identity and inverses are derived by validation.
struct FiniteGroup {
    std::vector<std::string> names;
    std::vector<std::vector<int>> table;  // table[a][b] = index of a*b
    int identity = -1;
    std::vector<int> inverse;

    int order() const { return static_cast<int>(table.size()); }
    int mul(int a, int b) const { return table[a][b]; }
    int mul(int a, int b, int c) const { return table[table[a][b]][c]; }
    int inv(int a) const { return inverse[a]; }
    const std::string& name(int a) const { return names[a]; }
    int element_by_name(const std::string& n) const;  // -1 when absent

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.table == b.table && a.names == b.names;
    }
};

// Verifies closure, associativity, two-sided identity and inverses by
// exhaustive check, and populates the derived fields. Throws with the
// offending element or triple on failure.
void validate_group(FiniteGroup& g);

// Constructs and validates in one step.
FiniteGroup make_group(std::vector<std::string> names, std::vector<std::vector<int>> table);

// Conjugacy classes, centralizers and left coset representatives.
//
// classes[c] is sorted ascending, so classes[c][0] is the chosen
// representative g(C) (least index). coset_reps[c][j] conjugates g(C) to
// classes[c][j]; the first entry is the identity.
struct ConjugacyData {
    std::vector<std::vector<int>> classes;
    std::vector<int> representative;          // per class, = classes[c][0]
    std::vector<std::vector<int>> centralizer;  // per class, sorted, of g(C)
    std::vector<std::vector<int>> coset_reps;   // per class, aligned with classes[c]
    std::vector<int> class_of;                // per element

    int num_classes() const { return static_cast<int>(classes.size()); }
};

ConjugacyData conjugacy(const FiniteGroup& g);

// Built-in groups.
FiniteGroup cyclic_group(int n);        // names e, g, g^2, ...
FiniteGroup symmetric_group_s3();       // names e, (12), (13), (23), (123), (132)

}  // namespace quasiq
