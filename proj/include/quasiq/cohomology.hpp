#pragma once

#include <map>
#include <optional>
#include <vector>

#include "quasiq/cyclotomic.hpp"
#include "quasiq/group.hpp"

namespace quasiq {

// Normalized 2-cochain with nonzero values on a subgroup (often all of G).
// Gauge transformations are exactly the Cochain2 objects on the full group.
struct Cochain2 {
    FiniteGroup group;          // ambient group
    std::vector<int> elements;  // sorted, contains the identity
    std::vector<Cyclotomic> values;

    int size() const { return static_cast<int>(elements.size()); }
    int pos(int elt) const;
    const Cyclotomic& at(int e, int f) const;
    bool on_full_group() const { return size() == group.order(); }

    friend bool operator==(const Cochain2& a, const Cochain2& b) {
        return a.elements == b.elements && a.values == b.values;
    }
};

// Checks normalization (value 1 whenever an argument is the identity) and
// that every value is nonzero.
Cochain2 make_cochain2(FiniteGroup group, std::vector<int> elements,
                       std::vector<Cyclotomic> values);
Cochain2 trivial_cochain2(const FiniteGroup& group, std::vector<int> elements);
Cochain2 trivial_gauge(const FiniteGroup& group);

Cochain2 cochain2_product(const Cochain2& a, const Cochain2& b);
Cochain2 cochain2_inverse(const Cochain2& a);

// Normalized 3-cochain on the whole group with nonzero values.
struct Cochain3 {
    FiniteGroup group;
    std::vector<Cyclotomic> values;  // n^3, index ((a*n)+b)*n+c

    const Cyclotomic& at(int a, int b, int c) const {
        const int n = group.order();
        return values[(static_cast<size_t>(a) * n + b) * n + c];
    }
    Cyclotomic& at(int a, int b, int c) {
        const int n = group.order();
        return values[(static_cast<size_t>(a) * n + b) * n + c];
    }

    friend bool operator==(const Cochain3& a, const Cochain3& b) {
        return a.values == b.values && a.group == b.group;
    }
};

Cochain3 make_cochain3(FiniteGroup group, std::vector<Cyclotomic> values);
Cochain3 trivial_cochain3(const FiniteGroup& group);

// Exhaustive check of the 3-cocycle identity over all quadruples; throws
// naming the first failing quadruple.
void validate_3cocycle(const Cochain3& phi);

// The standard generator family on the cyclic group Z_n:
//   Phi_q(g^a, g^b, g^c) = zeta_n^{q a floor((b+c)/n)}.
Cochain3 cyclic_cocycle(int n, long q);

// Phi_F = Phi * dF, the gauge twist of a 3-cocycle.
Cochain3 twist_3cocycle(const Cochain3& phi, const Cochain2& gauge);

// dF as a 3-cocycle (twist of the trivial one).
Cochain3 coboundary_of(const Cochain2& gauge);

// Finds a gauge transformation F with dF = phi, or nullopt when phi is not
// a coboundary. Requires all values to be roots of unity; works on the
// exponent lattice by integer elimination with gcd pivoting.
std::optional<Cochain2> solve_coboundary(const Cochain3& phi);

// The scalar function tying iterated conjugate actions together:
// e>(f>v) = phi_tilde(e,f,g) (ef)>v on left-degree-g vectors.
Cyclotomic phi_tilde(const Cochain3& phi, int e, int f, int g);

// Restriction (e,f) -> phi_tilde(e,f,g(C)) to the centralizer Z_C; the
// result is verified to satisfy the 2-cocycle identity on Z_C.
Cochain2 induced_2cocycle(const Cochain3& phi, const ConjugacyData& conj, int cls);

// Uniform projective-equivalence scalars mu^F_C on Z_C.
std::map<int, Cyclotomic> mu_uniform(const Cochain2& gauge, const ConjugacyData& conj, int cls);

// Quasi-antipode data of (kG, Phi): S(g) = g^{-1}, alpha = 1,
// beta(g) = Phi(g, g^{-1}, g)^{-1}.
struct QuasiAntipode {
    std::vector<int> antipode;
    std::vector<Cyclotomic> alpha;
    std::vector<Cyclotomic> beta;
};
QuasiAntipode quasi_antipode(const Cochain3& phi);

// The gauged beta on group-likes admits two published readings whose
// middle factor differs (alpha vs beta). Both are computable on
// group-likes; callers report both when they disagree.
struct GaugedBetaReadings {
    std::vector<Cyclotomic> with_alpha;  // F^{-1}(h, S(h)) * alpha(h)
    std::vector<Cyclotomic> with_beta;   // F^{-1}(h, S(h)) * beta(h)
};
GaugedBetaReadings gauge_beta_readings(const Cochain3& phi, const Cochain2& gauge);

}  // namespace quasiq
