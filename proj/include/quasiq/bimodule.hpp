#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quasiq/linalg.hpp"
#include "quasiq/projrep.hpp"

namespace quasiq {

// Sparse vector over the bimodule basis: (index, coefficient) pairs sorted
// by index with no explicit zeros.
using ActionVec = std::vector<std::pair<int, Cyclotomic>>;

struct BasisElement {
    int left_deg;
    int right_deg;
    std::string label;
};

// G-bigraded space with quasi-actions of the group on both sides. The
// bicomodule structure is implicit: each basis element is homogeneous of
// bidegree (left_deg, right_deg), so the coactions are diagonal.
struct MajidBimodule {
    FiniteGroup group;
    ConjugacyData conj;
    Cochain3 phi;
    std::vector<BasisElement> basis;
    std::vector<std::vector<ActionVec>> left;   // left[f][i] = f . m_i
    std::vector<std::vector<ActionVec>> right;  // right[f][i] = m_i . f

    int dim() const { return static_cast<int>(basis.size()); }
    std::vector<Cyclotomic> apply_left(int f, const std::vector<Cyclotomic>& v) const;
    std::vector<Cyclotomic> apply_right(const std::vector<Cyclotomic>& v, int f) const;
    std::vector<Cyclotomic> unit_vector(int i) const;
    int component_dim(int left_deg, int right_deg) const;
};

// Equality of the underlying data (bidegrees and both action tables);
// labels are display-only and ignored.
bool same_bimodule(const MajidBimodule& a, const MajidBimodule& b);

// Exhaustive verification: unit action, bidegree compatibility, the three
// iterated-action laws, and constancy of component dimensions along
// conjugacy classes. Throws naming the violated law and a witness.
void verify_axioms(const MajidBimodule& m);

// Builds the bimodule induced by an admissible collection. The basis is
// indexed by (class, coset representative, representation index, group
// element); the output always passes verify_axioms.
MajidBimodule build_from_collection(const AdmissibleCollection& coll);

// Builds from explicit action tables; verify_axioms runs automatically.
MajidBimodule from_action_tables(FiniteGroup group, Cochain3 phi,
                                 std::vector<BasisElement> basis,
                                 std::vector<std::vector<ActionVec>> left,
                                 std::vector<std::vector<ActionVec>> right);

// Right coinvariants with the conjugate action f > v = (f.v).f^{-1}.
// Construction checks the degree rule and the twisted composition law
// against the independently computed induced scalars.
struct TwistedCrossedModule {
    std::vector<int> carrier;  // bimodule basis indices with right degree e
    std::vector<std::vector<ActionVec>> action;  // action[f][pos], over carrier positions
};
TwistedCrossedModule conjugate_action_module(const MajidBimodule& m);

// Inverse functor: reads the projective representation of each centralizer
// off the coinvariants. Matrices are exact in the canonical basis.
AdmissibleCollection extract_collection(const MajidBimodule& m);

// Rescales both actions by the gauge transformation and twists the
// reassociator; the result is verified against the twisted cocycle.
MajidBimodule gauge_transform_bimodule(const MajidBimodule& m, const Cochain2& gauge);

// The mutually inverse maps trivializing the right Majid module structure,
// as matrices between M and (coinvariants x G).
struct RightTrivialization {
    std::vector<std::pair<int, int>> target_basis;  // (carrier position, group element)
    Matrix zeta;  // M -> coinvariants x kG
    Matrix xi;    // coinvariants x kG -> M
};
RightTrivialization trivialize_right(const MajidBimodule& m);

// True iff the extracted collections are classwise linearly equivalent.
// Requires same group and identical reassociator.
bool isomorphic(const MajidBimodule& a, const MajidBimodule& b);

}  // namespace quasiq
