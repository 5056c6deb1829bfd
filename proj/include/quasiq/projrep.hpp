#pragma once

#include <vector>

#include "quasiq/cohomology.hpp"
#include "quasiq/linalg.hpp"

namespace quasiq {

// Projective (alpha-)representation of a subgroup: rho(e)rho(f) =
// alpha(e,f) rho(ef) with rho(identity) = Id. Matrices are stored aligned
// with the sorted subgroup list carried by the cocycle.
struct ProjRep {
    Cochain2 cocycle;              // lives on the subgroup
    int dim = 0;
    std::vector<Matrix> matrices;  // aligned with cocycle.elements

    const std::vector<int>& subgroup() const { return cocycle.elements; }
    const Matrix& rho(int elt) const { return matrices[cocycle.pos(elt)]; }
};

// Exhaustively checks both defining identities and invertibility; throws
// naming the offending element or pair.
void validate_projrep(const ProjRep& r);

// All 1-dimensional alpha-representations of a cyclic subgroup: the
// eigenvalues are the m-th roots of prod_j alpha(z, z^j) for a generator z
// of order m. Deterministic order (ascending power of the first solution).
std::vector<ProjRep> simples_of_twisted_cyclic(const FiniteGroup& group,
                                               const std::vector<int>& subgroup,
                                               const Cochain2& alpha);

// Block-diagonal sum; requires identical subgroup and cocycle.
ProjRep direct_sum(const ProjRep& a, const ProjRep& b);

// True iff an invertible intertwiner phi with phi rho1 = rho2 phi exists.
// Cocycles must agree (throws otherwise); dimension mismatch gives false.
bool linear_equivalence(const ProjRep& a, const ProjRep& b);

// A choice of projective representation per conjugacy class, with each
// cocycle pinned to the induced 2-cocycle of phi. Classes may carry the
// zero representation (dim 0).
struct AdmissibleCollection {
    FiniteGroup group;
    ConjugacyData conj;
    Cochain3 phi;
    std::vector<ProjRep> reps;  // aligned with conj.classes

    int dim_of_class(int cls) const { return reps[cls].dim; }
};

// Checks every rep against the induced 2-cocycle of phi, entrywise.
void validate_collection(const AdmissibleCollection& coll);

AdmissibleCollection make_collection(FiniteGroup group, Cochain3 phi,
                                     std::vector<ProjRep> reps);

// Scales each representation by the uniform scalars mu^F_C and twists phi;
// the result is validated against the induced cocycles of the twisted phi.
AdmissibleCollection gauge_transform_collection(const AdmissibleCollection& coll,
                                                const Cochain2& gauge);

}  // namespace quasiq
