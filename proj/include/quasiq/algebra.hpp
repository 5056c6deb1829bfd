#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quasiq/quiver.hpp"

namespace quasiq {

// Graded span inside the path coalgebra: per degree, the full path list of
// that length (the coordinate system) and a reduced-echelon row basis.
struct GradedSubspace {
    std::vector<std::vector<Path>> path_basis;  // per degree 0..D
    std::vector<EchelonBasis> rows;             // per degree 0..D
    std::vector<int> dims;                      // ranks per degree

    int max_degree() const { return static_cast<int>(dims.size()) - 1; }
    int total_dim() const;
    PathVector row_as_path_vector(int degree, size_t row) const;
    std::vector<Cyclotomic> coordinates(int degree, const PathVector& v) const;
};

// Subalgebra generated in degrees 0 and 1: vertices and arrows, then all
// pairwise products degree by degree, closed under the degree-zero actions
// to a fixed point.
GradedSubspace generated_subalgebra(const QuiverAlgebraData& data, int max_degree);

struct BasisReport {
    std::vector<int> dims;
    int total = 0;
    std::vector<std::vector<std::string>> basis;  // rendered rows per degree

    bool candidate_checked = false;
    bool candidate_independent = false;
    bool candidate_spanning = false;
    std::string dependency_witness;  // names the first dependent candidate
};

// Reports dimensions and a canonical basis; when candidates are supplied,
// verifies them independent and spanning per degree by rank test.
BasisReport basis_report(const QuiverAlgebraData& data, const GradedSubspace& sub,
                         const std::vector<std::pair<std::string, PathVector>>* candidates);

struct PowerGrowthCheck {
    std::string generator;              // rendered base path
    std::vector<int> exponents;
    std::vector<bool> factorial_lead;   // coefficient on the repeated path is s!
    std::vector<bool> nonzero;          // whole power is nonzero
    bool all_factorial() const;
};

struct FinitenessReport {
    std::vector<int> dims;
    std::optional<int> first_zero_degree;  // start of an all-zero tail
    std::vector<PowerGrowthCheck> obstructions;
    std::string verdict;  // "finite through degree D" | "infinite-dimensional evidence" | "inconclusive"
    std::string caveat;
};

// Dimension table plus the growth obstructions (loop powers and the
// alternating two-arrow path on two-parallel-arrow quivers over Z_2).
FinitenessReport finiteness_evidence(const QuiverAlgebraData& data, int max_degree);

// Bounded exhaustive search for a gauge transformation F with
// twist(phi1, F) = phi2 and M1_F isomorphic to M2. Free values range over
// roots of unity of order dividing n_max.
std::optional<Cochain2> gauge_equivalence_search(const MajidBimodule& m1,
                                                 const MajidBimodule& m2, long n_max);

struct HopfReport {
    bool is_coboundary = false;
    std::optional<Cochain2> witness;
    bool hopf_gauge_valid = false;  // the F^{-1}-gauge of the bimodule has trivial reassociator
    std::string verdict;
};

// Detects whether the graded Majid algebra is gauge equivalent to a Hopf
// algebra: solves for a coboundary witness and, when found, exhibits the
// trivial-reassociator gauge of the bimodule.
HopfReport hopf_detection(const QuiverAlgebraData& data);

}  // namespace quasiq
