#pragma once

#include <map>
#include <string>
#include <vector>

#include "quasiq/bimodule.hpp"

namespace quasiq {

struct Arrow {
    int source;
    int target;
    int cls;      // conjugacy class index
    int cls_elt;  // the class element c with target = c * source
    int index;    // which of the R_C parallel arrows
    std::string name;
};

// Hopf quiver Q(G, R): vertices are the group elements and each x carries
// R_C arrows x -> cx per class element c. Arrow order is (x, class, c, i).
struct HopfQuiver {
    FiniteGroup group;
    ConjugacyData conj;
    std::vector<int> ramification;            // per class
    std::vector<Arrow> arrows;
    std::vector<std::vector<int>> out_arrows;  // per vertex

    int arrow_by_name(const std::string& name) const;  // -1 when absent
};

HopfQuiver build_quiver(const FiniteGroup& group, const std::map<int, int>& ram_by_class);

// A path: base vertex plus arrows in traversal order (first arrow leaves
// the source). Rendered target-to-source, so "YX" walks X then Y.
struct Path {
    int source = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    friend bool operator==(const Path& a, const Path& b) {
        return a.source == b.source && a.arrows == b.arrows;
    }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.source != b.source) return a.source < b.source;
        return a.arrows < b.arrows;
    }
};

Path vertex_path(int v);
int path_target(const HopfQuiver& q, const Path& p);
int path_vertex_after(const HopfQuiver& q, const Path& p, int steps);
std::string path_str(const HopfQuiver& q, const Path& p);
Path parse_path(const HopfQuiver& q, const std::string& text);

std::vector<Path> paths_of_length(const HopfQuiver& q, int len);

// All splittings p = (second)(first); returns (second, first) pairs from
// the source-end split to the target-end split, endpoints as vertices.
std::vector<std::pair<Path, Path>> coproduct(const HopfQuiver& q, const Path& p);

// Formal linear combination of paths, no explicit zeros.
using PathVector = std::map<Path, Cyclotomic>;

PathVector path_vector(const Path& p, const Cyclotomic& c = Cyclotomic(1));
void pv_accumulate(PathVector& dst, const Path& p, const Cyclotomic& c);
PathVector pv_add(const PathVector& a, const PathVector& b);
PathVector pv_scaled(const PathVector& a, const Cyclotomic& c);
std::string pv_str(const HopfQuiver& q, const PathVector& v);

// The quiver together with a Majid bimodule on its arrow span; the basis
// must be aligned with the arrow list, bidegree (target, source).
struct QuiverAlgebraData {
    HopfQuiver quiver;
    MajidBimodule bimodule;

    const Cochain3& phi() const { return bimodule.phi; }
};

QuiverAlgebraData make_quiver_algebra(HopfQuiver quiver, MajidBimodule bimodule);

// Reads the ramification off the component dimensions and pairs the
// bimodule with its Hopf quiver. The basis must follow the canonical arrow
// order (source, class, class element, index).
QuiverAlgebraData algebra_from_bimodule(MajidBimodule bimodule);

// Quantum shuffle product: sum over thin splits, one bimodule action per
// slot, concatenated. Vertices multiply as group elements.
PathVector shuffle_product(const QuiverAlgebraData& data, const PathVector& a,
                           const PathVector& b);
PathVector shuffle_product(const QuiverAlgebraData& data, const Path& a, const Path& b);

// Memo for repeated products over a fixed structure. Bilinear expansions in
// the subalgebra generator share most of their single-path products.
class ShuffleCache {
  public:
    explicit ShuffleCache(const QuiverAlgebraData& data) : data_(data) {}
    PathVector product(const PathVector& a, const PathVector& b);

  private:
    const QuiverAlgebraData& data_;
    std::map<std::pair<Path, Path>, PathVector> memo_;
};

// Left-normed power ((p.p).p)...p; requires n >= 1.
PathVector power_left_normed(const QuiverAlgebraData& data, const PathVector& p, int n);

// Verifies quasi-associativity with the reassociator concentrated in degree
// zero, comultiplicativity of the product, and the counit law, for the
// given triple. Throws with a witness on violation.
void majid_axiom_check(const QuiverAlgebraData& data, const PathVector& a, const PathVector& b,
                       const PathVector& c);

}  // namespace quasiq
