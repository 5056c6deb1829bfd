#include "quasiq/projrep.hpp"

#include <algorithm>

#include "quasiq/error.hpp"

namespace quasiq {

void validate_projrep(const ProjRep& r) {
    const FiniteGroup& g = r.cocycle.group;
    const auto& sub = r.subgroup();
    if (r.matrices.size() != sub.size())
        throw error("projective representation: matrix table size mismatch");
    for (size_t i = 0; i < sub.size(); ++i)
        if (r.matrices[i].rows() != static_cast<size_t>(r.dim) ||
            r.matrices[i].cols() != static_cast<size_t>(r.dim))
            throw error("projective representation: matrix of '" + g.name(sub[i]) +
                        "' has wrong shape");
    if (r.dim == 0) return;  // empty matrices, nothing else to check
    if (!r.rho(g.identity).is_identity())
        throw error("projective representation: rho(identity) is not the identity matrix");
    for (int e : sub) {
        if (r.rho(e).rank() != static_cast<size_t>(r.dim))
            throw error("projective representation: rho('" + g.name(e) + "') is singular");
        for (int f : sub) {
            int ef = g.mul(e, f);
            if (!std::binary_search(sub.begin(), sub.end(), ef))
                throw error("projective representation: domain not closed at ('" + g.name(e) +
                            "','" + g.name(f) + "')");
            if (r.rho(e) * r.rho(f) != r.rho(ef).scaled(r.cocycle.at(e, f)))
                throw error("projective representation: product rule fails at ('" + g.name(e) +
                            "','" + g.name(f) + "')");
        }
    }
}

std::vector<ProjRep> simples_of_twisted_cyclic(const FiniteGroup& group,
                                               const std::vector<int>& subgroup,
                                               const Cochain2& alpha) {
    const int m = static_cast<int>(subgroup.size());
    // Find the least generator.
    int gen = -1;
    std::vector<int> powers;  // gen^0, gen^1, ...
    for (int z : subgroup) {
        powers.clear();
        int acc = group.identity;
        for (int j = 0; j < m; ++j) {
            powers.push_back(acc);
            acc = group.mul(acc, z);
        }
        std::vector<int> sorted = powers;
        std::sort(sorted.begin(), sorted.end());
        if (acc == group.identity && sorted == subgroup) { gen = z; break; }
    }
    if (gen < 0) throw error("classification only implemented for cyclic centralizers");

    Cyclotomic prod(1);
    for (int j = 0; j < m; ++j) prod *= alpha.at(gen, powers[j]);
    auto ru = prod.as_root_of_unity();
    if (!ru) throw error("twisted cyclic classification requires torsion cocycle values");
    long n = ru->first, k = ru->second;

    std::vector<ProjRep> out;
    for (long j = 0; j < m; ++j) {
        // lambda^m = zeta_n^k, the m solutions are zeta_{mn}^{k + jn}.
        Cyclotomic lambda = Cyclotomic::root_of_unity(m * n, k + j * n);
        ProjRep r;
        r.cocycle = alpha;
        r.dim = 1;
        r.matrices.assign(subgroup.size(), Matrix(1, 1));
        Cyclotomic cur(1);
        for (int p = 0; p < m; ++p) {
            r.matrices[alpha.pos(powers[p])].at(0, 0) = cur;
            cur = lambda * cur / alpha.at(gen, powers[p]);
        }
        validate_projrep(r);
        out.push_back(std::move(r));
    }
    return out;
}

ProjRep direct_sum(const ProjRep& a, const ProjRep& b) {
    if (a.subgroup() != b.subgroup() || !(a.cocycle == b.cocycle))
        throw error("direct sum requires identical subgroup and cocycle");
    ProjRep r;
    r.cocycle = a.cocycle;
    r.dim = a.dim + b.dim;
    for (size_t i = 0; i < a.matrices.size(); ++i) {
        Matrix m(r.dim, r.dim);
        for (int p = 0; p < a.dim; ++p)
            for (int q = 0; q < a.dim; ++q) m.at(p, q) = a.matrices[i].at(p, q);
        for (int p = 0; p < b.dim; ++p)
            for (int q = 0; q < b.dim; ++q) m.at(a.dim + p, a.dim + q) = b.matrices[i].at(p, q);
        r.matrices.push_back(std::move(m));
    }
    return r;
}

namespace {

// Basis of the intertwiner space { phi : phi rho1(e) = rho2(e) phi }.
std::vector<Matrix> intertwiner_basis(const ProjRep& a, const ProjRep& b) {
    const int d1 = a.dim, d2 = b.dim;
    const auto& sub = a.subgroup();
    // Unknown phi is d2 x d1; equations per element and entry.
    Matrix sys(sub.size() * d2 * d1, d2 * d1);
    size_t row = 0;
    for (int e : sub) {
        const Matrix& r1 = a.rho(e);
        const Matrix& r2 = b.rho(e);
        for (int i = 0; i < d2; ++i)
            for (int j = 0; j < d1; ++j) {
                // (phi r1)_{ij} - (r2 phi)_{ij} = 0
                for (int k = 0; k < d1; ++k) sys.at(row, i * d1 + k) += r1.at(k, j);
                for (int k = 0; k < d2; ++k) sys.at(row, k * d1 + j) -= r2.at(i, k);
                ++row;
            }
    }
    std::vector<Matrix> basis;
    for (const auto& v : sys.nullspace()) {
        Matrix m(d2, d1);
        for (int i = 0; i < d2; ++i)
            for (int j = 0; j < d1; ++j) m.at(i, j) = v[i * d1 + j];
        basis.push_back(std::move(m));
    }
    return basis;
}

bool has_invertible_combination(const std::vector<Matrix>& basis, int dim) {
    if (basis.empty()) return false;
    // Deterministic sweep along the moment curve (1, t, t^2, ...).
    for (long t = 1; t <= static_cast<long>(dim) * dim; ++t) {
        Matrix m(dim, dim);
        Cyclotomic w(1);
        for (const auto& bmat : basis) {
            m = m + bmat.scaled(w);
            w = w * Cyclotomic(t);
        }
        if (!m.det().is_zero()) return true;
    }
    if (dim > 3) return false;
    // Exhaustive grid for small dimensions: a polynomial of per-variable
    // degree <= dim vanishing on {0..dim}^k is identically zero.
    std::vector<long> c(basis.size(), 0);
    for (;;) {
        Matrix m(dim, dim);
        for (size_t i = 0; i < basis.size(); ++i)
            if (c[i] != 0) m = m + basis[i].scaled(Cyclotomic(c[i]));
        if (!m.det().is_zero()) return true;
        size_t i = 0;
        while (i < c.size() && c[i] == dim) c[i++] = 0;
        if (i == c.size()) break;
        ++c[i];
    }
    return false;
}

}  // namespace

bool linear_equivalence(const ProjRep& a, const ProjRep& b) {
    if (a.subgroup() != b.subgroup())
        throw error("linear equivalence requires the same subgroup");
    if (!(a.cocycle == b.cocycle)) throw error("cocycle mismatch in linear equivalence");
    if (a.dim != b.dim) return false;
    if (a.dim == 0) return true;
    return has_invertible_combination(intertwiner_basis(a, b), a.dim);
}

void validate_collection(const AdmissibleCollection& coll) {
    for (int c = 0; c < coll.conj.num_classes(); ++c) {
        Cochain2 induced = induced_2cocycle(coll.phi, coll.conj, c);
        if (!(coll.reps[c].cocycle == induced))
            throw error("collection cocycle on class of '" +
                        coll.group.name(coll.conj.representative[c]) +
                        "' differs from the induced 2-cocycle");
        validate_projrep(coll.reps[c]);
    }
}

AdmissibleCollection make_collection(FiniteGroup group, Cochain3 phi,
                                     std::vector<ProjRep> reps) {
    AdmissibleCollection coll{group, conjugacy(group), std::move(phi), std::move(reps)};
    if (coll.reps.size() != static_cast<size_t>(coll.conj.num_classes()))
        throw error("collection must carry one representation per conjugacy class");
    validate_collection(coll);
    return coll;
}

AdmissibleCollection gauge_transform_collection(const AdmissibleCollection& coll,
                                                const Cochain2& gauge) {
    AdmissibleCollection out = coll;
    out.phi = twist_3cocycle(coll.phi, gauge);
    for (int c = 0; c < coll.conj.num_classes(); ++c) {
        auto mu = mu_uniform(gauge, coll.conj, c);
        ProjRep& r = out.reps[c];
        r.cocycle = induced_2cocycle(out.phi, out.conj, c);
        for (size_t i = 0; i < r.matrices.size(); ++i)
            r.matrices[i] = coll.reps[c].matrices[i].scaled(mu.at(r.subgroup()[i]));
    }
    try {
        validate_collection(out);
    } catch (const error& e) {
        throw internal_error(std::string("gauged collection failed validation: ") + e.what());
    }
    return out;
}

}  // namespace quasiq
