#include "quasiq/quiver.hpp"

#include <algorithm>
#include <functional>

#include "quasiq/error.hpp"

namespace quasiq {

namespace {

// Arrow display names. On Z_2 the traditional letters are used (X: e->g,
// Y: g->e, U: loop at e, W: loop at g), numbered only when parallel arrows
// exist; other groups get positional names a1, a2, ...
std::string arrow_name(const FiniteGroup& g, int source, int target, int index, int multiplicity,
                       int global_index) {
    if (g.order() == 2) {
        std::string base;
        if (source == g.identity && target != g.identity) base = "X";
        else if (source != g.identity && target == g.identity) base = "Y";
        else if (source == g.identity) base = "U";
        else base = "W";
        if (multiplicity > 1) base += std::to_string(index + 1);
        return base;
    }
    return "a" + std::to_string(global_index + 1);
}

}  // namespace

int HopfQuiver::arrow_by_name(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return static_cast<int>(i);
    return -1;
}

HopfQuiver build_quiver(const FiniteGroup& group, const std::map<int, int>& ram_by_class) {
    HopfQuiver q;
    q.group = group;
    q.conj = conjugacy(group);
    q.ramification.assign(q.conj.num_classes(), 0);
    for (const auto& [cls, r] : ram_by_class) {
        if (cls < 0 || cls >= q.conj.num_classes())
            throw error("ramification names an unknown conjugacy class");
        if (r < 0) throw error("ramification coefficients must be non-negative");
        q.ramification[cls] = r;
    }
    const int n = group.order();
    for (int x = 0; x < n; ++x)
        for (int c = 0; c < q.conj.num_classes(); ++c)
            for (int ce : q.conj.classes[c])
                for (int i = 0; i < q.ramification[c]; ++i) {
                    Arrow a;
                    a.source = x;
                    a.target = group.mul(ce, x);
                    a.cls = c;
                    a.cls_elt = ce;
                    a.index = i;
                    a.name = arrow_name(group, a.source, a.target, i, q.ramification[c],
                                        static_cast<int>(q.arrows.size()));
                    q.arrows.push_back(std::move(a));
                }
    q.out_arrows.assign(n, {});
    for (size_t i = 0; i < q.arrows.size(); ++i)
        q.out_arrows[q.arrows[i].source].push_back(static_cast<int>(i));
    return q;
}

Path vertex_path(int v) { return Path{v, {}}; }

int path_target(const HopfQuiver& q, const Path& p) {
    return path_vertex_after(q, p, p.length());
}

int path_vertex_after(const HopfQuiver& q, const Path& p, int steps) {
    int v = p.source;
    for (int i = 0; i < steps; ++i) v = q.arrows[p.arrows[i]].target;
    return v;
}

std::string path_str(const HopfQuiver& q, const Path& p) {
    if (p.length() == 0) return q.group.name(p.source);
    std::string s;
    for (int i = p.length() - 1; i >= 0; --i) s += q.arrows[p.arrows[i]].name;
    return s;
}

Path parse_path(const HopfQuiver& q, const std::string& text) {
    if (text.empty()) throw error("empty path literal");
    int v = q.group.element_by_name(text);
    if (v >= 0) return vertex_path(v);
    // Longest-match tokenization, leftmost token is the last arrow walked.
    std::vector<std::string> names;
    for (const auto& a : q.arrows) names.push_back(a.name);
    std::sort(names.begin(), names.end(),
              [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
    std::vector<int> display_order;
    size_t pos = 0;
    while (pos < text.size()) {
        bool matched = false;
        for (const auto& name : names) {
            if (text.compare(pos, name.size(), name) == 0) {
                display_order.push_back(q.arrow_by_name(name));
                pos += name.size();
                matched = true;
                break;
            }
        }
        if (!matched) throw error("cannot parse path literal '" + text + "'");
    }
    Path p;
    p.arrows.assign(display_order.rbegin(), display_order.rend());
    p.source = q.arrows[p.arrows[0]].source;
    for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (q.arrows[p.arrows[i]].target != q.arrows[p.arrows[i + 1]].source)
            throw error("path literal '" + text + "' is not composable");
    return p;
}

std::vector<Path> paths_of_length(const HopfQuiver& q, int len) {
    if (len < 0) throw error("path length must be non-negative");
    std::vector<Path> out;
    std::function<void(Path&, int)> extend = [&](Path& p, int remaining) {
        if (remaining == 0) {
            out.push_back(p);
            return;
        }
        int v = path_target(q, p);
        for (int a : q.out_arrows[v]) {
            p.arrows.push_back(a);
            extend(p, remaining - 1);
            p.arrows.pop_back();
        }
    };
    for (int v = 0; v < q.group.order(); ++v) {
        Path p = vertex_path(v);
        extend(p, len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Path, Path>> coproduct(const HopfQuiver& q, const Path& p) {
    std::vector<std::pair<Path, Path>> out;
    for (int j = 0; j <= p.length(); ++j) {
        Path first{p.source, {p.arrows.begin(), p.arrows.begin() + j}};
        Path second{path_vertex_after(q, p, j), {p.arrows.begin() + j, p.arrows.end()}};
        out.emplace_back(second, first);
    }
    return out;
}

PathVector path_vector(const Path& p, const Cyclotomic& c) {
    PathVector v;
    if (!c.is_zero()) v[p] = c;
    return v;
}

void pv_accumulate(PathVector& dst, const Path& p, const Cyclotomic& c) {
    auto it = dst.find(p);
    if (it == dst.end()) {
        if (!c.is_zero()) dst.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
}

PathVector pv_add(const PathVector& a, const PathVector& b) {
    PathVector out = a;
    for (const auto& [p, c] : b) pv_accumulate(out, p, c);
    return out;
}

PathVector pv_scaled(const PathVector& a, const Cyclotomic& c) {
    PathVector out;
    if (c.is_zero()) return out;
    for (const auto& [p, x] : a) out[p] = x * c;
    return out;
}

std::string pv_str(const HopfQuiver& q, const PathVector& v) {
    if (v.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : v) {
        std::string cs = c.str();
        bool negated = false;
        if (!first && cs.size() > 1 && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
            cs.find('-', 1) == std::string::npos) {
            cs = cs.substr(1);
            negated = true;
        }
        std::string term;
        if (cs == "1") {
            term = path_str(q, p);
        } else if (cs == "-1") {
            term = "-" + path_str(q, p);
        } else {
            bool composite = cs.find('+', 1) != std::string::npos ||
                             cs.find('-', 1) != std::string::npos;
            term = (composite ? "(" + cs + ")" : cs) + "*" + path_str(q, p);
        }
        if (first) {
            out = term;
            first = false;
        } else {
            out += negated ? " - " + term : " + " + term;
        }
    }
    return out;
}

QuiverAlgebraData make_quiver_algebra(HopfQuiver quiver, MajidBimodule bimodule) {
    if (!(quiver.group == bimodule.group))
        throw error("quiver and bimodule must share the group");
    if (bimodule.dim() != static_cast<int>(quiver.arrows.size()))
        throw error("bimodule basis must be the arrow set");
    for (size_t i = 0; i < quiver.arrows.size(); ++i) {
        if (bimodule.basis[i].left_deg != quiver.arrows[i].target ||
            bimodule.basis[i].right_deg != quiver.arrows[i].source)
            throw error("bimodule bidegree of basis element " + std::to_string(i) +
                        " does not match arrow '" + quiver.arrows[i].name + "'");
    }
    // Ramification matches the component dimensions (degree-one correspondence).
    for (int c = 0; c < quiver.conj.num_classes(); ++c) {
        int rep = quiver.conj.representative[c];
        if (bimodule.component_dim(rep, bimodule.group.identity) != quiver.ramification[c])
            throw error("component dimension does not match ramification on class of '" +
                        quiver.group.name(rep) + "'");
    }
    return QuiverAlgebraData{std::move(quiver), std::move(bimodule)};
}

QuiverAlgebraData algebra_from_bimodule(MajidBimodule bimodule) {
    std::map<int, int> ram;
    for (int c = 0; c < bimodule.conj.num_classes(); ++c)
        ram[c] = bimodule.component_dim(bimodule.conj.representative[c],
                                        bimodule.group.identity);
    HopfQuiver q = build_quiver(bimodule.group, ram);
    return make_quiver_algebra(std::move(q), std::move(bimodule));
}

namespace {

// Product of two single paths by the thin-split expansion: positions carry
// an arrow of one factor and the interpolated vertex of the other, each
// slot is one bimodule action, and the slot outputs are concatenated.
PathVector single_product(const QuiverAlgebraData& data, const Path& pa, const Path& pb) {
    const HopfQuiver& q = data.quiver;
    const MajidBimodule& bm = data.bimodule;
    const FiniteGroup& g = q.group;
    const int m = pa.length(), n = pb.length(), total = m + n;

    PathVector result;
    if (total == 0) {
        pv_accumulate(result, vertex_path(g.mul(pa.source, pb.source)), Cyclotomic(1));
        return result;
    }
    const int base = g.mul(pa.source, pb.source);

    for (unsigned mask = 0; mask < (1u << total); ++mask) {
        if (__builtin_popcount(mask) != m) continue;
        int va = pa.source, vb = pb.source;
        int ka = 0, kb = 0;
        // Partial expansions: arrow choices so far with accumulated scalar.
        std::vector<std::pair<std::vector<int>, Cyclotomic>> terms{{{}, Cyclotomic(1)}};
        bool dead = false;
        for (int pos = 0; pos < total && !dead; ++pos) {
            int expect_src = g.mul(va, vb);
            const ActionVec* av;
            if (mask & (1u << pos)) {
                int a = pa.arrows[ka++];
                av = &bm.right[vb][a];  // arrow . vertex
                va = q.arrows[a].target;
            } else {
                int b = pb.arrows[kb++];
                av = &bm.left[va][b];  // vertex . arrow
                vb = q.arrows[b].target;
            }
            int expect_tgt = g.mul(va, vb);
            if (av->empty()) { dead = true; break; }
            for (const auto& [arrow_out, coeff] : *av) {
                (void)coeff;
                if (q.arrows[arrow_out].source != expect_src ||
                    q.arrows[arrow_out].target != expect_tgt)
                    throw internal_error("thin-split slot produced a non-composable arrow");
            }
            std::vector<std::pair<std::vector<int>, Cyclotomic>> next;
            next.reserve(terms.size() * av->size());
            for (const auto& [arrows, scal] : terms)
                for (const auto& [arrow_out, coeff] : *av) {
                    auto ext = arrows;
                    ext.push_back(arrow_out);
                    next.emplace_back(std::move(ext), scal * coeff);
                }
            terms = std::move(next);
        }
        if (dead) continue;
        for (auto& [arrows, scal] : terms)
            pv_accumulate(result, Path{base, std::move(arrows)}, scal);
    }
    return result;
}

}  // namespace

PathVector shuffle_product(const QuiverAlgebraData& data, const PathVector& a,
                           const PathVector& b) {
    PathVector result;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            Cyclotomic f = ca * cb;
            for (const auto& [p, c] : single_product(data, pa, pb))
                pv_accumulate(result, p, c * f);
        }
    return result;
}

PathVector shuffle_product(const QuiverAlgebraData& data, const Path& a, const Path& b) {
    return single_product(data, a, b);
}

PathVector ShuffleCache::product(const PathVector& a, const PathVector& b) {
    PathVector result;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) {
            auto key = std::make_pair(pa, pb);
            auto it = memo_.find(key);
            if (it == memo_.end())
                it = memo_.emplace(key, single_product(data_, pa, pb)).first;
            Cyclotomic f = ca * cb;
            for (const auto& [p, c] : it->second) pv_accumulate(result, p, c * f);
        }
    return result;
}

PathVector power_left_normed(const QuiverAlgebraData& data, const PathVector& p, int n) {
    if (n < 1) throw error("left-normed power defined for n >= 1");
    PathVector acc = p;
    for (int i = 1; i < n; ++i) acc = shuffle_product(data, acc, p);
    return acc;
}

namespace {

using TensorVector = std::map<std::pair<Path, Path>, Cyclotomic>;

void tv_accumulate(TensorVector& dst, const Path& a, const Path& b, const Cyclotomic& c) {
    auto key = std::make_pair(a, b);
    auto it = dst.find(key);
    if (it == dst.end()) {
        if (!c.is_zero()) dst.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
}

TensorVector delta(const QuiverAlgebraData& data, const PathVector& v) {
    TensorVector out;
    for (const auto& [p, c] : v)
        for (const auto& [second, first] : coproduct(data.quiver, p))
            tv_accumulate(out, second, first, c);
    return out;
}

Cyclotomic counit(const PathVector& v) {
    Cyclotomic out(0);
    for (const auto& [p, c] : v)
        if (p.length() == 0) out += c;
    return out;
}

}  // namespace

void majid_axiom_check(const QuiverAlgebraData& data, const PathVector& a, const PathVector& b,
                       const PathVector& c) {
    const HopfQuiver& q = data.quiver;
    const Cochain3& phi = data.phi();

    // Quasi-associativity. The reassociator vanishes off degree zero, so
    // only the splits with a vertex on the evaluated side contribute: the
    // outer legs collapse to path endpoints.
    PathVector lhs, rhs;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b)
            for (const auto& [pc, cc] : c) {
                Cyclotomic w = ca * cb * cc;
                Cyclotomic fl =
                    phi.at(path_target(q, pa), path_target(q, pb), path_target(q, pc));
                PathVector ab = shuffle_product(data, path_vector(pa), path_vector(pb));
                for (const auto& [p, x] :
                     shuffle_product(data, ab, path_vector(pc)))
                    pv_accumulate(lhs, p, x * w * fl);
                Cyclotomic fr = phi.at(pa.source, pb.source, pc.source);
                PathVector bc = shuffle_product(data, path_vector(pb), path_vector(pc));
                for (const auto& [p, x] :
                     shuffle_product(data, path_vector(pa), bc))
                    pv_accumulate(rhs, p, x * w * fr);
            }
    if (!(lhs == rhs))
        throw error("quasi-associativity fails for (" + pv_str(q, a) + ", " + pv_str(q, b) +
                    ", " + pv_str(q, c) + ")");

    // Comultiplicativity of the product, checked pairwise on (a, b).
    PathVector ab = shuffle_product(data, a, b);
    TensorVector left_side = delta(data, ab);
    TensorVector right_side;
    for (const auto& [ta, ca] : delta(data, a))
        for (const auto& [tb, cb] : delta(data, b)) {
            PathVector firsts = shuffle_product(data, path_vector(ta.first),
                                                path_vector(tb.first));
            PathVector seconds = shuffle_product(data, path_vector(ta.second),
                                                 path_vector(tb.second));
            Cyclotomic w = ca * cb;
            for (const auto& [p1, c1] : firsts)
                for (const auto& [p2, c2] : seconds)
                    tv_accumulate(right_side, p1, p2, c1 * c2 * w);
        }
    if (!(left_side == right_side))
        throw error("coproduct is not multiplicative on (" + pv_str(q, a) + ", " +
                    pv_str(q, b) + ")");
    if (counit(ab) != counit(a) * counit(b))
        throw error("counit is not multiplicative on (" + pv_str(q, a) + ", " + pv_str(q, b) +
                    ")");
}

}  // namespace quasiq
