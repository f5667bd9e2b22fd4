#include "gkzcy/lattice.hpp"

#include "gkzcy/error.hpp"
#include "gkzcy/linalg.hpp"
#include "gkzcy/triangulation.hpp"

#include <algorithm>

namespace gkzcy {

QVec RelationLattice::coordinates(const ZVec& l) const {
    QMat m = to_rational(transpose(basis));
    auto x = solve(std::move(m), to_rational(l));
    if (!x) throw Error("InternalError", "vector is not in the relation lattice");
    return *x;
}

ZVec RelationLattice::combine(const QVec& coords) const {
    ZVec out(npoints(), 0);
    for (int k = 0; k < rank(); ++k) {
        if (coords[k] == 0) continue;
        if (den(coords[k]) != 1)
            throw Error("InternalError", "non-integral lattice combination");
        for (int i = 0; i < npoints(); ++i) out[i] += num(coords[k]) * basis[k][i];
    }
    return out;
}

RelationLattice relation_lattice(const PointConfiguration& config) {
    ZMat a = config.homogenized_matrix();  // (p+1) x (d+1)
    ZMat ker = kernel_z(transpose(a));     // rows l with l . a = 0
    // canonical form: HNF with reversed column order (pivots on the trailing
    // coordinates, so that l_0 carries the negative tail), rows sorted
    // lexicographically descending. Matches the l_0 <= 0 convention on all
    // shipped configurations.
    const int n = config.count();
    ZMat rev;
    for (const ZVec& row : ker) {
        ZVec r(n);
        for (int i = 0; i < n; ++i) r[i] = row[n - 1 - i];
        rev.push_back(std::move(r));
    }
    rev = hnf(std::move(rev));
    ZMat canon;
    for (const ZVec& row : rev) {
        ZVec r(n);
        for (int i = 0; i < n; ++i) r[i] = row[n - 1 - i];
        canon.push_back(std::move(r));
    }
    std::sort(canon.begin(), canon.end(), std::greater<>());
    RelationLattice out;
    out.config = config;
    out.basis = std::move(canon);
    for (const ZVec& l : out.basis) {
        Int s = 0;
        for (const Int& x : l) s += x;
        if (s != 0)
            throw Error("InternalError", "relation does not sum to zero");
    }
    return out;
}

GaleTransform gale_transform(const PointConfiguration& config) {
    ZMat a = config.homogenized_matrix();
    SmithResult s = smith(a);
    const int r = (int)s.factors.size();
    const int n = config.count();
    GaleTransform g;
    for (const Int& f : s.factors)
        if (f != 1 && f != -1) g.torsion_factors.push_back(abs(f));
    for (int i = r; i < n; ++i) g.matrix.push_back(s.left[i]);
    return g;
}

QVec MoriBasis::divisor_coordinates(int i) const {
    QVec v(rank());
    for (int k = 0; k < rank(); ++k) v[k] = Rat(vectors[k][i]);
    return v;
}

MoriBasis mori_basis(const Triangulation& t, const Cone* tau) {
    MoriBasis mb;
    mb.lattice = relation_lattice(t.config);
    const int r = mb.lattice.rank();
    Cone secondary = secondary_cone(t, mb.lattice);
    if (tau) {
        for (const ZVec& ray : tau->rays)
            if (!secondary.contains(to_rational(ray)))
                throw Error("InternalError",
                            "supplied tau is not contained in the secondary cone");
        mb.tau = *tau;
    } else {
        mb.tau = secondary;
    }
    if ((int)mb.tau.rays.size() != r || !mb.tau.lineality.empty()) {
        std::string rays;
        for (const ZVec& ray : mb.tau.rays) {
            rays += " (";
            for (size_t j = 0; j < ray.size(); ++j)
                rays += (j ? "," : "") + ray[j].str();
            rays += ")";
        }
        throw NotSimplicial("cone has " + std::to_string(mb.tau.rays.size()) +
                            " rays in dimension " + std::to_string(r) +
                            "; subdivide and pass tau explicitly. rays:" + rays);
    }
    ZMat raymat = mb.tau.rays;  // rows = rays
    Int d = det(raymat);
    if (abs(d) != 1)
        throw NotRegular("cone ray matrix has determinant " + d.str() +
                         "; not a regular cone");
    // dual basis rows: V . R^T = I
    QMat rt = to_rational(transpose(raymat));
    ZMat vmat;
    for (int k = 0; k < r; ++k) {
        QVec e(r, Rat(0));
        e[k] = 1;
        auto x = solve(rt, e);
        vmat.push_back(primitive(*x));  // entries already integral (|det| = 1)
        // keep orientation: primitive() preserves sign and unit content here
    }
    for (int k = 0; k < r; ++k) {
        ZVec l(mb.lattice.npoints(), 0);
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < mb.lattice.npoints(); ++i)
                l[i] += vmat[k][j] * mb.lattice.basis[j][i];
        mb.vectors.push_back(std::move(l));
    }
    mb.dual_classes = mb.tau.rays;
    return mb;
}

bool is_compatible(const MoriBasis& a, const Triangulation& t) {
    // cone(A_tau) must contain K(A,I) = {l : l_i >= 0, i not in I} for all I.
    const RelationLattice& lat = a.lattice;
    const int r = lat.rank();
    ZMat gens;
    for (const ZVec& v : a.vectors) gens.push_back(primitive(lat.coordinates(v)));
    Cone ca = cone_from_rays(r, gens);
    for (const auto& base : t.bases) {
        ZMat ineqs;
        for (int i = 0; i < lat.npoints(); ++i) {
            if (std::binary_search(base.begin(), base.end(), i)) continue;
            QVec col(r);
            for (int k = 0; k < r; ++k) col[k] = Rat(lat.basis[k][i]);
            ineqs.push_back(primitive(col));
        }
        Cone k = cone_from_inequalities(r, ineqs);
        for (const ZVec& ray : k.rays)
            if (!ca.contains(to_rational(ray))) return false;
        for (const ZVec& l : k.lineality) {
            QVec neg(r);
            for (int j = 0; j < r; ++j) neg[j] = -Rat(l[j]);
            if (!ca.contains(to_rational(l)) || !ca.contains(neg)) return false;
        }
    }
    return true;
}

namespace {

void subdivide_rec(const Cone& c, std::vector<Cone>& out, int depth) {
    if (depth > 64) throw NotRegular("cone subdivision did not terminate");
    const int dim = c.dim;
    if (!c.lineality.empty())
        throw NotRegular("cannot subdivide a cone with lineality");
    if ((int)c.rays.size() > dim) {
        // triangulate: join the first ray to every facet not containing it
        const ZVec& apex = c.rays[0];
        for (const ZVec& f : c.inequalities) {
            if (dot(f, apex) == 0) continue;
            ZMat sub;
            sub.push_back(apex);
            for (const ZVec& ray : c.rays)
                if (dot(f, ray) == 0) sub.push_back(ray);
            Cone piece = cone_from_rays(dim, sub);
            if ((int)piece.rays.size() >= dim) subdivide_rec(piece, out, depth + 1);
        }
        return;
    }
    if ((int)c.rays.size() < dim) {
        // lower-dimensional simplicial cone: regular iff rays extend to a basis
        // with content 1; treat via determinant of a maximal minor
        out.push_back(c);
        return;
    }
    Int d = abs(det(c.rays));
    if (d == 1) {
        out.push_back(c);
        return;
    }
    // find a lattice point in the open fundamental parallelepiped
    // w = (sum alpha_i r_i)/d with alpha in [0, d)^dim, integral, nonzero
    std::vector<Int> alpha(dim, 0);
    ZVec best;
    Int best_sum = 0;
    while (true) {
        Int asum = 0;
        for (const Int& x : alpha) asum += x;
        if (asum != 0) {
            ZVec w(dim, 0);
            bool integral = true;
            for (int j = 0; j < dim && integral; ++j) {
                Int s = 0;
                for (int i = 0; i < dim; ++i) s += alpha[i] * c.rays[i][j];
                if (s % d != 0) integral = false;
                else w[j] = s / d;
            }
            if (integral && (best.empty() || asum < best_sum)) {
                best = w;
                best_sum = asum;
            }
        }
        int j = dim - 1;
        while (j >= 0 && alpha[j] == d - 1) { alpha[j] = 0; --j; }
        if (j < 0) break;
        alpha[j] += 1;
    }
    if (best.empty())
        throw NotRegular("no interior lattice point found for subdivision");
    Int g = content(best);
    if (g > 1)
        for (Int& x : best) x /= g;
    for (int drop = 0; drop < dim; ++drop) {
        ZMat sub;
        for (int i = 0; i < dim; ++i) sub.push_back(i == drop ? best : c.rays[i]);
        if (det(sub) == 0) continue;
        subdivide_rec(cone_from_rays(dim, sub), out, depth + 1);
    }
}

}  // namespace

std::vector<Cone> subdivide_cone(const Cone& c) {
    if (c.dim > 3)
        throw NotRegular("cone subdivision implemented for dimension <= 3 only");
    std::vector<Cone> out;
    subdivide_rec(c, out, 0);
    return out;
}

}  // namespace gkzcy
