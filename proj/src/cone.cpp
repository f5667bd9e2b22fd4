#include "gkzcy/cone.hpp"

#include "gkzcy/error.hpp"
#include "gkzcy/linalg.hpp"

#include <algorithm>
#include <set>

namespace gkzcy {

namespace {

// Incremental double description for a pointed cone of full rank constraints.
// `ineqs` must satisfy: {x : a.x >= 0} contains no line. Returns primitive rays.
ZMat dd_pointed(int dim, const ZMat& ineqs) {
    // initial simplicial cone from dim independent constraints
    QMat chosen;
    std::vector<int> used;
    {
        QMat acc;
        for (size_t k = 0; k < ineqs.size(); ++k) {
            QMat trial = acc;
            trial.push_back(to_rational(ineqs[k]));
            if (rank(trial) > (int)acc.size()) {
                acc = std::move(trial);
                used.push_back((int)k);
                if ((int)acc.size() == dim) break;
            }
        }
        if ((int)acc.size() < dim)
            throw Error("InternalError", "dd_pointed called on a non-pointed cone");
        chosen = std::move(acc);
    }
    // rays of {B x >= 0} are the columns of B^{-1}
    QMat cols;  // solve B x = e_i
    for (int i = 0; i < dim; ++i) {
        QVec e(dim, Rat(0));
        e[i] = 1;
        auto x = solve(chosen, e);
        cols.push_back(*x);
    }
    struct Ray {
        ZVec v;
        std::set<int> tight;  // indices into `ineqs` satisfied with equality
    };
    std::vector<Ray> rays;
    std::vector<int> processed = used;
    auto tight_set = [&](const ZVec& v) {
        std::set<int> t;
        for (int k : processed)
            if (dot(ineqs[k], v) == 0) t.insert(k);
        return t;
    };
    for (const QVec& c : cols) {
        Ray r;
        r.v = primitive(c);
        rays.push_back(std::move(r));
    }
    for (auto& r : rays) r.tight = tight_set(r.v);

    for (size_t k = 0; k < ineqs.size(); ++k) {
        if (std::find(used.begin(), used.end(), (int)k) != used.end()) continue;
        const ZVec& a = ineqs[k];
        std::vector<Ray> pos, neg, zero;
        for (auto& r : rays) {
            Int s = dot(a, r.v);
            if (s > 0) pos.push_back(std::move(r));
            else if (s < 0) neg.push_back(std::move(r));
            else zero.push_back(std::move(r));
        }
        if (neg.empty()) {  // constraint redundant for current rays
            rays = std::move(pos);
            for (auto& r : zero) rays.push_back(std::move(r));
            processed.push_back((int)k);
            for (auto& r : rays) r.tight = tight_set(r.v);
            continue;
        }
        std::vector<Ray> next = pos;
        for (auto& r : zero) next.push_back(r);
        for (const Ray& p : pos)
            for (const Ray& n : neg) {
                // adjacency: no other current ray is tight on every constraint
                // tight for both p and n
                std::set<int> common;
                std::set_intersection(p.tight.begin(), p.tight.end(), n.tight.begin(),
                                      n.tight.end(), std::inserter(common, common.begin()));
                bool adjacent = true;
                auto covers = [&](const Ray& r) {
                    return std::includes(r.tight.begin(), r.tight.end(), common.begin(),
                                         common.end());
                };
                for (const Ray& r : pos)
                    if (&r != &p && covers(r)) { adjacent = false; break; }
                if (adjacent)
                    for (const Ray& r : neg)
                        if (&r != &n && covers(r)) { adjacent = false; break; }
                if (adjacent)
                    for (const Ray& r : zero)
                        if (covers(r)) { adjacent = false; break; }
                if (!adjacent) continue;
                Int cp = dot(a, p.v), cn = dot(a, n.v);
                QVec w(dim);
                for (int i = 0; i < dim; ++i) w[i] = Rat(cp) * n.v[i] - Rat(cn) * p.v[i];
                Ray fresh;
                fresh.v = primitive(w);
                next.push_back(std::move(fresh));
            }
        processed.push_back((int)k);
        rays = std::move(next);
        for (auto& r : rays) r.tight = tight_set(r.v);
        // dedupe
        std::sort(rays.begin(), rays.end(),
                  [](const Ray& x, const Ray& y) { return x.v < y.v; });
        rays.erase(std::unique(rays.begin(), rays.end(),
                               [](const Ray& x, const Ray& y) { return x.v == y.v; }),
                   rays.end());
    }
    ZMat out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

DDResult double_description(int dim, const ZMat& inequalities) {
    DDResult res;
    if (dim == 0) return res;
    // lineality = kernel of the constraint matrix
    QMat lin_q = inequalities.empty()
                     ? [&] {
                           QMat id(dim, QVec(dim, Rat(0)));
                           for (int i = 0; i < dim; ++i) id[i][i] = 1;
                           return id;
                       }()
                     : kernel_q(to_rational(inequalities));
    for (const QVec& v : lin_q) res.lineality.push_back(primitive(v));
    if ((int)res.lineality.size() == dim) return res;  // whole space

    if (res.lineality.empty()) {
        res.rays = dd_pointed(dim, inequalities);
        return res;
    }
    // Quotient by the lineality space. Coordinates on R^dim / Lin are given by
    // a basis {b_1..b_q} of the row space of the constraint matrix (= Lin^perp);
    // each constraint is a Q-combination of the b_i, and the quotient cone
    // {z : C z >= 0} is pointed.
    QMat basis = to_rational(inequalities);
    std::vector<int> piv = rref(basis);
    basis.resize(piv.size());
    const int qdim = (int)basis.size();
    QMat basis_t = transpose(basis);
    ZMat proj_ineqs;
    for (const ZVec& a : inequalities) {
        auto c = solve(basis_t, to_rational(a));
        proj_ineqs.push_back(primitive(*c));
    }
    ZMat qrays = dd_pointed(qdim, proj_ineqs);
    for (const ZVec& rz : qrays) {
        // lift: any x with b_i . x = z_i
        auto x = solve(basis, to_rational(rz));
        res.rays.push_back(primitive(*x));
    }
    std::sort(res.rays.begin(), res.rays.end());
    return res;
}

bool Cone::contains(const QVec& x) const {
    for (const ZVec& a : inequalities)
        if (dot(to_rational(a), x) < 0) return false;
    return true;
}

bool Cone::strictly_contains(const QVec& x) const {
    for (const ZVec& a : inequalities)
        if (dot(to_rational(a), x) <= 0) return false;
    return true;
}

QVec Cone::interior_point() const {
    QVec p(dim, Rat(0));
    for (const ZVec& r : rays)
        for (int i = 0; i < dim; ++i) p[i] += Rat(r[i]);
    return p;
}

int Cone::dimension() const {
    QMat span;
    for (const ZVec& r : rays) span.push_back(to_rational(r));
    for (const ZVec& l : lineality) span.push_back(to_rational(l));
    return rank(span);
}

Cone cone_from_inequalities(int dim, const ZMat& inequalities) {
    Cone c;
    c.dim = dim;
    DDResult dd = double_description(dim, inequalities);
    c.rays = dd.rays;
    c.lineality = dd.lineality;
    // prune to irredundant facets (tight rays span a hyperplane within the
    // cone's linear span), then re-add the span equations as inequality pairs
    // so containment tests stay exact for lower-dimensional cones.
    const int cdim = c.dimension();
    ZMat kept;
    for (size_t k = 0; k < inequalities.size(); ++k) {
        QMat tight;
        for (const ZVec& r : c.rays)
            if (dot(inequalities[k], r) == 0) tight.push_back(to_rational(r));
        for (const ZVec& l : c.lineality) tight.push_back(to_rational(l));
        if (rank(std::move(tight)) == cdim - 1) kept.push_back(inequalities[k]);
    }
    for (ZVec& a : kept) {
        Int g = content(a);
        if (g > 1)
            for (Int& x : a) x /= g;
    }
    if (cdim < dim) {
        QMat span;
        for (const ZVec& r : c.rays) span.push_back(to_rational(r));
        for (const ZVec& l : c.lineality) span.push_back(to_rational(l));
        QMat perp = span.empty()
                        ? [&] {
                              QMat id(dim, QVec(dim, Rat(0)));
                              for (int i = 0; i < dim; ++i) id[i][i] = 1;
                              return id;
                          }()
                        : kernel_q(span);
        for (const QVec& e : perp) {
            ZVec z = primitive(e);
            ZVec neg(z.size());
            for (size_t i = 0; i < z.size(); ++i) neg[i] = -z[i];
            kept.push_back(z);
            kept.push_back(std::move(neg));
        }
    }
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    c.inequalities = std::move(kept);
    return c;
}

Cone cone_from_rays(int dim, const ZMat& rays) {
    // facets of cone(rays) = rays of the dual {y : rays . y >= 0}
    DDResult dd = double_description(dim, rays);
    ZMat ineqs = dd.rays;
    // lineality of the dual corresponds to equations satisfied by all rays;
    // include both signs so the primal H-description cuts to the span.
    for (const ZVec& e : dd.lineality) {
        ineqs.push_back(e);
        ZVec neg(e.size());
        for (size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
        ineqs.push_back(std::move(neg));
    }
    return cone_from_inequalities(dim, ineqs);
}

Cone dual_cone(const Cone& c) {
    // dual of {x : A x >= 0} is cone(A^T rows); compute via generators of c:
    // y in dual iff y.r >= 0 for all rays r and y.l == 0 for lineality l.
    ZMat constraints = c.rays;
    for (const ZVec& l : c.lineality) {
        constraints.push_back(l);
        ZVec neg(l.size());
        for (size_t i = 0; i < l.size(); ++i) neg[i] = -l[i];
        constraints.push_back(std::move(neg));
    }
    return cone_from_inequalities(c.dim, constraints);
}

QMat polytope_vertices(int dim, const ZMat& homogeneous_inequalities) {
    // cone over the polytope in (x, t): rows (a | -c) >= 0 plus t >= 0
    ZMat ineqs = homogeneous_inequalities;
    ZVec tpos(dim + 1, 0);
    tpos[dim] = 1;
    ineqs.push_back(tpos);
    DDResult dd = double_description(dim + 1, ineqs);
    if (!dd.lineality.empty())
        throw Error("InternalError", "polytope has a lineality direction");
    QMat verts;
    for (const ZVec& r : dd.rays) {
        if (r[dim] == 0) {
            // a genuine recession direction; the zero ray never appears
            throw Error("InternalError", "polytope is unbounded");
        }
        QVec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = Rat(r[i]) / Rat(r[dim]);
        verts.push_back(std::move(v));
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

HRep facets_of_points(int dim, const QMat& points) {
    // facets of conv(points) = rays of {(a,c) : a.p + c >= 0 for all p}
    ZMat constraints;
    for (const QVec& p : points) {
        QVec row = p;
        row.push_back(Rat(1));
        constraints.push_back(primitive(row));
    }
    DDResult dd = double_description(dim + 1, constraints);
    HRep h;
    h.facets = dd.rays;
    h.equations = dd.lineality;
    return h;
}

}  // namespace gkzcy
