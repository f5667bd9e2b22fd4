#include "gkzcy/polytope.hpp"

#include "gkzcy/error.hpp"
#include "gkzcy/linalg.hpp"

#include <algorithm>

namespace gkzcy {

ZVec PointConfiguration::homogenized(int i) const {
    ZVec h(rank + 1);
    h[0] = 1;
    for (int j = 0; j < rank; ++j) h[j + 1] = points[i][j];
    return h;
}

ZMat PointConfiguration::homogenized_matrix() const {
    ZMat m;
    m.reserve(points.size());
    for (int i = 0; i < count(); ++i) m.push_back(homogenized(i));
    return m;
}

HRep polytope_facets(const LatticePolytope& p) {
    return facets_of_points(p.rank, to_rational(p.vertices));
}

void validate_vertices(const LatticePolytope& p) {
    for (const ZVec& v : p.vertices)
        if ((int)v.size() != p.rank)
            throw ParseError("vertex length does not match rank");
    ZMat sorted = p.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw NonExtremalVertex("duplicate vertex in input");
    HRep h = polytope_facets(p);
    // canonical check: vertices of conv(input) must equal the input set
    ZMat ineq;
    for (const ZVec& f : h.facets) ineq.push_back(f);
    if (!h.equations.empty()) {
        // lower-dimensional polytopes are fine as long as points are extreme
        for (const ZVec& e : h.equations) {
            ineq.push_back(e);
            ZVec neg(e.size());
            for (size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
            ineq.push_back(std::move(neg));
        }
    }
    QMat verts = polytope_vertices(p.rank, ineq);
    ZMat canon;
    for (const QVec& v : verts) {
        ZVec z(p.rank);
        for (int j = 0; j < p.rank; ++j) {
            if (den(v[j]) != 1)
                throw NonExtremalVertex("hull vertex is not integral");
            z[j] = num(v[j]);
        }
        canon.push_back(std::move(z));
    }
    std::sort(canon.begin(), canon.end());
    if (canon != sorted)
        throw NonExtremalVertex("input contains a non-extremal point");
}

RationalPolytope polar_dual_rational(const LatticePolytope& p) {
    HRep h = polytope_facets(p);
    if (!h.equations.empty())
        throw OriginNotInterior("polytope is not full dimensional");
    for (const ZVec& f : h.facets)
        if (f[p.rank] <= 0)
            throw OriginNotInterior("origin is not strictly inside the polytope");
    RationalPolytope dual;
    dual.rank = p.rank;
    // facet a.x + c >= 0  <->  (a/c).x >= -1, so a/c is a dual vertex
    for (const ZVec& f : h.facets) {
        QVec v(p.rank);
        for (int j = 0; j < p.rank; ++j) v[j] = Rat(f[j]) / Rat(f[p.rank]);
        dual.vertices.push_back(std::move(v));
    }
    std::sort(dual.vertices.begin(), dual.vertices.end());
    return dual;
}

LatticePolytope polar_dual(const LatticePolytope& p) {
    RationalPolytope d = polar_dual_rational(p);
    LatticePolytope out;
    out.rank = p.rank;
    for (const QVec& v : d.vertices) {
        ZVec z(p.rank);
        for (int j = 0; j < p.rank; ++j) {
            if (den(v[j]) != 1)
                throw NonIntegralDual("dual vertex is not a lattice point");
            z[j] = num(v[j]);
        }
        out.vertices.push_back(std::move(z));
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

namespace {

// Scan the vertex bounding box, keeping points satisfying the H-description.
ZMat box_scan(const LatticePolytope& p, const HRep& h, bool strict) {
    ZVec lo(p.rank), hi(p.rank);
    for (int j = 0; j < p.rank; ++j) {
        lo[j] = p.vertices[0][j];
        hi[j] = p.vertices[0][j];
        for (const ZVec& v : p.vertices) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }
    }
    ZMat out;
    ZVec x = lo;
    while (true) {
        bool ok = true;
        for (const ZVec& f : h.facets) {
            Int s = f[p.rank];
            for (int j = 0; j < p.rank; ++j) s += f[j] * x[j];
            if (strict ? s <= 0 : s < 0) { ok = false; break; }
        }
        if (ok)
            for (const ZVec& e : h.equations) {
                Int s = e[p.rank];
                for (int j = 0; j < p.rank; ++j) s += e[j] * x[j];
                if (s != 0) { ok = false; break; }
            }
        if (ok) out.push_back(x);
        int j = p.rank - 1;
        while (j >= 0 && x[j] == hi[j]) { x[j] = lo[j]; --j; }
        if (j < 0) break;
        x[j] += 1;
    }
    return out;
}

ZMat origin_first(ZMat pts) {
    std::sort(pts.begin(), pts.end());
    ZVec zero;
    if (!pts.empty()) zero.assign(pts[0].size(), Int(0));
    auto it = std::find(pts.begin(), pts.end(), zero);
    if (it != pts.end()) {
        pts.erase(it);
        pts.insert(pts.begin(), zero);
    }
    return pts;
}

}  // namespace

ZMat lattice_points(const LatticePolytope& p) {
    return origin_first(box_scan(p, polytope_facets(p), /*strict=*/false));
}

bool is_reflexive(const LatticePolytope& p) {
    HRep h;
    try {
        h = polytope_facets(p);
    } catch (const Error&) {
        return false;
    }
    if (!h.equations.empty()) return false;
    for (const ZVec& f : h.facets)
        if (f[p.rank] <= 0) return false;  // origin not interior
    // unique interior lattice point = the origin
    ZMat interior = box_scan(p, h, /*strict=*/true);
    if (interior.size() != 1) return false;
    for (const Int& c : interior[0])
        if (c != 0) return false;
    // dual integrality: facet at lattice distance 1, i.e. a.x + c >= 0 has
    // c dividing every entry of a; equivalently c == 1 for primitive rows
    for (const ZVec& f : h.facets) {
        Int c = f[p.rank];
        for (int j = 0; j < p.rank; ++j)
            if (f[j] % c != 0) return false;
    }
    return true;
}

ZMat codim1_interior_points(const LatticePolytope& p) {
    HRep h = polytope_facets(p);
    ZMat pts = box_scan(p, h, /*strict=*/false);
    ZMat out;
    for (const ZVec& x : pts) {
        int tight = 0;
        for (const ZVec& f : h.facets) {
            Int s = f[p.rank];
            for (int j = 0; j < p.rank; ++j) s += f[j] * x[j];
            if (s == 0) ++tight;
        }
        if (tight == 1) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PointConfiguration configuration_from_points(int d, ZMat points) {
    PointConfiguration cfg;
    cfg.rank = d;
    cfg.points = origin_first(std::move(points));
    ZVec zero(d, 0);
    if (cfg.points.empty() || cfg.points[0] != zero)
        throw Error("InternalError", "point configuration must contain the origin");
    if (rank(to_rational(cfg.homogenized_matrix())) != d + 1)
        throw Error("InternalError", "homogenized points do not span rank d+1");
    return cfg;
}

PointConfiguration point_configuration(const LatticePolytope& p) {
    return configuration_from_points(p.rank, lattice_points(p));
}

PointConfiguration gauge_point_set(const LatticePolytope& pstar) {
    if (!is_reflexive(pstar))
        throw Error("NotReflexive", "gauge point set requires a reflexive polytope");
    ZMat pts = lattice_points(pstar);
    ZMat drop = codim1_interior_points(pstar);
    ZMat keep;
    for (const ZVec& x : pts)
        if (std::find(drop.begin(), drop.end(), x) == drop.end()) keep.push_back(x);
    return configuration_from_points(pstar.rank, std::move(keep));
}

std::vector<RootDatum> root_system(const LatticePolytope& delta,
                                   const LatticePolytope& delta_star) {
    ZMat m_points = lattice_points(delta);
    ZMat n_points = lattice_points(delta_star);
    std::vector<RootDatum> roots;
    for (const ZVec& alpha : n_points) {
        bool zero = std::all_of(alpha.begin(), alpha.end(),
                                [](const Int& c) { return c == 0; });
        if (zero) continue;
        int hits = 0;
        ZVec witness;
        bool ok = true;
        for (const ZVec& m : m_points) {
            Int s = dot(m, alpha);
            if (s == -1) {
                ++hits;
                witness = m;
            } else if (s < -1) {
                ok = false;
                break;
            }
        }
        if (ok && hits == 1) roots.push_back({alpha, witness});
    }
    return roots;
}

}  // namespace gkzcy
