#pragma once

#include "gkzcy/cone.hpp"

namespace gkzcy {

// Full-rank lattice polytope given by its vertex list (rows).
struct LatticePolytope {
    int rank = 0;
    ZMat vertices;
};

struct RationalPolytope {
    int rank = 0;
    QMat vertices;
};

// Ordered point set {nu_0 = 0, nu_1, ...}; index 0 is always the origin and
// the remaining points are sorted lexicographically. Downstream indexing
// (relation lattice, toric ideal variables y_i) relies on this order.
struct PointConfiguration {
    int rank = 0;  // d
    ZMat points;

    int count() const { return (int)points.size(); }  // p + 1
    // homogenized point (1, nu_i) in rank d+1
    ZVec homogenized(int i) const;
    ZMat homogenized_matrix() const;  // (p+1) x (d+1), rows (1, nu_i)
};

struct RootDatum {
    ZVec root;     // alpha in DeltaStar
    ZVec witness;  // m_alpha in Delta with <m_alpha, alpha> = -1
};

// Throws NonExtremalVertex if the list contains duplicates or non-vertices.
void validate_vertices(const LatticePolytope& p);

HRep polytope_facets(const LatticePolytope& p);

// {x : <x,y> >= -1 for all y in P}; requires the origin strictly interior.
RationalPolytope polar_dual_rational(const LatticePolytope& p);
// Same, but throws NonIntegralDual when a dual vertex is not integral.
LatticePolytope polar_dual(const LatticePolytope& p);

// All lattice points of P; origin first when present, lexicographic after.
ZMat lattice_points(const LatticePolytope& p);

bool is_reflexive(const LatticePolytope& p);

// Lattice points in the relative interior of some facet of P.
ZMat codim1_interior_points(const LatticePolytope& p);

// Configuration on all lattice points of P (origin first).
PointConfiguration point_configuration(const LatticePolytope& p);

// The gauge-fixed configuration: lattice points minus facet-interior ones.
PointConfiguration gauge_point_set(const LatticePolytope& pstar);

PointConfiguration configuration_from_points(int rank, ZMat points);

// Roots alpha in DeltaStar∩N admitting a unique witness m in Delta∩M with
// <m, alpha> = -1 while <m', alpha> >= 0 for every other m'.
std::vector<RootDatum> root_system(const LatticePolytope& delta,
                                   const LatticePolytope& delta_star);

}  // namespace gkzcy
