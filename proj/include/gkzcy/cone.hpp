#pragma once

#include "gkzcy/arith.hpp"

namespace gkzcy {

// Polyhedral cone {x : a.x >= 0 for a in inequalities}, with the generator
// description (rays + lineality basis) kept in sync by double description.
// Rays are primitive integer vectors; order is canonical (lexicographic).
struct Cone {
    int dim = 0;
    ZMat inequalities;  // facet/valid inequality normals
    ZMat rays;
    ZMat lineality;

    bool contains(const QVec& x) const;
    bool strictly_contains(const QVec& x) const;  // all inequalities strict
    // A relative-interior point (sum of rays + lineality origin); empty cone -> {0}.
    QVec interior_point() const;
    bool is_pointed() const { return lineality.empty(); }
    int dimension() const;  // dim of linear span of rays+lineality
    bool is_full_dimensional() const { return dimension() == dim; }
};

// Build from an H-description; computes rays/lineality and prunes the
// inequality list to irredundant facets (when the cone is full dimensional).
Cone cone_from_inequalities(int dim, const ZMat& inequalities);

// Build from generators; computes facet inequalities.
Cone cone_from_rays(int dim, const ZMat& rays);

// {y : <y,x> >= 0 for all x in C}
Cone dual_cone(const Cone& c);

// Motzkin double description: rays (+ lineality basis) of {x : A x >= 0}.
struct DDResult {
    ZMat rays;
    ZMat lineality;
};
DDResult double_description(int dim, const ZMat& inequalities);

// Vertex enumeration: polytope {x : a.x >= c} given as rows (a | -c) acting on
// (x,1); returns vertices. Throws if unbounded (has a nonzero recession ray).
QMat polytope_vertices(int dim, const ZMat& homogeneous_inequalities);

// Facets of conv(points): rows (a | c) meaning a.x + c >= 0 for all points,
// with equality on the facet. Points may be rational. Also returns the affine
// hull equations (empty when full dimensional) as rows (a | c): a.x + c == 0.
struct HRep {
    ZMat facets;     // (a | c), a.x + c >= 0
    ZMat equations;  // (a | c), a.x + c == 0
};
HRep facets_of_points(int dim, const QMat& points);

}  // namespace gkzcy
