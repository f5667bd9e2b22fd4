#pragma once

#include "gkzcy/cone.hpp"
#include "gkzcy/polytope.hpp"

namespace gkzcy {

// Lattice L of integer relations among the homogenized configuration points:
// rows l satisfy sum_i l_i (1, nu_i) = 0.
struct RelationLattice {
    PointConfiguration config;
    ZMat basis;  // (p-d) x (p+1), canonical (see relation_lattice)

    int rank() const { return (int)basis.size(); }
    int npoints() const { return config.count(); }
    // coordinates of l in this basis; throws if l is not in L
    QVec coordinates(const ZVec& l) const;
    ZVec combine(const QVec& coords) const;  // coords . basis
};

RelationLattice relation_lattice(const PointConfiguration& config);

// Cokernel map B of the homogenized point matrix (Gale transform).
struct GaleTransform {
    ZMat matrix;           // free part: (p-d) x (p+1), B(e_i) = column i
    ZVec torsion_factors;  // invariant factors > 1 of the cokernel
};

GaleTransform gale_transform(const PointConfiguration& config);

struct Triangulation;  // triangulation.hpp

// Z-basis A_tau of L compatible with a triangulation, with its dual classes.
struct MoriBasis {
    RelationLattice lattice;
    ZMat vectors;       // rows l^(k), a Z-basis of L
    Cone tau;           // the simplicial regular cone whose dual generated A_tau
    ZMat dual_classes;  // rows J_a in the reduced coordinates (rays of tau)

    int rank() const { return (int)vectors.size(); }
    // J-basis coordinates of the divisor D_i: row i of the vectors matrix read
    // columnwise, i.e. r_i = sum_k vectors[k][i] * J_k.
    QVec divisor_coordinates(int i) const;
};

// tau = nullptr picks the reduced secondary cone of T ("auto"); it must be
// simplicial and regular, else NotSimplicial / NotRegular is thrown.
MoriBasis mori_basis(const Triangulation& t, const Cone* tau = nullptr);

bool is_compatible(const MoriBasis& a, const Triangulation& t);

// Stellar subdivision of a (low-dimensional) cone into simplicial regular
// cones; implemented for dim <= 3, throws NotRegular beyond that.
std::vector<Cone> subdivide_cone(const Cone& c);

}  // namespace gkzcy
