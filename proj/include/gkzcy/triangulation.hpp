#pragma once

#include "gkzcy/cone.hpp"
#include "gkzcy/polytope.hpp"

#include <cstdint>
#include <optional>

namespace gkzcy {

struct RelationLattice;  // lattice.hpp

using WeightVector = QVec;  // one entry per configuration point

// A triangulation of P = Conv{0, (1,nu_0), ..., (1,nu_p)} stored by the index
// sets of its maximal simplices (d-simplices of Delta*), canonically sorted.
struct Triangulation {
    PointConfiguration config;
    std::vector<std::vector<int>> bases;  // each sorted, size d+1

    bool uses_index(int i) const;
    bool is_face(const std::vector<int>& subset) const;  // subset sorted
    // |det| of the homogenized simplex
    Int simplex_volume(const std::vector<int>& base) const;
    Int normalized_volume() const;
    std::string canonical_string() const;
};

struct PrimitiveCollection {
    std::vector<int> indices;  // the collection (sorted)
    ZVec relation;             // l(P) in L, positive exactly on the collection
    bool unimodular_cone;      // false when Eq-31-style multiplicities occur
};

struct MonomialIdeal {
    int nvars = 0;
    std::vector<std::vector<int>> generators;  // exponent vectors, minimal set

    void minimalize();
    bool contains_monomial(const std::vector<int>& m) const;
    bool operator==(const MonomialIdeal&) const = default;
};

Triangulation regular_triangulation(const PointConfiguration& config,
                                    const WeightVector& w);

bool is_maximal(const Triangulation& t);
bool is_unimodular(const Triangulation& t);

std::vector<PrimitiveCollection> primitive_collections(const Triangulation& t);

MonomialIdeal stanley_reisner_generators(const Triangulation& t);

// Reduced secondary cone C'(A,T) in the coordinates xi_k = l^(k) . eta given
// by the canonical relation basis. Throws EmptyInterior when T is not regular.
Cone secondary_cone(const Triangulation& t);
Cone secondary_cone(const Triangulation& t, const RelationLattice& lattice);

// Pulling weight first, then seeded random integer weights.
std::optional<Triangulation> find_unimodular_maximal(const PointConfiguration& config,
                                                     int budget, uint64_t seed);

enum class PolytopeType { I, II, III };
struct TypeReport {
    PolytopeType type;
    bool search_exhausted;  // type III verdicts are "not found within budget"
    int codim1_interior_count;
};
TypeReport classify_polytope(const LatticePolytope& pstar, int budget, uint64_t seed);

WeightVector default_weight(const PointConfiguration& config);  // (0,1,...,1)

}  // namespace gkzcy
