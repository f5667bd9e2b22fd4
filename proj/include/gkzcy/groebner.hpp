#pragma once

#include "gkzcy/lattice.hpp"
#include "gkzcy/triangulation.hpp"

namespace gkzcy {

// Weight term order on monomials in y_0..y_p: total degree, then omega-weight,
// then lexicographic tiebreak. The toric ideal is homogeneous, so within an
// element only the weight (and tie) matter; the degree part guarantees a
// proper term order for arbitrary rational weights.
struct TermOrder {
    WeightVector weight;
    bool require_generic = false;  // throw NonGenericWeight on weight ties

    // -1 / 0 / +1; 0 never escapes compare() (lex breaks it)
    int compare(const std::vector<int>& u, const std::vector<int>& v) const;
    bool weight_tie(const std::vector<int>& u, const std::vector<int>& v) const;
};

// y^lead - y^tail with disjoint supports, lead > tail in the active order.
struct Binomial {
    std::vector<int> lead, tail;

    ZVec relation() const;  // lead - tail as an integer vector
    bool operator==(const Binomial&) const = default;
    bool operator<(const Binomial& o) const {
        return std::tie(lead, tail) < std::tie(o.lead, o.tail);
    }
};

struct GroebnerBasis {
    std::vector<Binomial> elements;  // reduced, canonically sorted
    TermOrder order;
    int nvars = 0;

    MonomialIdeal leading_ideal() const;
};

struct GroebnerOptions {
    int degree_bound = 64;  // guard against runaway Buchberger
    bool require_generic = false;
};

// Reduced Groebner basis of the saturated lattice ideal I_A under the order.
GroebnerBasis toric_ideal_gb(const RelationLattice& lattice, const TermOrder& order,
                             const GroebnerOptions& opts = {});

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

MonomialIdeal monomial_radical(const MonomialIdeal& ideal);

// Closure of the weights with the same initial ideal: the full-space cone and
// its image in the reduced coordinates of the relation lattice.
struct GroebnerCone {
    Cone reduced;   // in Xi(Mbar) coordinates (dimension p-d)
    ZMat full_inequalities;  // the omega'.(lead-tail) >= 0 rows in R^{p+1}
};
GroebnerCone groebner_cone(const GroebnerBasis& gb, const RelationLattice& lattice);

struct FanCell {
    GroebnerBasis basis;
    Cone cone;  // reduced coordinates
};
struct GroebnerFan {
    std::vector<FanCell> cells;
    bool complete = false;  // traversal closed (every facet flip matched)
};
GroebnerFan groebner_fan_traverse(const RelationLattice& lattice, int budget,
                                  const GroebnerOptions& opts = {});

}  // namespace gkzcy
