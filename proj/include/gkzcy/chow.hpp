#pragma once

#include "gkzcy/lattice.hpp"
#include "gkzcy/poly.hpp"
#include "gkzcy/triangulation.hpp"

namespace gkzcy {

class ChowRing;

// Element of A*(P_Sigma) x Q in normal form on the ring's monomial basis,
// written in the nef classes J_1..J_{p-d}.
struct ChowElement {
    const ChowRing* ring = nullptr;
    Poly value;  // supported on basis monomials only

    bool is_zero() const { return value.is_zero(); }
    ChowElement graded_part(int degree) const;
    ChowElement operator+(const ChowElement& o) const;
    ChowElement operator-(const ChowElement& o) const;
    ChowElement operator*(const ChowElement& o) const;
    friend ChowElement operator*(const Rat& c, ChowElement e) {
        e.value = c * e.value;
        return e;
    }
    bool operator==(const ChowElement& o) const { return value == o.value; }
};

// A*(P_Sigma) x Q = Q[J_1..J_{p-d}] / < prod_{i in P} r_i(J) : P primitive >,
// the linear relations being solved by the J-basis presentation (D_i = r_i(J)).
class ChowRing {
public:
    // Q coefficients; exact Z-structure only claimed for unimodular T.
    static ChowRing build(const Triangulation& t, const MoriBasis& basis);

    int nvars() const { return nvars_; }
    int top_degree() const { return top_; }
    const Triangulation& triangulation() const { return triangulation_; }
    const MoriBasis& mori() const { return mori_; }
    const std::vector<Poly::Mon>& basis_monomials(int degree) const;
    std::vector<int> graded_dimensions() const;
    int dimension() const;

    ChowElement reduce(const Poly& p) const;
    ChowElement zero() const { return {this, Poly(nvars_)}; }
    ChowElement one() const { return reduce(Poly::constant(nvars_, 1)); }
    ChowElement hyperplane(int a) const;  // J_a
    ChowElement divisor(int i) const;     // D_i = sum_k (l^(k))_i J_k
    ChowElement hypersurface_class() const;  // [X] = D_1 + ... + D_p
    // geometric-series inverse of 1 + nilpotent (unit constant term required)
    ChowElement invert_unit(const ChowElement& e) const;

    // Coefficient of the volume form, normalized so that the distinct divisors
    // of a maximal simplex integrate to 1/|det| (1 in the unimodular case).
    Rat integrate_top(const ChowElement& e) const;

private:
    Triangulation triangulation_;
    MoriBasis mori_;
    int nvars_ = 0;
    int top_ = 0;
    struct Level {
        std::vector<Poly::Mon> mons;      // all monomials of this degree
        std::vector<int> basis;           // indices into mons forming the basis
        QMat rewrite;                     // RREF rows of the relation space
        std::vector<int> pivots;          // pivot columns of rewrite
    };
    std::vector<Level> levels_;
    Rat top_scale_ = 0;  // integrate_top of the degree-d basis monomial
};

struct ChernData {
    ChowElement total;  // c(X) = prod(1 + D_i) / (1 + [X])
    ChowElement c2, c3;
    Rat euler = 0;       // chi(X) = int_P [X] c(X) top part
    bool c1_vanishes = false;
};
ChernData chern_data(const ChowRing& ring);

// A*(X)_toric = A*(P)_Q / Ann([X]); kept as a view on the ambient ring.
class HypersurfaceRing {
public:
    explicit HypersurfaceRing(const ChowRing& ambient);
    const ChowRing& ambient() const { return *ambient_; }
    std::vector<int> graded_dimensions() const { return dims_; }
    int dimension() const;
    // int_X e := int_P [X] . lift(e); well defined modulo Ann([X])
    Rat integrate(const ChowElement& e) const;
    bool annihilates(const ChowElement& e) const;  // [X] * e == 0

private:
    const ChowRing* ambient_;
    std::vector<int> dims_;
};

}  // namespace gkzcy
