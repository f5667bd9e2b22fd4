#pragma once

#include "gkzcy/arith.hpp"

#include <optional>

namespace gkzcy {

// Exact linear algebra over Q and Z, dense, at desk scale.

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMat& m);

int rank(QMat m);

// Basis of the right kernel {x : m x = 0} over Q.
QMat kernel_q(const QMat& m);

// Solve m x = b; nullopt if inconsistent. If the system is underdetermined
// returns one solution (free variables set to zero).
std::optional<QVec> solve(QMat m, QVec b);

// Row-style Hermite normal form of the lattice spanned by the rows.
// Pivots positive, entries above pivots reduced to [0, pivot). Zero rows dropped.
ZMat hnf(ZMat m);

// Smith normal form: returns diagonal invariant factors d and unimodular U, V
// with U * m * V = diag(d). U is rows x rows, V is cols x cols.
struct SmithResult {
    ZVec factors;
    ZMat left;   // U
    ZMat right;  // V
};
SmithResult smith(ZMat m);

// Z-basis of the integer kernel {x : m x = 0} (saturated lattice), as rows.
ZMat kernel_z(const ZMat& m);

ZMat transpose(const ZMat& m);
QMat transpose(const QMat& m);

Int det(ZMat m);  // exact, fraction-free Bareiss

inline QMat to_rational(const ZMat& m) {
    QMat out;
    out.reserve(m.size());
    for (const ZVec& r : m) out.push_back(to_rational(r));
    return out;
}

}  // namespace gkzcy
