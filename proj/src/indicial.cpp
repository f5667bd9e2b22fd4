#include "gkzcy/indicial.hpp"

#include "gkzcy/error.hpp"
#include "gkzcy/linalg.hpp"

#include <algorithm>

namespace gkzcy {

namespace {

// J_L(rho) = prod_i prod_{j=0}^{L_i-1} (r_i(rho) - [i==0] - j), with
// r_i(rho) = sum_k (l^(k))_i rho_k.
Poly leading_operator_poly(const std::vector<int>& lead, const MoriBasis& basis,
                           bool radical) {
    const int r = basis.rank();
    Poly out = Poly::constant(r, 1);
    for (size_t i = 0; i < lead.size(); ++i) {
        if (lead[i] == 0) continue;
        QVec coeffs = basis.divisor_coordinates((int)i);
        int reps = radical ? 1 : lead[i];
        for (int j = 0; j < reps; ++j) {
            Rat shift = -Rat(j);
            if (i == 0) shift -= 1;
            out = out * Poly::linear(coeffs, shift);
        }
    }
    return out;
}

IndicialIdeal build(const GroebnerBasis& gb, const MoriBasis& basis, bool radical) {
    IndicialIdeal ind;
    ind.basis = basis;
    ind.radical_form = radical;
    for (const Binomial& b : gb.elements)
        ind.generators.push_back(leading_operator_poly(b.lead, basis, radical));
    return ind;
}

}  // namespace

IndicialIdeal indicial_ideal(const GroebnerBasis& gb, const MoriBasis& basis) {
    return build(gb, basis, false);
}

IndicialIdeal radical_indicial_ideal(const GroebnerBasis& gb, const MoriBasis& basis) {
    return build(gb, basis, true);
}

namespace {

std::vector<Poly::Mon> monomials_of_degree(int nvars, int deg) {
    std::vector<Poly::Mon> out;
    Poly::Mon m(nvars, 0);
    // lexicographic enumeration of compositions of deg into nvars parts
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nvars - 1) {
            m[pos] = left;
            out.push_back(m);
            return;
        }
        for (int e = left; e >= 0; --e) {
            m[pos] = e;
            rec(pos + 1, left - e);
        }
        m[pos] = 0;
    };
    if (nvars == 0) {
        if (deg == 0) out.push_back({});
        return out;
    }
    rec(0, deg);
    return out;
}

}  // namespace

std::vector<int> hilbert_function(const std::vector<Poly>& gens, int nvars, int cap) {
    std::vector<int> hf;
    for (int d = 0; d <= cap; ++d) {
        std::vector<Poly::Mon> mons = monomials_of_degree(nvars, d);
        std::map<Poly::Mon, int> index;
        for (size_t i = 0; i < mons.size(); ++i) index[mons[i]] = (int)i;
        QMat rows;
        for (const Poly& g : gens) {
            int gd = g.degree();
            if (gd < 0 || gd > d) continue;
            for (const Poly::Mon& m : monomials_of_degree(nvars, d - gd)) {
                QVec row(mons.size(), Rat(0));
                for (const auto& [gm, c] : g.terms()) {
                    Poly::Mon prod(nvars);
                    for (int i = 0; i < nvars; ++i) prod[i] = gm[i] + m[i];
                    row[index.at(prod)] += c;
                }
                rows.push_back(std::move(row));
            }
        }
        int dim = (int)mons.size() - rank(std::move(rows));
        hf.push_back(dim);
        if (dim == 0) break;
    }
    return hf;
}

bool indicial_variety_is_origin(const IndicialIdeal& ind) {
    for (const Poly& g : ind.generators)
        if (!g.is_homogeneous()) return false;
    const int nvars = ind.basis.rank();
    // a graded standard algebra is finite dimensional iff some degree vanishes
    int cap = 1;
    for (const Poly& g : ind.generators) cap += std::max(0, g.degree());
    cap = std::max(cap, nvars + 1) * 2;
    std::vector<int> hf = hilbert_function(ind.generators, nvars, cap);
    return !hf.empty() && hf.back() == 0;
}

int quotient_dimension(const IndicialIdeal& ind) {
    const int nvars = ind.basis.rank();
    bool homogeneous = std::all_of(ind.generators.begin(), ind.generators.end(),
                                   [](const Poly& g) { return g.is_homogeneous(); });
    if (homogeneous) {
        int cap = 1;
        for (const Poly& g : ind.generators) cap += std::max(0, g.degree());
        cap = std::max(cap, nvars + 1) * 2;
        std::vector<int> hf = hilbert_function(ind.generators, nvars, cap);
        if (hf.empty() || hf.back() != 0)
            throw Error("InternalError", "quotient ring is not finite dimensional");
        int total = 0;
        for (int v : hf) total += v;
        return total;
    }
    if (nvars == 1) {
        // principal case: dimension = degree of the gcd-free generator product
        int d = -1;
        for (const Poly& g : ind.generators)
            if (!g.is_zero()) d = d < 0 ? g.degree() : std::min(d, g.degree());
        if (d < 0) throw Error("InternalError", "zero indicial ideal");
        return d;
    }
    throw Error("InternalError",
                "quotient dimension for inhomogeneous multivariate ideals is not "
                "implemented");
}

}  // namespace gkzcy
