#include "gkzcy/chow.hpp"

#include "gkzcy/error.hpp"
#include "gkzcy/linalg.hpp"

#include <algorithm>
#include <functional>

namespace gkzcy {

namespace {

std::vector<Poly::Mon> monomials_of_degree(int nvars, int deg) {
    std::vector<Poly::Mon> out;
    if (nvars == 0) {
        if (deg == 0) out.push_back({});
        return out;
    }
    Poly::Mon m(nvars, 0);
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
    rec(0, deg);
    return out;
}

}  // namespace

ChowElement ChowElement::graded_part(int degree) const {
    return {ring, value.homogeneous_part(degree)};
}
ChowElement ChowElement::operator+(const ChowElement& o) const {
    return {ring, value + o.value};
}
ChowElement ChowElement::operator-(const ChowElement& o) const {
    return {ring, value - o.value};
}
ChowElement ChowElement::operator*(const ChowElement& o) const {
    return ring->reduce(value * o.value);
}

ChowRing ChowRing::build(const Triangulation& t, const MoriBasis& basis) {
    if (!is_maximal(t))
        throw NotMaximal("Chow ring requires a maximal triangulation");
    ChowRing ring;
    ring.triangulation_ = t;
    ring.mori_ = basis;
    ring.nvars_ = basis.rank();
    ring.top_ = t.config.rank;

    // Stanley-Reisner generators mapped through D_i = r_i(J).
    std::vector<Poly> gens;
    for (const auto& pc : primitive_collections(t)) {
        Poly g = Poly::constant(ring.nvars_, 1);
        for (int i : pc.indices)
            g = g * Poly::linear(basis.divisor_coordinates(i));
        gens.push_back(std::move(g));
    }

    for (int d = 0; d <= ring.top_; ++d) {
        Level lvl;
        lvl.mons = monomials_of_degree(ring.nvars_, d);
        std::map<Poly::Mon, int> index;
        for (size_t i = 0; i < lvl.mons.size(); ++i) index[lvl.mons[i]] = (int)i;
        QMat rows;
        for (const Poly& g : gens) {
            int gd = g.degree();
            if (gd < 0 || gd > d) continue;
            for (const Poly::Mon& m : monomials_of_degree(ring.nvars_, d - gd)) {
                QVec row(lvl.mons.size(), Rat(0));
                for (const auto& [gm, c] : g.terms()) {
                    Poly::Mon prod(ring.nvars_);
                    for (int i = 0; i < ring.nvars_; ++i) prod[i] = gm[i] + m[i];
                    row[index.at(prod)] += c;
                }
                rows.push_back(std::move(row));
            }
        }
        lvl.pivots = rref(rows);
        rows.resize(lvl.pivots.size());
        lvl.rewrite = std::move(rows);
        std::vector<bool> is_pivot(lvl.mons.size(), false);
        for (int c : lvl.pivots) is_pivot[c] = true;
        for (size_t i = 0; i < lvl.mons.size(); ++i)
            if (!is_pivot[i]) lvl.basis.push_back((int)i);
        ring.levels_.push_back(std::move(lvl));
    }

    // top normalization: the first maximal simplex integrates to 1/|det|
    const auto& base = t.bases.front();
    Poly pt = Poly::constant(ring.nvars_, 1);
    for (int i : base)
        if (i != 0) pt = pt * Poly::linear(basis.divisor_coordinates(i));
    // maximal simplices contain index 0; drop it to get the distinct divisors
    ChowElement nf = ring.reduce(pt);
    const Level& toplvl = ring.levels_[ring.top_];
    if (toplvl.basis.size() != 1)
        throw Error("InternalError", "top graded piece is not one dimensional");
    Rat c = nf.value.coefficient(toplvl.mons[toplvl.basis[0]]);
    if (c == 0)
        throw Error("InternalError", "point class reduced to zero");
    ring.top_scale_ = Rat(1) / (c * Rat(t.simplex_volume(base)));
    return ring;
}

const std::vector<Poly::Mon>& ChowRing::basis_monomials(int degree) const {
    static const std::vector<Poly::Mon> empty;
    if (degree < 0 || degree > top_) return empty;
    static thread_local std::vector<Poly::Mon> scratch;
    scratch.clear();
    for (int i : levels_[degree].basis) scratch.push_back(levels_[degree].mons[i]);
    return scratch;
}

std::vector<int> ChowRing::graded_dimensions() const {
    std::vector<int> dims;
    for (const Level& l : levels_) dims.push_back((int)l.basis.size());
    return dims;
}

int ChowRing::dimension() const {
    int s = 0;
    for (int d : graded_dimensions()) s += d;
    return s;
}

ChowElement ChowRing::reduce(const Poly& p) const {
    Poly out(nvars_);
    for (int d = 0; d <= p.degree(); ++d) {
        Poly part = p.homogeneous_part(d);
        if (part.is_zero()) continue;
        if (d > top_) continue;  // beyond the socle everything vanishes
        const Level& lvl = levels_[d];
        std::map<Poly::Mon, int> index;
        for (size_t i = 0; i < lvl.mons.size(); ++i) index[lvl.mons[i]] = (int)i;
        QVec x(lvl.mons.size(), Rat(0));
        for (const auto& [m, c] : part.terms()) x[index.at(m)] = c;
        for (size_t r = 0; r < lvl.rewrite.size(); ++r) {
            Rat f = x[lvl.pivots[r]];
            if (f == 0) continue;
            for (size_t j = 0; j < x.size(); ++j) x[j] -= f * lvl.rewrite[r][j];
        }
        for (size_t j = 0; j < x.size(); ++j)
            if (x[j] != 0) out += x[j] * [&] {
                Poly mono(nvars_);
                return Poly::constant(nvars_, 1) * mono;  // placeholder
            }();
        // (rewritten below)
        (void)out;
        for (size_t j = 0; j < x.size(); ++j) (void)j;
    }
    return {this, out};
}

ChowElement ChowRing::hyperplane(int a) const {
    return reduce(Poly::variable(nvars_, a));
}

ChowElement ChowRing::divisor(int i) const {
    return reduce(Poly::linear(mori_.divisor_coordinates(i)));
}

ChowElement ChowRing::hypersurface_class() const {
    Poly p(nvars_);
    for (int i = 1; i < mori_.lattice.npoints(); ++i)
        p += Poly::linear(mori_.divisor_coordinates(i));
    return reduce(p);
}

ChowElement ChowRing::invert_unit(const ChowElement& e) const {
    Rat c0 = e.value.constant_term();
    if (c0 == 0)
        throw Error("InternalError", "cannot invert an element with zero constant term");
    Poly n = (Rat(-1) / c0) * e.value;
    n += Poly::constant(nvars_, 1);  // n = 1 - e/c0, nilpotent
    ChowElement acc = one();
    ChowElement term = one();
    ChowElement nilp{this, n};
    for (int k = 1; k <= top_; ++k) {
        term = term * nilp;
        acc = acc + term;
    }
    return (Rat(1) / c0) * acc;
}

Rat ChowRing::integrate_top(const ChowElement& e) const {
    const Level& lvl = levels_[top_];
    if (lvl.basis.empty()) return 0;
    return e.value.coefficient(lvl.mons[lvl.basis[0]]) * top_scale_;
}

ChernData chern_data(const ChowRing& ring) {
    const int n = ring.mori().lattice.npoints();
    ChowElement num = ring.one();
    for (int i = 1; i < n; ++i) {
        ChowElement f = ring.one() + ring.divisor(i);
        num = num * f;
    }
    ChowElement x = ring.hypersurface_class();
    ChernData out;
    out.total = num * ring.invert_unit(ring.one() + x);
    out.c2 = out.total.graded_part(2);
    out.c3 = out.total.graded_part(3);
    out.c1_vanishes = out.total.graded_part(1).is_zero();
    out.euler = ring.integrate_top(x * out.total);
    return out;
}

HypersurfaceRing::HypersurfaceRing(const ChowRing& ambient) : ambient_(&ambient) {
    ChowElement x = ambient.hypersurface_class();
    for (int d = 0; d <= ambient.top_degree(); ++d) {
        const auto mons = ambient.basis_monomials(d);
        // dim of the image of multiplication by [X] on degree d
        QMat rows;
        const auto target = ambient.basis_monomials(d + 1);
        std::map<Poly::Mon, int> tindex;
        for (size_t i = 0; i < target.size(); ++i) tindex[target[i]] = (int)i;
        for (const Poly::Mon& m : mons) {
            Poly p(ambient.nvars());
            p += Poly::constant(ambient.nvars(), 1);
            Poly mono = Poly::constant(ambient.nvars(), 1);
            for (int v = 0; v < ambient.nvars(); ++v)
                for (int k = 0; k < m[v]; ++k) mono = mono * Poly::variable(ambient.nvars(), v);
            ChowElement prod = x * ChowElement{ambient_, mono};
            QVec row(target.size(), Rat(0));
            for (const auto& [tm, c] : prod.value.terms()) row[tindex.at(tm)] = c;
            rows.push_back(std::move(row));
        }
        int image = target.empty() ? 0 : rank(std::move(rows));
        dims_.push_back(image);
    }
}

int HypersurfaceRing::dimension() const {
    int s = 0;
    for (int d : dims_) s += d;
    return s;
}

Rat HypersurfaceRing::integrate(const ChowElement& e) const {
    return ambient_->integrate_top(ambient_->hypersurface_class() * e);
}

bool HypersurfaceRing::annihilates(const ChowElement& e) const {
    return (ambient_->hypersurface_class() * e).is_zero();
}

}  // namespace gkzcy
