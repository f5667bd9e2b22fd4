#include "gkzcy/groebner.hpp"

#include "gkzcy/error.hpp"
#include "gkzcy/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace gkzcy {

namespace {

int total_degree(const std::vector<int>& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
}

}  // namespace

bool TermOrder::weight_tie(const std::vector<int>& u, const std::vector<int>& v) const {
    Rat wu = 0, wv = 0;
    for (size_t i = 0; i < weight.size(); ++i) {
        wu += weight[i] * u[i];
        wv += weight[i] * v[i];
    }
    return wu == wv;
}

int TermOrder::compare(const std::vector<int>& u, const std::vector<int>& v) const {
    if (u == v) return 0;
    int du = total_degree(u), dv = total_degree(v);
    if (du != dv) return du < dv ? -1 : 1;
    Rat wu = 0, wv = 0;
    for (size_t i = 0; i < weight.size(); ++i) {
        wu += weight[i] * u[i];
        wv += weight[i] * v[i];
    }
    if (wu != wv) return wu < wv ? -1 : 1;
    if (require_generic)
        throw NonGenericWeight("weight ties on monomials of equal degree");
    return u < v ? -1 : 1;  // lex tiebreak realizes a refining term order
}

ZVec Binomial::relation() const {
    ZVec l(lead.size());
    for (size_t i = 0; i < lead.size(); ++i) l[i] = Int(lead[i]) - Int(tail[i]);
    return l;
}

MonomialIdeal GroebnerBasis::leading_ideal() const {
    MonomialIdeal ideal;
    ideal.nvars = nvars;
    for (const Binomial& b : elements) ideal.generators.push_back(b.lead);
    ideal.minimalize();
    return ideal;
}

namespace {

// Internal Buchberger engine for pure-difference binomials y^u - y^v, with an
// optional elimination block: variable 0 dominates when eliminate is set.
struct Engine {
    int nvars;
    const TermOrder* order;
    bool eliminate;  // variable 0 is the elimination variable
    int degree_bound;

    int cmp(const std::vector<int>& u, const std::vector<int>& v) const {
        if (eliminate && u[0] != v[0]) return u[0] < v[0] ? -1 : 1;
        if (!eliminate) return order->compare(u, v);
        // compare the y-part with the order (which has one fewer variable)
        std::vector<int> uy(u.begin() + 1, u.end());
        std::vector<int> vy(v.begin() + 1, v.end());
        if (uy == vy) return 0;
        return order->compare(uy, vy);
    }

    struct Bin {
        std::vector<int> lead, tail;
    };

    // orient u - v; returns false when u == v (zero binomial)
    bool orient(std::vector<int> u, std::vector<int> v, Bin& out) const {
        if (u == v) return false;
        // remove common factor so supports stay disjoint
        for (int i = 0; i < (int)u.size(); ++i) {
            int g = std::min(u[i], v[i]);
            u[i] -= g;
            v[i] -= g;
        }
        if (u == v) return false;
        if (cmp(u, v) > 0) out = {std::move(u), std::move(v)};
        else out = {std::move(v), std::move(u)};
        return true;
    }

    static bool divides(const std::vector<int>& a, const std::vector<int>& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    }

    // reduce the monomial m by the rewriting rules lead -> tail
    std::vector<int> normal_form(std::vector<int> m, const std::vector<Bin>& g) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Bin& b : g) {
                if (!divides(b.lead, m)) continue;
                for (size_t i = 0; i < m.size(); ++i) m[i] += b.tail[i] - b.lead[i];
                if (total_degree(m) > degree_bound)
                    throw BudgetExceeded("monomial degree bound exceeded in reduction");
                changed = true;
            }
        }
        return m;
    }

    std::vector<Bin> buchberger(std::vector<Bin> g) const {
        std::deque<std::pair<int, int>> pairs;
        for (int i = 0; i < (int)g.size(); ++i)
            for (int j = 0; j < i; ++j) pairs.emplace_back(i, j);
        while (!pairs.empty()) {
            auto [i, j] = pairs.front();
            pairs.pop_front();
            const Bin &a = g[i], &b = g[j];
            // coprime leading terms: S-pair reduces to zero
            bool coprime = true;
            for (int k = 0; k < nvars; ++k)
                if (a.lead[k] > 0 && b.lead[k] > 0) { coprime = false; break; }
            if (coprime) continue;
            std::vector<int> l(nvars), s1(nvars), s2(nvars);
            for (int k = 0; k < nvars; ++k) {
                l[k] = std::max(a.lead[k], b.lead[k]);
                s1[k] = l[k] - a.lead[k] + a.tail[k];
                s2[k] = l[k] - b.lead[k] + b.tail[k];
            }
            if (total_degree(s1) > degree_bound || total_degree(s2) > degree_bound)
                throw BudgetExceeded("degree bound exceeded in S-pair");
            s1 = normal_form(std::move(s1), g);
            s2 = normal_form(std::move(s2), g);
            Bin fresh;
            if (!orient(std::move(s1), std::move(s2), fresh)) continue;
            g.push_back(std::move(fresh));
            for (int k = 0; k + 1 < (int)g.size(); ++k)
                pairs.emplace_back((int)g.size() - 1, k);
        }
        return interreduce(std::move(g));
    }

    std::vector<Bin> interreduce(std::vector<Bin> g) const {
        // drop elements whose lead is divisible by another lead
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < g.size() && !changed; ++i)
                for (size_t j = 0; j < g.size(); ++j) {
                    if (i == j) continue;
                    if (divides(g[j].lead, g[i].lead)) {
                        g.erase(g.begin() + i);
                        changed = true;
                        break;
                    }
                }
        }
        // tail-reduce (a binomial's tail is never divisible by its own lead)
        for (size_t i = 0; i < g.size(); ++i) {
            std::vector<int> t = normal_form(g[i].tail, g);
            Bin fixed;
            if (!orient(g[i].lead, std::move(t), fixed))
                throw Error("InternalError", "binomial collapsed during tail reduction");
            g[i] = std::move(fixed);
        }
        std::sort(g.begin(), g.end(), [](const Bin& a, const Bin& b) {
            return std::tie(a.lead, a.tail) < std::tie(b.lead, b.tail);
        });
        return g;
    }
};

}  // namespace

GroebnerBasis toric_ideal_gb(const RelationLattice& lattice, const TermOrder& order,
                             const GroebnerOptions& opts) {
    const int n = lattice.npoints();
    if ((int)order.weight.size() != n)
        throw Error("InternalError", "weight length does not match configuration");
    TermOrder ord = order;
    ord.require_generic = opts.require_generic || order.require_generic;

    // Saturation via the extra variable t: add t*y_0...y_p - 1 and eliminate t.
    Engine eng{n + 1, &ord, /*eliminate=*/true, opts.degree_bound};
    std::vector<Engine::Bin> gens;
    for (const ZVec& l : lattice.basis) {
        std::vector<int> u(n + 1, 0), v(n + 1, 0);
        for (int i = 0; i < n; ++i) {
            Int x = l[i];
            if (x > 0) u[i + 1] = (int)x;
            else v[i + 1] = (int)-x;
        }
        Engine::Bin b;
        if (eng.orient(std::move(u), std::move(v), b)) gens.push_back(std::move(b));
    }
    {
        std::vector<int> u(n + 1, 1);  // t * y_0 ... y_p
        std::vector<int> v(n + 1, 0);  // 1
        Engine::Bin b;
        eng.orient(std::move(u), std::move(v), b);
        gens.push_back(std::move(b));
    }
    std::vector<Engine::Bin> gb_ext = eng.buchberger(std::move(gens));

    // restrict to t-free elements; they form a GB of I_A under the y-order
    Engine yeng{n, &ord, /*eliminate=*/false, opts.degree_bound};
    std::vector<Engine::Bin> gb_y;
    for (const Engine::Bin& b : gb_ext) {
        if (b.lead[0] != 0 || b.tail[0] != 0) continue;
        Engine::Bin c;
        c.lead.assign(b.lead.begin() + 1, b.lead.end());
        c.tail.assign(b.tail.begin() + 1, b.tail.end());
        gb_y.push_back(std::move(c));
    }
    gb_y = yeng.interreduce(std::move(gb_y));

    GroebnerBasis out;
    out.nvars = n;
    out.order = ord;
    for (Engine::Bin& b : gb_y)
        out.elements.push_back({std::move(b.lead), std::move(b.tail)});
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) { return gb.leading_ideal(); }

MonomialIdeal monomial_radical(const MonomialIdeal& ideal) {
    MonomialIdeal out;
    out.nvars = ideal.nvars;
    for (const auto& g : ideal.generators) {
        std::vector<int> s(g.size());
        for (size_t i = 0; i < g.size(); ++i) s[i] = g[i] > 0 ? 1 : 0;
        out.generators.push_back(std::move(s));
    }
    out.minimalize();
    return out;
}

GroebnerCone groebner_cone(const GroebnerBasis& gb, const RelationLattice& lattice) {
    GroebnerCone out;
    const int r = lattice.rank();
    ZMat reduced_rows;
    for (const Binomial& b : gb.elements) {
        ZVec l = b.relation();
        out.full_inequalities.push_back(l);
        reduced_rows.push_back(primitive(lattice.coordinates(l)));
    }
    std::sort(reduced_rows.begin(), reduced_rows.end());
    reduced_rows.erase(std::unique(reduced_rows.begin(), reduced_rows.end()),
                       reduced_rows.end());
    out.reduced = cone_from_inequalities(r, reduced_rows);
    return out;
}

namespace {

// any full weight vector with prescribed pairings against the lattice basis
WeightVector lift_reduced_weight(const RelationLattice& lattice, const QVec& xi) {
    QMat m = to_rational(lattice.basis);
    auto w = solve(std::move(m), xi);
    if (!w) throw Error("InternalError", "could not lift reduced weight");
    return *w;
}

std::string ideal_key(const MonomialIdeal& ideal) {
    std::string s;
    for (const auto& g : ideal.generators) {
        for (int e : g) s += std::to_string(e) + ",";
        s += ";";
    }
    return s;
}

}  // namespace

GroebnerFan groebner_fan_traverse(const RelationLattice& lattice, int budget,
                                  const GroebnerOptions& opts) {
    GroebnerFan fan;
    const int r = lattice.rank();
    if (r == 0) {
        fan.complete = true;
        return fan;
    }
    auto cell_at = [&](const QVec& xi) {
        TermOrder ord;
        ord.weight = lift_reduced_weight(lattice, xi);
        GroebnerBasis gb = toric_ideal_gb(lattice, ord, opts);
        GroebnerCone gc = groebner_cone(gb, lattice);
        return FanCell{std::move(gb), std::move(gc.reduced)};
    };
    std::map<std::string, int> seen;
    std::deque<int> queue;
    QVec seed(r, Rat(1));  // generic starting chamber; ties broken by lex
    FanCell first = cell_at(seed);
    seen[ideal_key(first.basis.leading_ideal())] = 0;
    fan.cells.push_back(std::move(first));
    queue.push_back(0);
    fan.complete = true;
    while (!queue.empty()) {
        if ((int)fan.cells.size() > budget) {
            fan.complete = false;  // partial fan returned, flagged
            return fan;
        }
        int idx = queue.front();
        queue.pop_front();
        Cone cone = fan.cells[idx].cone;  // copy: fan.cells may reallocate
        QVec center = cone.interior_point();
        for (const ZVec& facet : cone.inequalities) {
            // relative interior point of the facet (zero vector when r == 1)
            QVec fp(r, Rat(0));
            for (const ZVec& ray : cone.rays)
                if (dot(facet, ray) == 0)
                    for (int i = 0; i < r; ++i) fp[i] += Rat(ray[i]);
            // step across: xi = fp + s*(fp - center) exits through this facet;
            // shrink s until the discovered cell is the true neighbor (its
            // closure must contain fp)
            Rat s(1, 2);
            FanCell next;
            bool found = false;
            for (int tries = 0; tries < 64 && !found; ++tries, s /= 4) {
                QVec xi(r);
                for (int i = 0; i < r; ++i) xi[i] = fp[i] + s * (fp[i] - center[i]);
                next = cell_at(xi);
                found = next.cone.contains(fp);
            }
            if (!found)
                throw Error("InternalError", "fan flip did not find the neighbor cell");
            std::string key = ideal_key(next.basis.leading_ideal());
            if (!seen.contains(key)) {
                seen[key] = (int)fan.cells.size();
                queue.push_back((int)fan.cells.size());
                fan.cells.push_back(std::move(next));
            }
        }
    }
    return fan;
}

}  // namespace gkzcy
