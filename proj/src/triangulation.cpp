#include "gkzcy/triangulation.hpp"

#include "gkzcy/error.hpp"
#include "gkzcy/lattice.hpp"
#include "gkzcy/linalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace gkzcy {

bool Triangulation::uses_index(int i) const {
    for (const auto& b : bases)
        if (std::binary_search(b.begin(), b.end(), i)) return true;
    return false;
}

bool Triangulation::is_face(const std::vector<int>& subset) const {
    for (const auto& b : bases)
        if (std::includes(b.begin(), b.end(), subset.begin(), subset.end())) return true;
    return false;
}

Int Triangulation::simplex_volume(const std::vector<int>& base) const {
    ZMat m;
    for (int i : base) m.push_back(config.homogenized(i));
    return abs(det(std::move(m)));
}

Int Triangulation::normalized_volume() const {
    Int v = 0;
    for (const auto& b : bases) v += simplex_volume(b);
    return v;
}

std::string Triangulation::canonical_string() const {
    std::ostringstream os;
    for (size_t k = 0; k < bases.size(); ++k) {
        if (k) os << ";";
        for (size_t j = 0; j < bases[k].size(); ++j)
            os << (j ? "," : "") << bases[k][j];
    }
    return os.str();
}

Triangulation regular_triangulation(const PointConfiguration& config,
                                    const WeightVector& w) {
    const int d = config.rank;
    const int n = config.count();
    if ((int)w.size() != n)
        throw Error("InternalError", "weight length does not match configuration");
    // Lift nu_i to (w_i, nu_i) and take the lower hull.
    QMat lifted;
    for (int i = 0; i < n; ++i) {
        QVec row(d + 1);
        row[0] = w[i];
        for (int j = 0; j < d; ++j) row[j + 1] = Rat(config.points[i][j]);
        lifted.push_back(std::move(row));
    }
    HRep h = facets_of_points(d + 1, lifted);
    if (!h.equations.empty())
        throw Error("InternalError", "lifted configuration is not full dimensional");
    Triangulation t;
    t.config = config;
    for (const ZVec& f : h.facets) {
        // facet (a | c): a.(w,x) + c >= 0; lower face iff the w-coefficient
        // is positive (the facet supports the polytope from below)
        if (f[0] <= 0) continue;
        std::vector<int> on;
        for (int i = 0; i < n; ++i) {
            Rat s(f[d + 1]);
            for (int j = 0; j <= d; ++j) s += Rat(f[j]) * lifted[i][j];
            if (s == 0) on.push_back(i);
        }
        if ((int)on.size() != d + 1)
            throw DegenerateWeight("weight lies on a wall: a lower face has " +
                                   std::to_string(on.size()) + " points");
        t.bases.push_back(on);
    }
    std::sort(t.bases.begin(), t.bases.end());
    for (const auto& b : t.bases)
        if (t.simplex_volume(b) == 0)
            throw DegenerateWeight("degenerate lower face");
    return t;
}

bool is_maximal(const Triangulation& t) {
    for (const auto& b : t.bases)
        if (!std::binary_search(b.begin(), b.end(), 0)) return false;
    for (int i = 0; i < t.config.count(); ++i)
        if (!t.uses_index(i)) return false;
    return true;
}

bool is_unimodular(const Triangulation& t) {
    for (const auto& b : t.bases)
        if (t.simplex_volume(b) != 1) return false;
    return true;
}

std::vector<PrimitiveCollection> primitive_collections(const Triangulation& t) {
    if (!is_maximal(t))
        throw NotMaximal("primitive collections are defined for maximal triangulations");
    const int n = t.config.count();
    // enumerate minimal non-faces: every proper subset is a face
    std::vector<std::vector<int>> nonfaces;
    std::vector<int> cur;
    // BFS over subset sizes; prune supersets of found non-faces
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i)
        if (t.uses_index(i)) frontier.push_back({i});
    std::vector<std::vector<int>> faces = frontier;  // singletons of used points
    for (int size = 2; size <= n && !faces.empty(); ++size) {
        std::vector<std::vector<int>> next_faces;
        for (const auto& f : faces)
            for (int i = f.back() + 1; i < n; ++i) {
                std::vector<int> cand = f;
                cand.push_back(i);
                // minimality: every (size-1)-subset must be a face
                bool all_sub_faces = true;
                for (int drop = 0; drop < size && all_sub_faces; ++drop) {
                    std::vector<int> sub;
                    for (int k = 0; k < size; ++k)
                        if (k != drop) sub.push_back(cand[k]);
                    if (!t.is_face(sub)) all_sub_faces = false;
                }
                if (!all_sub_faces) continue;
                if (t.is_face(cand)) next_faces.push_back(cand);
                else nonfaces.push_back(cand);
            }
        faces = std::move(next_faces);
    }
    std::sort(nonfaces.begin(), nonfaces.end());

    std::vector<PrimitiveCollection> out;
    const int d = t.config.rank;
    for (const auto& coll : nonfaces) {
        // sigma = sum of homogenized points of the collection; expand in the
        // containing simplex cone and read off the primitive relation
        ZVec sigma(d + 1, 0);
        for (int i : coll)
            for (int j = 0; j <= d; ++j) sigma[j] += t.config.homogenized(i)[j];
        PrimitiveCollection pc;
        pc.indices = coll;
        bool found = false;
        for (const auto& base : t.bases) {
            QMat m;  // columns = homogenized base points
            for (int j = 0; j <= d; ++j) {
                QVec row;
                for (int i : base) row.push_back(Rat(t.config.homogenized(i)[j]));
                m.push_back(std::move(row));
            }
            auto c = solve(std::move(m), to_rational(sigma));
            if (!c) continue;
            bool nonneg = std::all_of(c->begin(), c->end(),
                                      [](const Rat& q) { return q >= 0; });
            if (!nonneg) continue;
            // clear denominators: mu * sum_{i in coll} nubar_i - mu * c . base = 0
            Int mu = 1;
            for (const Rat& q : *c) mu = lcm(mu, den(q));
            ZVec rel(t.config.count(), 0);
            for (int i : coll) rel[i] += mu;
            for (size_t k = 0; k < base.size(); ++k) rel[base[k]] -= num((*c)[k] * mu);
            Int g = content(rel);
            if (g > 1)
                for (Int& x : rel) x /= g;
            pc.relation = std::move(rel);
            pc.unimodular_cone = (mu == 1);
            found = true;
            break;
        }
        if (!found)
            throw Error("InternalError", "primitive collection sum not in any cone");
        out.push_back(std::move(pc));
    }
    return out;
}

void MonomialIdeal::minimalize() {
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());
    std::vector<std::vector<int>> keep;
    for (size_t i = 0; i < generators.size(); ++i) {
        bool divisible = false;
        for (size_t j = 0; j < generators.size() && !divisible; ++j) {
            if (i == j) continue;
            bool div = true;
            for (int k = 0; k < nvars; ++k)
                if (generators[j][k] > generators[i][k]) { div = false; break; }
            // ties: keep the lexicographically first copy
            if (div && generators[j] != generators[i]) divisible = true;
        }
        if (!divisible) keep.push_back(generators[i]);
    }
    generators = std::move(keep);
}

bool MonomialIdeal::contains_monomial(const std::vector<int>& m) const {
    for (const auto& g : generators) {
        bool div = true;
        for (int k = 0; k < nvars; ++k)
            if (g[k] > m[k]) { div = false; break; }
        if (div) return true;
    }
    return false;
}

MonomialIdeal stanley_reisner_generators(const Triangulation& t) {
    MonomialIdeal ideal;
    ideal.nvars = t.config.count();
    for (const auto& pc : primitive_collections(t)) {
        std::vector<int> mono(ideal.nvars, 0);
        for (int i : pc.indices) mono[i] = 1;
        ideal.generators.push_back(std::move(mono));
    }
    ideal.minimalize();
    return ideal;
}

Cone secondary_cone(const Triangulation& t, const RelationLattice& lattice) {
    const int d = t.config.rank;
    const int n = t.config.count();
    const int r = lattice.rank();
    ZMat ineqs;
    for (const auto& base : t.bases) {
        QMat m;  // columns = homogenized base points
        for (int j = 0; j <= d; ++j) {
            QVec row;
            for (int i : base) row.push_back(Rat(t.config.homogenized(i)[j]));
            m.push_back(std::move(row));
        }
        for (int i = 0; i < n; ++i) {
            if (std::binary_search(base.begin(), base.end(), i)) continue;
            auto lam = solve(m, to_rational(t.config.homogenized(i)));
            // phi = e_i - sum lam_j e_{base_j} lies in L_Q; express in the basis
            // (positive rescaling preserves the inequality)
            QVec phi(n, Rat(0));
            phi[i] = 1;
            for (size_t k = 0; k < base.size(); ++k) phi[base[k]] -= (*lam)[k];
            QVec v = lattice.coordinates(primitive(phi));
            ineqs.push_back(primitive(v));
        }
    }
    std::sort(ineqs.begin(), ineqs.end());
    ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());
    Cone c = cone_from_inequalities(r, ineqs);
    if (!c.is_full_dimensional())
        throw EmptyInterior("triangulation is not regular: reduced secondary cone "
                            "has empty interior");
    return c;
}

Cone secondary_cone(const Triangulation& t) {
    return secondary_cone(t, relation_lattice(t.config));
}

WeightVector default_weight(const PointConfiguration& config) {
    WeightVector w(config.count(), Rat(1));
    w[0] = 0;
    return w;
}

std::optional<Triangulation> find_unimodular_maximal(const PointConfiguration& config,
                                                     int budget, uint64_t seed) {
    auto try_weight = [&](const WeightVector& w) -> std::optional<Triangulation> {
        try {
            Triangulation t = regular_triangulation(config, w);
            if (is_maximal(t) && is_unimodular(t)) return t;
        } catch (const DegenerateWeight&) {
        }
        return std::nullopt;
    };
    if (auto t = try_weight(default_weight(config))) return t;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(1, 997);
    for (int k = 0; k < budget; ++k) {
        WeightVector w(config.count());
        w[0] = 0;
        for (int i = 1; i < config.count(); ++i) w[i] = Rat(dist(rng));
        if (auto t = try_weight(w)) return t;
    }
    return std::nullopt;
}

TypeReport classify_polytope(const LatticePolytope& pstar, int budget, uint64_t seed) {
    TypeReport rep{};
    rep.codim1_interior_count = (int)codim1_interior_points(pstar).size();
    PointConfiguration cfg = point_configuration(pstar);
    auto t = find_unimodular_maximal(cfg, budget, seed);
    rep.search_exhausted = !t.has_value();
    if (!t)
        rep.type = PolytopeType::III;
    else
        rep.type = rep.codim1_interior_count == 0 ? PolytopeType::I : PolytopeType::II;
    return rep;
}

}  // namespace gkzcy
