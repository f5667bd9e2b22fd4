#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <numeric>
#include <string>
#include <vector>

namespace gkzcy {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using ZVec = std::vector<Int>;
using QVec = std::vector<Rat>;
using ZMat = std::vector<ZVec>;
using QMat = std::vector<QVec>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int content(const ZVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int dot(const ZVec& a, const ZVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline QVec to_rational(const ZVec& v) {
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

// Clears denominators and divides by the content; zero vector stays zero.
inline ZVec primitive(const QVec& v) {
    Int l = 1;
    for (const Rat& q : v) l = lcm(l, den(q));
    ZVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = num(v[i] * l);
    Int g = content(w);
    if (g > 1)
        for (Int& x : w) x /= g;
    return w;
}

inline std::string to_string(const Int& x) { return x.str(); }
inline std::string to_string(const Rat& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

}  // namespace gkzcy
