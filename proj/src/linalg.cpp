#include "gkzcy/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace gkzcy {

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = (int)m.size(), cols = (int)m[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rat inv = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(QMat m) { return (int)rref(m).size(); }

QMat kernel_q(const QMat& m) {
    if (m.empty()) return {};
    QMat a = m;
    std::vector<int> pivots = rref(a);
    const int cols = (int)m[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    QMat out;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Rat(0));
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][c];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<QVec> solve(QMat m, QVec b) {
    const int rows = (int)m.size();
    const int cols = rows ? (int)m[0].size() : 0;
    for (int i = 0; i < rows; ++i) m[i].push_back(b[i]);
    std::vector<int> pivots = rref(m);
    // Inconsistent iff a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QVec x(cols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
    return x;
}

ZMat hnf(ZMat m) {
    if (m.empty()) return m;
    const int rows = (int)m.size(), cols = (int)m[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // Euclidean elimination within column c, rows r..end.
        while (true) {
            int p = -1;
            Int best = 0;
            for (int i = r; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                Int a = abs(m[i][c]);
                if (p < 0 || a < best) { p = i; best = a; }
            }
            if (p < 0) break;
            std::swap(m[r], m[p]);
            bool clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                Int q = m[i][c] / m[r][c];
                for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0)
            for (int j = 0; j < cols; ++j) m[r][j] = -m[r][j];
        for (int i = 0; i < r; ++i) {
            // floor division keeps entries above the pivot in [0, pivot)
            Int q = m[i][c] / m[r][c];
            if (m[i][c] - q * m[r][c] < 0) q -= 1;
            if (q != 0)
                for (int j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

SmithResult smith(ZMat m) {
    const int rows = (int)m.size();
    const int cols = rows ? (int)m[0].size() : 0;
    ZMat u(rows, ZVec(rows, 0)), v(cols, ZVec(cols, 0));
    for (int i = 0; i < rows; ++i) u[i][i] = 1;
    for (int i = 0; i < cols; ++i) v[i][i] = 1;

    auto row_op = [&](int i, int k, const Int& q) {  // row i -= q*row k
        for (int j = 0; j < cols; ++j) m[i][j] -= q * m[k][j];
        for (int j = 0; j < rows; ++j) u[i][j] -= q * u[k][j];
    };
    auto col_op = [&](int j, int k, const Int& q) {  // col j -= q*col k
        for (int i = 0; i < rows; ++i) m[i][j] -= q * m[i][k];
        for (int i = 0; i < cols; ++i) v[i][j] -= q * v[i][k];
    };
    auto swap_rows = [&](int i, int k) {
        std::swap(m[i], m[k]);
        std::swap(u[i], u[k]);
    };
    auto swap_cols = [&](int j, int k) {
        for (int i = 0; i < rows; ++i) std::swap(m[i][j], m[i][k]);
        for (int i = 0; i < cols; ++i) std::swap(v[i][j], v[i][k]);
    };

    const int n = std::min(rows, cols);
    auto diagonalize_from = [&](int t0) {
        for (int t = t0; t < n; ++t) {
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    if (m[i][j] == 0) continue;
                    Int a = abs(m[i][j]);
                    if (pi < 0 || a < best) { pi = i; pj = j; best = a; }
                }
            if (pi < 0) return t;
            swap_rows(t, pi);
            if (pj != t) swap_cols(t, pj);
            bool again = true;
            while (again) {
                again = false;
                for (int i = t + 1; i < rows; ++i)
                    if (m[i][t] != 0) {
                        row_op(i, t, m[i][t] / m[t][t]);
                        if (m[i][t] != 0) { swap_rows(t, i); again = true; }
                    }
                for (int j = t + 1; j < cols; ++j)
                    if (m[t][j] != 0) {
                        col_op(j, t, m[t][j] / m[t][t]);
                        if (m[t][j] != 0) { swap_cols(t, j); again = true; }
                    }
            }
            if (m[t][t] < 0) {
                for (int j = 0; j < cols; ++j) m[t][j] = -m[t][j];
                for (int j = 0; j < rows; ++j) u[t][j] = -u[t][j];
            }
        }
        return n;
    };

    int t = diagonalize_from(0);
    // enforce d1 | d2 | ... : fold violating d_j into column i and rediagonalize
    bool fixed = false;
    while (!fixed) {
        fixed = true;
        for (int i = 0; i + 1 < t && fixed; ++i)
            for (int j = i + 1; j < t && fixed; ++j)
                if (m[j][j] % m[i][i] != 0) {
                    col_op(i, j, Int(-1));  // col i += col j
                    diagonalize_from(i);
                    fixed = false;
                }
    }
    SmithResult out;
    for (int i = 0; i < t; ++i)
        if (m[i][i] != 0) out.factors.push_back(m[i][i]);
    out.left = std::move(u);
    out.right = std::move(v);
    return out;
}

ZMat kernel_z(const ZMat& m) {
    // Saturated integer kernel via the rational kernel + HNF of the primitive lattice.
    QMat kq = kernel_q(to_rational(m));
    if (kq.empty()) return {};
    // scale each rational basis vector to a primitive integer vector, then HNF
    ZMat gen;
    gen.reserve(kq.size());
    for (const QVec& v : kq) gen.push_back(primitive(v));
    // HNF of these generators spans the same Q-space but maybe not the saturated
    // lattice; saturate by solving for all elementary vectors of the Q-kernel:
    // the saturated kernel is {x in Z^n : m x = 0}, i.e. the set of integer points
    // of the rational kernel. Compute it via Smith normal form of m^T acting on the
    // standard lattice: columns of V beyond rank(m) give a basis.
    SmithResult s = smith(m);
    const int r = (int)s.factors.size();
    const int cols = m.empty() ? 0 : (int)m[0].size();
    ZMat out;
    for (int j = r; j < cols; ++j) {
        ZVec col(cols);
        for (int i = 0; i < cols; ++i) col[i] = s.right[i][j];
        out.push_back(std::move(col));
    }
    return hnf(std::move(out));
}

ZMat transpose(const ZMat& m) {
    if (m.empty()) return {};
    ZMat t(m[0].size(), ZVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

QMat transpose(const QMat& m) {
    if (m.empty()) return {};
    QMat t(m[0].size(), QVec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Int det(ZMat m) {
    const int n = (int)m.size();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace gkzcy
