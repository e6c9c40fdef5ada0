#include "latwalk/linalg.hpp"

#include "latwalk/errors.hpp"

#include <algorithm>
#include <utility>

namespace latwalk {

Int content(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b; // truncates toward zero
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Int rat_floor(const Rat& r) { return floor_div(num(r), den(r)); }

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
    if (den(v) == 1) return num(v).str();
    return num(v).str() + "/" + den(v).str();
}

namespace {

// Largest k with (k - c)^2 <= r among k > c, found from an integer seed
// and certified by exact rational comparisons only.
bool below_sqrt(const Int& k, const Rat& c, const Rat& r) {
    Rat t = Rat(k) - c;
    if (t <= 0) return true;
    return t * t <= r;
}

} // namespace

Int floor_plus_sqrt(const Rat& c, const Rat& r) {
    ensure(r >= 0, "floor_plus_sqrt: negative radicand");
    Int root = boost::multiprecision::sqrt(rat_ceil(r)); // floor sqrt of ceil(r)
    Int k = rat_floor(c) + root + 2;                     // certainly above
    while (!below_sqrt(k, c, r)) --k;
    return k;
}

Int ceil_minus_sqrt(const Rat& c, const Rat& r) {
    // smallest k >= c - sqrt(r)  <=>  -k <= -c + sqrt(r)
    return -floor_plus_sqrt(-c, r);
}

IntMat int_identity(std::size_t n) {
    IntMat a(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

IntMat int_transpose(const IntMat& a) {
    if (a.empty()) return {};
    IntMat t(a[0].size(), Vec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
    std::size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
    IntMat c(m, Vec(n, 0));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != k) throw DimensionError("int_mul: shape mismatch");
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    }
    return c;
}

Vec int_mat_vec(const IntMat& a, const Vec& x) {
    Vec y(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw DimensionError("int_mat_vec: shape mismatch");
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    }
    return y;
}

Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int det(IntMat a) {
    std::size_t n = a.size();
    for (const Vec& row : a)
        if (row.size() != n) throw DimensionError("det: matrix not square");
    if (n == 0) return 1;
    Int prev = 1, sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::size_t int_rank(IntMat a) {
    std::size_t m = a.size();
    if (m == 0) return 0;
    std::size_t n = a[0].size(), r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t p = r;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[r], a[p]);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            // fraction-free row elimination; only the zero pattern matters
            Int f = a[i][col], g = a[r][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] = a[i][j] * g - f * a[r][j];
        }
        ++r;
    }
    return r;
}

IntMat hermite_rows(IntMat rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero), rows.end());
    if (rows.empty()) return {};
    std::size_t m = rows.size(), n = rows[0].size();
    for (const Vec& v : rows)
        if (v.size() != n) throw DimensionError("hermite_rows: ragged input");
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        // euclidean reduction below row r in this column
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (rows[i][col] == 0) continue;
                if (best == m ||
                    boost::multiprecision::abs(rows[i][col]) <
                        boost::multiprecision::abs(rows[best][col]))
                    best = i;
            }
            if (best == m) break; // column is zero below r
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (rows[i][col] == 0) continue;
                Int q = floor_div(rows[i][col], rows[r][col]);
                for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (std::size_t j = 0; j < n; ++j) rows[r][j] = -rows[r][j];
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(rows[i][col], rows[r][col]);
            if (q == 0) continue;
            for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

IntMat int_kernel(const IntMat& a) {
    std::size_t m = a.size();
    std::size_t n = m == 0 ? 0 : a[0].size();
    if (m == 0) return {};
    IntMat w = a;           // column operations applied to both
    IntMat u = int_identity(n);
    auto swap_cols = [&](IntMat& x, std::size_t i, std::size_t j) {
        for (Vec& row : x) std::swap(row[i], row[j]);
    };
    auto axpy_col = [&](IntMat& x, std::size_t dst, std::size_t src, const Int& q) {
        for (Vec& row : x) row[dst] -= q * row[src];
    };
    std::size_t c = 0;
    for (std::size_t row = 0; row < m && c < n; ++row) {
        if (w[row].size() != n) throw DimensionError("int_kernel: ragged input");
        while (true) {
            std::size_t best = n;
            for (std::size_t j = c; j < n; ++j) {
                if (w[row][j] == 0) continue;
                if (best == n ||
                    boost::multiprecision::abs(w[row][j]) <
                        boost::multiprecision::abs(w[row][best]))
                    best = j;
            }
            if (best == n) break;
            if (best != c) { swap_cols(w, c, best); swap_cols(u, c, best); }
            bool clean = true;
            for (std::size_t j = c + 1; j < n; ++j) {
                if (w[row][j] == 0) continue;
                Int q = floor_div(w[row][j], w[row][c]);
                axpy_col(w, j, c, q);
                axpy_col(u, j, c, q);
                if (w[row][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (w[row][c] != 0) ++c;
    }
    IntMat gens;
    for (std::size_t j = c; j < n; ++j) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = u[i][j];
        gens.push_back(std::move(v));
    }
    return hermite_rows(std::move(gens));
}

Vec reduce_mod_rows(Vec v, const IntMat& h) {
    for (const Vec& row : h) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size()) continue;
        Int q = floor_div(v[p], row[p]);
        if (q == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * row[j];
    }
    return v;
}

IntMat basis_completion(const IntMat& rows, std::size_t n) {
    std::size_t k = rows.size();
    for (const Vec& v : rows)
        if (v.size() != n) throw DimensionError("basis_completion: ragged input");
    if (k > n) throw PreconditionError("basis_completion: more rows than ambient rank");
    IntMat w = rows;
    IntMat uinv = int_identity(n); // tracks the inverse of the column operations
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (Vec& row : w) std::swap(row[i], row[j]);
        std::swap(uinv[i], uinv[j]);
    };
    auto axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (Vec& row : w) row[dst] -= q * row[src]; // col_dst -= q col_src
        for (std::size_t t = 0; t < n; ++t) uinv[src][t] += q * uinv[dst][t];
    };
    for (std::size_t row = 0; row < k; ++row) {
        while (true) {
            std::size_t best = n;
            for (std::size_t j = row; j < n; ++j) {
                if (w[row][j] == 0) continue;
                if (best == n ||
                    boost::multiprecision::abs(w[row][j]) <
                        boost::multiprecision::abs(w[row][best]))
                    best = j;
            }
            if (best == n)
                throw PreconditionError("basis_completion: rows are dependent");
            if (best != row) swap_cols(row, best);
            bool clean = true;
            for (std::size_t j = row + 1; j < n; ++j) {
                if (w[row][j] == 0) continue;
                Int q = floor_div(w[row][j], w[row][row]);
                axpy(j, row, q);
                if (w[row][j] != 0) clean = false;
            }
            if (clean) break;
        }
    }
    // after reduction w = [L | 0] with L lower triangular
    Int dl = 1;
    for (std::size_t i = 0; i < k; ++i) dl *= w[i][i];
    if (dl != 1 && dl != -1)
        throw PreconditionError("basis_completion: rows do not span a saturated sublattice");
    IntMat out = rows;
    IntMat hb = hermite_rows(rows);
    for (std::size_t i = k; i < n; ++i) out.push_back(reduce_mod_rows(uinv[i], hb));
    ensure(boost::multiprecision::abs(det(out)) == 1, "basis_completion: result not unimodular");
    return out;
}

RatMat to_rat(const IntMat& a) {
    RatMat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = QVec(a[i].begin(), a[i].end());
    return r;
}

QVec to_rat(const Vec& v) { return QVec(v.begin(), v.end()); }

RatMat rat_identity(std::size_t n) {
    RatMat a(n, QVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

RatMat rat_transpose(const RatMat& a) {
    if (a.empty()) return {};
    RatMat t(a[0].size(), QVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    std::size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
    RatMat c(m, QVec(n, 0));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != k) throw DimensionError("rat_mul: shape mismatch");
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    }
    return c;
}

QVec rat_mat_vec(const RatMat& a, const QVec& x) {
    QVec y(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != x.size()) throw DimensionError("rat_mat_vec: shape mismatch");
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    }
    return y;
}

bool is_integral(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return den(x) == 1; });
}

bool is_integral(const RatMat& a) {
    return std::all_of(a.begin(), a.end(),
                       [](const QVec& v) { return is_integral(v); });
}

Vec to_int_checked(const QVec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ensure(den(v[i]) == 1, "to_int_checked: entry is not an integer");
        out[i] = num(v[i]);
    }
    return out;
}

IntMat to_int_checked(const RatMat& a) {
    IntMat out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = to_int_checked(a[i]);
    return out;
}

std::optional<RatMat> rat_inverse(const RatMat& a) {
    std::size_t n = a.size();
    for (const QVec& row : a)
        if (row.size() != n) throw DimensionError("rat_inverse: matrix not square");
    RatMat w = a, inv = rat_identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && w[p][col] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(w[p], w[col]);
        std::swap(inv[p], inv[col]);
        Rat pivot = w[col][col];
        for (std::size_t j = 0; j < n; ++j) { w[col][j] /= pivot; inv[col][j] /= pivot; }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                w[i][j] -= f * w[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::optional<QVec> rat_solve(RatMat a, QVec b) {
    std::size_t m = a.size();
    if (b.size() != m) throw DimensionError("rat_solve: shape mismatch");
    std::size_t n = m == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t p = r;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rat pivot = a[r][col];
        for (std::size_t j = 0; j < n; ++j) a[r][j] /= pivot;
        b[r] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (b[i] != 0) return std::nullopt;
    QVec x(n, 0); // free variables pinned to zero
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

Inertia sylvester_inertia(RatMat m) {
    std::size_t n = m.size();
    for (const QVec& row : m) {
        if (row.size() != n) throw DimensionError("sylvester_inertia: matrix not square");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i])
                throw PreconditionError("sylvester_inertia: matrix not symmetric");
    Inertia out;
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i) live[i] = i;
    while (!live.empty()) {
        std::size_t s = live.size();
        std::size_t pick = s;
        for (std::size_t i = 0; i < s && pick == s; ++i)
            if (m[live[i]][live[i]] != 0) pick = i;
        if (pick == s) {
            // all diagonal entries vanish; hunt for an off-diagonal pairing
            std::size_t oi = s, oj = s;
            for (std::size_t i = 0; i < s && oi == s; ++i)
                for (std::size_t j = i + 1; j < s; ++j)
                    if (m[live[i]][live[j]] != 0) { oi = i; oj = j; break; }
            if (oi == s) { out.zero += static_cast<int>(s); break; }
            std::size_t a = live[oi], b = live[oj];
            // x_a <- x_a + x_b; new diagonal entry is 2 <x_a, x_b> != 0
            for (std::size_t t = 0; t < n; ++t) m[a][t] += m[b][t];
            for (std::size_t t = 0; t < n; ++t) m[t][a] += m[t][b];
            continue;
        }
        std::size_t p = live[pick];
        Rat piv = m[p][p];
        if (piv > 0) ++out.positive; else ++out.negative;
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(pick));
        for (std::size_t ii : live) {
            if (m[ii][p] == 0) continue;
            Rat f = m[ii][p] / piv;
            for (std::size_t jj : live) m[ii][jj] -= f * m[p][jj];
            m[ii][p] = 0;
        }
        for (std::size_t jj : live) m[p][jj] = 0;
    }
    return out;
}

} // namespace latwalk
