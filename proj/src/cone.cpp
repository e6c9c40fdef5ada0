#include "latwalk/cone.hpp"

#include "latwalk/errors.hpp"
#include "latwalk/sublattice.hpp"

#include <algorithm>
#include <functional>

namespace latwalk {

namespace {

Vec primitive(Vec v) {
    Int c = content(v);
    if (c > 1)
        for (Int& e : v) e /= c;
    return v;
}

bool proportional(const Vec& a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

} // namespace

WallSystem::WallSystem(Lattice ambient, Vec kappa, IntMat walls)
    : ambient_(std::move(ambient)), kappa_(std::move(kappa)) {
    require(ambient_.is_hyperbolic(), "wall system: lattice must have signature (1, n-1)");
    if (kappa_.size() != ambient_.rank())
        throw DimensionError("wall system: kappa length does not match rank");
    require(ambient_.square(kappa_) > 0, "wall system: kappa must have positive square");
    for (Vec e : walls) {
        if (e.size() != ambient_.rank())
            throw DimensionError("wall system: wall length does not match rank");
        require(ambient_.square(e) < 0, "wall system: walls must have negative square");
        Int s = ambient_.inner(e, kappa_);
        if (s < 0) {
            for (Int& t : e) t = -t;
        } else if (s == 0) {
            // kappa sits on this hyperplane, so it cannot pick a side; fall
            // back to a fixed sign to keep the stored wall canonical
            for (const Int& t : e) {
                if (t == 0) continue;
                if (t < 0)
                    for (Int& u : e) u = -u;
                break;
            }
        }
        e = primitive(std::move(e));
        if (std::find(walls_.begin(), walls_.end(), e) == walls_.end())
            walls_.push_back(std::move(e));
    }
}

bool in_positive_cone(const WallSystem& ws, const Vec& x) {
    return ws.ambient().square(x) > 0 && ws.ambient().inner(x, ws.kappa()) > 0;
}

bool is_nef(const WallSystem& ws, const Vec& x) {
    if (ws.ambient().square(x) < 0) return false;
    if (ws.ambient().inner(x, ws.kappa()) < 0) return false;
    for (const Vec& e : ws.walls())
        if (ws.ambient().inner(x, e) < 0) return false;
    return true;
}

bool separates(const WallSystem& ws, const Vec& e, const Vec& x, const Vec& y) {
    Int sx = ws.ambient().inner(e, x), sy = ws.ambient().inner(e, y);
    return (sx > 0 && sy < 0) || (sx < 0 && sy > 0);
}

std::vector<int> chamber_signature(const WallSystem& ws, const Vec& x) {
    require(in_positive_cone(ws, x), "chamber_signature: x must lie in the positive cone");
    std::vector<int> out;
    for (const Vec& e : ws.walls()) {
        Int s = ws.ambient().inner(x, e);
        out.push_back(s > 0 ? 1 : (s < 0 ? -1 : 0));
    }
    return out;
}

namespace {

// Feasibility of { y : r . y > 0 for every row r } by exact
// Fourier-Motzkin elimination; valid for strict homogeneous systems.
bool strict_cone_feasible(IntMat rows) {
    if (rows.empty()) return true;
    std::size_t k = rows[0].size();
    auto tidy = [](IntMat& rs) -> bool { // false when 0 > 0 shows up
        IntMat out;
        for (Vec& r : rs) {
            if (is_zero(r)) return false;
            Vec p = primitive(std::move(r));
            if (std::find(out.begin(), out.end(), p) == out.end())
                out.push_back(std::move(p));
        }
        rs = std::move(out);
        return true;
    };
    if (!tidy(rows)) return false;
    for (std::size_t v = 0; v < k; ++v) {
        if (rows.empty()) return true;
        IntMat zeros, pos, neg;
        for (Vec& r : rows) {
            if (r[v] == 0) zeros.push_back(std::move(r));
            else if (r[v] > 0) pos.push_back(std::move(r));
            else neg.push_back(std::move(r));
        }
        IntMat next = std::move(zeros);
        for (const Vec& p : pos)
            for (const Vec& n : neg) {
                Vec combo(k, 0);
                for (std::size_t j = 0; j < k; ++j)
                    combo[j] = -n[v] * p[j] + p[v] * n[j];
                next.push_back(std::move(combo));
            }
        rows = std::move(next);
        if (!tidy(rows)) return false;
    }
    return rows.empty();
}

void subsets_of_size(std::size_t count, std::size_t size,
                     std::vector<std::size_t>& cur,
                     const std::function<void(const std::vector<std::size_t>&)>& fn,
                     std::size_t from) {
    if (cur.size() == size) { fn(cur); return; }
    for (std::size_t i = from; i + (size - cur.size()) <= count; ++i) {
        cur.push_back(i);
        subsets_of_size(count, size, cur, fn, i + 1);
        cur.pop_back();
    }
}

} // namespace

bool mbm_face_test(const WallSystem& ws, const Vec& e) {
    const Lattice& lat = ws.ambient();
    std::size_t n = lat.rank();
    if (e.size() != n) throw DimensionError("mbm_face_test: class length does not match rank");
    require(!is_zero(e), "mbm_face_test: class must be nonzero");
    Int qe = lat.square(e);
    if (qe >= 0) return false; // e-perp carries no positive vectors

    IntMat walls;
    for (const Vec& w : ws.walls())
        if (!proportional(w, e)) walls.push_back(w);

    IntMat basis = orthogonal_complement(lat, IntMat{e}); // k = n-1 rows
    std::size_t k = basis.size();

    // kappa projected into e-perp, scaled by -q(e) > 0 to stay integral
    Int se = lat.inner(ws.kappa(), e);
    Vec khat(n, 0);
    for (std::size_t i = 0; i < n; ++i) khat[i] = -qe * ws.kappa()[i] + se * e[i];

    Vec kv(k);
    IntMat wv(walls.size(), Vec(k));
    for (std::size_t j = 0; j < k; ++j) {
        kv[j] = lat.inner(basis[j], khat);
        for (std::size_t t = 0; t < walls.size(); ++t)
            wv[t][j] = lat.inner(basis[j], walls[t]);
    }

    IntMat strict = wv;
    strict.push_back(kv);
    if (!strict_cone_feasible(std::move(strict))) return false;

    // exact maximum of q over the closed slice polyhedron, by stationary
    // points of every candidate active set; q is strictly concave there
    RatMat ghat(k, QVec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) ghat[i][j] = Rat(lat.inner(basis[i], basis[j]));

    bool any_feasible = false;
    Rat best = 0;
    auto consider = [&](const std::vector<std::size_t>& f) {
        std::size_t rows = k + 1 + f.size();
        std::size_t cols = k + 1 + f.size();
        RatMat sys(rows, QVec(cols, 0));
        QVec rhs(rows, 0);
        // stationarity: 2 ghat y - mu_0 kv - sum mu_j wv_j = 0
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) sys[i][j] = 2 * ghat[i][j];
            sys[i][k] = Rat(-kv[i]);
            for (std::size_t t = 0; t < f.size(); ++t) sys[i][k + 1 + t] = Rat(-wv[f[t]][i]);
        }
        for (std::size_t j = 0; j < k; ++j) sys[k][j] = Rat(kv[j]);
        rhs[k] = 1;
        for (std::size_t t = 0; t < f.size(); ++t)
            for (std::size_t j = 0; j < k; ++j) sys[k + 1 + t][j] = Rat(wv[f[t]][j]);
        auto sol = rat_solve(std::move(sys), std::move(rhs));
        if (!sol) return; // empty active-set subspace
        QVec y(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(k));
        for (const Vec& row : wv) {
            Rat s = 0;
            for (std::size_t j = 0; j < k; ++j) s += Rat(row[j]) * y[j];
            if (s < 0) return; // stationary point violates some wall
        }
        Rat val = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (y[i] == 0) continue;
            for (std::size_t j = 0; j < k; ++j) val += y[i] * ghat[i][j] * y[j];
        }
        if (!any_feasible || val > best) { any_feasible = true; best = val; }
    };
    std::size_t cap = std::min(walls.size(), k);
    for (std::size_t size = 0; size <= cap; ++size) {
        std::vector<std::size_t> cur;
        subsets_of_size(walls.size(), size, cur, consider, 0);
    }
    ensure(any_feasible, "mbm_face_test: no stationary point despite strict feasibility");
    return best > 0;
}

QVec project_perp(const Lattice& lat, const Vec& a, const Vec& b) {
    Int qa = lat.square(a);
    require(qa != 0, "project_perp: first vector must be non-isotropic");
    Rat f = rat_of(lat.inner(a, b), qa);
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = Rat(b[i]) - f * Rat(a[i]);
    return out;
}

} // namespace latwalk
