#include "latwalk/isometry.hpp"

#include "latwalk/errors.hpp"

#include <algorithm>

namespace latwalk {

AdaptedBasis adapted_basis(const Lattice& lat, const Vec& ell, const IntMat& w) {
    std::size_t n = lat.rank();
    require(lat.is_hyperbolic(), "adapted_basis: lattice must have signature (1, n-1)");
    if (ell.size() != n) throw DimensionError("adapted_basis: ell length does not match rank");
    require(!is_zero(ell), "adapted_basis: ell must be nonzero");
    require(lat.square(ell) == 0, "adapted_basis: ell must be isotropic");
    require(content(ell) == 1, "adapted_basis: ell must be primitive");
    for (const Vec& v : w) {
        if (v.size() != n) throw DimensionError("adapted_basis: class length does not match rank");
        require(lat.inner(v, ell) == 0, "adapted_basis: W must be orthogonal to ell");
    }

    IntMat w_sat = saturate(lat, w);
    std::size_t rank_w = w_sat.size();
    require(restrict_form(lat, w_sat).is_negative_definite(),
            "adapted_basis: W must be negative definite");
    require(n > rank_w + 2, "adapted_basis: rank must exceed rank(W) + 2");

    QuotientLattice q = quotient_mod_isotropic(lat, ell);

    // basis of the quotient whose head spans the saturation of the image
    // of W; the image can be unsaturated even for saturated W
    IntMat wbar;
    for (const Vec& v : w_sat) wbar.push_back(quotient_coords(q, lat, v));
    IntMat sat_rw = saturate(q.quotient, wbar);
    ensure(sat_rw.size() == rank_w, "adapted_basis: image of W has wrong rank");
    IntMat comp = basis_completion(sat_rw, n - 2);

    IntMat ell_h = hermite_rows(IntMat{ell});
    IntMat us;
    for (std::size_t i = 0; i < n - 2; ++i) {
        Vec v(n, 0);
        for (std::size_t j = 0; j < n - 2; ++j)
            for (std::size_t t = 0; t < n; ++t) v[t] += comp[i][j] * q.lift[j][t];
        us.push_back(reduce_mod_rows(std::move(v), ell_h));
    }

    IntMat head;
    head.push_back(ell);
    head.insert(head.end(), us.begin(), us.end());
    IntMat full = extend_to_basis(lat, head);
    Vec ell_prime = full.back();

    AdaptedBasis ab{lat, ell, us, ell_prime, 0, {}, {}, 0, 0, rank_w};
    ab.a = lat.inner(ell, ell_prime);
    ensure(ab.a != 0, "adapted_basis: ell pairs to zero with the completing vector");
    ab.gram_a.assign(n - 2, Vec(n - 2));
    ab.b.assign(n - 2, 0);
    for (std::size_t i = 0; i < n - 2; ++i) {
        ensure(lat.inner(us[i], ell) == 0, "adapted_basis: u vector not orthogonal to ell");
        for (std::size_t j = 0; j < n - 2; ++j) ab.gram_a[i][j] = lat.inner(us[i], us[j]);
        ab.b[i] = lat.inner(us[i], ell_prime);
    }
    ab.c = lat.inner(ell_prime, ell_prime);
    ab.d = det(ab.gram_a);
    ensure(ab.d != 0, "adapted_basis: block A is singular");
    ensure(Lattice(n - 2, ab.gram_a).is_negative_definite(),
           "adapted_basis: block A is not negative definite");
    return ab;
}

GammaVector make_gamma(const AdaptedBasis& ab, const Vec& entries) {
    std::size_t k = ab.ambient.rank() - 2;
    if (entries.size() != k)
        throw DimensionError("gamma: expected " + std::to_string(k) + " entries");
    for (std::size_t i = 0; i < ab.rank_w; ++i)
        require(entries[i] == 0, "gamma: entries in the W block must be zero");
    for (const Int& e : entries)
        require(e % ab.d == 0,
                "gamma: every entry must be a multiple of d = " + to_string(ab.d) +
                    "; multiply the desired coefficients by d");
    return GammaVector{entries};
}

std::vector<GammaVector> gamma_generators(const AdaptedBasis& ab) {
    std::size_t k = ab.ambient.rank() - 2;
    std::vector<GammaVector> out;
    for (std::size_t i = ab.rank_w; i < k; ++i) {
        Vec e(k, 0);
        e[i] = ab.d;
        out.push_back(GammaVector{std::move(e)});
    }
    return out;
}

namespace {

// T(gamma) in the adapted basis; integral because gamma is divisible by
// d = det A, which clears the denominators of A^{-1}.
IntMat adapted_matrix(const AdaptedBasis& ab, const Vec& gamma) {
    std::size_t n = ab.ambient.rank(), k = n - 2;
    auto a_inv = rat_inverse(to_rat(ab.gram_a));
    ensure(a_inv.has_value(), "build_isometry: block A is singular");
    QVec ainv_gamma = rat_mat_vec(*a_inv, to_rat(gamma));
    Rat gamma_ainv_gamma = 0, gamma_ainv_b = 0;
    for (std::size_t i = 0; i < k; ++i) {
        gamma_ainv_gamma += Rat(gamma[i]) * ainv_gamma[i];
        gamma_ainv_b += Rat(ab.b[i]) * ainv_gamma[i]; // A^{-1} symmetric
    }
    RatMat t = rat_identity(n);
    for (std::size_t i = 0; i < k; ++i) {
        t[0][1 + i] = Rat(-2 * gamma[i]);
        t[1 + i][n - 1] = Rat(2 * ab.a) * ainv_gamma[i];
    }
    t[0][n - 1] = Rat(-2 * ab.a) * gamma_ainv_gamma - 2 * gamma_ainv_b;
    ensure(is_integral(t), "build_isometry: adapted matrix is not integral");
    return to_int_checked(t);
}

IntMat adapted_to_standard(const AdaptedBasis& ab) {
    std::size_t n = ab.ambient.rank();
    IntMat b(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) {
        b[i][0] = ab.ell[i];
        for (std::size_t j = 0; j + 2 < n; ++j) b[i][1 + j] = ab.us[j][i];
        b[i][n - 1] = ab.ell_prime[i];
    }
    return b;
}

} // namespace

Isometry build_isometry(const AdaptedBasis& ab, const GammaVector& gamma) {
    std::size_t n = ab.ambient.rank();
    // revalidate; callers may construct GammaVector by hand
    make_gamma(ab, gamma.entries);
    IntMat t = adapted_matrix(ab, gamma.entries);
    IntMat basis = adapted_to_standard(ab);
    auto basis_inv = rat_inverse(to_rat(basis));
    ensure(basis_inv.has_value(), "build_isometry: adapted basis is singular");
    IntMat m = int_mul(basis, int_mul(t, to_int_checked(*basis_inv)));

    ensure(verify_isometry(ab.ambient, m), "build_isometry: result is not an isometry");
    ensure(int_mat_vec(m, ab.ell) == ab.ell, "build_isometry: result moves ell");
    for (std::size_t i = 0; i < ab.rank_w; ++i)
        ensure(int_mat_vec(m, ab.us[i]) == ab.us[i], "build_isometry: result moves W");
    return Isometry{ab.ambient, std::move(m),
                    std::make_shared<const AdaptedBasis>(ab), gamma.entries};
}

bool verify_isometry(const Lattice& lat, const IntMat& m) {
    if (m.size() != lat.rank()) return false;
    for (const Vec& row : m)
        if (row.size() != lat.rank()) return false;
    return int_mul(int_mul(int_transpose(m), lat.gram()), m) == lat.gram();
}

ConvergenceReport orbit_projective_limit(const Isometry& g, const Vec& x,
                                         const Vec& ell, std::size_t m_max) {
    const Lattice& lat = g.lattice;
    std::size_t n = lat.rank();
    if (x.size() != n || ell.size() != n)
        throw DimensionError("orbit: vector length does not match rank");
    require(lat.square(x) > 0, "orbit: x must have positive square");
    require(!is_zero(ell), "orbit: ell must be nonzero");
    require(lat.square(ell) == 0, "orbit: ell must be isotropic");
    require(int_mat_vec(g.matrix, ell) == ell, "orbit: isometry does not fix ell");

    Vec ell0 = ell;
    Int ct = content(ell);
    for (Int& e : ell0) e /= ct;

    // dual coordinates: rows of (C^T)^{-1} for a completion C of ell0;
    // coordinate 0 is the functional dual to ell0
    IntMat comp = basis_completion(IntMat{ell0}, n);
    auto dual_r = rat_inverse(to_rat(int_transpose(comp)));
    ensure(dual_r.has_value(), "orbit: completion is singular");
    IntMat dual = to_int_checked(*dual_r);

    ConvergenceReport rep;
    IntMat xs; // m = 0..m_max
    xs.push_back(x);
    if (g.origin) {
        // closed-form powers: g(gamma)^m = g(m gamma)
        const AdaptedBasis& ab = *g.origin;
        for (std::size_t m = 1; m <= m_max; ++m) {
            Vec mg = g.gamma;
            for (Int& e : mg) e *= Int(m);
            Isometry gm = build_isometry(ab, GammaVector{std::move(mg)});
            xs.push_back(int_mat_vec(gm.matrix, x));
            if (m <= 3) {
                IntMat pow = int_identity(n);
                for (std::size_t i = 0; i < m; ++i) pow = int_mul(g.matrix, pow);
                ensure(pow == gm.matrix, "orbit: group law g(gamma)^m != g(m gamma)");
            }
        }
    } else {
        for (std::size_t m = 1; m <= m_max; ++m)
            xs.push_back(int_mat_vec(g.matrix, xs.back()));
    }

    std::vector<Vec> ts;
    for (const Vec& v : xs) ts.push_back(int_mat_vec(dual, v));
    for (const Vec& t : ts) rep.ell_coefficients.push_back(t[0]);

    for (std::size_t m = 1; m <= m_max; ++m) {
        rep.iterates.push_back(xs[m]);
        const Int& lam = ts[m][0];
        if (lam == 0) {
            rep.deviations.push_back(std::nullopt);
            continue;
        }
        Rat dev = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Rat diff = rat_of(xs[m][i], lam) - Rat(ell0[i]);
            if (diff < 0) diff = -diff;
            dev = std::max(dev, diff);
        }
        rep.deviations.push_back(dev);
    }

    // longest strictly decreasing run of defined deviations ending at m_max
    if (m_max >= 2) {
        std::size_t s = m_max; // 1-based index of run start
        while (s >= 2 && rep.deviations[s - 2].has_value() &&
               rep.deviations[s - 1].has_value() &&
               *rep.deviations[s - 2] > *rep.deviations[s - 1])
            --s;
        if (s < m_max) {
            rep.eventually_decreasing = true;
            rep.decreasing_from = s;
        }
    }

    // growth orders by exact finite differences over m = 0..m_max
    if (m_max >= 2) {
        bool quad = true, first = true, linear = true;
        Int lead = 0;
        for (std::size_t m = 0; m + 2 <= m_max; ++m) {
            Int d2 = ts[m + 2][0] - 2 * ts[m + 1][0] + ts[m][0];
            if (first) { lead = d2; first = false; }
            else if (d2 != lead) quad = false;
            for (std::size_t i = 1; i < n; ++i)
                if (ts[m + 2][i] - 2 * ts[m + 1][i] + ts[m][i] != 0) linear = false;
        }
        rep.ell_coefficient_quadratic = quad && lead != 0;
        rep.transverse_growth_linear = linear;
    }
    return rep;
}

} // namespace latwalk
