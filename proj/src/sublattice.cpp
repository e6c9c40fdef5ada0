#include "latwalk/sublattice.hpp"

#include "latwalk/errors.hpp"

#include <algorithm>

namespace latwalk {

namespace {

void check_lengths(const Lattice& lat, const IntMat& vs, const char* who) {
    for (const Vec& v : vs)
        if (v.size() != lat.rank())
            throw DimensionError(std::string(who) + ": vector length does not match rank");
}

// functional matrix: row i is y -> <sub[i], y>
IntMat pairing_rows(const Lattice& lat, const IntMat& sub) {
    IntMat rows(sub.size(), Vec(lat.rank(), 0));
    for (std::size_t i = 0; i < sub.size(); ++i)
        for (std::size_t j = 0; j < lat.rank(); ++j)
            for (std::size_t t = 0; t < lat.rank(); ++t)
                rows[i][j] += sub[i][t] * lat.gram()[t][j];
    return rows;
}

} // namespace

IntMat column_normal_form(const IntMat& vectors) {
    if (vectors.empty()) return {};
    std::size_t n = vectors[0].size();
    for (const Vec& v : vectors)
        if (v.size() != n) throw DimensionError("column_normal_form: ragged input");
    return hermite_rows(vectors);
}

IntMat orthogonal_complement(const Lattice& lat, const IntMat& sub) {
    check_lengths(lat, sub, "orthogonal_complement");
    if (sub.empty()) return hermite_rows(int_identity(lat.rank()));
    return int_kernel(pairing_rows(lat, sub));
}

IntMat saturate(const Lattice& lat, const IntMat& sub) {
    check_lengths(lat, sub, "saturate");
    if (sub.empty()) return {};
    // double kernel: x is in the saturation iff x kills every integral
    // relation vector of sub (plain dot product, no form involved)
    IntMat rel = int_kernel(sub);
    if (rel.empty()) return hermite_rows(int_identity(lat.rank()));
    return int_kernel(rel);
}

IntMat extend_to_basis(const Lattice& lat, const IntMat& sub) {
    check_lengths(lat, sub, "extend_to_basis");
    return basis_completion(sub, lat.rank());
}

Int overlattice_index(const Lattice& lat, const IntMat& sub) {
    check_lengths(lat, sub, "overlattice_index");
    require(sub.size() == lat.rank(),
            "overlattice_index: sublattice is not of full rank (index is infinite)");
    Int d = det(sub);
    require(d != 0,
            "overlattice_index: sublattice is not of full rank (index is infinite)");
    return boost::multiprecision::abs(d);
}

QuotientLattice quotient_mod_isotropic(const Lattice& lat, const Vec& ell) {
    if (ell.size() != lat.rank())
        throw DimensionError("quotient: vector length does not match rank");
    require(!is_zero(ell), "quotient: ell must be nonzero");
    require(lat.square(ell) == 0, "quotient: ell must be isotropic");
    require(content(ell) == 1, "quotient: ell must be primitive");
    std::size_t n = lat.rank();
    IntMat perp = orthogonal_complement(lat, IntMat{ell});
    require(perp.size() == n - 1, "quotient: ell lies in the radical of the form");

    // coordinates of ell inside the perp basis; integral because the
    // complement is saturated and contains ell
    RatMat perp_t = rat_transpose(to_rat(perp));
    auto c = rat_solve(perp_t, to_rat(ell));
    ensure(c.has_value(), "quotient: ell not contained in its own complement");
    Vec ci = to_int_checked(*c);
    ensure(content(ci) == 1, "quotient: ell imprimitive inside its complement");

    IntMat comp = basis_completion(IntMat{ci}, n - 1);
    IntMat ell_h = hermite_rows(IntMat{ell});
    IntMat lifts;
    for (std::size_t i = 1; i < n - 1; ++i) {
        Vec v(n, 0);
        for (std::size_t j = 0; j < n - 1; ++j)
            for (std::size_t t = 0; t < n; ++t) v[t] += comp[i][j] * perp[j][t];
        lifts.push_back(reduce_mod_rows(std::move(v), ell_h));
    }
    IntMat g(lifts.size(), Vec(lifts.size()));
    for (std::size_t i = 0; i < lifts.size(); ++i) {
        ensure(lat.inner(lifts[i], ell) == 0, "quotient: representative not orthogonal to ell");
        for (std::size_t j = 0; j < lifts.size(); ++j) g[i][j] = lat.inner(lifts[i], lifts[j]);
    }
    return QuotientLattice{Lattice(n - 2, std::move(g)), std::move(lifts), ell};
}

Vec quotient_coords(const QuotientLattice& q, const Lattice& lat, const Vec& x) {
    require(lat.inner(x, q.ell) == 0, "quotient_coords: x is not orthogonal to ell");
    std::size_t n = lat.rank();
    // solve x = sum c_i lift_i + k ell
    RatMat a(n, QVec(q.lift.size() + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < q.lift.size(); ++j) a[i][j] = Rat(q.lift[j][i]);
        a[i][q.lift.size()] = Rat(q.ell[i]);
    }
    auto sol = rat_solve(std::move(a), to_rat(x));
    require(sol.has_value(), "quotient_coords: x does not lie in ell-perp");
    QVec cs(sol->begin(), sol->end() - 1);
    return to_int_checked(cs);
}

bool preserves_form(const Lattice& lat, const RatMat& m) {
    if (m.size() != lat.rank()) return false;
    for (const QVec& row : m)
        if (row.size() != lat.rank()) return false;
    RatMat g = to_rat(lat.gram());
    return rat_mul(rat_mul(rat_transpose(m), g), m) == g;
}

bool stabilizes_overlattice(const Lattice& lat, const IntMat& sub,
                            const RationalIsometry& g) {
    check_lengths(lat, sub, "stabilizes_overlattice");
    std::size_t n = lat.rank();
    require(sub.size() == n && det(sub) != 0,
            "stabilizes_overlattice: sublattice must have full rank");
    require(preserves_form(lat, g.matrix),
            "stabilizes_overlattice: map does not preserve the form");
    // membership in O(sub): integral with unit determinant in sub coordinates
    RatMat s_cols = rat_transpose(to_rat(sub));
    auto s_inv = rat_inverse(s_cols);
    ensure(s_inv.has_value(), "stabilizes_overlattice: singular basis");
    RatMat on_sub = rat_mul(*s_inv, rat_mul(g.matrix, s_cols));
    require(is_integral(on_sub),
            "stabilizes_overlattice: map does not preserve the sublattice");
    Int d = det(to_int_checked(on_sub));
    require(d == 1 || d == -1,
            "stabilizes_overlattice: map is not invertible on the sublattice");
    return is_integral(g.matrix);
}

ExtensionResult extend_by_identity(const Lattice& lat, const IntMat& sub1,
                                   const IntMat& g1, const IntMat& sub2) {
    check_lengths(lat, sub1, "extend_by_identity");
    check_lengths(lat, sub2, "extend_by_identity");
    std::size_t n = lat.rank(), k1 = sub1.size(), k2 = sub2.size();
    require(k1 + k2 == n, "extend_by_identity: sublattices do not have complementary ranks");
    for (const Vec& a : sub1)
        for (const Vec& b : sub2)
            require(lat.inner(a, b) == 0, "extend_by_identity: sublattices are not orthogonal");
    IntMat s = sub1;
    s.insert(s.end(), sub2.begin(), sub2.end());
    require(det(s) != 0, "extend_by_identity: combined vectors are dependent");
    require(g1.size() == k1, "extend_by_identity: block has wrong shape");
    for (const Vec& row : g1)
        require(row.size() == k1, "extend_by_identity: block has wrong shape");
    Lattice r1 = restrict_form(lat, sub1);
    require(int_mul(int_mul(int_transpose(g1), r1.gram()), g1) == r1.gram(),
            "extend_by_identity: block does not preserve the restricted form");

    IntMat block = g1;
    for (Vec& row : block) row.resize(n, 0);
    for (std::size_t i = 0; i < k2; ++i) {
        Vec row(n, 0);
        row[k1 + i] = 1;
        block.push_back(std::move(row));
    }
    RatMat s_cols = rat_transpose(to_rat(s));
    auto s_inv = rat_inverse(s_cols);
    ensure(s_inv.has_value(), "extend_by_identity: singular combined basis");
    RatMat m = rat_mul(s_cols, rat_mul(to_rat(block), *s_inv));
    ensure(preserves_form(lat, m), "extend_by_identity: extension is not an isometry");
    bool integral = is_integral(m);
    return ExtensionResult{RationalIsometry{std::move(m)}, integral};
}

} // namespace latwalk
