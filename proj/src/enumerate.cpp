#include "latwalk/enumerate.hpp"

#include "latwalk/errors.hpp"
#include "latwalk/sublattice.hpp"

#include <algorithm>

namespace latwalk {

IntMat enumerate_negative(const Lattice& lat, const EnumerationQuery& query) {
    require(query.qmin < query.qmax && query.qmax <= 0,
            "enumerate: query interval must satisfy qmin < qmax <= 0");
    require(lat.is_negative_definite(), "enumerate: lattice must be negative definite");
    std::size_t n = lat.rank();
    IntMat out;
    if (n == 0 || query.qmax - query.qmin <= 1) return out;

    // positive definite norms: hi for the search tree, lo for the filter
    Int hi = -query.qmin - 1, lo = -query.qmax + 1;
    if (hi < 1) return out;

    // exact LDL of -gram: q(x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2
    RatMat u(n, QVec(n, 0));
    QVec dvec(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Rat s = Rat(-lat.gram()[i][j]);
            for (std::size_t k = 0; k < i; ++k) s -= dvec[k] * u[k][i] * u[k][j];
            if (j == i) {
                ensure(s > 0, "enumerate: form is not negative definite");
                dvec[i] = s;
            } else {
                u[i][j] = s / dvec[i];
            }
        }
    }

    Vec x(n, 0);
    // depth-first from the last coordinate; at each level the admissible
    // range is an exact integer interval
    auto descend = [&](auto&& self, std::size_t level, const Rat& used) -> void {
        std::size_t i = level - 1;
        Rat c = 0;
        for (std::size_t j = level; j < n; ++j) c += u[i][j] * Rat(x[j]);
        Rat budget = (Rat(hi) - used) / dvec[i];
        if (budget < 0) return;
        Int from = ceil_minus_sqrt(-c, budget);
        Int to = floor_plus_sqrt(-c, budget);
        for (Int v = from; v <= to; ++v) {
            x[i] = v;
            Rat term = Rat(v) + c;
            Rat next = used + dvec[i] * term * term;
            if (i == 0) {
                Int norm_neg = -lat.square(x);
                if (norm_neg >= lo && norm_neg <= hi) out.push_back(x);
            } else {
                self(self, i, next);
            }
        }
        x[i] = 0;
    };
    descend(descend, n, Rat(0));

    out.erase(std::remove_if(out.begin(), out.end(), is_zero), out.end());
    std::sort(out.begin(), out.end());
    if (query.limit && out.size() > *query.limit) out.resize(*query.limit);
    return out;
}

IntMat lambda_n_mod_ell(const Lattice& lat, const Vec& ell, const Int& bound) {
    require(lat.is_hyperbolic(), "lambda_n: lattice must have signature (1, n-1)");
    require(bound > 0, "lambda_n: bound must be positive");
    QuotientLattice q = quotient_mod_isotropic(lat, ell);
    ensure(q.quotient.is_negative_definite(), "lambda_n: quotient is not negative definite");
    IntMat classes = enumerate_negative(q.quotient, EnumerationQuery{-bound, 0, std::nullopt});
    IntMat ell_h = hermite_rows(IntMat{ell});
    IntMat out;
    for (const Vec& c : classes) {
        Vec v(lat.rank(), 0);
        for (std::size_t j = 0; j < c.size(); ++j)
            for (std::size_t t = 0; t < lat.rank(); ++t) v[t] += c[j] * q.lift[j][t];
        out.push_back(reduce_mod_rows(std::move(v), ell_h));
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntMat find_isotropic(const Lattice& lat, const Int& box) {
    require(box >= 0, "find_isotropic: box must be nonnegative");
    std::size_t n = lat.rank();
    IntMat out;
    if (n == 0 || box == 0) return out;
    Vec x(n, -box);
    while (true) {
        if (!is_zero(x) && content(x) == 1 && lat.square(x) == 0) {
            std::size_t p = 0;
            while (x[p] == 0) ++p;
            if (x[p] > 0) out.push_back(x);
        }
        std::size_t i = n;
        while (i > 0 && x[i - 1] == box) { x[i - 1] = -box; --i; }
        if (i == 0) break;
        ++x[i - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace latwalk
