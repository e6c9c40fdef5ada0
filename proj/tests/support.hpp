#ifndef LATWALK_TESTS_SUPPORT_HPP
#define LATWALK_TESTS_SUPPORT_HPP

#include "latwalk/lattice.hpp"
#include "latwalk/linalg.hpp"

#include <random>

namespace latwalk::testing {

// Deterministic RNG for reproducible property tests.
using Rng = std::mt19937_64;

inline Int rand_int(Rng& rng, long lo, long hi)
{
    return Int(std::uniform_int_distribution<long>(lo, hi)(rng));
}

// Random unimodular matrix built from row shears and swaps; the inverse is
// accumulated alongside so callers never need to invert anything.
struct UnimodularPair {
    IntMat t;    // change of coordinates
    IntMat tinv; // exact inverse
};

inline UnimodularPair random_unimodular(std::size_t n, Rng& rng, int steps = 12)
{
    UnimodularPair u{int_identity(n), int_identity(n)};
    if (n < 2)
        return u;
    for (int s = 0; s < steps; ++s) {
        std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        std::size_t j = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        if (i == j)
            continue;
        if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
            std::swap(u.t[i], u.t[j]);
            // (P T)^-1 = T^-1 P^-1: swapping rows of T swaps columns of T^-1.
            for (std::size_t r = 0; r < n; ++r)
                std::swap(u.tinv[r][i], u.tinv[r][j]);
        } else {
            Int q = rand_int(rng, -2, 2);
            // row_i += q row_j on T; col_j -= q col_i on T^-1.
            for (std::size_t c = 0; c < n; ++c)
                u.t[i][c] += q * u.t[j][c];
            for (std::size_t r = 0; r < n; ++r)
                u.tinv[r][j] -= q * u.tinv[r][i];
        }
    }
    return u;
}

// Random negative definite Gram matrix -B^T B - I for a random integer B.
inline IntMat random_negative_definite(std::size_t k, Rng& rng)
{
    IntMat b(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            b[i][j] = rand_int(rng, -2, 2);
    IntMat g(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Int s = 0;
            for (std::size_t r = 0; r < k; ++r)
                s += b[r][i] * b[r][j];
            g[i][j] = -s - (i == j ? 1 : 0);
        }
    return g;
}

// Hyperbolic lattice U + (negative definite) scrambled by a random change
// of basis, together with the transformed isotropic class and the first
// w_rank negative basis classes.
struct HyperbolicInstance {
    Lattice lat;
    Vec ell;
    IntMat w;
};

inline HyperbolicInstance random_hyperbolic(std::size_t n, std::size_t w_rank, Rng& rng)
{
    IntMat g0(n, Vec(n, 0));
    g0[0][1] = g0[1][0] = 1;
    if (n > 2) {
        IntMat neg = random_negative_definite(n - 2, rng);
        for (std::size_t i = 0; i < n - 2; ++i)
            for (std::size_t j = 0; j < n - 2; ++j)
                g0[2 + i][2 + j] = neg[i][j];
    }
    UnimodularPair u = random_unimodular(n, rng);
    // New coordinates x' with x_old = T x': Gram becomes T^T G0 T.
    IntMat gram = int_mul(int_transpose(u.t), int_mul(g0, u.t));
    HyperbolicInstance inst{Lattice(n, gram), Vec(n, 0), {}};
    for (std::size_t r = 0; r < n; ++r)
        inst.ell[r] = u.tinv[r][0];
    for (std::size_t k = 0; k < w_rank; ++k) {
        Vec w(n, 0);
        for (std::size_t r = 0; r < n; ++r)
            w[r] = u.tinv[r][2 + k];
        inst.w.push_back(std::move(w));
    }
    return inst;
}

// Hyperbolic-plane Gram [[0,1],[1,0]].
inline Lattice lattice_u()
{
    return Lattice(2, {{0, 1}, {1, 0}});
}

// U + <-2>, the running rank-3 example.
inline Lattice lattice_u_minus2()
{
    return Lattice(3, {{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});
}

// Negative definite A2 root lattice.
inline Lattice lattice_a2_neg()
{
    return Lattice(2, {{-2, 1}, {1, -2}});
}

// E8 Cartan matrix; det 1, positive definite.
inline IntMat e8_cartan()
{
    IntMat c(8, Vec(8, 0));
    for (std::size_t i = 0; i < 8; ++i)
        c[i][i] = 2;
    auto edge = [&](std::size_t i, std::size_t j) { c[i][j] = c[j][i] = -1; };
    edge(0, 2);
    edge(1, 3);
    edge(2, 3);
    edge(3, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 7);
    return c;
}

inline Lattice lattice_e8_neg()
{
    IntMat g = e8_cartan();
    for (auto& row : g)
        for (auto& x : row)
            x = -x;
    return Lattice(8, g);
}

// U + E8(-1) with the hyperbolic plane in the first two coordinates.
inline Lattice lattice_u_e8()
{
    IntMat g(10, Vec(10, 0));
    g[0][1] = g[1][0] = 1;
    IntMat c = e8_cartan();
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            g[2 + i][2 + j] = -c[i][j];
    return Lattice(10, g);
}

} // namespace latwalk::testing

#endif
