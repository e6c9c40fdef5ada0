#include "latwalk/errors.hpp"
#include "latwalk/isometry.hpp"

#include "support.hpp"

#include <doctest.h>

#include <string>

using namespace latwalk;
using namespace latwalk::testing;

namespace {

Vec scale_add(const Int& s, const Vec& a, const Vec& b)
{
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = s * a[i] + b[i];
    return out;
}

} // namespace

TEST_CASE("adapted basis of the rank-3 worked example")
{
    AdaptedBasis ab = adapted_basis(lattice_u_minus2(), {1, 0, 0}, {});
    CHECK(ab.ell == Vec{1, 0, 0});
    CHECK(ab.us == IntMat{{0, 0, 1}});
    CHECK(ab.ell_prime == Vec{0, 1, 0});
    CHECK(ab.a == 1);
    CHECK(ab.gram_a == IntMat{{-2}});
    CHECK(ab.b == Vec{0});
    CHECK(ab.c == 0);
    CHECK(ab.d == -2);
    CHECK(ab.rank_w == 0);
}

TEST_CASE("adapted basis of the rank-4 example with one W class")
{
    Lattice lat(4, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}});
    AdaptedBasis ab = adapted_basis(lat, {1, 0, 0, 0}, {{0, 0, 1, 0}});
    CHECK(ab.rank_w == 1);
    CHECK(ab.gram_a == IntMat{{-2, 0}, {0, -2}});
    CHECK(ab.d == 4);
    CHECK(gamma_generators(ab).size() == 1);
    CHECK(gamma_generators(ab)[0].entries == Vec{0, 4});
}

TEST_CASE("adapted basis preconditions produce distinct errors")
{
    CHECK_THROWS_AS(adapted_basis(Lattice(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, -2}}),
                                  {1, 0, 0}, {}),
                    PreconditionError); // not hyperbolic
    CHECK_THROWS_AS(adapted_basis(lattice_u_minus2(), {1, 1, 0}, {}),
                    PreconditionError); // not isotropic
    CHECK_THROWS_AS(adapted_basis(lattice_u_minus2(), {2, 0, 0}, {}),
                    PreconditionError); // not primitive
    CHECK_THROWS_AS(adapted_basis(lattice_u_minus2(), {1, 0, 0}, {{0, 1, 1}}),
                    PreconditionError); // W not orthogonal to ell
    CHECK_THROWS_AS(adapted_basis(lattice_u_minus2(), {1, 0, 0}, {{1, 0, 0}}),
                    PreconditionError); // W not negative definite
    CHECK_THROWS_AS(adapted_basis(lattice_u_minus2(), {1, 0, 0}, {{0, 0, 1}}),
                    PreconditionError); // rank - rank W = 2, no room for ell'
}

TEST_CASE("unsaturated W images are repaired by saturation")
{
    // w = 2 e2 - ell, so the class of w in ell-perp / Z ell is twice a
    // primitive class; the adapted basis must use the primitive generator.
    Lattice lat(4, {{0, 0, 1, 0}, {0, -2, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -2}});
    Vec ell{1, 0, 0, 0};
    Vec w{-1, 2, 0, 0};
    REQUIRE(lat.inner(w, ell) == 0);
    REQUIRE(lat.square(w) == -8);

    AdaptedBasis ab = adapted_basis(lat, ell, {w});
    CHECK(ab.rank_w == 1);
    CHECK(ab.us[0] == Vec{0, 1, 0, 0});

    for (const GammaVector& gen : gamma_generators(ab)) {
        Isometry g = build_isometry(ab, gen);
        CHECK(int_mat_vec(g.matrix, w) == w);
        CHECK(int_mat_vec(g.matrix, ell) == ell);
    }
}

TEST_CASE("gamma validation")
{
    AdaptedBasis ab = adapted_basis(lattice_u_minus2(), {1, 0, 0}, {});
    CHECK_NOTHROW(make_gamma(ab, {-2}));
    CHECK_NOTHROW(make_gamma(ab, {0}));
    CHECK_THROWS_AS(make_gamma(ab, {1, 0}), PreconditionError); // wrong length

    try {
        make_gamma(ab, {1}); // not a multiple of d = -2
        FAIL("expected a precondition error");
    } catch (const PreconditionError& err) {
        CHECK(std::string(err.what()).find("multiply") != std::string::npos);
    }

    Lattice lat4(4, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, -2, 0}, {0, 0, 0, -2}});
    AdaptedBasis ab4 = adapted_basis(lat4, {1, 0, 0, 0}, {{0, 0, 1, 0}});
    CHECK_THROWS_AS(make_gamma(ab4, {4, 4}), PreconditionError); // W slot must stay zero
}

TEST_CASE("worked isometry matrix and powers")
{
    AdaptedBasis ab = adapted_basis(lattice_u_minus2(), {1, 0, 0}, {});
    Isometry g = build_isometry(ab, make_gamma(ab, {-2}));
    CHECK(g.matrix == IntMat{{1, 4, 4}, {0, 1, 0}, {0, 2, 1}});
    CHECK(verify_isometry(g.lattice, g.matrix));

    IntMat perturbed = g.matrix;
    perturbed[0][1] += 1;
    CHECK_FALSE(verify_isometry(g.lattice, perturbed));

    CHECK(build_isometry(ab, make_gamma(ab, {0})).matrix == int_identity(3));
    CHECK(build_isometry(ab, make_gamma(ab, {-4})).matrix == int_mul(g.matrix, g.matrix));

    // g^m (ell + ell') = (1 + 4 m^2, 1, 2 m)
    Vec x{1, 1, 0};
    for (Int m = 1; m <= 5; ++m) {
        x = int_mat_vec(g.matrix, x);
        CHECK(x == Vec{1 + 4 * m * m, 1, 2 * m});
    }
}

TEST_CASE("group law, commutativity and faithfulness on random instances")
{
    Rng rng(20240812);
    int built = 0;
    while (built < 25) {
        std::size_t n = 3 + built % 6;
        std::size_t wr = std::min<std::size_t>(built % 4, n - 3);
        HyperbolicInstance inst = random_hyperbolic(n, wr, rng);
        AdaptedBasis ab = adapted_basis(inst.lat, inst.ell, inst.w);
        ++built;

        auto random_gamma = [&](Rng& r) {
            Vec entries(n - 2, 0);
            for (std::size_t i = ab.rank_w; i < n - 2; ++i)
                entries[i] = rand_int(r, -3, 3) * ab.d;
            return make_gamma(ab, entries);
        };
        GammaVector ga = random_gamma(rng);
        GammaVector gb = random_gamma(rng);
        Vec sum(n - 2);
        for (std::size_t i = 0; i < n - 2; ++i)
            sum[i] = ga.entries[i] + gb.entries[i];

        Isometry a = build_isometry(ab, ga);
        Isometry b = build_isometry(ab, gb);
        Isometry c = build_isometry(ab, make_gamma(ab, sum));
        CHECK(int_mul(a.matrix, b.matrix) == c.matrix);
        CHECK(int_mul(b.matrix, a.matrix) == c.matrix);
        CHECK((a.matrix == int_identity(n)) == is_zero(ga.entries));

        // fixed set and the image formula g(u_i) = u_i - 2 gamma_i ell
        CHECK(int_mat_vec(a.matrix, inst.ell) == inst.ell);
        for (const Vec& w : inst.w)
            CHECK(int_mat_vec(a.matrix, w) == w);
        for (std::size_t i = 0; i < n - 2; ++i)
            CHECK(int_mat_vec(a.matrix, ab.us[i])
                  == scale_add(-2 * ga.entries[i], ab.ell, ab.us[i]));

        if (ga.entries != gb.entries)
            CHECK(a.matrix != b.matrix);
    }
}

TEST_CASE("generator count equals rank - rank W - 2 and generators are independent")
{
    Rng rng(171);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 4 + trial % 4;
        std::size_t wr = trial % 2;
        HyperbolicInstance inst = random_hyperbolic(n, wr, rng);
        AdaptedBasis ab = adapted_basis(inst.lat, inst.ell, inst.w);
        std::vector<GammaVector> gens = gamma_generators(ab);
        CHECK(gens.size() == n - wr - 2);
        IntMat rows;
        for (const GammaVector& g : gens)
            rows.push_back(g.entries);
        CHECK(int_rank(rows) == gens.size());
    }
}

TEST_CASE("orbit convergence report on the worked example")
{
    AdaptedBasis ab = adapted_basis(lattice_u_minus2(), {1, 0, 0}, {});
    Isometry g = build_isometry(ab, make_gamma(ab, {-2}));

    ConvergenceReport rep = orbit_projective_limit(g, {1, 1, 0}, {1, 0, 0}, 10);
    REQUIRE(rep.iterates.size() == 10);
    REQUIRE(rep.ell_coefficients.size() == 11);
    for (std::size_t m = 1; m <= 10; ++m) {
        Int mm = Int(m);
        CHECK(rep.iterates[m - 1] == Vec{1 + 4 * mm * mm, 1, 2 * mm});
        CHECK(rep.ell_coefficients[m] == 1 + 4 * mm * mm);
        REQUIRE(rep.deviations[m - 1].has_value());
        CHECK(*rep.deviations[m - 1] == Rat(2 * mm, 1 + 4 * mm * mm));
        CHECK(g.lattice.square(rep.iterates[m - 1]) == 2); // isometries preserve q
    }
    // second difference of the ell coefficient: (1+4(m+2)^2) - 2(1+4(m+1)^2) + (1+4m^2) = 8
    for (std::size_t m = 0; m + 2 <= 10; ++m)
        CHECK(rep.ell_coefficients[m + 2] - 2 * rep.ell_coefficients[m + 1]
                  + rep.ell_coefficients[m] == 8);
    CHECK(rep.eventually_decreasing);
    CHECK(rep.decreasing_from == 1);
    CHECK(rep.ell_coefficient_quadratic);
    CHECK(rep.transverse_growth_linear);

    ConvergenceReport one = orbit_projective_limit(g, {1, 1, 0}, {1, 0, 0}, 1);
    CHECK(one.iterates == IntMat{{5, 1, 2}});

    CHECK_THROWS_AS(orbit_projective_limit(g, {1, 0, 0}, {1, 0, 0}, 3),
                    PreconditionError); // q(x) = 0
    CHECK_THROWS_AS(orbit_projective_limit(g, {1, 1, 0}, {0, 1, 0}, 3),
                    PreconditionError); // g does not fix that class
}

TEST_CASE("closed-form iterates agree with repeated multiplication")
{
    Rng rng(4096);
    HyperbolicInstance inst = random_hyperbolic(5, 1, rng);
    AdaptedBasis ab = adapted_basis(inst.lat, inst.ell, inst.w);
    Vec entries(3, 0);
    entries[1] = ab.d;
    entries[2] = -2 * ab.d;
    Isometry g = build_isometry(ab, make_gamma(ab, entries));

    Int t = (ab.a > 0 ? 1 : -1) * (abs(ab.c) + 1);
    Vec x = scale_add(t, ab.ell, ab.ell_prime);
    REQUIRE(inst.lat.square(x) > 0);

    ConvergenceReport rep = orbit_projective_limit(g, x, inst.ell, 6);
    Vec power = x;
    for (std::size_t m = 1; m <= 6; ++m) {
        power = int_mat_vec(g.matrix, power);
        CHECK(rep.iterates[m - 1] == power);
    }
}
