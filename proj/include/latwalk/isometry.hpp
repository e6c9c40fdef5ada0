#ifndef LATWALK_ISOMETRY_HPP
#define LATWALK_ISOMETRY_HPP

#include "latwalk/lattice.hpp"
#include "latwalk/sublattice.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace latwalk {

// Basis {ell, u_1..u_{n-2}, ell'} of a hyperbolic lattice in which the
// Gram matrix takes the block shape
//
//     [ 0   0    a ]
//     [ 0   A    b ]
//     [ a  b^T   c ]
//
// with A negative definite. ell is primitive isotropic; the classes of the
// u_i form a basis of (ell-perp cap L)/Z ell whose first rank_w members
// span the saturation of the image of W there.
struct AdaptedBasis {
    Lattice ambient;
    Vec ell;
    IntMat us;
    Vec ell_prime;
    Int a;       // <ell, ell'>, nonzero
    IntMat gram_a;
    Vec b;       // b_i = <u_i, ell'>
    Int c;       // <ell', ell'>
    Int d;       // det A, nonzero
    std::size_t rank_w;
};

// Requires: lat hyperbolic of rank > rank(W) + 2, ell primitive isotropic,
// W a negative definite set of classes orthogonal to ell.
AdaptedBasis adapted_basis(const Lattice& lat, const Vec& ell, const IntMat& w);

// Parameter of the unipotent family: a length n-2 integer vector, zero in
// the first rank_w slots, every entry a multiple of d.
struct GammaVector {
    Vec entries;
};

GammaVector make_gamma(const AdaptedBasis& ab, const Vec& entries);

// The standard free generators: d times each unit vector in the slots
// rank_w .. n-3. Their count n - rank_w - 2 is the rank of the family.
std::vector<GammaVector> gamma_generators(const AdaptedBasis& ab);

// Integral isometry of the ambient lattice, acting by x -> matrix * x.
// Isometries produced by build_isometry carry their construction data so
// that orbit code can evaluate powers in closed form.
struct Isometry {
    Lattice lattice;
    IntMat matrix;
    std::shared_ptr<const AdaptedBasis> origin;
    Vec gamma; // meaningful only when origin is set
};

// The unipotent isometry attached to gamma: it fixes ell and W pointwise,
// sends u_i to u_i - 2 gamma_i ell, and shifts ell' into the u-block. The
// assignment gamma -> g(gamma) is a group homomorphism from the additive
// group of valid gamma vectors.
Isometry build_isometry(const AdaptedBasis& ab, const GammaVector& gamma);

bool verify_isometry(const Lattice& lat, const IntMat& m);

struct ConvergenceReport {
    IntMat iterates;                             // g^m x for m = 1..m_max
    std::vector<std::optional<Rat>> deviations;  // delta_m; empty coordinate when undefined
    std::vector<Int> ell_coefficients;           // lambda_m for m = 0..m_max
    bool eventually_decreasing = false;
    std::size_t decreasing_from = 0;             // smallest m with strict decrease through m_max
    bool ell_coefficient_quadratic = false;      // second differences constant and nonzero
    bool transverse_growth_linear = false;       // all transverse second differences vanish
};

// Exact projective-convergence data for the orbit g^m x of a positive
// class x under an isometry fixing the isotropic class ell.
// lambda_m is the coordinate of g^m x along a fixed integral functional
// dual to the primitive generator of Q ell; delta_m is the maximum
// coordinate distance between (g^m x)/lambda_m and that generator.
ConvergenceReport orbit_projective_limit(const Isometry& g, const Vec& x,
                                         const Vec& ell, std::size_t m_max);

} // namespace latwalk

#endif
