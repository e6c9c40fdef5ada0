#ifndef LATWALK_AUT_RANK_HPP
#define LATWALK_AUT_RANK_HPP

#include "latwalk/cone.hpp"
#include "latwalk/lattice.hpp"

#include <vector>

namespace latwalk {

// Rational span of ell together with a set of classes orthogonal to ell.
struct SpanW {
    std::size_t dim;           // dim over Q of span(ell, classes)
    IntMat basis;              // canonical echelon basis of that span
    std::size_t quotient_rank; // rank of the image in (ell-perp)/Z ell; = dim - 1
};

SpanW span_w(const Lattice& lat, const Vec& ell, const IntMat& classes);

struct RankReport {
    std::size_t picard;
    std::size_t dim_w;
    std::size_t rank;         // picard - dim_w - 1
    IntMat spanning_set;      // ell followed by the retained classes
    IntMat mbm_circ_used;     // classes that are orthogonal to ell and carry a face
    bool within_hypothesis;   // picard - (dim_w - 1) > 2
};

// Rank of the free abelian part acting on the face attached to the nef
// isotropic class ell: keep the given negative classes that are orthogonal
// to ell and pass mbm_face_test, span them with ell, and report
// picard - dim - 1. Outside the standing rank hypothesis the value is
// still reported (clamped at zero) with within_hypothesis = false.
RankReport aut_rank(const Lattice& lat, const Vec& ell, const WallSystem& ws,
                    const IntMat& mbm);

// picard - 2; the rank formula attains this exactly when no class is
// retained. Requires a hyperbolic lattice of rank >= 2.
std::size_t rank_upper_bound(const Lattice& lat);

// picard - (1 + sum (n_t - 1)) - 1 for an elliptic fibration with
// reducible-fiber component counts n_t; throws when the configuration is
// inconsistent with the Picard number.
Int shioda_tate_rank(const Int& picard, const std::vector<Int>& fiber_component_counts);

} // namespace latwalk

#endif
