#ifndef LATWALK_ENUMERATE_HPP
#define LATWALK_ENUMERATE_HPP

#include "latwalk/lattice.hpp"

#include <optional>

namespace latwalk {

// Open square interval (qmin, qmax) with qmin < qmax <= 0.
struct EnumerationQuery {
    Int qmin;
    Int qmax;
    std::optional<std::size_t> limit;
};

// All vectors of a negative definite lattice whose square lies strictly
// between qmin and qmax, in lexicographic coordinate order (then capped by
// limit). Complete and duplicate-free; exact rational LDL decomposition
// drives the coordinate bounds, no floating point.
IntMat enumerate_negative(const Lattice& lat, const EnumerationQuery& query);

// Classes of { x : -bound < <x,x> < 0 } in (ell-perp cap L)/Z ell for a
// hyperbolic lattice, returned as canonical lifts reduced modulo Z ell.
IntMat lambda_n_mod_ell(const Lattice& lat, const Vec& ell, const Int& bound);

// Primitive isotropic vectors with all coordinates in [-box, box], one per
// sign pair (first nonzero coordinate positive), lexicographic order.
IntMat find_isotropic(const Lattice& lat, const Int& box);

} // namespace latwalk

#endif
