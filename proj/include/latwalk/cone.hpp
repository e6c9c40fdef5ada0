#ifndef LATWALK_CONE_HPP
#define LATWALK_CONE_HPP

#include "latwalk/lattice.hpp"

#include <vector>

namespace latwalk {

// Wall arrangement in a hyperbolic lattice: a distinguished positive class
// kappa selecting the positive cone component, plus negative-square wall
// classes. Walls are stored primitive and oriented so <e, kappa> > 0, with
// proportional duplicates collapsed. A wall orthogonal to kappa cannot be
// oriented that way and instead keeps a fixed canonical sign (first
// nonzero coordinate positive).
class WallSystem {
public:
    WallSystem(Lattice ambient, Vec kappa, IntMat walls);

    const Lattice& ambient() const { return ambient_; }
    const Vec& kappa() const { return kappa_; }
    const IntMat& walls() const { return walls_; }

private:
    Lattice ambient_;
    Vec kappa_;
    IntMat walls_;
};

// q(x) > 0 and <x, kappa> > 0.
bool in_positive_cone(const WallSystem& ws, const Vec& x);

// Closure of the positive cone side selected by kappa, cut down by every
// wall: q(x) >= 0, <x, kappa> >= 0 and <x, e> >= 0 for all walls e. The
// zero vector is nef.
bool is_nef(const WallSystem& ws, const Vec& x);

// True iff <e, x> and <e, y> are nonzero of opposite sign.
bool separates(const WallSystem& ws, const Vec& e, const Vec& x, const Vec& y);

// Sign of <x, e> for each wall, in stored wall order; x must lie in the
// positive cone.
std::vector<int> chamber_signature(const WallSystem& ws, const Vec& x);

// Does the hyperplane of e support a face of the nef cone with nonempty
// interior inside that hyperplane? Decided exactly: the problem reduces to
// maximizing the (strictly concave) form on the affine slice
// <x, kappa> = 1 of e-perp subject to the wall inequalities, plus a strict
// feasibility certificate obtained by Fourier-Motzkin elimination.
// Invariant under e -> k e for k != 0; false whenever q(e) >= 0.
bool mbm_face_test(const WallSystem& ws, const Vec& e);

// b - (<a,b>/<a,a>) a; requires <a,a> != 0.
QVec project_perp(const Lattice& lat, const Vec& a, const Vec& b);

} // namespace latwalk

#endif
