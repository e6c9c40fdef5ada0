#ifndef LATWALK_SUBLATTICE_HPP
#define LATWALK_SUBLATTICE_HPP

#include "latwalk/lattice.hpp"

namespace latwalk {

// Canonical echelon basis of the integer span of the given vectors.
// Depends only on the span; zero vectors are dropped.
IntMat column_normal_form(const IntMat& vectors);

// Basis of { x in L : <x, s> = 0 for all s in sub }. Always saturated.
IntMat orthogonal_complement(const Lattice& lat, const IntMat& sub);

// Basis of (Q-span of sub) intersected with L, the saturation of sub.
IntMat saturate(const Lattice& lat, const IntMat& sub);

// Extends a basis of a saturated sublattice to a basis of L; the first
// sub.size() vectors of the result are exactly sub. Throws when sub is
// dependent or not saturated.
IntMat extend_to_basis(const Lattice& lat, const IntMat& sub);

// Index |L : sub| of a finite-index sublattice, = |det| of the coordinate
// matrix. Throws when sub is not of full rank (infinite index).
Int overlattice_index(const Lattice& lat, const IntMat& sub);

// (ell-perp cap L) / Z ell with the well-defined induced form. lift[i] is
// the canonical representative of the i-th basis class, reduced modulo
// Z ell at the pivot coordinate of ell.
struct QuotientLattice {
    Lattice quotient;
    IntMat lift;
    Vec ell;
};

// Requires ell primitive isotropic and not in the radical of the form.
QuotientLattice quotient_mod_isotropic(const Lattice& lat, const Vec& ell);

// Coordinates of the class of x in the quotient basis; x must lie in
// ell-perp cap L.
Vec quotient_coords(const QuotientLattice& q, const Lattice& lat, const Vec& x);

// An isometry of the rational form, acting by x -> matrix * x on column
// coordinate vectors.
struct RationalIsometry {
    RatMat matrix;
};

bool preserves_form(const Lattice& lat, const RatMat& m);

// Overlattice test: given g in O(sub) for a finite-index sublattice sub
// of L, decide whether g also preserves L. Decided exactly by integrality
// of g on a basis of L.
bool stabilizes_overlattice(const Lattice& lat, const IntMat& sub,
                            const RationalIsometry& g);

struct ExtensionResult {
    RationalIsometry iso;
    bool integral; // does the glued map preserve L itself?
};

// Unique rational extension of (g1 on sub1) + (identity on sub2) to the
// ambient space, where sub1 and sub2 are orthogonal and together of full
// rank. g1 is an integer matrix in sub1 coordinates and must preserve the
// restricted form.
ExtensionResult extend_by_identity(const Lattice& lat, const IntMat& sub1,
                                   const IntMat& g1, const IntMat& sub2);

} // namespace latwalk

#endif
