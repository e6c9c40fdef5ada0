#ifndef LATWALK_LINALG_HPP
#define LATWALK_LINALG_HPP

#include "latwalk/numeric.hpp"

#include <cstddef>
#include <optional>

namespace latwalk {

// ---- integer matrices (row-major, rectangular) ----

IntMat int_identity(std::size_t n);
IntMat int_transpose(const IntMat& a);
IntMat int_mul(const IntMat& a, const IntMat& b);
Vec int_mat_vec(const IntMat& a, const Vec& x);
Int dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

// Determinant of a square matrix, fraction-free Bareiss elimination.
Int det(IntMat a);

// Rank over the rationals.
std::size_t int_rank(IntMat a);

// Canonical row Hermite form of the lattice generated by the given rows:
// echelon shape, positive pivots, entries above each pivot reduced into
// [0, pivot). Zero rows are dropped; the result depends only on the row
// lattice.
IntMat hermite_rows(IntMat rows);

// Basis of { x : a x = 0 } over the integers, canonicalized by
// hermite_rows. The kernel of an integer matrix is always saturated.
IntMat int_kernel(const IntMat& a);

// Reduce v modulo the row lattice of h (h must be in hermite_rows form):
// at each pivot column the entry of the result lies in [0, pivot).
Vec reduce_mod_rows(Vec v, const IntMat& h);

// Extends independent primitive rows to a basis of Z^n. The first
// rows.size() rows of the result are the input rows; |det| = 1. Throws
// PreconditionError when the rows are dependent or span an unsaturated
// sublattice.
IntMat basis_completion(const IntMat& rows, std::size_t n);

// ---- rational matrices ----

RatMat to_rat(const IntMat& a);
RatMat rat_identity(std::size_t n);
RatMat rat_transpose(const RatMat& a);
RatMat rat_mul(const RatMat& a, const RatMat& b);
QVec rat_mat_vec(const RatMat& a, const QVec& x);
QVec to_rat(const Vec& v);

bool is_integral(const QVec& v);
bool is_integral(const RatMat& a);
Vec to_int_checked(const QVec& v);     // throws InvariantError if non-integral
IntMat to_int_checked(const RatMat& a);

// Inverse, or nullopt when singular.
std::optional<RatMat> rat_inverse(const RatMat& a);

// One exact solution of a x = b with free variables pinned to zero, or
// nullopt when the system is inconsistent.
std::optional<QVec> rat_solve(RatMat a, QVec b);

// Sylvester inertia of a symmetric rational matrix, computed by exact
// symmetric reduction; zero-diagonal blocks are broken by the substitution
// x_i <- x_i + x_j, which is valid because <x_i + x_j, x_i + x_j> =
// 2 <x_i, x_j> != 0 when both diagonal entries vanish.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    bool operator==(const Inertia&) const = default;
};
Inertia sylvester_inertia(RatMat m);

} // namespace latwalk

#endif
