#ifndef LATWALK_NUMERIC_HPP
#define LATWALK_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace latwalk {

// All lattice arithmetic is exact: arbitrary-precision integers and
// rationals throughout, no floating point on any code path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Vec = std::vector<Int>;     // integer coordinate vector
using QVec = std::vector<Rat>;    // rational coordinate vector
using IntMat = std::vector<Vec>;  // row-major
using RatMat = std::vector<QVec>; // row-major

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// n/d for d != 0. cpp_rational's own two-argument constructor rejects
// negative denominators, so normalize the sign here.
inline Rat rat_of(Int n, Int d)
{
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rat(std::move(n), std::move(d));
}

// gcd of all entries, >= 0; content of the zero vector is 0.
Int content(const Vec& v);

// floor(a/b) for b != 0.
Int floor_div(const Int& a, const Int& b);

// floor/ceil of a rational.
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

// Largest integer k with k <= c + sqrt(r); requires r >= 0.
Int floor_plus_sqrt(const Rat& c, const Rat& r);
// Smallest integer k with k >= c - sqrt(r); requires r >= 0.
Int ceil_minus_sqrt(const Rat& c, const Rat& r);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

} // namespace latwalk

#endif
