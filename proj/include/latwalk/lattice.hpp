#ifndef LATWALK_LATTICE_HPP
#define LATWALK_LATTICE_HPP

#include "latwalk/linalg.hpp"
#include "latwalk/numeric.hpp"

#include <cstddef>

namespace latwalk {

using Signature = Inertia;

// Free Z-module of finite rank with an integer-valued symmetric bilinear
// form given by its Gram matrix in a fixed basis. Values are immutable
// after construction.
class Lattice {
public:
    Lattice(std::size_t rank, IntMat gram);

    std::size_t rank() const { return rank_; }
    const IntMat& gram() const { return gram_; }

    // <x, y> = x^T G y; exact.
    Int inner(const Vec& x, const Vec& y) const;
    Int square(const Vec& x) const { return inner(x, x); }

    Signature signature() const;
    Int discriminant() const { return det(gram_); }

    bool is_hyperbolic() const; // signature (1, rank-1, 0)
    bool is_negative_definite() const;

    bool operator==(const Lattice&) const = default;

private:
    std::size_t rank_;
    IntMat gram_;
};

// Gram matrix of the given vectors in the ambient form. The vectors must
// be linearly independent over the rationals.
Lattice restrict_form(const Lattice& lat, const IntMat& basis);

} // namespace latwalk

#endif
