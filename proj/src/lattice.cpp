#include "latwalk/lattice.hpp"

#include "latwalk/errors.hpp"

namespace latwalk {

Lattice::Lattice(std::size_t rank, IntMat gram) : rank_(rank), gram_(std::move(gram)) {
    require(gram_.size() == rank_, "lattice: gram matrix has wrong number of rows");
    for (const Vec& row : gram_)
        require(row.size() == rank_, "lattice: gram matrix is not square");
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = i + 1; j < rank_; ++j)
            require(gram_[i][j] == gram_[j][i], "lattice: gram matrix is not symmetric");
}

Int Lattice::inner(const Vec& x, const Vec& y) const {
    if (x.size() != rank_ || y.size() != rank_)
        throw DimensionError("inner: vector length does not match rank");
    Int s = 0;
    for (std::size_t i = 0; i < rank_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < rank_; ++j) s += x[i] * gram_[i][j] * y[j];
    }
    return s;
}

Signature Lattice::signature() const { return sylvester_inertia(to_rat(gram_)); }

bool Lattice::is_hyperbolic() const {
    Signature s = signature();
    return s.positive == 1 && s.zero == 0 &&
           s.negative == static_cast<int>(rank_) - 1;
}

bool Lattice::is_negative_definite() const {
    Signature s = signature();
    return s.positive == 0 && s.zero == 0;
}

Lattice restrict_form(const Lattice& lat, const IntMat& basis) {
    std::size_t k = basis.size();
    for (const Vec& v : basis)
        if (v.size() != lat.rank())
            throw DimensionError("restrict_form: vector length does not match rank");
    require(int_rank(basis) == k, "restrict_form: vectors are linearly dependent");
    IntMat g(k, Vec(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) g[i][j] = lat.inner(basis[i], basis[j]);
    return Lattice(k, std::move(g));
}

} // namespace latwalk
