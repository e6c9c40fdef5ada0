#include "latwalk/aut_rank.hpp"

#include "latwalk/errors.hpp"
#include "latwalk/sublattice.hpp"

namespace latwalk {

SpanW span_w(const Lattice& lat, const Vec& ell, const IntMat& classes) {
    require(lat.is_hyperbolic(), "span_w: lattice must have signature (1, n-1)");
    QuotientLattice q = quotient_mod_isotropic(lat, ell); // validates ell
    for (const Vec& c : classes)
        require(lat.inner(c, ell) == 0, "span_w: classes must be orthogonal to ell");

    IntMat gens;
    gens.push_back(ell);
    gens.insert(gens.end(), classes.begin(), classes.end());
    IntMat basis = column_normal_form(gens);

    IntMat images;
    for (const Vec& c : classes) images.push_back(quotient_coords(q, lat, c));
    IntMat image_basis = column_normal_form(images);
    ensure(basis.size() == image_basis.size() + 1,
           "span_w: span dimension does not match image rank plus one");
    if (!image_basis.empty())
        ensure(restrict_form(q.quotient, image_basis).is_negative_definite(),
               "span_w: image of the span is not negative definite");
    return SpanW{basis.size(), std::move(basis), image_basis.size()};
}

RankReport aut_rank(const Lattice& lat, const Vec& ell, const WallSystem& ws,
                    const IntMat& mbm) {
    require(ws.ambient().gram() == lat.gram(),
            "aut_rank: wall system lives on a different lattice");
    require(is_nef(ws, ell), "aut_rank: ell must be nef");
    for (const Vec& e : mbm)
        require(lat.square(e) < 0, "aut_rank: classes must have negative square");

    IntMat kept;
    for (const Vec& e : mbm)
        if (lat.inner(e, ell) == 0 && mbm_face_test(ws, e)) kept.push_back(e);

    SpanW sw = span_w(lat, ell, kept); // validates ell primitive isotropic
    std::size_t n = lat.rank();
    ensure(sw.dim <= n - 1, "aut_rank: span dimension exceeds rank of ell-perp");
    std::size_t rank = n - sw.dim - 1; // nonnegative because dim <= n - 1

    RankReport rep;
    rep.picard = n;
    rep.dim_w = sw.dim;
    rep.rank = rank;
    rep.spanning_set.push_back(ell);
    rep.spanning_set.insert(rep.spanning_set.end(), kept.begin(), kept.end());
    rep.mbm_circ_used = std::move(kept);
    rep.within_hypothesis = n > sw.dim + 1; // n - rank(W image) > 2
    return rep;
}

std::size_t rank_upper_bound(const Lattice& lat) {
    require(lat.is_hyperbolic(), "rank_upper_bound: lattice must have signature (1, n-1)");
    require(lat.rank() >= 2, "rank_upper_bound: rank must be at least 2");
    return lat.rank() - 2;
}

Int shioda_tate_rank(const Int& picard, const std::vector<Int>& fiber_component_counts) {
    require(picard >= 2, "shioda_tate: picard number must be at least 2");
    Int fibers = 0;
    for (const Int& n : fiber_component_counts) {
        require(n >= 1, "shioda_tate: fiber component counts must be positive");
        fibers += n - 1;
    }
    Int rank = picard - (1 + fibers) - 1;
    require(rank >= 0, "shioda_tate: fiber configuration exceeds the picard number");
    return rank;
}

} // namespace latwalk
