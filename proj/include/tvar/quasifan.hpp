#pragma once

#include "tvar/cone.hpp"
#include "tvar/polyhedron.hpp"

namespace tvar {

// Finitely many pointed cones closed under faces, represented by the
// maximal ones. Pairwise intersections must be common faces.
struct QuasiFan {
    std::size_t rank = 0;
    std::vector<Cone> maximal;  // canonical, lex-sorted

    // union of all primitive ray generators, lex-sorted
    std::vector<IVec> rays() const;

    bool contains_point(const IVec& x) const;
    // index into maximal of some cone containing x; nullopt if none
    std::optional<std::size_t> find_cone(const IVec& x) const;

    bool operator==(const QuasiFan& other) const = default;

    // checks the fan axioms; fails with InvalidFan
    void validate() const;

    // true when the union of the maximal cones is convex
    bool support_is_convex() const;

    // the support as a cone (the convex hull of the union)
    Cone support_hull() const;
};

QuasiFan make_fan(std::size_t rank, std::vector<Cone> maximal);

// Fan of the projection: the coarsest common refinement of the images of
// the faces of sigma_prime under p. Every refinement cone must be pointed
// (NonPointedImage otherwise). sigma_prime must be pointed and
// full-dimensional.
QuasiFan image_fan(const IntMat& p, const Cone& sigma_prime);

// Common refinement of several quasifans sharing the same support:
// full-dimensional intersections of maximal cones, deduplicated. An empty
// family yields the single cone `support`.
std::vector<Cone> common_refinement(const std::vector<std::vector<Cone>>& fans,
                                    const Cone& support);

// Minimal generating set of C cap Z^rank for a pointed cone C.
std::vector<IVec> hilbert_basis(const Cone& cone);

// Generating set of C cap Z^rank for arbitrary C: Hilbert basis of the
// pointed quotient lifted, plus +-basis of the lineality lattice.
std::vector<IVec> monoid_generators(const Cone& cone);

}  // namespace tvar
