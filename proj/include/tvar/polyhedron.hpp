#pragma once

#include <optional>

#include "tvar/cone.hpp"

namespace tvar {

// One affine inequality <a, x> >= b with integer data.
struct AffineIneq {
    IVec normal;
    Int rhs;
};

// General rational polyhedron in V-representation. Lineality is nonempty
// only for degenerate inputs (sections of divisors on small fans).
struct PolyhedronVRep {
    std::size_t rank = 0;
    std::vector<QVec> points;     // minimal, lex-sorted
    std::vector<IVec> rays;       // primitive, lex-sorted
    std::vector<IVec> lineality;  // Hermite rows
    bool empty() const { return points.empty() && lineality.empty() && rays.empty(); }
    bool is_pointed() const { return lineality.empty(); }
};

PolyhedronVRep vrep_from_inequalities(std::size_t rank, const std::vector<AffineIneq>& ineqs);

// sigma-polyhedron: convex hull of finitely many points plus a pointed
// recession cone.
struct TailedPolyhedron {
    std::size_t rank = 0;
    std::vector<QVec> vertices;  // minimal, lex-sorted
    Cone tail;

    bool operator==(const TailedPolyhedron& other) const;
    bool contains(const QVec& x) const;
    std::string to_string() const;

    // H-representation (derived from vertices and tail facets).
    std::vector<AffineIneq> inequalities() const;

    TailedPolyhedron translate(const QVec& shift) const;
};

// Canonical minimal decomposition conv(points) + recession cone from raw
// V-data. Errors: EmptyInput; NotPointed when the recession cone has
// lineality.
TailedPolyhedron tail_decompose(std::size_t rank, const std::vector<QVec>& points,
                                const std::vector<IVec>& rays);

TailedPolyhedron minkowski_sum(const TailedPolyhedron& p, const TailedPolyhedron& q);

// min over the polyhedron of <m, .>; Unbounded unless m lies in dual(tail).
Rat support_eval(const TailedPolyhedron& delta, const QVec& m);
Rat support_eval(const TailedPolyhedron& delta, const IVec& m);

// Cones of linearity of the support function: one maximal cone per vertex,
// supported on dual(tail), living in the dual space.
std::vector<Cone> normal_quasifan_cones(const TailedPolyhedron& delta);

// Lattice points of { x : ineqs } with lo <= x <= hi componentwise.
std::vector<IVec> lattice_points_in_box(std::size_t rank, const std::vector<AffineIneq>& ineqs,
                                        const IVec& lo, const IVec& hi);

}  // namespace tvar
