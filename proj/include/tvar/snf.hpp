#pragma once

#include <optional>

#include "tvar/matrix.hpp"

namespace tvar {

struct SmithDecomposition {
    IntMat u;  // unimodular, rows(a) x rows(a)
    IntMat s;  // diagonal, d_i | d_{i+1}, d_i >= 0
    IntMat v;  // unimodular, cols(a) x cols(a)
};

// U * A * V = S with U, V unimodular and S in Smith normal form.
SmithDecomposition smith_normal_form(const IntMat& a);

// Diagonal of the Smith form (invariant factors, zeros trimmed are kept).
IVec invariant_factors(const IntMat& a);

// Row-style Hermite normal form: row span preserved, echelon shape,
// positive pivots, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped.
IntMat hermite_rows(const IntMat& a);

// Basis of {x : A x = 0} as columns of the returned matrix; the basis
// spans the saturated kernel lattice.
IntMat integer_kernel(const IntMat& a);

// Solution set of A x = b over Z: a particular solution plus the kernel
// lattice. nullopt when no integer solution exists.
struct IntSolution {
    IVec particular;
    IntMat kernel;  // columns generate the homogeneous solutions
};
std::optional<IntSolution> solve_integer(const IntMat& a, const IVec& b);

// Right inverse over Z: A * R = identity. Requires A surjective as a map
// of lattices (Smith diagonal all ones); nullopt otherwise.
std::optional<IntMat> right_inverse(const IntMat& a);

// The coset representative of x modulo the lattice spanned by the columns
// of `lattice` minimizing (l1 norm, lexicographic order). Deterministic.
IVec minimize_over_coset(const IVec& x, const IntMat& lattice);

}  // namespace tvar
