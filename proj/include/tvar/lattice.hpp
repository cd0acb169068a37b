#pragma once

#include <optional>

#include "tvar/snf.hpp"

namespace tvar {

// Square integer matrix squaring to the identity.
struct LatticeInvolution {
    IntMat map;

    static LatticeInvolution checked(const IntMat& m);
    std::size_t rank() const { return map.rows(); }
    IntMat transpose() const { return map.transpose(); }
};

// (n0, n1, n2): counts of trivial, sign and swap factors; n0 + n1 + 2*n2 = rank.
struct InvolutionType {
    std::size_t n0 = 0, n1 = 0, n2 = 0;
    bool operator==(const InvolutionType&) const = default;
};

// Projection onto the cokernel of an injective saturated map F: the unique
// (up to unimodular left factor) surjection P with P*F = 0; returned in row
// Hermite normal form. Rejects torsion cokernels with NotSaturated.
IntMat cokernel_projection(const IntMat& f);

// Left inverse s of an injective saturated F (s*F = id), canonicalized as
// the (l1, lex)-minimal integer solution.
IntMat cosection(const IntMat& f);

// Left inverse that additionally intertwines the involutions:
// tau_dom o s = s o tau_cod. nullopt when no such s exists.
// Requires F o tau_dom = tau_cod o F (NotEquivariantEmbedding otherwise).
std::optional<IntMat> equivariant_cosection(const IntMat& f, const LatticeInvolution& tau_dom,
                                            const LatticeInvolution& tau_cod);

InvolutionType classify_involution(const LatticeInvolution& tau);

// Section t of the projection P (P*t = id) normalized against a chosen
// cosection s so that F*s + t*P = id; unique once s is fixed.
IntMat complement_section(const IntMat& f, const IntMat& s, const IntMat& p);

// True when F is injective with torsion-free cokernel.
bool is_saturated_embedding(const IntMat& f);

}  // namespace tvar
