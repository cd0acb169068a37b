#pragma once

#include "tvar/toric.hpp"

namespace tvar {

// Multiplicative sign data on a generating set of the weight monoid,
// extended multiplicatively; +1 everywhere when the list is empty.
struct SignMap {
    std::vector<std::pair<IVec, int>> values;  // (generator, +-1)

    bool trivial() const;
    // sign at m, via an integral expression of m in the generators;
    // SignUndefined when m is outside the generated group, SignInconsistent
    // when the generators carry contradictory data.
    int eval(const IVec& m) const;
    void validate() const;
};

// Equivariant torus embedding (T, tau) -> (Gm^n, tau') with ambient cone
// sigma_prime in N'.
struct TorusEmbedding {
    IntMat f;  // N -> N', injective and saturated
    Cone sigma_prime;
    LatticeInvolution tau_hat;        // on N
    LatticeInvolution tau_hat_prime;  // on N'

    std::size_t subtorus_rank() const { return f.cols(); }
    std::size_t ambient_rank() const { return f.rows(); }
    // weight of the i-th ambient coordinate: the i-th row of F
    IVec coordinate_weight(std::size_t i) const { return f.row_vec(i); }
};

// validates all invariants; throws NonEquivariant / ConeNotStable /
// NotSaturated on violation
void validate_embedding(const TorusEmbedding& e);

// Full presentation (Y, D, h) plus the lattice bookkeeping that produced it.
struct AHDatum {
    ToricBase base;
    LatticeInvolution tau_hat_y;  // on N_Y
    PolyhedralDivisor divisor;
    Cone weight_cone;    // F*(dual sigma'), in M_Q
    IntMat cosection;    // s : N' -> N
    IntMat projection;   // P : N' -> N_Y
    IntMat section;      // t : N_Y -> N', with F s + t P = id
    IntMat h_exponent;   // M -> M_Y
    SignMap h_sign;
    bool cosection_equivariant = false;
    // the embedding that produced the datum (kept for reports and checks)
    TorusEmbedding embedding;

    LatticeInvolution tau_tilde() const {
        return LatticeInvolution{embedding.tau_hat.transpose()};
    }
    LatticeInvolution tau_tilde_y() const { return LatticeInvolution{tau_hat_y.transpose()}; }
};

// The involution on N_Y solved from tau_Y o P = P o tau'.
LatticeInvolution induced_quotient_involution(const TorusEmbedding& e, const IntMat& p);

// Delta_v = s(sigma' cap P^{-1}(v)) for a ray generator v of the image fan.
TailedPolyhedron fiber_coefficient(const IntMat& p, const IntMat& s, const Cone& sigma_prime,
                                   const IVec& v);

AHDatum downgrade(const TorusEmbedding& e);

struct CompatViolation {
    IVec m;
    QVec lhs, rhs;  // divisor coefficients
    std::string kind;
};
struct CompatReport {
    bool pass = true;
    std::size_t weights_checked = 0;
    std::optional<CompatViolation> first_violation;
};

// Eq-(4.1) check: pullback of D(m) against D(tau(m)) + div(h(tau m)), for
// every Hilbert-basis element of every chamber of the weight cone, plus the
// cocycle identities.
CompatReport check_real_compatibility(const AHDatum& a);

// Chamber decomposition of the weight cone induced by the divisor.
std::vector<Cone> weight_chambers(const PolyhedralDivisor& d);

}  // namespace tvar
