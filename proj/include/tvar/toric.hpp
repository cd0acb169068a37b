#pragma once

#include <map>

#include "tvar/lattice.hpp"
#include "tvar/quasifan.hpp"

namespace tvar {

// Toric base variety: a pointed quasifan with stable ray labels (indices
// into rays(), which are lex-sorted primitive generators).
struct ToricBase {
    QuasiFan fan;
    std::vector<IVec> ray_gens;  // cached fan.rays()
    bool convex_support = false;

    static ToricBase from_fan(QuasiFan fan);

    std::size_t rank() const { return fan.rank; }
    std::size_t ray_count() const { return ray_gens.size(); }
    std::optional<std::size_t> ray_index(const IVec& v) const;
};

// Rational-coefficient Weil divisor supported on the toric prime divisors.
struct WeilQDivisor {
    QVec coeffs;  // one per ray of the base

    static WeilQDivisor zero(const ToricBase& base) {
        return WeilQDivisor{QVec(base.ray_count(), Rat(0))};
    }
    bool operator==(const WeilQDivisor&) const = default;
    WeilQDivisor operator+(const WeilQDivisor& other) const;
    WeilQDivisor operator-(const WeilQDivisor& other) const;
    bool dominates(const WeilQDivisor& other) const;  // coefficientwise >=
};

// Polyhedral divisor: tailed-polyhedron coefficients attached to rays of
// the base; omitted rays carry the trivial coefficient (the tail cone).
struct PolyhedralDivisor {
    ToricBase base;
    Cone tail;  // omega, in N_Q; shared tail of every coefficient
    std::map<std::size_t, TailedPolyhedron> terms;

    std::size_t coefficient_rank() const { return tail.rank(); }
    Cone weight_cone() const { return tail.dual(); }
    // coefficient of the given ray, materializing the trivial one on demand
    TailedPolyhedron coefficient(std::size_t ray) const;
    void validate() const;
};

WeilQDivisor evaluate(const PolyhedralDivisor& d, const IVec& m);

bool superadditivity_check(const PolyhedralDivisor& d, const IVec& m, const IVec& m2);

WeilQDivisor principal_divisor(const ToricBase& base, const IVec& u);

struct SectionsPolyhedron {
    bool empty = true;
    PolyhedronVRep vrep;
    std::vector<AffineIneq> ineqs;
    std::size_t dim = 0;
};
SectionsPolyhedron sections_polyhedron(const ToricBase& base, const WeilQDivisor& e);

// Per-chamber pp-divisor report. Samples are the Hilbert-basis elements of
// the chamber plus the sum of its ray generators (an interior point).
struct PPSample {
    IVec m;
    bool interior = false;  // lies in Relint of the weight cone
    bool q_cartier = false, cartier = false, semiample = false, big = false;
};
struct PPChamberReport {
    Cone chamber;
    std::vector<PPSample> samples;
    bool q_cartier = true, cartier = true, semiample = true, big = true;
};
struct PPReport {
    std::vector<PPChamberReport> chambers;
    bool q_cartier = true, cartier = true, semiample = true, big = true;
    bool proper() const { return q_cartier && semiample && big; }
};
PPReport pp_check(const PolyhedralDivisor& d);

// Divisor pullback along the toric real structure given by an involution
// permuting the rays; FanNotStable if it does not preserve the fan.
WeilQDivisor pullback_involution(const ToricBase& base, const LatticeInvolution& tau_y,
                                 const WeilQDivisor& e);

// The ray permutation induced by tau_y, if the fan is stable.
std::optional<std::vector<std::size_t>> fan_ray_permutation(const ToricBase& base,
                                                            const LatticeInvolution& tau_y);

}  // namespace tvar
