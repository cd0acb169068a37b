#include "tvar/toric.hpp"

#include <algorithm>

namespace tvar {

ToricBase ToricBase::from_fan(QuasiFan f) {
    ToricBase base;
    base.ray_gens = f.rays();
    base.convex_support = f.support_is_convex();
    base.fan = std::move(f);
    return base;
}

std::optional<std::size_t> ToricBase::ray_index(const IVec& v) const {
    for (std::size_t i = 0; i < ray_gens.size(); ++i)
        if (ray_gens[i] == v) return i;
    return std::nullopt;
}

WeilQDivisor WeilQDivisor::operator+(const WeilQDivisor& other) const {
    WeilQDivisor out = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += other.coeffs[i];
    return out;
}

WeilQDivisor WeilQDivisor::operator-(const WeilQDivisor& other) const {
    WeilQDivisor out = *this;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] -= other.coeffs[i];
    return out;
}

bool WeilQDivisor::dominates(const WeilQDivisor& other) const {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] < other.coeffs[i]) return false;
    return true;
}

TailedPolyhedron PolyhedralDivisor::coefficient(std::size_t ray) const {
    auto it = terms.find(ray);
    if (it != terms.end()) return it->second;
    TailedPolyhedron trivial;
    trivial.rank = tail.rank();
    trivial.vertices.push_back(QVec(tail.rank(), Rat(0)));
    trivial.tail = tail;
    return trivial;
}

void PolyhedralDivisor::validate() const {
    if (!tail.is_pointed()) fail("NotPointed", "tail cone must be pointed");
    for (const auto& [ray, delta] : terms) {
        if (ray >= base.ray_count()) fail("UnknownRay", "term attached to a ray not in the base");
        if (delta.tail != tail)
            fail("TailMismatch", "coefficient tail differs from the divisor tail");
    }
}

WeilQDivisor evaluate(const PolyhedralDivisor& d, const IVec& m) {
    if (m.size() != d.coefficient_rank()) fail("RankMismatch", "weight has wrong length");
    for (const IVec& g : d.tail.rays())
        if (dot(m, g) < 0) fail("OutsideWeightCone", "weight outside the dual of the tail cone");
    WeilQDivisor out{QVec(d.base.ray_count(), Rat(0))};
    for (const auto& [ray, delta] : d.terms) out.coeffs[ray] = support_eval(delta, m);
    return out;
}

bool superadditivity_check(const PolyhedralDivisor& d, const IVec& m, const IVec& m2) {
    WeilQDivisor lhs = evaluate(d, add(m, m2));
    WeilQDivisor rhs = evaluate(d, m) + evaluate(d, m2);
    return lhs.dominates(rhs);
}

WeilQDivisor principal_divisor(const ToricBase& base, const IVec& u) {
    if (u.size() != base.rank()) fail("RankMismatch", "character has wrong length");
    WeilQDivisor out{QVec(base.ray_count(), Rat(0))};
    for (std::size_t i = 0; i < base.ray_count(); ++i) out.coeffs[i] = Rat(dot(u, base.ray_gens[i]));
    return out;
}

SectionsPolyhedron sections_polyhedron(const ToricBase& base, const WeilQDivisor& e) {
    SectionsPolyhedron out;
    std::vector<AffineIneq> ineqs;
    for (std::size_t i = 0; i < base.ray_count(); ++i) {
        // <u, v_rho> >= -a_rho, cleared to integer data
        Int den = e.coeffs[i].get_den();
        IVec normal(base.rank());
        for (std::size_t j = 0; j < base.rank(); ++j) normal[j] = base.ray_gens[i][j] * den;
        ineqs.push_back({normal, -e.coeffs[i].get_num()});
    }
    out.ineqs = ineqs;
    out.vrep = vrep_from_inequalities(base.rank(), ineqs);
    out.empty = out.vrep.empty();
    if (!out.empty) {
        std::vector<IVec> dirs = out.vrep.rays;
        for (const IVec& l : out.vrep.lineality) dirs.push_back(l);
        if (out.vrep.points.size() > 1) {
            const QVec& base_pt = out.vrep.points.front();
            for (std::size_t i = 1; i < out.vrep.points.size(); ++i) {
                QVec diff(base_pt.size());
                for (std::size_t j = 0; j < diff.size(); ++j)
                    diff[j] = out.vrep.points[i][j] - base_pt[j];
                dirs.push_back(primitive(diff));
            }
        }
        out.dim = dirs.empty() ? 0 : rank_of(IntMat::from_rows(dirs, base.rank()));
    }
    return out;
}

std::optional<std::vector<std::size_t>> fan_ray_permutation(const ToricBase& base,
                                                            const LatticeInvolution& tau_y) {
    if (tau_y.rank() != base.rank()) fail("RankMismatch", "involution rank differs from base");
    std::vector<std::size_t> perm(base.ray_count());
    for (std::size_t i = 0; i < base.ray_count(); ++i) {
        auto idx = base.ray_index(tau_y.map.apply(base.ray_gens[i]));
        if (!idx) return std::nullopt;
        perm[i] = *idx;
    }
    // cone structure must be preserved as well
    for (const Cone& c : base.fan.maximal) {
        Cone image = c.image(tau_y.map);
        bool found = false;
        for (const Cone& c2 : base.fan.maximal)
            if (c2 == image) {
                found = true;
                break;
            }
        if (!found) return std::nullopt;
    }
    return perm;
}

WeilQDivisor pullback_involution(const ToricBase& base, const LatticeInvolution& tau_y,
                                 const WeilQDivisor& e) {
    auto perm = fan_ray_permutation(base, tau_y);
    if (!perm) fail("FanNotStable", "involution does not preserve the fan");
    WeilQDivisor out{QVec(base.ray_count(), Rat(0))};
    for (std::size_t i = 0; i < base.ray_count(); ++i) out.coeffs[i] = e.coeffs[(*perm)[i]];
    return out;
}

namespace {

// Cartier data on one maximal cone: a witness m with <m, v_rho> = -a_rho on
// the cone's rays and <m, v> >= -a_v elsewhere (the global underestimate
// makes the support function convex when every cone has one).
struct LocalWitness {
    bool exists_q = false;
    bool exists_z = false;
    bool global_underestimate = false;
};

LocalWitness cartier_witness(const ToricBase& base, const WeilQDivisor& e, const Cone& sigma) {
    LocalWitness w;
    std::vector<std::size_t> on;
    std::vector<std::size_t> off;
    for (std::size_t i = 0; i < base.ray_count(); ++i) {
        if (sigma.contains(base.ray_gens[i]))
            on.push_back(i);
        else
            off.push_back(i);
    }
    // rational witness: equality system
    std::vector<QVec> rows;
    QVec rhs;
    for (std::size_t i : on) {
        rows.push_back(to_rational(base.ray_gens[i]));
        rhs.push_back(-e.coeffs[i]);
    }
    RatMat a = RatMat::from_rows(rows, base.rank());
    QVec x;
    if (!solve_rational(a, rhs, x)) return w;
    w.exists_q = true;

    // integral witness: pairings of lattice vectors are integers, so any
    // non-integral coefficient on the cone already rules one out
    {
        std::vector<IVec> irows;
        IVec irhs;
        bool integral_rhs = true;
        for (std::size_t i : on) {
            Rat c = -e.coeffs[i];
            if (c.get_den() != 1) {
                integral_rhs = false;
                break;
            }
            irows.push_back(base.ray_gens[i]);
            irhs.push_back(c.get_num());
        }
        if (integral_rhs)
            w.exists_z = solve_integer(IntMat::from_rows(irows, base.rank()), irhs).has_value();
    }

    // underestimate: search the affine solution space {x + ker} for a point
    // with <m, v_rho> >= -a_rho off the cone (an exact feasibility check)
    std::vector<IVec> kernel = rational_kernel_basis(a);
    std::vector<AffineIneq> feas;
    for (std::size_t i : off) {
        // <x + sum t_k k_k, v_i> >= -a_i as a constraint on t
        Rat base_val = dot(base.ray_gens[i], x) + e.coeffs[i];
        QVec row(kernel.size());
        for (std::size_t k = 0; k < kernel.size(); ++k)
            row[k] = Rat(dot(base.ray_gens[i], kernel[k]));
        // clear denominators
        Int den = base_val.get_den();
        for (const Rat& q : row) den = lcm(den, q.get_den());
        IVec normal(kernel.size());
        for (std::size_t k = 0; k < kernel.size(); ++k)
            normal[k] = row[k].get_num() * (den / row[k].get_den());
        Rat scaled = base_val * den;
        feas.push_back({normal, -scaled.get_num()});
    }
    if (off.empty()) {
        w.global_underestimate = true;
    } else {
        PolyhedronVRep sol = vrep_from_inequalities(kernel.size(), feas);
        w.global_underestimate = !sol.empty();
    }
    return w;
}

}  // namespace

PPReport pp_check(const PolyhedralDivisor& d) {
    d.validate();
    if (!d.base.convex_support) fail("NonConvexSupport", "base fan support is not convex");
    Cone weight_cone = d.weight_cone();

    std::vector<std::vector<Cone>> normal_fans;
    for (const auto& [ray, delta] : d.terms) normal_fans.push_back(normal_quasifan_cones(delta));
    std::vector<Cone> chambers = common_refinement(normal_fans, weight_cone);

    PPReport report;
    for (const Cone& chamber : chambers) {
        PPChamberReport cr;
        cr.chamber = chamber;
        std::vector<IVec> samples = monoid_generators(chamber);
        IVec interior = chamber.relint_point();
        for (const IVec& l : chamber.lineality()) interior = add(interior, l);
        bool have_interior = false;
        for (const IVec& s : samples)
            if (s == interior) have_interior = true;
        if (!have_interior) samples.push_back(interior);

        for (const IVec& m : samples) {
            PPSample ps;
            ps.m = m;
            ps.interior = weight_cone.contains_relint(m);
            WeilQDivisor e = evaluate(d, m);
            bool q_cartier = true, cartier = true, semiample = true;
            for (const Cone& sigma : d.base.fan.maximal) {
                LocalWitness w = cartier_witness(d.base, e, sigma);
                q_cartier = q_cartier && w.exists_q;
                cartier = cartier && w.exists_z;
                semiample = semiample && w.global_underestimate;
            }
            ps.q_cartier = q_cartier;
            ps.cartier = cartier;
            ps.semiample = semiample;
            SectionsPolyhedron sec = sections_polyhedron(d.base, e);
            ps.big = !sec.empty && sec.dim == d.base.rank();
            cr.samples.push_back(ps);
            cr.q_cartier = cr.q_cartier && ps.q_cartier;
            cr.cartier = cr.cartier && ps.cartier;
            cr.semiample = cr.semiample && ps.semiample;
            if (ps.interior) cr.big = cr.big && ps.big;
        }
        report.q_cartier = report.q_cartier && cr.q_cartier;
        report.cartier = report.cartier && cr.cartier;
        report.semiample = report.semiample && cr.semiample;
        report.big = report.big && cr.big;
        report.chambers.push_back(std::move(cr));
    }
    return report;
}

}  // namespace tvar
