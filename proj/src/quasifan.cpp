#include "tvar/quasifan.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tvar {

std::vector<IVec> QuasiFan::rays() const {
    std::set<IVec> set;
    for (const Cone& c : maximal)
        for (const IVec& r : c.rays()) set.insert(r);
    return std::vector<IVec>(set.begin(), set.end());
}

bool QuasiFan::contains_point(const IVec& x) const {
    return find_cone(x).has_value();
}

std::optional<std::size_t> QuasiFan::find_cone(const IVec& x) const {
    for (std::size_t i = 0; i < maximal.size(); ++i)
        if (maximal[i].contains(x)) return i;
    return std::nullopt;
}

void QuasiFan::validate() const {
    for (const Cone& c : maximal) {
        if (c.rank() != rank) fail("InvalidFan", "cone rank differs from fan rank");
        if (!c.is_pointed()) fail("InvalidFan", "fan cone has lineality");
    }
    for (std::size_t i = 0; i < maximal.size(); ++i)
        for (std::size_t j = i + 1; j < maximal.size(); ++j) {
            Cone meet = maximal[i].intersect(maximal[j]);
            if (!maximal[i].has_face(meet) || !maximal[j].has_face(meet))
                fail("InvalidFan", "intersection of cones " + maximal[i].to_string() + " and " +
                                       maximal[j].to_string() + " is not a common face");
        }
}

Cone QuasiFan::support_hull() const {
    std::vector<IVec> gens;
    for (const Cone& c : maximal)
        for (const IVec& g : c.generators()) gens.push_back(g);
    return Cone::from_generators(rank, gens);
}

namespace {

// Enumerates the full-dimensional chambers of the hyperplane arrangement
// spanned by `walls` (taken up to sign) inside `region`, and hands a
// relative-interior point of each to the visitor.
void for_each_chamber(std::size_t rank, const std::vector<IVec>& walls_in, const Cone& region,
                      const std::function<void(const IVec&)>& visit) {
    std::set<IVec> wall_set;
    for (const IVec& w : walls_in) {
        IVec p = primitive(w);
        if (is_zero(p)) continue;
        // canonical sign: first nonzero entry positive
        for (const Int& e : p) {
            if (e > 0) break;
            if (e < 0) {
                p = neg(p);
                break;
            }
        }
        wall_set.insert(p);
    }
    std::vector<IVec> walls(wall_set.begin(), wall_set.end());
    if (walls.size() > 18) fail("TooManyWalls", "chamber enumeration limit exceeded");

    const std::size_t count = std::size_t(1) << walls.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        std::vector<IVec> ineqs = region.normals();
        for (std::size_t i = 0; i < walls.size(); ++i)
            ineqs.push_back(mask & (std::size_t(1) << i) ? neg(walls[i]) : walls[i]);
        Cone chamber = Cone::from_inequalities(rank, ineqs);
        if (!chamber.is_full_dimensional()) continue;
        IVec z = chamber.relint_point();
        for (const IVec& l : chamber.lineality()) z = add(z, l);
        visit(z);
    }
}

}  // namespace

QuasiFan make_fan(std::size_t rank, std::vector<Cone> maximal) {
    std::sort(maximal.begin(), maximal.end(),
              [](const Cone& a, const Cone& b) { return a.lex_less_than(b); });
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
    QuasiFan fan{rank, std::move(maximal)};
    fan.validate();
    return fan;
}

bool QuasiFan::support_is_convex() const {
    Cone hull = support_hull();
    if (maximal.size() <= 1) return true;
    std::vector<IVec> walls;
    for (const Cone& c : maximal)
        for (const IVec& a : c.normals()) walls.push_back(a);
    bool convex = true;
    for_each_chamber(rank, walls, hull, [&](const IVec& z) {
        if (!contains_point(z)) convex = false;
    });
    return convex;
}

QuasiFan image_fan(const IntMat& p, const Cone& sigma_prime) {
    if (p.cols() != sigma_prime.rank()) fail("RankMismatch", "projection domain mismatch");
    if (!sigma_prime.is_pointed() || !sigma_prime.is_full_dimensional())
        fail("ConeNotPointed", "ambient cone must be pointed and full-dimensional");
    const std::size_t rank = p.rows();

    std::vector<Cone> images;
    for (const Cone& f : sigma_prime.faces()) images.push_back(f.image(p));

    std::vector<IVec> walls;
    for (const Cone& c : images)
        for (const IVec& a : c.normals()) walls.push_back(a);

    Cone support = sigma_prime.image(p);
    std::vector<Cone> cells;
    for_each_chamber(rank, walls, support, [&](const IVec& z) {
        std::vector<IVec> ineqs;
        bool covered = false;
        for (const Cone& c : images)
            if (c.contains(z)) {
                covered = true;
                for (const IVec& a : c.normals()) ineqs.push_back(a);
            }
        if (!covered) fail("Internal", "chamber point escapes every face image");
        Cone cell = Cone::from_inequalities(rank, ineqs);
        if (!cell.is_pointed())
            fail("NonPointedImage", "quotient fan would have a non-pointed cone");
        cells.push_back(cell);
    });
    return make_fan(rank, std::move(cells));
}

std::vector<Cone> common_refinement(const std::vector<std::vector<Cone>>& fans,
                                    const Cone& support) {
    std::vector<Cone> cells{support};
    for (const std::vector<Cone>& fan : fans) {
        if (fan.empty()) continue;
        std::vector<Cone> next;
        for (const Cone& cell : cells)
            for (const Cone& c : fan) {
                Cone meet = cell.intersect(c);
                if (meet.dim() == support.dim()) next.push_back(meet);
            }
        cells = std::move(next);
    }
    std::sort(cells.begin(), cells.end(),
              [](const Cone& a, const Cone& b) { return a.lex_less_than(b); });
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

std::vector<IVec> hilbert_basis(const Cone& cone) {
    if (!cone.is_pointed()) fail("ConeNotPointed", "Hilbert basis needs a pointed cone");
    const std::size_t rank = cone.rank();
    if (rank == 0 || cone.is_zero()) return {};
    // candidates: lattice points of C intersected with (g - C), g the sum of
    // the primitive rays; this region contains the zonotope of the rays and
    // hence every irreducible element
    IVec g(rank, Int(0));
    for (const IVec& r : cone.rays()) g = add(g, r);
    std::vector<AffineIneq> ineqs;
    for (const IVec& a : cone.normals()) ineqs.push_back({a, Int(0)});
    for (const IVec& a : cone.normals()) ineqs.push_back({neg(a), -dot(a, g)});
    PolyhedronVRep box_poly = vrep_from_inequalities(rank, ineqs);
    if (box_poly.empty()) return {};
    IVec lo(rank), hi(rank);
    bool first = true;
    for (const QVec& v : box_poly.points) {
        for (std::size_t i = 0; i < rank; ++i) {
            Int fl, ce;
            mpz_fdiv_q(fl.get_mpz_t(), v[i].get_num_mpz_t(), v[i].get_den_mpz_t());
            mpz_cdiv_q(ce.get_mpz_t(), v[i].get_num_mpz_t(), v[i].get_den_mpz_t());
            if (first || fl < lo[i]) lo[i] = fl;
            if (first || ce > hi[i]) hi[i] = ce;
        }
        first = false;
    }
    std::vector<IVec> cands = lattice_points_in_box(rank, ineqs, lo, hi);
    std::set<IVec> cand_set(cands.begin(), cands.end());
    cand_set.erase(IVec(rank, Int(0)));
    std::vector<IVec> basis;
    for (const IVec& x : cand_set) {
        bool reducible = false;
        for (const IVec& y : cand_set) {
            if (y == x) continue;
            IVec z = sub(x, y);
            if (is_zero(z)) continue;
            if (cand_set.count(z)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    std::sort(basis.begin(), basis.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    return basis;
}

std::vector<IVec> monoid_generators(const Cone& cone) {
    if (cone.is_pointed()) return hilbert_basis(cone);
    const std::size_t rank = cone.rank();
    const std::size_t k = cone.lineality().size();
    const std::size_t d = rank - k;
    IntMat w = lineality_complement_transform(cone.lineality(), rank);
    std::vector<IVec> quot_ineqs;
    for (const IVec& a : cone.normals()) {
        IVec full(rank, Int(0));
        for (std::size_t j = 0; j < rank; ++j)
            for (std::size_t i = 0; i < rank; ++i) full[j] += a[i] * w.at(i, j);
        quot_ineqs.push_back(IVec(full.begin() + k, full.end()));
    }
    Cone quotient = Cone::from_inequalities(d, quot_ineqs);
    std::vector<IVec> gens;
    for (const IVec& h : hilbert_basis(quotient)) {
        IVec x(rank, Int(0));
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < d; ++j) x[i] += w.at(i, k + j) * h[j];
        gens.push_back(x);
    }
    for (const IVec& l : cone.lineality()) {
        gens.push_back(l);
        gens.push_back(neg(l));
    }
    std::sort(gens.begin(), gens.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    return gens;
}

}  // namespace tvar
