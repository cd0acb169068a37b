#include "tvar/polyhedron.hpp"

#include <algorithm>
#include <sstream>

namespace tvar {

namespace {

// homogenization: polyhedron P in rank d becomes the cone over P x {1}
// in rank d+1, last coordinate the homogenizing one.

IVec homogenize_point(const QVec& p) {
    Int den = 1;
    for (const Rat& q : p) den = lcm(den, q.get_den());
    IVec v(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = p[i].get_num() * (den / p[i].get_den());
    v[p.size()] = den;
    return v;
}

IVec homogenize_ray(const IVec& r) {
    IVec v = r;
    v.push_back(0);
    return v;
}

QVec dehomogenize(const IVec& v) {
    std::size_t d = v.size() - 1;
    QVec p(d);
    for (std::size_t i = 0; i < d; ++i) {
        p[i] = Rat(v[i], v[d]);
        p[i].canonicalize();
    }
    return p;
}

PolyhedronVRep vrep_from_cone_parts(std::size_t rank, const GeneratorRep& rep) {
    PolyhedronVRep out;
    out.rank = rank;
    for (const IVec& r : rep.rays) {
        if (r[rank] > 0) {
            out.points.push_back(dehomogenize(r));
        } else if (r[rank] == 0) {
            out.rays.push_back(IVec(r.begin(), r.end() - 1));
        }
        // rays with negative last coordinate cannot occur: t >= 0 is imposed
    }
    for (const IVec& l : rep.lineality) {
        // lineality of the homogenization has zero last coordinate
        out.lineality.push_back(IVec(l.begin(), l.end() - 1));
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    std::sort(out.rays.begin(), out.rays.end(),
              [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    return out;
}

}  // namespace

PolyhedronVRep vrep_from_inequalities(std::size_t rank, const std::vector<AffineIneq>& ineqs) {
    std::vector<IVec> rows;
    for (const AffineIneq& q : ineqs) {
        IVec row = q.normal;
        row.push_back(-q.rhs);
        rows.push_back(row);
    }
    IVec last(rank + 1, Int(0));
    last[rank] = 1;
    rows.push_back(last);
    GeneratorRep rep = extreme_rays_of_h(rank + 1, rows);
    // lineality with nonzero last coordinate would mean the homogenizing
    // constraint t >= 0 was violated; extreme_rays_of_h already forbids it
    for (const IVec& l : rep.lineality)
        if (l[rank] != 0) fail("Internal", "homogenization lineality leak");
    return vrep_from_cone_parts(rank, rep);
}

bool TailedPolyhedron::operator==(const TailedPolyhedron& other) const {
    return rank == other.rank && vertices == other.vertices && tail == other.tail;
}

bool TailedPolyhedron::contains(const QVec& x) const {
    for (const AffineIneq& q : inequalities())
        if (dot(q.normal, x) < Rat(q.rhs)) return false;
    return true;
}

std::string TailedPolyhedron::to_string() const {
    std::ostringstream os;
    os << "conv{";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) os << ",";
        os << tvar::to_string(vertices[i]);
    }
    os << "}+" << tail.to_string();
    return os.str();
}

std::vector<AffineIneq> TailedPolyhedron::inequalities() const {
    // facets of the homogenization, restricted back
    std::vector<IVec> gens;
    for (const QVec& v : vertices) gens.push_back(homogenize_point(v));
    for (const IVec& r : tail.rays()) gens.push_back(homogenize_ray(r));
    Cone hom = Cone::from_generators(rank + 1, gens);
    std::vector<AffineIneq> out;
    for (const IVec& a : hom.normals()) {
        IVec normal(a.begin(), a.end() - 1);
        // <a,(x,1)> >= 0  <=>  <normal, x> >= -a_last
        if (is_zero(normal)) continue;  // the t >= 0 facet carries no x-constraint
        out.push_back({normal, -a[rank]});
    }
    return out;
}

TailedPolyhedron TailedPolyhedron::translate(const QVec& shift) const {
    TailedPolyhedron out = *this;
    for (QVec& v : out.vertices) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift[i];
    }
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    return out;
}

TailedPolyhedron tail_decompose(std::size_t rank, const std::vector<QVec>& points,
                                const std::vector<IVec>& rays) {
    if (points.empty()) fail("EmptyInput", "a polyhedron needs at least one point");
    std::vector<IVec> gens;
    for (const QVec& p : points) {
        if (p.size() != rank) fail("RankMismatch", "point has wrong length");
        gens.push_back(homogenize_point(p));
    }
    for (const IVec& r : rays) {
        if (r.size() != rank) fail("RankMismatch", "ray has wrong length");
        gens.push_back(homogenize_ray(r));
    }
    Cone hom = Cone::from_generators(rank + 1, gens);
    if (!hom.lineality().empty()) fail("NotPointed", "recession cone has a lineality space");
    TailedPolyhedron out;
    out.rank = rank;
    std::vector<IVec> tail_gens;
    for (const IVec& r : hom.rays()) {
        if (r[rank] > 0)
            out.vertices.push_back(dehomogenize(r));
        else
            tail_gens.push_back(IVec(r.begin(), r.end() - 1));
    }
    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const QVec& a, const QVec& b) { return lex_less(a, b); });
    out.tail = Cone::from_generators(rank, tail_gens);
    if (out.vertices.empty()) fail("Internal", "homogenization lost all vertices");
    return out;
}

TailedPolyhedron minkowski_sum(const TailedPolyhedron& p, const TailedPolyhedron& q) {
    if (p.rank != q.rank) fail("RankMismatch", "polyhedron ranks disagree");
    std::vector<QVec> sums;
    for (const QVec& a : p.vertices)
        for (const QVec& b : q.vertices) {
            QVec s(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
            sums.push_back(s);
        }
    std::vector<IVec> rays = p.tail.rays();
    for (const IVec& r : q.tail.rays()) rays.push_back(r);
    return tail_decompose(p.rank, sums, rays);
}

Rat support_eval(const TailedPolyhedron& delta, const QVec& m) {
    for (const IVec& g : delta.tail.rays())
        if (dot(m, to_rational(g)) < 0)
            fail("Unbounded", "support function is -infinity outside the dual tail");
    bool first = true;
    Rat best = 0;
    for (const QVec& v : delta.vertices) {
        Rat val = dot(m, v);
        if (first || val < best) {
            best = val;
            first = false;
        }
    }
    return best;
}

Rat support_eval(const TailedPolyhedron& delta, const IVec& m) {
    return support_eval(delta, to_rational(m));
}

std::vector<Cone> normal_quasifan_cones(const TailedPolyhedron& delta) {
    std::vector<Cone> cones;
    for (std::size_t i = 0; i < delta.vertices.size(); ++i) {
        std::vector<IVec> ineqs;
        for (const IVec& g : delta.tail.rays()) ineqs.push_back(g);
        for (std::size_t j = 0; j < delta.vertices.size(); ++j) {
            if (j == i) continue;
            QVec diff(delta.rank);
            for (std::size_t k = 0; k < delta.rank; ++k)
                diff[k] = delta.vertices[j][k] - delta.vertices[i][k];
            ineqs.push_back(primitive(diff));
        }
        cones.push_back(Cone::from_inequalities(delta.rank, ineqs));
    }
    std::sort(cones.begin(), cones.end(),
              [](const Cone& a, const Cone& b) { return a.lex_less_than(b); });
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    return cones;
}

std::vector<IVec> lattice_points_in_box(std::size_t rank, const std::vector<AffineIneq>& ineqs,
                                        const IVec& lo, const IVec& hi) {
    std::vector<IVec> found;
    IVec x = lo;
    if (rank == 0) {
        // rank-0 space has the single empty point
        bool ok = true;
        for (const AffineIneq& q : ineqs)
            if (-q.rhs < 0) ok = false;
        if (ok) found.push_back({});
        return found;
    }
    for (std::size_t i = 0; i < rank; ++i)
        if (lo[i] > hi[i]) return found;
    while (true) {
        bool ok = true;
        for (const AffineIneq& q : ineqs)
            if (dot(q.normal, x) < q.rhs) {
                ok = false;
                break;
            }
        if (ok) found.push_back(x);
        std::size_t i = 0;
        while (i < rank) {
            if (x[i] < hi[i]) {
                ++x[i];
                break;
            }
            x[i] = lo[i];
            ++i;
        }
        if (i == rank) break;
    }
    std::sort(found.begin(), found.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    return found;
}

}  // namespace tvar
