#include "tvar/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "tvar/snf.hpp"

namespace tvar {

namespace {

std::vector<IVec> dedupe_sorted(std::vector<IVec> vs) {
    std::sort(vs.begin(), vs.end(), [](const IVec& a, const IVec& b) { return lex_less(a, b); });
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::vector<IVec> drop_zero(std::vector<IVec> vs) {
    vs.erase(std::remove_if(vs.begin(), vs.end(), [](const IVec& v) { return is_zero(v); }),
             vs.end());
    return vs;
}

// all size-k index subsets of {0..n-1}
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t pos) {
        if (pos == k) {
            visit(idx);
            return;
        }
        for (std::size_t i = start; i + (k - pos) <= n; ++i) {
            idx[pos] = i;
            rec(i + 1, pos + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

IntMat lineality_complement_transform(const std::vector<IVec>& lineality, std::size_t rank) {
    // unimodular W whose first k columns span the (saturated) lineality
    // lattice; x = W y identifies the quotient with the trailing coordinates
    const std::size_t k = lineality.size();
    IntMat cols(rank, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < rank; ++i) cols.at(i, j) = lineality[j][i];
    SmithDecomposition sd = smith_normal_form(cols);
    auto inv = right_inverse(sd.u);
    if (!inv) fail("Internal", "unimodular matrix failed to invert");
    return *inv;
}

GeneratorRep extreme_rays_of_h(std::size_t rank, const std::vector<IVec>& ineqs_in) {
    std::vector<IVec> ineqs;
    for (const IVec& a : ineqs_in) {
        IVec p = primitive(a);
        if (!is_zero(p)) ineqs.push_back(p);
    }
    ineqs = dedupe_sorted(ineqs);

    GeneratorRep rep;
    if (rank == 0) return rep;

    IntMat a = IntMat::from_rows(ineqs, rank);
    IntMat lin = integer_kernel(a);  // columns
    const std::size_t k = lin.cols();

    if (k == rank) {
        for (std::size_t j = 0; j < k; ++j) rep.lineality.push_back(lin.col_vec(j));
        rep.lineality = hermite_rows(IntMat::from_rows(rep.lineality, rank)).row_list();
        return rep;
    }

    IntMat v_change = IntMat::identity(rank);
    std::vector<IVec> reduced = ineqs;
    std::size_t d = rank;

    if (k > 0) {
        // pass to the quotient by the lineality space: x = W y with the first
        // k columns of W spanning the lineality; inequalities descend to the
        // trailing d-k coordinates
        std::vector<IVec> lin_vecs;
        for (std::size_t j = 0; j < k; ++j) lin_vecs.push_back(lin.col_vec(j));
        v_change = lineality_complement_transform(lin_vecs, rank);
        d = rank - k;
        reduced.clear();
        for (const IVec& ineq : ineqs) {
            IVec full(rank, Int(0));
            for (std::size_t j = 0; j < rank; ++j)
                for (std::size_t i = 0; i < rank; ++i) full[j] += ineq[i] * v_change.at(i, j);
            IVec tail(full.begin() + k, full.end());
            reduced.push_back(tail);
        }
        reduced = dedupe_sorted(drop_zero(reduced));
        for (std::size_t j = 0; j < k; ++j) rep.lineality.push_back(lin.col_vec(j));
        rep.lineality = hermite_rows(IntMat::from_rows(rep.lineality, rank)).row_list();
    }

    // pointed case in dimension d: extreme rays have a zero set of rank d-1
    std::set<IVec> found;
    if (d == 1) {
        for (int sgn : {1, -1}) {
            IVec y{Int(sgn)};
            bool ok = true;
            for (const IVec& a2 : reduced)
                if (a2[0] * sgn < 0) ok = false;
            if (ok) found.insert(y);
        }
    } else {
        for_each_subset(reduced.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
            std::vector<QVec> rows;
            for (std::size_t i : idx) rows.push_back(to_rational(reduced[i]));
            std::vector<IVec> kernel = rational_kernel_basis(RatMat::from_rows(rows, d));
            if (kernel.size() != 1) return;
            for (int sgn : {1, -1}) {
                IVec y = sgn == 1 ? kernel[0] : neg(kernel[0]);
                bool ok = true;
                for (const IVec& a2 : reduced)
                    if (dot(a2, y) < 0) {
                        ok = false;
                        break;
                    }
                if (ok) found.insert(primitive(y));
            }
        });
    }

    for (const IVec& y : found) {
        if (k == 0) {
            rep.rays.push_back(y);
        } else {
            IVec x(rank, Int(0));
            for (std::size_t i = 0; i < rank; ++i)
                for (std::size_t j = 0; j < d; ++j) x[i] += v_change.at(i, k + j) * y[j];
            rep.rays.push_back(primitive(x));
        }
    }
    rep.rays = dedupe_sorted(rep.rays);
    return rep;
}

Cone Cone::build(std::size_t rank, GeneratorRep gen, std::vector<IVec> normals) {
    Cone c;
    c.rank_ = rank;
    c.rays_ = std::move(gen.rays);
    c.lineality_ = std::move(gen.lineality);
    c.normals_ = dedupe_sorted(std::move(normals));
    return c;
}

Cone Cone::from_generators(std::size_t rank, const std::vector<IVec>& gens_in) {
    std::vector<IVec> gens;
    for (const IVec& g : gens_in) {
        if (g.size() != rank) fail("RankMismatch", "generator has wrong length");
        IVec p = primitive(g);
        if (!tvar::is_zero(p)) gens.push_back(p);
    }
    // normals = generators of the dual cone
    GeneratorRep dual_rep = extreme_rays_of_h(rank, gens);
    std::vector<IVec> normals = dual_rep.rays;
    for (const IVec& l : dual_rep.lineality) {
        normals.push_back(l);
        normals.push_back(neg(l));
    }
    GeneratorRep self = extreme_rays_of_h(rank, normals);
    return build(rank, std::move(self), std::move(normals));
}

Cone Cone::from_generators_q(std::size_t rank, const std::vector<QVec>& gens) {
    std::vector<IVec> prim;
    prim.reserve(gens.size());
    for (const QVec& g : gens) prim.push_back(primitive(g));
    return from_generators(rank, prim);
}

Cone Cone::from_inequalities(std::size_t rank, const std::vector<IVec>& ineqs) {
    GeneratorRep self = extreme_rays_of_h(rank, ineqs);
    std::vector<IVec> gens = self.rays;
    for (const IVec& l : self.lineality) {
        gens.push_back(l);
        gens.push_back(neg(l));
    }
    GeneratorRep dual_rep = extreme_rays_of_h(rank, gens);
    std::vector<IVec> normals = dual_rep.rays;
    for (const IVec& l : dual_rep.lineality) {
        normals.push_back(l);
        normals.push_back(neg(l));
    }
    return build(rank, std::move(self), std::move(normals));
}

Cone Cone::full_orthant(std::size_t rank) {
    std::vector<IVec> gens;
    for (std::size_t i = 0; i < rank; ++i) {
        IVec e(rank, Int(0));
        e[i] = 1;
        gens.push_back(e);
    }
    return from_generators(rank, gens);
}

std::vector<IVec> Cone::facet_normals() const {
    std::set<IVec> all(normals_.begin(), normals_.end());
    std::vector<IVec> facets;
    for (const IVec& a : normals_)
        if (!all.count(neg(a))) facets.push_back(a);
    return facets;
}

std::vector<IVec> Cone::generators() const {
    std::vector<IVec> gens = rays_;
    for (const IVec& l : lineality_) {
        gens.push_back(l);
        gens.push_back(neg(l));
    }
    return gens;
}

std::size_t Cone::dim() const {
    std::vector<IVec> gens = rays_;
    gens.insert(gens.end(), lineality_.begin(), lineality_.end());
    if (gens.empty()) return 0;
    return rank_of(IntMat::from_rows(gens, rank_));
}

bool Cone::contains(const IVec& x) const {
    for (const IVec& a : normals_)
        if (dot(a, x) < 0) return false;
    return true;
}

bool Cone::contains(const QVec& x) const {
    for (const IVec& a : normals_)
        if (dot(a, x) < 0) return false;
    return true;
}

bool Cone::contains_relint(const IVec& x) const {
    if (!contains(x)) return false;
    for (const IVec& a : facet_normals())
        if (dot(a, x) == 0) return false;
    return true;
}

bool Cone::contains_relint(const QVec& x) const {
    if (!contains(x)) return false;
    for (const IVec& a : facet_normals())
        if (dot(a, x) == 0) return false;
    return true;
}

bool Cone::contains_cone(const Cone& other) const {
    for (const IVec& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

IVec Cone::relint_point() const {
    IVec p(rank_, Int(0));
    for (const IVec& r : rays_) p = add(p, r);
    return p;
}

bool Cone::operator==(const Cone& other) const {
    return rank_ == other.rank_ && rays_ == other.rays_ && lineality_ == other.lineality_;
}

bool Cone::lex_less_than(const Cone& other) const {
    if (rays_ != other.rays_)
        return std::lexicographical_compare(rays_.begin(), rays_.end(), other.rays_.begin(),
                                            other.rays_.end(), [](const IVec& a, const IVec& b) {
                                                return lex_less(a, b);
                                            });
    return std::lexicographical_compare(lineality_.begin(), lineality_.end(),
                                        other.lineality_.begin(), other.lineality_.end(),
                                        [](const IVec& a, const IVec& b) { return lex_less(a, b); });
}

Cone Cone::dual() const {
    return from_generators(rank_, normals_);
}

Cone Cone::intersect(const Cone& other) const {
    if (rank_ != other.rank_) fail("RankMismatch", "cone ranks disagree");
    std::vector<IVec> ineqs = normals_;
    ineqs.insert(ineqs.end(), other.normals_.begin(), other.normals_.end());
    return from_inequalities(rank_, ineqs);
}

Cone Cone::image(const IntMat& map) const {
    if (map.cols() != rank_) fail("RankMismatch", "map domain disagrees with cone rank");
    std::vector<IVec> gens;
    for (const IVec& g : generators()) gens.push_back(map.apply(g));
    return from_generators(map.rows(), gens);
}

Cone Cone::sum(const Cone& other) const {
    if (rank_ != other.rank_) fail("RankMismatch", "cone ranks disagree");
    std::vector<IVec> gens = generators();
    for (const IVec& g : other.generators()) gens.push_back(g);
    return from_generators(rank_, gens);
}

std::vector<Cone> Cone::faces() const {
    std::vector<IVec> facets = facet_normals();
    if (facets.size() > 20) fail("TooManyFacets", "face enumeration limit exceeded");
    std::vector<Cone> result;
    std::set<std::string> seen;
    for (std::size_t mask = 0; mask < (std::size_t(1) << facets.size()); ++mask) {
        std::vector<IVec> ineqs = normals_;
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (mask & (std::size_t(1) << i)) ineqs.push_back(neg(facets[i]));
        Cone f = from_inequalities(rank_, ineqs);
        std::string key = f.to_string();
        if (seen.insert(key).second) result.push_back(f);
    }
    std::sort(result.begin(), result.end(),
              [](const Cone& a, const Cone& b) { return a.lex_less_than(b); });
    return result;
}

bool Cone::has_face(const Cone& other) const {
    if (!contains_cone(other)) return false;
    // minimal face of this cone containing `other`: cut by every normal
    // vanishing identically on it
    std::vector<IVec> ineqs = normals_;
    for (const IVec& a : normals_) {
        bool vanishes = true;
        for (const IVec& g : other.generators())
            if (dot(a, g) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) ineqs.push_back(neg(a));
    }
    Cone minimal = from_inequalities(rank_, ineqs);
    return minimal == other;
}

std::string Cone::to_string() const {
    std::ostringstream os;
    os << "Cone{";
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        if (i) os << ",";
        os << tvar::to_string(rays_[i]);
    }
    if (!lineality_.empty()) {
        os << "|lin:";
        for (std::size_t i = 0; i < lineality_.size(); ++i) {
            if (i) os << ",";
            os << tvar::to_string(lineality_[i]);
        }
    }
    os << "}";
    return os.str();
}

}  // namespace tvar
