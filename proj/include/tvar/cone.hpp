#pragma once

#include <vector>

#include "tvar/matrix.hpp"

namespace tvar {

// Output of H-to-V conversion: extreme rays modulo the lineality space.
struct GeneratorRep {
    std::vector<IVec> rays;       // primitive, lex-sorted
    std::vector<IVec> lineality;  // saturated lattice basis, Hermite rows
};

// Extreme rays and lineality of {x in Q^rank : <a, x> >= 0 for all a}.
GeneratorRep extreme_rays_of_h(std::size_t rank, const std::vector<IVec>& ineqs);

// Unimodular W whose first k columns span the saturated lattice generated by
// the k given lineality vectors; x = W y passes to the quotient coordinates.
IntMat lineality_complement_transform(const std::vector<IVec>& lineality, std::size_t rank);

// Rational polyhedral cone, canonicalized on construction: extreme rays are
// primitive and lex-sorted, the lineality basis is in Hermite form, facet
// normals likewise canonical. Lower-dimensional cones carry equality pairs
// +-a among the stored normals.
class Cone {
  public:
    Cone() : rank_(0) {}

    static Cone from_generators(std::size_t rank, const std::vector<IVec>& gens);
    static Cone from_generators_q(std::size_t rank, const std::vector<QVec>& gens);
    static Cone from_inequalities(std::size_t rank, const std::vector<IVec>& ineqs);
    static Cone zero(std::size_t rank) { return from_generators(rank, {}); }
    static Cone full_orthant(std::size_t rank);

    std::size_t rank() const { return rank_; }
    const std::vector<IVec>& rays() const { return rays_; }
    const std::vector<IVec>& lineality() const { return lineality_; }
    // Facet normals plus equality pairs; H-representation of the cone.
    const std::vector<IVec>& normals() const { return normals_; }
    // Normals that are genuine facets (excludes equality pairs).
    std::vector<IVec> facet_normals() const;
    // rays plus +-lineality: a generating set.
    std::vector<IVec> generators() const;

    std::size_t dim() const;
    bool is_pointed() const { return lineality_.empty(); }
    bool is_full_dimensional() const { return dim() == rank_; }
    bool is_zero() const { return rays_.empty() && lineality_.empty(); }

    bool contains(const IVec& x) const;
    bool contains(const QVec& x) const;
    bool contains_relint(const IVec& x) const;
    bool contains_relint(const QVec& x) const;
    bool contains_cone(const Cone& other) const;

    // Sum of extreme rays plus nothing: a relative-interior point.
    IVec relint_point() const;

    bool operator==(const Cone& other) const;
    bool lex_less_than(const Cone& other) const;

    Cone dual() const;
    Cone intersect(const Cone& other) const;
    Cone image(const IntMat& map) const;
    // Minkowski sum of cones.
    Cone sum(const Cone& other) const;

    // All faces (including the cone itself and its minimal face).
    std::vector<Cone> faces() const;

    // True when `other` equals a face of this cone.
    bool has_face(const Cone& other) const;

    std::string to_string() const;

  private:
    std::size_t rank_;
    std::vector<IVec> rays_;
    std::vector<IVec> lineality_;
    std::vector<IVec> normals_;

    static Cone build(std::size_t rank, GeneratorRep gen, std::vector<IVec> normals);
};

// dual_cone per the workbench surface: generators of {u : <u|v> >= 0 on C}.
inline Cone dual_cone(const Cone& c) { return c.dual(); }

}  // namespace tvar
