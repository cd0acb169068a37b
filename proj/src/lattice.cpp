#include "tvar/lattice.hpp"

namespace tvar {

LatticeInvolution LatticeInvolution::checked(const IntMat& m) {
    if (!m.is_square()) fail("NotInvolution", "involution matrix must be square");
    if (!(m * m).is_identity()) fail("NotInvolution", "matrix does not square to the identity");
    return LatticeInvolution{m};
}

bool is_saturated_embedding(const IntMat& f) {
    if (f.cols() > f.rows()) return false;
    IVec d = invariant_factors(f);
    if (d.size() != f.cols()) return false;
    for (const Int& x : d)
        if (x != 1) return false;
    return true;
}

namespace {

void require_saturated(const IntMat& f) {
    if (!is_saturated_embedding(f))
        fail("NotSaturated", "map is not an injective embedding with torsion-free cokernel");
}

}  // namespace

IntMat cokernel_projection(const IntMat& f) {
    require_saturated(f);
    SmithDecomposition d = smith_normal_form(f);
    const std::size_t q = f.rows() - f.cols();
    IntMat p(q, f.rows());
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < f.rows(); ++j) p.at(i, j) = d.u.at(f.cols() + i, j);
    return hermite_rows(p);
}

namespace {

// Row-major vectorization helpers for matrix equations on s (n x np).
IVec vectorize(const IntMat& m) {
    IVec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

IntMat devectorize(const IVec& v, std::size_t rows, std::size_t cols) {
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
    return m;
}

// Coefficient matrix of s -> s*F acting on vec(s), s of shape n x np.
// vec(s*F)_{i,k} = sum_j s_{i,j} F_{j,k}.
IntMat right_mult_operator(const IntMat& f, std::size_t n) {
    const std::size_t np = f.rows(), m = f.cols();
    IntMat op(n * m, n * np);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t j = 0; j < np; ++j) op.at(i * m + k, i * np + j) = f.at(j, k);
    return op;
}

// Coefficient matrix of s -> A*s acting on vec(s), s of shape n x np.
IntMat left_mult_operator(const IntMat& a, std::size_t np) {
    const std::size_t n = a.cols(), r = a.rows();
    IntMat op(r * np, n * np);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < np; ++j)
            for (std::size_t k = 0; k < n; ++k) op.at(i * np + j, k * np + j) = a.at(i, k);
    return op;
}

IntMat stack_rows(const IntMat& a, const IntMat& b) {
    IntMat m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
    return m;
}

IntMat canonical_solution(const IntSolution& sol, std::size_t rows, std::size_t cols) {
    IVec best = minimize_over_coset(sol.particular, sol.kernel);
    return devectorize(best, rows, cols);
}

}  // namespace

IntMat cosection(const IntMat& f) {
    require_saturated(f);
    const std::size_t n = f.cols(), np = f.rows();
    IntMat op = right_mult_operator(f, n);
    IVec rhs = vectorize(IntMat::identity(n));
    auto sol = solve_integer(op, rhs);
    if (!sol) fail("NotSaturated", "no integral left inverse exists");
    return canonical_solution(*sol, n, np);
}

std::optional<IntMat> equivariant_cosection(const IntMat& f, const LatticeInvolution& tau_dom,
                                            const LatticeInvolution& tau_cod) {
    require_saturated(f);
    if (tau_dom.rank() != f.cols() || tau_cod.rank() != f.rows())
        fail("RankMismatch", "involution ranks do not match the embedding");
    if (!(f * tau_dom.map == tau_cod.map * f))
        fail("NotEquivariantEmbedding", "F does not intertwine the involutions");
    const std::size_t n = f.cols(), np = f.rows();
    // unknown s (n x np): s*F = id and tau_dom*s - s*tau_cod = 0
    IntMat eq1 = right_mult_operator(f, n);
    IntMat eq2 = left_mult_operator(tau_dom.map, np) - right_mult_operator(tau_cod.map, n);
    IntMat op = stack_rows(eq1, eq2);
    IVec rhs = vectorize(IntMat::identity(n));
    rhs.resize(op.rows(), Int(0));
    auto sol = solve_integer(op, rhs);
    if (!sol) return std::nullopt;
    return canonical_solution(*sol, n, np);
}

InvolutionType classify_involution(const LatticeInvolution& tau) {
    const std::size_t n = tau.rank();
    IntMat id = IntMat::identity(n);
    IntMat plus = integer_kernel(tau.map - id);   // fixed sublattice basis (columns)
    IntMat minus = integer_kernel(tau.map + id);  // anti-fixed sublattice basis
    const std::size_t rp = plus.cols(), rm = minus.cols();
    // M / (M+ direct-sum M-) is 2-torsion; its F2-dimension counts swap factors.
    IntMat joint(n, rp + rm);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < rp; ++j) joint.at(i, j) = plus.at(i, j);
        for (std::size_t j = 0; j < rm; ++j) joint.at(i, rp + j) = minus.at(i, j);
    }
    IVec factors = invariant_factors(joint);
    std::size_t n2 = 0;
    for (const Int& d : factors) {
        if (d == 2) ++n2;
        else if (d != 1 && d != 0)
            fail("NotInvolution", "eigenlattice quotient has unexpected torsion");
    }
    InvolutionType type;
    type.n2 = n2;
    type.n0 = rp - n2;
    type.n1 = rm - n2;
    return type;
}

IntMat complement_section(const IntMat& f, const IntMat& s, const IntMat& p) {
    auto t0 = right_inverse(p);
    if (!t0) fail("NotSaturated", "projection admits no integral section");
    IntMat id = IntMat::identity(f.rows());
    return (id - f * s) * (*t0);
}

}  // namespace tvar
