#include "tvar/snf.hpp"

#include <algorithm>
#include <functional>

namespace tvar {

namespace {

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row_a += c * row_b
void addmul_row(IntMat& m, std::size_t a, std::size_t b, const Int& c) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += c * m.at(b, j);
}

// col_a += c * col_b
void addmul_col(IntMat& m, std::size_t a, std::size_t b, const Int& c) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) += c * m.at(i, b);
}

void negate_row(IntMat& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

// floor division quotient
Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

namespace {

// rows (a, b) <- unimodular 2x2 combination making entry (b, col) zero and
// entry (a, col) the gcd
void xgcd_rows(IntMat& s, IntMat& u, std::size_t a, std::size_t b, std::size_t col) {
    const Int &x = s.at(a, col), &y = s.at(b, col);
    if (y == 0) return;
    if (x == 0) {
        swap_rows(s, a, b);
        swap_rows(u, a, b);
        return;
    }
    if (y % x == 0) {  // plain reduction keeps the pivot row intact
        Int q0 = -(y / x);
        addmul_row(s, b, a, q0);
        addmul_row(u, b, a, q0);
        return;
    }
    Int g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    Int xd = x / g, yd = y / g;
    for (std::size_t j = 0; j < s.cols(); ++j) {
        Int sa = s.at(a, j), sb = s.at(b, j);
        s.at(a, j) = p * sa + q * sb;
        s.at(b, j) = -yd * sa + xd * sb;
    }
    for (std::size_t j = 0; j < u.cols(); ++j) {
        Int ua = u.at(a, j), ub = u.at(b, j);
        u.at(a, j) = p * ua + q * ub;
        u.at(b, j) = -yd * ua + xd * ub;
    }
}

// cols (a, b) <- unimodular combination making entry (row, b) zero
void xgcd_cols(IntMat& s, IntMat& v, std::size_t a, std::size_t b, std::size_t row) {
    const Int &x = s.at(row, a), &y = s.at(row, b);
    if (y == 0) return;
    if (x == 0) {
        swap_cols(s, a, b);
        swap_cols(v, a, b);
        return;
    }
    if (y % x == 0) {  // plain reduction keeps the pivot column intact
        Int q0 = -(y / x);
        addmul_col(s, b, a, q0);
        addmul_col(v, b, a, q0);
        return;
    }
    Int g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    Int xd = x / g, yd = y / g;
    for (std::size_t i = 0; i < s.rows(); ++i) {
        Int sa = s.at(i, a), sb = s.at(i, b);
        s.at(i, a) = p * sa + q * sb;
        s.at(i, b) = -yd * sa + xd * sb;
    }
    for (std::size_t i = 0; i < v.rows(); ++i) {
        Int va = v.at(i, a), vb = v.at(i, b);
        v.at(i, a) = p * va + q * vb;
        v.at(i, b) = -yd * va + xd * vb;
    }
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMat& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    IntMat s = a;
    IntMat u = IntMat::identity(rows);
    IntMat v = IntMat::identity(cols);

    const std::size_t k = std::min(rows, cols);
    for (std::size_t t = 0; t < k; ++t) {
        while (true) {
            // move a minimal-magnitude entry of the trailing block to (t, t)
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (s.at(i, j) == 0) continue;
                    if (!found || abs(s.at(i, j)) < abs(s.at(pi, pj))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) return {u, s, v};
            swap_rows(s, t, pi);
            swap_rows(u, t, pi);
            swap_cols(s, t, pj);
            swap_cols(v, t, pj);

            // clear the cross; the column may get dirtied by the column
            // operations, in which case the pivot shrank to a proper divisor
            // and we repeat, so this terminates within a divisor chain
            for (std::size_t i = t + 1; i < rows; ++i) xgcd_rows(s, u, t, i, t);
            for (std::size_t j = t + 1; j < cols; ++j) xgcd_cols(s, v, t, j, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (s.at(i, t) != 0) clean = false;
            if (!clean) continue;

            // pull a non-divisible trailing entry into row t; the next pass
            // replaces the pivot by a proper divisor of itself
            bool divides = true;
            if (s.at(t, t) != 1 && s.at(t, t) != -1) {
                for (std::size_t i = t + 1; i < rows && divides; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (s.at(i, j) % s.at(t, t) != 0) {
                            addmul_row(s, t, i, Int(1));
                            addmul_row(u, t, i, Int(1));
                            divides = false;
                            break;
                        }
            }
            if (divides) break;
        }

        if (s.at(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
    }
    return {u, s, v};
}

IVec invariant_factors(const IntMat& a) {
    SmithDecomposition d = smith_normal_form(a);
    std::size_t k = std::min(a.rows(), a.cols());
    IVec f(k);
    for (std::size_t i = 0; i < k; ++i) f[i] = d.s.at(i, i);
    return f;
}

IntMat hermite_rows(const IntMat& a) {
    IntMat h = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        // gcd elimination within column c, rows >= r
        while (true) {
            std::size_t p = h.rows();
            for (std::size_t i = r; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                if (p == h.rows() || abs(h.at(i, c)) < abs(h.at(p, c))) p = i;
            }
            if (p == h.rows()) break;
            swap_rows(h, r, p);
            bool clean = true;
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = fdiv(h.at(i, c), h.at(r, c));
                addmul_row(h, i, r, -q);
                if (h.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) negate_row(h, r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = fdiv(h.at(i, c), h.at(r, c));
            addmul_row(h, i, r, -q);
        }
        ++r;
    }
    // drop zero rows
    std::vector<IVec> keep;
    for (std::size_t i = 0; i < r; ++i) keep.push_back(h.row_vec(i));
    return IntMat::from_rows(keep, a.cols());
}

IntMat integer_kernel(const IntMat& a) {
    SmithDecomposition d = smith_normal_form(a);
    std::size_t r = 0;
    std::size_t k = std::min(a.rows(), a.cols());
    while (r < k && d.s.at(r, r) != 0) ++r;
    IntMat kernel(a.cols(), a.cols() - r);
    for (std::size_t j = r; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) kernel.at(i, j - r) = d.v.at(i, j);
    return kernel;
}

std::optional<IntSolution> solve_integer(const IntMat& a, const IVec& b) {
    if (b.size() != a.rows()) fail("ShapeError", "rhs length mismatch");
    SmithDecomposition d = smith_normal_form(a);
    IVec ub = d.u.apply(b);
    std::size_t k = std::min(a.rows(), a.cols());
    std::size_t r = 0;
    while (r < k && d.s.at(r, r) != 0) ++r;
    IVec y(a.cols(), Int(0));
    for (std::size_t i = 0; i < r; ++i) {
        if (ub[i] % d.s.at(i, i) != 0) return std::nullopt;
        y[i] = ub[i] / d.s.at(i, i);
    }
    for (std::size_t i = r; i < a.rows(); ++i)
        if (ub[i] != 0) return std::nullopt;
    IntSolution sol;
    sol.particular = d.v.apply(y);
    sol.kernel = IntMat(a.cols(), a.cols() - r);
    for (std::size_t j = r; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) sol.kernel.at(i, j - r) = d.v.at(i, j);
    return sol;
}

std::optional<IntMat> right_inverse(const IntMat& a) {
    SmithDecomposition d = smith_normal_form(a);
    if (a.rows() > a.cols()) return std::nullopt;
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (d.s.at(i, i) != 1) return std::nullopt;
    IntMat e(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) e.at(i, i) = 1;
    return d.v * e * d.u;
}

namespace {

struct CosetSearch {
    const IntMat& basis;                 // row HNF, k x D
    std::vector<std::size_t> pivot_col;  // per row
    IVec best;
    Int best_norm;
    long budget;  // node cap keeps the search bounded; output stays deterministic

    void consider(const IVec& candidate) {
        Int n = 0;
        for (const Int& e : candidate) n += abs(e);
        if (n < best_norm || (n == best_norm && lex_less(candidate, best))) {
            best = candidate;
            best_norm = n;
        }
    }

    // depth-first over coefficients of the HNF rows
    void search(std::size_t row, const IVec& current) {
        if (--budget < 0) return;
        if (row == basis.rows()) {
            consider(current);
            return;
        }
        const Int& d = basis.at(row, pivot_col[row]);
        const Int& cur = current[pivot_col[row]];
        // |cur + c*d| <= best_norm gives the coefficient window; fan outwards
        // from the centered value so good candidates come early
        Int lo, hi;
        mpz_cdiv_q(lo.get_mpz_t(), Int(-best_norm - cur).get_mpz_t(), d.get_mpz_t());
        mpz_fdiv_q(hi.get_mpz_t(), Int(best_norm - cur).get_mpz_t(), d.get_mpz_t());
        Int center = fdiv(-cur + d / 2, d);
        Int up = center, down = center - 1;
        while (true) {
            Int c;
            if (up <= hi && (down < lo || up - center <= center - down)) {
                c = up;
                ++up;
            } else if (down >= lo) {
                c = down;
                --down;
            } else {
                break;
            }
            Int coord = cur + c * d;
            if (abs(coord) > best_norm) continue;  // window shrank meanwhile
            IVec next = current;
            if (c != 0)
                for (std::size_t j = pivot_col[row]; j < next.size(); ++j)
                    next[j] += c * basis.at(row, j);
            Int partial = 0;
            for (std::size_t t = 0; t <= row; ++t) partial += abs(next[pivot_col[t]]);
            if (partial <= best_norm) search(row + 1, next);
            if (budget < 0) return;
        }
    }
};

}  // namespace

IVec minimize_over_coset(const IVec& x, const IntMat& lattice) {
    if (lattice.cols() == 0) return x;
    IntMat basis = hermite_rows(lattice.transpose());
    if (basis.rows() == 0) return x;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::size_t c = 0;
        while (basis.at(i, c) == 0) ++c;
        pivots.push_back(c);
    }
    // greedy pre-reduction brings the start point near the origin, which
    // keeps the search window small
    IVec start = x;
    for (std::size_t pass = 0; pass < 2; ++pass)
        for (std::size_t i = basis.rows(); i-- > 0;) {
            const Int& d = basis.at(i, pivots[i]);
            Int q = fdiv(start[pivots[i]] + d / 2, d);
            if (q != 0)
                for (std::size_t j = pivots[i]; j < start.size(); ++j)
                    start[j] -= q * basis.at(i, j);
        }
    CosetSearch cs{basis, pivots, start, Int(0), 200'000};
    for (const Int& e : start) cs.best_norm += abs(e);
    cs.consider(x);  // the raw point stays a candidate
    cs.search(0, start);
    return cs.best;
}

}  // namespace tvar
