#include "tvar/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tvar {

void fail(const std::string& code, const std::string& message) {
    throw Error{code, message};
}

Int content(const IVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IVec neg(const IVec& a) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

QVec to_rational(const IVec& v) {
    QVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

IVec to_integer(const QVec& v) {
    IVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) fail("NotIntegral", "vector entry " + to_string(v[i]) + " is not an integer");
        r[i] = v[i].get_num();
    }
    return r;
}

IVec primitive(const QVec& v) {
    Int den = 1;
    for (const Rat& q : v) den = lcm(den, q.get_den());
    IVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].get_num() * (den / v[i].get_den());
    return primitive(w);
}

IVec primitive(const IVec& v) {
    Int g = content(v);
    if (g == 0) return v;
    IVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] / g;
    return w;
}

bool lex_less(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool lex_less(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << q.get_num();
    if (q.get_den() != 1) os << "/" << q.get_den();
    return os.str();
}

std::string to_string(const IVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string to_string(const QVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << to_string(v[i]);
    }
    os << ")";
    return os.str();
}

Rat parse_rational(const std::string& text) {
    if (text.empty()) fail("ParseError", "empty rational literal");
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(Int(text));
        }
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) fail("ParseError", "zero denominator in '" + text + "'");
        Rat q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        fail("ParseError", "malformed rational '" + text + "'");
    }
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> data) {
    rows_ = data.size();
    cols_ = rows_ ? data.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : data) {
        if (row.size() != cols_) fail("ShapeError", "ragged initializer");
        for (long x : row) entries_.emplace_back(x);
    }
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::zero(std::size_t rows, std::size_t cols) { return IntMat(rows, cols); }

IntMat IntMat::from_rows(const std::vector<IVec>& rows, std::size_t cols) {
    IntMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail("ShapeError", "row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::column(const IVec& v) {
    IntMat m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

IntMat IntMat::row(const IVec& v) {
    IntMat m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
    return m;
}

IVec IntMat::row_vec(std::size_t i) const {
    IVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

IVec IntMat::col_vec(std::size_t j) const {
    IVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<IVec> IntMat::row_list() const {
    std::vector<IVec> rows;
    rows.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) rows.push_back(row_vec(i));
    return rows;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    if (cols_ != rhs.rows_) fail("ShapeError", "inner ranks disagree in composition");
    IntMat p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return p;
}

IntMat IntMat::operator+(const IntMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail("ShapeError", "shape mismatch");
    IntMat m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] + rhs.entries_[i];
    return m;
}

IntMat IntMat::operator-(const IntMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail("ShapeError", "shape mismatch");
    IntMat m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] - rhs.entries_[i];
    return m;
}

IntMat IntMat::operator-() const {
    IntMat m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = -entries_[i];
    return m;
}

IVec IntMat::apply(const IVec& v) const {
    if (v.size() != cols_) fail("ShapeError", "vector length mismatch");
    IVec r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

QVec IntMat::apply(const QVec& v) const {
    if (v.size() != cols_) fail("ShapeError", "vector length mismatch");
    QVec r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += Rat(at(i, j)) * v[j];
    return r;
}

bool IntMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMat::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return x == 0; });
}

Int IntMat::l1_norm() const {
    Int s = 0;
    for (const Int& x : entries_) s += abs(x);
    return s;
}

bool IntMat::lex_less_than(const IntMat& rhs) const {
    return std::lexicographical_compare(entries_.begin(), entries_.end(), rhs.entries_.begin(),
                                        rhs.entries_.end());
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
    }
    os << "]";
    return os.str();
}

RatMat RatMat::from_int(const IntMat& m) {
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rat(m.at(i, j));
    return r;
}

RatMat RatMat::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
    RatMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail("ShapeError", "row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

QVec RatMat::row_vec(std::size_t i) const {
    QVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

namespace {

// Gauss-Jordan elimination; returns pivot column per eliminated row.
std::vector<std::size_t> reduce(RatMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t RatMat::rank() const {
    RatMat copy = *this;
    return reduce(copy).size();
}

bool solve_rational(const RatMat& a, const QVec& b, QVec& x) {
    RatMat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = reduce(aug);
    for (std::size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] == a.cols()) return false;
    x.assign(a.cols(), Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, a.cols());
    return true;
}

std::vector<IVec> rational_kernel_basis(const RatMat& a) {
    RatMat m = a;
    std::vector<std::size_t> pivots = reduce(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<IVec> basis;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c]) continue;
        QVec v(a.cols(), Rat(0));
        v[c] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(k, c);
        basis.push_back(primitive(v));
    }
    return basis;
}

std::size_t rank_of(const IntMat& m) { return RatMat::from_int(m).rank(); }

}  // namespace tvar
