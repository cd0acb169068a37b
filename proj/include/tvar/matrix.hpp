#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "tvar/numeric.hpp"

namespace tvar {

// Dense integer matrix, row-major. A LatticeMap with r rows and c columns is
// a homomorphism from a rank-c lattice to a rank-r lattice.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
    IntMat(std::initializer_list<std::initializer_list<long>> data);

    static IntMat identity(std::size_t n);
    static IntMat zero(std::size_t rows, std::size_t cols);
    static IntMat from_rows(const std::vector<IVec>& rows, std::size_t cols);
    static IntMat column(const IVec& v);
    static IntMat row(const IVec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IVec row_vec(std::size_t i) const;
    IVec col_vec(std::size_t j) const;
    std::vector<IVec> row_list() const;

    IntMat transpose() const;
    IntMat operator*(const IntMat& rhs) const;
    IntMat operator+(const IntMat& rhs) const;
    IntMat operator-(const IntMat& rhs) const;
    IntMat operator-() const;
    bool operator==(const IntMat& rhs) const = default;

    IVec apply(const IVec& v) const;   // matrix * column vector
    QVec apply(const QVec& v) const;

    bool is_identity() const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    // Sum of absolute values of all entries.
    Int l1_norm() const;

    // Row-major entry vector comparison.
    bool lex_less_than(const IntMat& rhs) const;

    std::string to_string() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

using LatticeMap = IntMat;

// Rational matrix, used for exact linear algebra on cones and divisors.
class RatMat {
  public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}
    static RatMat from_int(const IntMat& m);
    static RatMat from_rows(const std::vector<QVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    QVec row_vec(std::size_t i) const;

    std::size_t rank() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

// Solves A x = b over the rationals. Returns false if inconsistent;
// otherwise writes one solution into x.
bool solve_rational(const RatMat& a, const QVec& b, QVec& x);

// Basis of the rational right kernel {x : A x = 0}, as primitive integer
// vectors (the kernel of an integer matrix is defined over Z).
std::vector<IVec> rational_kernel_basis(const RatMat& a);

std::size_t rank_of(const IntMat& m);

}  // namespace tvar
