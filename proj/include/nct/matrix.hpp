#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "nct/rational.hpp"

namespace nct {

/**
 * Dense rational matrix, row-major. All arithmetic is exact; dimension
 * mismatches are hard errors, never broadcasts.
 */
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return entries_.empty(); }

    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    RatMatrix transpose() const;
    RatMatrix operator-() const;
    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& s, RatMatrix m);

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    bool is_zero() const;
    bool is_identity() const;
    bool is_integer() const;
    bool is_antisymmetric() const;

    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);

    RatMatrix row(std::size_t i) const { return block(i, 0, 1, cols_); }
    RatMatrix col(std::size_t j) const { return block(0, j, rows_, 1); }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// Antisymmetric n x n rational matrix; the zero diagonal is implied.
class SkewMatrix {
public:
    explicit SkewMatrix(RatMatrix inner);
    static SkewMatrix zero(std::size_t n) { return SkewMatrix(RatMatrix(n, n)); }

    std::size_t n() const { return inner_.rows(); }
    const RatMatrix& inner() const { return inner_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return inner_(i, j); }

    /// Set the (i, j) entry and its mirror; i == j requires v == 0.
    void set(std::size_t i, std::size_t j, const Rational& v);

    /// Principal submatrix on the index subset encoded as a bitmask
    /// (bit j set = row/column j+1 kept).
    SkewMatrix restrict_to(std::uint32_t mask) const;

    bool is_integer() const { return inner_.is_integer(); }
    friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) {
        return a.inner_ == b.inner_;
    }

private:
    RatMatrix inner_;
};

} // namespace nct
