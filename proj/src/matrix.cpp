#include "nct/matrix.hpp"

#include <utility>

namespace nct {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count does not match rows*cols");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged initializer rows");
        for (const auto& v : r) entries_.push_back(v);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
    return m;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix addition");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix subtraction");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                c(i, j) += aik * bkj;
            }
        }
    return c;
}

RatMatrix operator*(const Rational& s, RatMatrix m) {
    for (auto& v : m.entries_) v *= s;
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& v : entries_)
        if (!v.is_zero()) return false;
    return true;
}

bool RatMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
}

bool RatMatrix::is_integer() const {
    for (const auto& v : entries_)
        if (!v.is_integer()) return false;
    return true;
}

bool RatMatrix::is_antisymmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    RatMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw DimensionMismatch("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

SkewMatrix::SkewMatrix(RatMatrix inner) : inner_(std::move(inner)) {
    if (!inner_.is_antisymmetric())
        throw NotAntisymmetric("matrix is not antisymmetric");
}

void SkewMatrix::set(std::size_t i, std::size_t j, const Rational& v) {
    if (i >= n() || j >= n()) throw IndexOutOfRange("skew entry out of range");
    if (i == j && !v.is_zero()) throw NotAntisymmetric("nonzero diagonal entry");
    inner_(i, j) = v;
    if (i != j) inner_(j, i) = -v;
}

SkewMatrix SkewMatrix::restrict_to(std::uint32_t mask) const {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < n(); ++j)
        if (mask & (1u << j)) idx.push_back(j);
    RatMatrix sub(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = inner_(idx[i], idx[j]);
    return SkewMatrix(std::move(sub));
}

} // namespace nct
