#include "nct/linalg.hpp"

#include <utility>

namespace nct {

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
        Rational inv_p = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv_p;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Rational det(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    std::size_t n = m.rows();
    RatMatrix a = m;
    Rational d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            d = -d;
        }
        d *= a(col, col);
        Rational inv_p = Rational(1) / a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            Rational f = a(i, col) * inv_p;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return d;
}

RatMatrix invert(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, RatMatrix::identity(n));
    auto pivots = rref(aug);
    if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
        throw SingularMatrix("matrix is singular");
    return aug.block(0, n, n, n);
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    return rref(a).size();
}

std::vector<RatMatrix> nullspace(const RatMatrix& m) {
    RatMatrix a = m;
    auto pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RatMatrix> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RatMatrix v(m.cols(), 1);
        v(free_col, 0) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r], 0) = -a(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational pfaffian(const SkewMatrix& s) {
    std::size_t n = s.n();
    if (n % 2 != 0) throw OddDimension("pfaffian of odd-dimensional matrix");
    if (n == 0) return 1;
    if (n == 2) return s(0, 1);
    // expand along the first row: Pf(A) = sum_j (-1)^j a_{1j} Pf(A without 1, j)
    Rational acc = 0;
    int sign = 1;
    for (std::size_t j = 1; j < n; ++j, sign = -sign) {
        if (s(0, j).is_zero()) continue;
        std::uint32_t mask = 0;
        for (std::size_t k = 1; k < n; ++k)
            if (k != j) mask |= (1u << k);
        acc += Rational(sign) * s(0, j) * pfaffian(s.restrict_to(mask));
    }
    return acc;
}

RatMatrix symplectic_form(std::size_t p) {
    RatMatrix j(2 * p, 2 * p);
    for (std::size_t i = 0; i < p; ++i) {
        j(i, p + i) = 1;
        j(p + i, i) = -1;
    }
    return j;
}

RatMatrix skew_congruence_factor(const SkewMatrix& theta11) {
    std::size_t dim = theta11.n();
    if (dim % 2 != 0) throw SingularInput("odd-dimensional skew block");
    std::size_t p = dim / 2;

    // Darboux reduction of the form w(x, y) = -x^t theta11 y: build a basis
    // (u_1..u_p, v_1..v_p) with w(u_i, v_j) = delta_ij, all other pairings 0.
    // Pivot rule: u_i is the first unprocessed basis vector, v_i the first
    // partner it pairs with nonzero (lowest index), scaled to pairing 1.
    RatMatrix form = -theta11.inner();
    auto pairing = [&](const RatMatrix& x, const RatMatrix& y) {
        return (x.transpose() * form * y)(0, 0);
    };

    std::vector<RatMatrix> pending;
    for (std::size_t i = 0; i < dim; ++i) {
        RatMatrix e(dim, 1);
        e(i, 0) = 1;
        pending.push_back(std::move(e));
    }
    std::vector<RatMatrix> us, vs;
    while (!pending.empty()) {
        RatMatrix u = pending.front();
        std::size_t partner = pending.size();
        Rational w;
        for (std::size_t j = 1; j < pending.size(); ++j) {
            w = pairing(u, pending[j]);
            if (!w.is_zero()) {
                partner = j;
                break;
            }
        }
        if (partner == pending.size())
            throw SingularInput("skew block is not invertible");
        RatMatrix v = (Rational(1) / w) * pending[partner];
        std::vector<RatMatrix> rest;
        for (std::size_t j = 1; j < pending.size(); ++j) {
            if (j == partner) continue;
            RatMatrix w2 = pending[j];
            w2 -= pairing(u, w2) * v;
            w2 += pairing(v, w2) * u;
            rest.push_back(std::move(w2));
        }
        us.push_back(std::move(u));
        vs.push_back(std::move(v));
        pending = std::move(rest);
    }

    RatMatrix basis(dim, dim);
    for (std::size_t i = 0; i < p; ++i) {
        basis.set_block(0, i, us[i]);
        basis.set_block(0, p + i, vs[i]);
    }
    // basis^t (-theta11) basis = J0, so T = basis^{-1} gives T^t J0 T = -theta11.
    RatMatrix t = invert(basis);
    if (t.transpose() * symplectic_form(p) * t != -theta11.inner())
        throw InternalAssertionFailure("skew congruence factor failed postcondition");
    return t;
}

} // namespace nct
