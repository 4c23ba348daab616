#include "nct/heisenberg.hpp"

namespace nct {

namespace {

RatMatrix embed_j(std::size_t p, std::size_t q) {
    std::size_t dim = 2 * p + 2 * q;
    RatMatrix j(dim, dim);
    j.set_block(0, 0, symplectic_form(p));
    for (std::size_t i = 0; i < q; ++i) {
        j(2 * p + i, 2 * p + q + i) = 1;
        j(2 * p + q + i, 2 * p + i) = -1;
    }
    return j;
}

} // namespace

SkewMatrix sigma_blocks(const SkewMatrix& theta, std::size_t p) {
    std::size_t n = theta.n();
    if (2 * p > n) throw DimensionMismatch("sigma_blocks: 2p exceeds n");
    std::size_t q = n - 2 * p;
    RatMatrix th11 = theta.inner().block(0, 0, 2 * p, 2 * p);
    RatMatrix th12 = theta.inner().block(0, 2 * p, 2 * p, q);
    RatMatrix th21 = theta.inner().block(2 * p, 0, q, 2 * p);
    RatMatrix th22 = theta.inner().block(2 * p, 2 * p, q, q);
    RatMatrix inv11;
    try {
        inv11 = invert(th11);
    } catch (const SingularMatrix&) {
        throw SingularBlock("top-left 2p x 2p block of theta is singular");
    }
    RatMatrix out(n, n);
    out.set_block(0, 0, inv11);
    out.set_block(0, 2 * p, -(inv11 * th12));
    out.set_block(2 * p, 0, th21 * inv11);
    out.set_block(2 * p, 2 * p, th22 - th21 * inv11 * th12);
    return SkewMatrix(std::move(out));
}

EmbeddingData build_embedding(const SkewMatrix& theta, std::size_t p, T32Mode mode) {
    std::size_t n = theta.n();
    if (2 * p > n) throw DimensionMismatch("build_embedding: 2p exceeds n");
    std::size_t q = n - 2 * p;

    EmbeddingData e;
    e.n = n;
    e.p = p;
    e.q = q;
    e.theta = theta;

    RatMatrix th11 = theta.inner().block(0, 0, 2 * p, 2 * p);
    RatMatrix th12 = theta.inner().block(0, 2 * p, 2 * p, q);
    RatMatrix th22 = theta.inner().block(2 * p, 2 * p, q, q);

    try {
        e.T11 = skew_congruence_factor(SkewMatrix(th11));
    } catch (const SingularInput&) {
        throw SingularBlock("top-left 2p x 2p block of theta is singular");
    }
    e.T31 = th12.transpose();
    e.T32 = RatMatrix(q, q);
    if (mode == T32Mode::Upper) {
        // the above-diagonal entries of theta22, placed so that
        // T32^t - T32 = theta22 (forced by T^t J T = -theta)
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = i + 1; j < q; ++j) e.T32(j, i) = th22(i, j);
    } else {
        e.T32 = Rational(-1, 2) * th22;
    }
    if (e.T32.transpose() - e.T32 != th22)
        throw InternalAssertionFailure("T32 does not split theta22");

    e.T = RatMatrix(n + q, n);
    e.T.set_block(0, 0, e.T11);
    e.T.set_block(2 * p, 2 * p, RatMatrix::identity(q));
    e.T.set_block(n, 0, e.T31);
    e.T.set_block(n, 2 * p, e.T32);

    e.J = embed_j(p, q);

    e.Tbar = RatMatrix(n + q, n + q);
    e.Tbar.set_block(0, 0, e.T11);
    e.Tbar.set_block(2 * p, 2 * p, RatMatrix::identity(q));
    e.Tbar.set_block(n, 0, e.T31);
    e.Tbar.set_block(n, 2 * p, e.T32);
    e.Tbar.set_block(n, n, RatMatrix::identity(q));

    if (e.T.transpose() * e.J * e.T != -theta.inner())
        throw InternalAssertionFailure("T^t J T != -theta");
    if (det(e.Tbar).is_zero()) throw InternalAssertionFailure("Tbar is singular");

    e.sigma_theta = sigma_blocks(theta, p);
    e.S = dual_embedding(e);
    return e;
}

RatMatrix dual_embedding(const EmbeddingData& e) {
    std::size_t n = e.n, p = e.p, q = e.q;
    RatMatrix w = invert(e.Tbar.transpose() * e.J);

    // The middle q columns must carry 0 x Z^q x 0 to 0 x 0 x Z^q, which is
    // 0 in G; only then may they be dropped.
    RatMatrix mid = w.block(0, 2 * p, n + q, q);
    RatMatrix expected(n + q, q);
    expected.set_block(n, 0, RatMatrix::identity(q));
    if (mid != expected)
        throw InternalAssertionFailure("middle column block of (Tbar^t J)^{-1} is not (0,0,I)");

    RatMatrix s(n + q, n);
    // remaining columns, overall sign dropped: S^t J S is insensitive to it
    RatMatrix left = w.block(0, 0, n + q, 2 * p);
    RatMatrix right = w.block(0, n, n + q, q);
    for (std::size_t i = 0; i < n + q; ++i) {
        for (std::size_t j = 0; j < 2 * p; ++j) s(i, j) = -left(i, j);
        for (std::size_t j = 0; j < q; ++j) s(i, 2 * p + j) = -right(i, j);
    }

    if (s.transpose() * e.J * s != e.sigma_theta.inner())
        throw InternalAssertionFailure("S^t J S != sigma_2p(theta)");
    return s;
}

bool check_cocycle_restriction(const EmbeddingData& e, const std::vector<long long>& x,
                               const std::vector<long long>& y) {
    if (x.size() != e.n || y.size() != e.n)
        throw DimensionMismatch("cocycle check: vectors must have length n");
    RatMatrix xv(e.n, 1), yv(e.n, 1);
    for (std::size_t i = 0; i < e.n; ++i) {
        xv(i, 0) = Rational(static_cast<long>(x[i]));
        yv(i, 0) = Rational(static_cast<long>(y[i]));
    }
    Rational lhs = ((e.T * xv).transpose() * e.J * (e.T * yv))(0, 0);
    Rational rhs = -(xv.transpose() * e.theta.inner() * yv)(0, 0);
    return lhs == rhs;
}

LatticeVector LatticeVector::from_ambient(const std::vector<Rational>& w, std::size_t p,
                                          std::size_t q) {
    if (w.size() != 2 * p + 2 * q)
        throw DimensionMismatch("ambient vector has wrong length");
    LatticeVector v;
    for (std::size_t i = 0; i < 2 * p; ++i) v.u.push_back(w[i]);
    for (std::size_t i = 0; i < q; ++i) {
        const Rational& z = w[2 * p + i];
        if (!z.is_integer()) throw MalformedVector("Z^q slot holds a non-integer");
        v.z.push_back(static_cast<long long>(z.num().get_si()));
    }
    for (std::size_t i = 0; i < q; ++i) {
        const Rational& t = w[2 * p + q + i];
        // reduce to [0, 1)
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), t.num().get_mpz_t(), t.den().get_mpz_t());
        v.t.push_back(t - Rational(fl));
    }
    return v;
}

bool dual_lattice_member(const EmbeddingData& e, const std::vector<Rational>& w) {
    if (w.size() != e.n + e.q) throw DimensionMismatch("dual lattice test: wrong length");
    for (std::size_t i = 0; i < e.q; ++i)
        if (!w[2 * e.p + i].is_integer())
            throw MalformedVector("Z^q slot of w holds a non-integer");
    RatMatrix wv(e.n + e.q, 1);
    for (std::size_t i = 0; i < w.size(); ++i) wv(i, 0) = w[i];
    return (e.T.transpose() * e.J * wv).is_integer();
}

} // namespace nct
