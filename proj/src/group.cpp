#include "nct/group.hpp"

#include <utility>

namespace nct {

namespace {

void require_integer_square(const RatMatrix& m, std::size_t n, const char* what) {
    if (m.rows() != n || m.cols() != n)
        throw DimensionMismatch(std::string(what) + ": wrong block dimensions");
    if (!m.is_integer()) throw InputError(std::string(what) + ": non-integer entries");
}

} // namespace

GroupElement::GroupElement(RatMatrix a, RatMatrix b, RatMatrix c, RatMatrix d)
    : n_(a.rows()), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    require_integer_square(a_, n_, "A");
    require_integer_square(b_, n_, "B");
    require_integer_square(c_, n_, "C");
    require_integer_square(d_, n_, "D");
    RatMatrix at = a_.transpose(), bt = b_.transpose(), ct = c_.transpose();
    if (!(at * c_ + ct * a_).is_zero() || !(bt * d_ + d_.transpose() * b_).is_zero() ||
        !(at * d_ + ct * b_).is_identity())
        throw InputError("blocks do not satisfy the O(n,n) equations");
    Rational dt = det();
    if (dt != Rational(1) && dt != Rational(-1))
        throw InputError("determinant is not +-1");
}

GroupElement GroupElement::identity(std::size_t n) {
    return {RatMatrix::identity(n), RatMatrix(n, n), RatMatrix(n, n), RatMatrix::identity(n)};
}

RatMatrix GroupElement::matrix() const {
    RatMatrix m(2 * n_, 2 * n_);
    m.set_block(0, 0, a_);
    m.set_block(0, n_, b_);
    m.set_block(n_, 0, c_);
    m.set_block(n_, n_, d_);
    return m;
}

Rational GroupElement::det() const { return nct::det(matrix()); }

GroupElement GroupElement::inverse() const {
    return {d_.transpose(), b_.transpose(), c_.transpose(), a_.transpose()};
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    if (g.n() != h.n()) throw DimensionMismatch("composing elements of different n");
    return {g.A() * h.A() + g.B() * h.C(), g.A() * h.B() + g.B() * h.D(),
            g.C() * h.A() + g.D() * h.C(), g.C() * h.B() + g.D() * h.D()};
}

GroupElement rho(const RatMatrix& r) {
    if (!r.is_square()) throw DimensionMismatch("rho: non-square R");
    if (!r.is_integer()) throw NotUnimodular("rho: non-integer R");
    Rational d = det(r);
    if (d != Rational(1) && d != Rational(-1)) throw NotUnimodular("rho: det(R) != +-1");
    std::size_t n = r.rows();
    return {r, RatMatrix(n, n), RatMatrix(n, n), invert(r).transpose()};
}

GroupElement nu(const RatMatrix& n_mat) {
    if (!n_mat.is_antisymmetric()) throw NotAntisymmetric("nu: N is not antisymmetric");
    if (!n_mat.is_integer()) throw NotAntisymmetric("nu: N is not integral");
    std::size_t n = n_mat.rows();
    return {RatMatrix::identity(n), n_mat, RatMatrix(n, n), RatMatrix::identity(n)};
}

GroupElement mu(const RatMatrix& n_mat) {
    if (!n_mat.is_antisymmetric()) throw NotAntisymmetric("mu: N is not antisymmetric");
    if (!n_mat.is_integer()) throw NotAntisymmetric("mu: N is not integral");
    std::size_t n = n_mat.rows();
    return {RatMatrix::identity(n), RatMatrix(n, n), n_mat, RatMatrix::identity(n)};
}

GroupElement sigma(std::size_t k, std::size_t n, bool allow_odd) {
    if (k > n) throw IndexOutOfRange("sigma: k > n");
    if (k % 2 != 0 && !allow_odd)
        throw OddKRejected("sigma: odd k gives a det -1 element outside SO(n,n|Z)");
    RatMatrix a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < k)
            b(i, i) = 1;
        else
            a(i, i) = 1;
    }
    return {a, b, b, a};
}

GeneratorToken GeneratorToken::make_rho(RatMatrix r) {
    return {Kind::Rho, std::move(r), 0, {}};
}
GeneratorToken GeneratorToken::make_nu(RatMatrix n) {
    return {Kind::Nu, std::move(n), 0, {}};
}
GeneratorToken GeneratorToken::make_mu(RatMatrix n) {
    return {Kind::Mu, std::move(n), 0, {}};
}
GeneratorToken GeneratorToken::make_sigma(std::size_t k) {
    return {Kind::Sigma, RatMatrix(), k, {}};
}
GeneratorToken GeneratorToken::make_inverse(GeneratorToken t) {
    GeneratorToken out{Kind::Inverse, RatMatrix(), 0, {}};
    out.inner.push_back(std::move(t));
    return out;
}

GroupElement GeneratorToken::evaluate(std::size_t n) const {
    switch (kind) {
        case Kind::Rho:
            return rho(mat);
        case Kind::Nu:
            return nu(mat);
        case Kind::Mu:
            return mu(mat);
        case Kind::Sigma:
            return sigma(k, n);
        case Kind::Inverse:
            if (inner.size() != 1) throw InputError("inverse token without operand");
            return inner.front().evaluate(n).inverse();
    }
    throw InputError("unknown generator token");
}

GroupElement GeneratorWord::evaluate(std::size_t n) const {
    GroupElement g = GroupElement::identity(n);
    for (const auto& t : tokens_) g = compose(g, t.evaluate(n));
    return g;
}

SkewMatrix act(const GroupElement& g, const SkewMatrix& theta) {
    if (g.n() != theta.n()) throw DimensionMismatch("act: theta has wrong dimension");
    RatMatrix denom = g.C() * theta.inner() + g.D();
    RatMatrix denom_inv;
    try {
        denom_inv = invert(denom);
    } catch (const SingularMatrix&) {
        throw OutsideDomain("C theta + D is singular: theta outside the domain of g");
    }
    RatMatrix result = (g.A() * theta.inner() + g.B()) * denom_inv;
    if (!result.is_antisymmetric())
        throw InternalAssertionFailure("group action produced a non-antisymmetric matrix");
    return SkewMatrix(std::move(result));
}

bool in_domain(const GroupElement& g, const SkewMatrix& theta) {
    if (g.n() != theta.n()) throw DimensionMismatch("in_domain: theta has wrong dimension");
    return !det(g.C() * theta.inner() + g.D()).is_zero();
}

RatMatrix random_unimodular(std::size_t n, Prng& rng, std::size_t factors) {
    RatMatrix r = RatMatrix::identity(n);
    std::size_t count = 1 + rng.below(factors);
    for (std::size_t f = 0; f < count; ++f) {
        if (n >= 2 && rng.chance(1, 2)) {
            // elementary: I + single off-diagonal entry in [-2,2] \ {0}
            std::size_t i = rng.below(n), j = rng.below(n - 1);
            if (j >= i) ++j;
            long long v = rng.range(1, 2) * (rng.chance(1, 2) ? 1 : -1);
            RatMatrix e = RatMatrix::identity(n);
            e(i, j) = Rational(v);
            r = r * e;
        } else {
            // signed transposition / sign flip
            RatMatrix p(n, n);
            std::size_t i = rng.below(n), j = rng.below(n);
            for (std::size_t k = 0; k < n; ++k) {
                std::size_t dst = (k == i) ? j : (k == j) ? i : k;
                p(dst, k) = Rational(rng.chance(1, 4) ? -1 : 1);
            }
            r = r * p;
        }
    }
    return r;
}

RatMatrix random_integer_skew(std::size_t n, long long bound, Prng& rng) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational v(rng.range(-bound, bound));
            m(i, j) = v;
            m(j, i) = -v;
        }
    return m;
}

GeneratorToken random_token(std::size_t n, Prng& rng) {
    if (n >= 2 && rng.chance(1, 4)) return GeneratorToken::make_sigma(2);
    switch (rng.below(3)) {
        case 0:
            return GeneratorToken::make_rho(random_unimodular(n, rng));
        case 1:
            return GeneratorToken::make_nu(random_integer_skew(n, 2, rng));
        default:
            return GeneratorToken::make_mu(random_integer_skew(n, 2, rng));
    }
}

GeneratorWord random_word(std::size_t n, std::size_t max_len, Prng& rng) {
    GeneratorWord w;
    std::size_t len = 1 + rng.below(max_len);
    for (std::size_t i = 0; i < len; ++i) w.push(random_token(n, rng));
    return w;
}

DomainReport sample_domain_report(const SkewMatrix& theta, std::size_t max_word_len,
                                  std::size_t count, std::uint64_t seed) {
    Prng rng(seed);
    DomainReport rep;
    rep.n = theta.n();
    rep.max_word_len = max_word_len;
    rep.count = count;
    rep.seed = seed;
    rep.defined_by_len.assign(max_word_len, 0);
    rep.count_by_len.assign(max_word_len, 0);
    for (std::size_t i = 0; i < count; ++i) {
        GeneratorWord w = random_word(theta.n(), max_word_len, rng);
        GroupElement g = w.evaluate(theta.n());
        bool ok = in_domain(g, theta);
        rep.count_by_len[w.size() - 1] += 1;
        if (ok) {
            rep.defined += 1;
            rep.defined_by_len[w.size() - 1] += 1;
        }
    }
    rep.fraction = count == 0 ? Rational(0)
                              : Rational(static_cast<long>(rep.defined), static_cast<long>(count));
    return rep;
}

} // namespace nct
