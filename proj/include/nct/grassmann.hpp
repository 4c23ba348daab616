#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nct/group.hpp"
#include "nct/matrix.hpp"

namespace nct {

/// 4^n intertwiner unknowns; raise per call if you really mean it.
inline constexpr std::size_t kDefaultMaxGrassmannN = 8;

/**
 * Element of the Grassmann algebra on generators a^1..a^n, stored as the
 * 2^n coefficients on subset monomials a^{s1} ^ ... ^ a^{sk} (ascending
 * order). Bit j-1 of a mask encodes generator j.
 */
class GrassmannElement {
public:
    explicit GrassmannElement(std::size_t n);

    static GrassmannElement one(std::size_t n);
    static GrassmannElement generator(std::size_t n, std::size_t j); // a^j

    std::size_t n() const { return n_; }
    std::size_t dim() const { return coeff_.size(); }

    const Rational& coeff(std::uint32_t mask) const { return coeff_[mask]; }
    void set_coeff(std::uint32_t mask, const Rational& v) { coeff_[mask] = v; }

    bool is_zero() const;

    GrassmannElement operator-() const;
    GrassmannElement& operator+=(const GrassmannElement& o);
    GrassmannElement& operator-=(const GrassmannElement& o);
    friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) {
        return a += b;
    }
    friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) {
        return a -= b;
    }
    friend GrassmannElement operator*(const Rational& s, GrassmannElement e);

    /// Exterior product.
    friend GrassmannElement wedge(const GrassmannElement& a, const GrassmannElement& b);

    friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
        return a.n_ == b.n_ && a.coeff_ == b.coeff_;
    }

private:
    std::size_t n_;
    std::vector<Rational> coeff_;
};

/// Sign picked up merging monomials a^S ^ a^T, or when a^j passes a^S.
int merge_sign(std::uint32_t s, std::uint32_t t);

/// Rational 2^n x 2^n operator on the Grassmann algebra, in the subset basis.
class OperatorMatrix {
public:
    OperatorMatrix(std::size_t n, RatMatrix m);
    static OperatorMatrix zero(std::size_t n);
    static OperatorMatrix identity(std::size_t n);

    std::size_t n() const { return n_; }
    std::size_t dim() const { return m_.rows(); }
    const RatMatrix& matrix() const { return m_; }
    const Rational& operator()(std::uint32_t r, std::uint32_t c) const { return m_(r, c); }
    Rational& operator()(std::uint32_t r, std::uint32_t c) { return m_(r, c); }

    OperatorMatrix& operator+=(const OperatorMatrix& o);
    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
    friend OperatorMatrix operator*(const Rational& s, OperatorMatrix m);
    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
        return a.n_ == b.n_ && a.m_ == b.m_;
    }

    GrassmannElement apply(const GrassmannElement& w) const;

private:
    std::size_t n_;
    RatMatrix m_;
};

/// Left exterior multiplication by a^j (creation), 1 <= j <= n.
OperatorMatrix creation(std::size_t n, std::size_t j);

/// Left derivation d/da^k (annihilation), 1 <= k <= n.
OperatorMatrix annihilation(std::size_t n, std::size_t k);

/**
 * The Gaussian element exp((1/2) a^i theta_ij a^j), computed as the
 * exponential series of the degree-2 part (nilpotent, so the series is
 * finite). Its coefficient on an even subset S equals the Pfaffian of the
 * restriction theta_S; odd subsets carry 0.
 */
GrassmannElement gaussian_element(const SkewMatrix& theta);

/**
 * Image of a Clifford generator under the automorphism attached to g:
 * index i in 1..n gives A^i_j a^j + B^{ij} d/da_j, index n+k gives
 * C_{kj} a^j + D_k^j d/da_j.
 */
OperatorMatrix clifford_image(const GroupElement& g, std::size_t index);

/**
 * The operator U implementing the Clifford automorphism of g on the
 * Grassmann algebra: clifford_image(g, i) * U = U * generator_i for all
 * 2n generators. Found as the exact nullspace of that stacked linear
 * system in the 4^n entries of U; the kernel is one-dimensional for
 * genuine O(n,n) input. U is normalized so its first nonzero entry in
 * subset-lexicographic order is +1.
 *
 * Throws NoIntertwiner (kernel 0: the blocks violate the form equations)
 * or AmbiguousIntertwiner (kernel dimension > 1; never observed, reported
 * rather than silently resolved).
 */
OperatorMatrix intertwiner(const GroupElement& g, std::size_t max_n = kDefaultMaxGrassmannN);

/// Same solver on raw blocks; rational entries are accepted here so tests
/// can probe inputs outside the integral group.
OperatorMatrix intertwiner_blocks(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c,
                                  const RatMatrix& d,
                                  std::size_t max_n = kDefaultMaxGrassmannN);

/**
 * Applies U_g to the Gaussian element of theta and reads the transformed
 * matrix off the degree-2 coefficients: returns (theta', c) with
 * U_g gauss(theta) = c * gauss(theta'). Asserts the full-degree equality
 * and theta' = act(g, theta). Throws DomainFailure when the vacuum
 * coefficient of the image vanishes.
 */
std::pair<SkewMatrix, Rational> projective_act(const GroupElement& g, const SkewMatrix& theta);

/// d/da_i gauss(theta) = (theta_ij a^j) gauss(theta), for every i.
bool gaussian_annihilation_identity(const SkewMatrix& theta);

struct TransformedIdentityReport {
    bool ok = true;
    std::vector<std::size_t> failed_base;         // indices i failing the untransformed identity
    std::vector<std::size_t> failed_transformed;  // indices i failing the transformed identity
};

/**
 * Checks, for theta' = U_g gauss(theta), that
 *   (C_{ij} a^j + D_i^j d/da_j) theta' = (theta_ik A^k_j a^j + theta_ik B^{kj} d/da_j) theta'
 * holds for every i, together with the untransformed identity above.
 */
TransformedIdentityReport transformed_gaussian_identity(const GroupElement& g,
                                                        const SkewMatrix& theta);

/// Masks ordered by the lexicographic order of their ascending element lists.
std::vector<std::uint32_t> subset_lex_order(std::size_t n);

} // namespace nct
