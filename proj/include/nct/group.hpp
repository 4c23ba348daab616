#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nct/linalg.hpp"
#include "nct/matrix.hpp"
#include "nct/prng.hpp"

namespace nct {

/**
 * Element of O(n,n|Z) in block form [[A,B],[C,D]] acting on coordinates
 * (a^1..a^n, b_1..b_n). The constructor enforces the block equations
 *   A^t C + C^t A = 0,  B^t D + D^t B = 0,  A^t D + C^t B = I
 * (equivalently M^t Q M = Q with Q = [[0,I],[I,0]]), integrality, and
 * det = +-1. Membership in SO(n,n|Z) is det = +1.
 */
class GroupElement {
public:
    GroupElement(RatMatrix a, RatMatrix b, RatMatrix c, RatMatrix d);

    static GroupElement identity(std::size_t n);

    std::size_t n() const { return n_; }
    const RatMatrix& A() const { return a_; }
    const RatMatrix& B() const { return b_; }
    const RatMatrix& C() const { return c_; }
    const RatMatrix& D() const { return d_; }

    /// The assembled 2n x 2n matrix.
    RatMatrix matrix() const;

    Rational det() const;
    bool is_special() const { return det() == Rational(1); }

    /// Group inverse [[D^t, B^t], [C^t, A^t]]; stays integral.
    GroupElement inverse() const;

    friend bool operator==(const GroupElement& g, const GroupElement& h) {
        return g.a_ == h.a_ && g.b_ == h.b_ && g.c_ == h.c_ && g.d_ == h.d_;
    }

private:
    std::size_t n_;
    RatMatrix a_, b_, c_, d_;
};

/// A point of the space the group acts on; carried by SkewMatrix directly.
using ThetaPoint = SkewMatrix;

GroupElement compose(const GroupElement& g, const GroupElement& h);

/// rho(R): A = R, B = C = 0, D = (R^{-1})^t. Requires det(R) = +-1.
GroupElement rho(const RatMatrix& r);

/// nu(N): A = D = I, B = N, C = 0 for integer antisymmetric N.
GroupElement nu(const RatMatrix& n_mat);

/// mu(N): A = D = I, B = 0, C = N for integer antisymmetric N.
GroupElement mu(const RatMatrix& n_mat);

/**
 * sigma_k: swaps the first k coordinate pairs a^i <-> b_i. Lies in
 * SO(n,n|Z) only for even k; odd k is rejected unless allow_odd is set,
 * in which case the det -1 element of O(n,n|Z) is returned.
 */
GroupElement sigma(std::size_t k, std::size_t n, bool allow_odd = false);

struct GeneratorToken {
    enum class Kind { Rho, Nu, Mu, Sigma, Inverse };
    Kind kind;
    RatMatrix mat;                      // Rho / Nu / Mu payload
    std::size_t k = 0;                  // Sigma payload
    std::vector<GeneratorToken> inner;  // Inverse payload (exactly one token)

    static GeneratorToken make_rho(RatMatrix r);
    static GeneratorToken make_nu(RatMatrix n);
    static GeneratorToken make_mu(RatMatrix n);
    static GeneratorToken make_sigma(std::size_t k);
    static GeneratorToken make_inverse(GeneratorToken t);

    GroupElement evaluate(std::size_t n) const;
};

/// Ordered word in the generators; evaluates by left-to-right composition.
class GeneratorWord {
public:
    GeneratorWord() = default;
    explicit GeneratorWord(std::vector<GeneratorToken> tokens) : tokens_(std::move(tokens)) {}

    const std::vector<GeneratorToken>& tokens() const { return tokens_; }
    void push(GeneratorToken t) { tokens_.push_back(std::move(t)); }
    std::size_t size() const { return tokens_.size(); }

    GroupElement evaluate(std::size_t n) const;

private:
    std::vector<GeneratorToken> tokens_;
};

/// theta' = (A theta + B)(C theta + D)^{-1}. Throws OutsideDomain when
/// C theta + D is singular; the result is asserted antisymmetric.
SkewMatrix act(const GroupElement& g, const SkewMatrix& theta);

bool in_domain(const GroupElement& g, const SkewMatrix& theta);

struct DomainReport {
    std::size_t n = 0;
    std::size_t max_word_len = 0;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::size_t defined = 0;
    std::vector<std::size_t> defined_by_len;  // index = word length - 1
    std::vector<std::size_t> count_by_len;
    Rational fraction;
};

/**
 * Empirical probe of theta's membership in the everywhere-defined locus:
 * evaluates `count` pseudorandom generator words of length <= max_word_len
 * and reports the fraction whose action is defined at theta. Reporting
 * only; no assertion is attached to the fraction.
 */
DomainReport sample_domain_report(const SkewMatrix& theta, std::size_t max_word_len,
                                  std::size_t count, std::uint64_t seed);

// deterministic samplers shared by the report, the test corpora and the CLI
RatMatrix random_unimodular(std::size_t n, Prng& rng, std::size_t factors = 3);
RatMatrix random_integer_skew(std::size_t n, long long bound, Prng& rng);
GeneratorToken random_token(std::size_t n, Prng& rng);
GeneratorWord random_word(std::size_t n, std::size_t max_len, Prng& rng);

} // namespace nct
