#pragma once

#include "nct/group.hpp"
#include "nct/linalg.hpp"
#include "nct/matrix.hpp"

namespace nct {

/**
 * The embedding data realizing the duality between theta and
 * sigma_{2p}(theta): with q = n - 2p,
 *
 *   T    = [[T11, 0], [0, I_q], [T31, T32]]          ((n+q) x n)
 *   J    = [[J0, 0, 0], [0, 0, I_q], [0, -I_q, 0]]   ((n+q) square)
 *   Tbar = [[T11, 0, 0], [0, I_q, 0], [T31, T32, I_q]]
 *
 * where T11^t J0 T11 = -theta11, T31 = theta12^t, and T32 satisfies
 * theta22 = T32^t - T32. T embeds Z^n as a lattice D in
 * G = R^{2p} x Z^q x T^q; S embeds Z^n onto the dual lattice of D.
 * The identities T^t J T = -theta and S^t J S = sigma_{2p}(theta) hold
 * exactly and are asserted during construction.
 */
struct EmbeddingData {
    std::size_t n = 0, p = 0, q = 0;
    SkewMatrix theta{RatMatrix()};
    RatMatrix T11, T31, T32, T, J, Tbar, S;
    SkewMatrix sigma_theta{RatMatrix()};
};

enum class T32Mode {
    Upper, // strictly upper-triangular part of theta22
    Half   // -theta22 / 2
};

/// Requires the top-left 2p x 2p block of theta invertible (SingularBlock).
EmbeddingData build_embedding(const SkewMatrix& theta, std::size_t p,
                              T32Mode mode = T32Mode::Half);

/**
 * Recomputes the dual embedding S from (Tbar^t J)^{-1}: checks that the
 * middle column block is the (0, 0, I_q) pattern (it maps to 0 in G),
 * deletes it, drops the overall sign, and asserts S^t J S = sigma_{2p}(theta).
 */
RatMatrix dual_embedding(const EmbeddingData& e);

/// The block matrix of sigma_{2p}(theta); equals act(sigma(2p), theta).
SkewMatrix sigma_blocks(const SkewMatrix& theta, std::size_t p);

/// Exact exponent-level cocycle identity (Tx) . J (Ty) = -x . theta y.
bool check_cocycle_restriction(const EmbeddingData& e, const std::vector<long long>& x,
                               const std::vector<long long>& y);

/// Point of G = R^{2p} x Z^q x T^q with the torus slot reduced to [0, 1).
struct LatticeVector {
    std::vector<Rational> u;    // R^{2p}
    std::vector<long long> z;   // Z^q
    std::vector<Rational> t;    // T^q, each in [0, 1)

    static LatticeVector from_ambient(const std::vector<Rational>& w, std::size_t p,
                                      std::size_t q);
};

/// True iff T^t J w is an integer vector, i.e. w lies in the dual lattice.
/// The Z^q slot of w (coordinates 2p..n-1) must be integral (MalformedVector).
bool dual_lattice_member(const EmbeddingData& e, const std::vector<Rational>& w);

} // namespace nct
