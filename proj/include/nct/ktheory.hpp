#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nct/grassmann.hpp"
#include "nct/group.hpp"
#include "nct/matrix.hpp"

namespace nct {

enum class Parity { Even, Odd };

/**
 * Element of the integral lattice in the dual Grassmann algebra, restricted
 * to one parity. The even part carries K0, the odd part K1. Coordinates are
 * integers indexed by subsets of the declared parity.
 */
class KLatticeElement {
public:
    KLatticeElement(std::size_t n, Parity parity);

    static KLatticeElement dual_basis(std::size_t n, std::uint32_t mask);

    std::size_t n() const { return n_; }
    Parity parity() const { return parity_; }

    const Integer& coord(std::uint32_t mask) const;
    void set_coord(std::uint32_t mask, const Integer& v); // ParityMismatch on wrong parity

    /// Subsets of the element's parity, in mask order.
    std::vector<std::uint32_t> support_masks() const;

private:
    std::size_t n_;
    Parity parity_;
    std::vector<Integer> coord_; // dense over all masks; off-parity stays 0
};

/// Sum over even subsets S of x_S * Pf(theta_S); Pf over the empty set is 1.
/// This is the canonical trace of the K0 class x. ParityMismatch for odd x.
Rational trace_pairing(const SkewMatrix& theta, const KLatticeElement& x);

/// A finitely generated subgroup of Q, i.e. g Z for its unique nonnegative
/// generator g.
struct TraceRange {
    Rational generator;
};

/// Range of the trace on K0 for rational theta: the gcd over Q of the
/// sub-Pfaffians of theta (the empty subset contributes 1, so the range is
/// never the zero group).
TraceRange trace_range(const SkewMatrix& theta);

/**
 * The positive rational c with trace_range(act(g, theta)) = c * trace_range(theta).
 * Asserts c = 1 when g has the rho / nu / mu block pattern. Throws
 * OutsideDomain when g is undefined at theta.
 */
Rational morita_trace_check(const SkewMatrix& theta, const GroupElement& g);

/**
 * The action induced on the integral dual lattice: the inverse-transpose of
 * the intertwiner of g, scaled by the unique positive rational making it
 * integral with content 1. Asserts det = +-1 (NonIntegralAction otherwise)
 * and that the parity blocks are preserved. Requires g in SO(n,n|Z).
 */
RatMatrix induced_k_action(const GroupElement& g,
                           std::size_t max_n = kDefaultMaxGrassmannN);

/// Matrix of Lambda^2 A on the ordered basis (e1^e2, e1^e3, e2^e3) for a
/// 3 x 3 integer matrix A; det(wedge_square(A)) = det(A)^2.
RatMatrix wedge_square(const RatMatrix& a);

using Mat3 = std::array<long long, 9>; // row-major 3 x 3

Mat3 wedge_square_i64(const Mat3& a);
long long det_i64(const Mat3& a);

struct CounterexampleReport {
    long long bound = 0;
    unsigned long long checked = 0;
    std::vector<Mat3> hits;
};

/**
 * Exhaustively enumerates all 3 x 3 integer matrices with entries in
 * [-bound, bound] and records those whose wedge square equals `target`
 * (default diag(-1, 1, 1)). The determinant identity makes the default
 * target unreachable, so the expected report is empty; the enumeration is
 * the independent finite confirmation. Partitioned deterministically
 * across `workers` threads (0 = hardware concurrency) and merged in
 * lexicographic order.
 */
CounterexampleReport counterexample_search(long long bound,
                                           const Mat3& target = {-1, 0, 0, 0, 1, 0, 0, 0, 1},
                                           unsigned workers = 0);

} // namespace nct
