#pragma once

#include "nct/matrix.hpp"

namespace nct {

Rational det(const RatMatrix& m);

/// Exact inverse. Throws SingularMatrix when det = 0.
RatMatrix invert(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Basis of the exact rational kernel, as column vectors. Empty when trivial.
std::vector<RatMatrix> nullspace(const RatMatrix& m);

/**
 * Pfaffian of an even-dimensional skew matrix, by recursive expansion along
 * the first row; Pf([[0,a],[-a,0]]) = a and Pf of the empty matrix is 1.
 * Throws OddDimension for odd n.
 */
Rational pfaffian(const SkewMatrix& s);

/// The standard symplectic matrix [[0, I_p], [-I_p, 0]].
RatMatrix symplectic_form(std::size_t p);

/**
 * For invertible skew theta11 of even dimension 2p, returns an invertible T
 * with T^t J0 T = -theta11 (J0 = symplectic_form(p)). Computed by skew
 * Gaussian elimination with deterministic pivoting: the output is one valid
 * factor among many, and the identity is asserted before returning.
 * Throws SingularInput when theta11 is not invertible.
 */
RatMatrix skew_congruence_factor(const SkewMatrix& theta11);

} // namespace nct
