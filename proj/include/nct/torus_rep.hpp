#pragma once

#include <cstdint>
#include <vector>

#include "nct/matrix.hpp"

namespace nct {

/**
 * Generalized permutation matrix whose nonzero entries are m-th roots of
 * unity, kept as integer exponents: entry (perm[j], j) = zeta^{phase[j]}
 * with zeta = e(1/m). All arithmetic is modular integer arithmetic; no
 * complex numbers appear anywhere.
 */
class PhasePermMatrix {
public:
    PhasePermMatrix(std::uint32_t dim, std::int64_t modulus, std::vector<std::uint32_t> perm,
                    std::vector<std::int64_t> phase);

    static PhasePermMatrix identity(std::uint32_t dim, std::int64_t modulus);

    std::uint32_t dim() const { return dim_; }
    std::int64_t modulus() const { return modulus_; }
    const std::vector<std::uint32_t>& perm() const { return perm_; }
    const std::vector<std::int64_t>& phase() const { return phase_; }

    friend PhasePermMatrix operator*(const PhasePermMatrix& a, const PhasePermMatrix& b);
    PhasePermMatrix inverse() const;
    PhasePermMatrix pow(long long e) const;

    /// zeta^e times this matrix.
    PhasePermMatrix scaled(std::int64_t e) const;

    /// If this is zeta^e * I returns e, else -1.
    std::int64_t scalar_exponent() const;

    friend bool operator==(const PhasePermMatrix& a, const PhasePermMatrix& b) {
        return a.dim_ == b.dim_ && a.modulus_ == b.modulus_ && a.perm_ == b.perm_ &&
               a.phase_ == b.phase_;
    }

private:
    PhasePermMatrix() : dim_(0), modulus_(1) {}
    // internal results are permutations with reduced phases by construction
    static PhasePermMatrix unchecked(std::uint32_t dim, std::int64_t modulus,
                                     std::vector<std::uint32_t> perm,
                                     std::vector<std::int64_t> phase);

    std::uint32_t dim_;
    std::int64_t modulus_;
    std::vector<std::uint32_t> perm_;  // column j -> row perm[j]
    std::vector<std::int64_t> phase_;  // reduced to [0, modulus)
};

/// theta = P / q for an integer antisymmetric P and a global denominator q.
struct RationalTheta {
    std::size_t n = 0;
    long long q = 1;
    std::vector<long long> p; // row-major n x n, antisymmetric

    RationalTheta(std::size_t n_, long long q_, std::vector<long long> p_);

    long long entry(std::size_t i, std::size_t j) const { return p[i * n + j]; }
    SkewMatrix theta() const;
};

/**
 * Exact finite-dimensional witness of the torus relations for theta = P/q:
 * generators U_1..U_n on the q^n-point index set (Z/q)^n, phase modulus
 * m = 2 q^2, satisfying U_k U_j = zeta^{2q P_kj} U_j U_k exactly.
 */
struct TorusRep {
    std::size_t n = 0;
    long long q = 1;
    std::int64_t modulus = 2;
    std::uint32_t dim = 1;
    std::vector<long long> p;
    std::vector<PhasePermMatrix> gens;

    long long entry(std::size_t i, std::size_t j) const { return p[i * n + j]; }
};

TorusRep build_rep(const RationalTheta& rt, std::uint32_t max_dim = 20736);

/// The exponent e with U_k U_j = zeta^e U_j U_k (1-based indices); throws
/// ViolationError if the commutator is not scalar.
std::int64_t commutation_exponent(const TorusRep& rep, std::size_t k, std::size_t j);

/// The Weyl element U_x: the ordered monomial U_1^{x_1} ... U_n^{x_n}
/// rescaled by zeta^{q sum_{k>j} P_kj x_k x_j} so that
/// U_x U_y = zeta^{q x.Py} U_{x+y} holds exactly.
PhasePermMatrix u_elem(const TorusRep& rep, const std::vector<long long>& x);

std::int64_t bicharacter_exponent(const TorusRep& rep, const std::vector<long long>& x,
                                  const std::vector<long long>& y);

struct RelationReport {
    bool ok = true;
    std::string detail; // empty when ok; first counterexample otherwise
};

/// Checks the commutation relations on every generator pair.
RelationReport verify_relations(const TorusRep& rep);

/**
 * Checks U_{Rx} U_{Ry} = zeta^{q x.(R P R^t)y} U_{R(x+y)} for every pair
 * x, y with entries in [-bound, bound], plus the skew identity
 * gamma(x,y) conj(gamma(y,x)) = e(x.theta y) at exponent level. R must be
 * integral; R = I gives the plain bicharacter law.
 */
RelationReport verify_rho_iso(const TorusRep& rep, const RatMatrix& r, long long bound = 2);

RelationReport verify_bicharacter(const TorusRep& rep, long long bound = 2);

} // namespace nct
