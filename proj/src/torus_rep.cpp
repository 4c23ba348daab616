#include "nct/torus_rep.hpp"

#include <utility>

#include "nct/errors.hpp"

namespace nct {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

} // namespace

PhasePermMatrix::PhasePermMatrix(std::uint32_t dim, std::int64_t modulus,
                                 std::vector<std::uint32_t> perm,
                                 std::vector<std::int64_t> phase)
    : dim_(dim), modulus_(modulus), perm_(std::move(perm)), phase_(std::move(phase)) {
    if (modulus_ < 1) throw InputError("phase modulus must be positive");
    if (perm_.size() != dim_ || phase_.size() != dim_)
        throw DimensionMismatch("phase-permutation data has wrong length");
    std::vector<bool> seen(dim_, false);
    for (auto r : perm_) {
        if (r >= dim_ || seen[r]) throw InputError("perm is not a permutation");
        seen[r] = true;
    }
    for (auto& p : phase_) p = mod_reduce(p, modulus_);
}

PhasePermMatrix PhasePermMatrix::unchecked(std::uint32_t dim, std::int64_t modulus,
                                           std::vector<std::uint32_t> perm,
                                           std::vector<std::int64_t> phase) {
    PhasePermMatrix m;
    m.dim_ = dim;
    m.modulus_ = modulus;
    m.perm_ = std::move(perm);
    m.phase_ = std::move(phase);
    return m;
}

PhasePermMatrix PhasePermMatrix::identity(std::uint32_t dim, std::int64_t modulus) {
    if (modulus < 1) throw InputError("phase modulus must be positive");
    std::vector<std::uint32_t> perm(dim);
    for (std::uint32_t j = 0; j < dim; ++j) perm[j] = j;
    return unchecked(dim, modulus, std::move(perm), std::vector<std::int64_t>(dim, 0));
}

PhasePermMatrix operator*(const PhasePermMatrix& a, const PhasePermMatrix& b) {
    if (a.dim_ != b.dim_ || a.modulus_ != b.modulus_)
        throw DimensionMismatch("phase-permutation product shape mismatch");
    std::vector<std::uint32_t> perm(a.dim_);
    std::vector<std::int64_t> phase(a.dim_);
    for (std::uint32_t j = 0; j < a.dim_; ++j) {
        std::uint32_t mid = b.perm_[j];
        perm[j] = a.perm_[mid];
        std::int64_t p = b.phase_[j] + a.phase_[mid];
        phase[j] = p >= a.modulus_ ? p - a.modulus_ : p;
    }
    return PhasePermMatrix::unchecked(a.dim_, a.modulus_, std::move(perm), std::move(phase));
}

PhasePermMatrix PhasePermMatrix::inverse() const {
    std::vector<std::uint32_t> perm(dim_);
    std::vector<std::int64_t> phase(dim_);
    for (std::uint32_t j = 0; j < dim_; ++j) {
        perm[perm_[j]] = j;
        phase[perm_[j]] = phase_[j] == 0 ? 0 : modulus_ - phase_[j];
    }
    return unchecked(dim_, modulus_, std::move(perm), std::move(phase));
}

PhasePermMatrix PhasePermMatrix::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    PhasePermMatrix acc = identity(dim_, modulus_);
    PhasePermMatrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

PhasePermMatrix PhasePermMatrix::scaled(std::int64_t e) const {
    PhasePermMatrix out = *this;
    e = mod_reduce(e, modulus_);
    for (auto& p : out.phase_) {
        p += e;
        if (p >= modulus_) p -= modulus_;
    }
    return out;
}

std::int64_t PhasePermMatrix::scalar_exponent() const {
    for (std::uint32_t j = 0; j < dim_; ++j)
        if (perm_[j] != j || phase_[j] != phase_[0]) return -1;
    return dim_ ? phase_[0] : 0;
}

RationalTheta::RationalTheta(std::size_t n_, long long q_, std::vector<long long> p_)
    : n(n_), q(q_), p(std::move(p_)) {
    if (q < 1) throw InputError("denominator q must be >= 1");
    if (p.size() != n * n) throw DimensionMismatch("P has wrong size");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p[i * n + j] != -p[j * n + i])
                throw NotAntisymmetric("P is not antisymmetric");
}

SkewMatrix RationalTheta::theta() const {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rational(static_cast<long>(p[i * n + j]), static_cast<long>(q));
    return SkewMatrix(std::move(m));
}

TorusRep build_rep(const RationalTheta& rt, std::uint32_t max_dim) {
    TorusRep rep;
    rep.n = rt.n;
    rep.q = rt.q;
    rep.p = rt.p;
    rep.modulus = 2 * rt.q * rt.q;

    std::uint64_t dim = 1;
    for (std::size_t i = 0; i < rt.n; ++i) {
        dim *= static_cast<std::uint64_t>(rt.q);
        if (dim > max_dim) throw InputError("representation dimension exceeds the cap");
    }
    rep.dim = static_cast<std::uint32_t>(dim);

    // U_j shifts x by e_j and multiplies by zeta^{phi_j(x)} with
    // phi_j(x) = sum_{l<j} 2q P_jl x_l; then
    // U_k U_j = zeta^{phi_k(e_j) - phi_j(e_k)} U_j U_k = zeta^{2q P_kj} U_j U_k.
    std::vector<std::uint64_t> stride(rt.n, 1);
    for (std::size_t i = 1; i < rt.n; ++i) stride[i] = stride[i - 1] * rt.q;

    for (std::size_t j = 0; j < rt.n; ++j) {
        std::vector<std::uint32_t> perm(rep.dim);
        std::vector<std::int64_t> phase(rep.dim);
        std::vector<long long> x(rt.n, 0);
        for (std::uint32_t idx = 0; idx < rep.dim; ++idx) {
            std::uint64_t shifted = idx;
            if (x[j] == rt.q - 1)
                shifted -= stride[j] * (rt.q - 1);
            else
                shifted += stride[j];
            perm[idx] = static_cast<std::uint32_t>(shifted);
            std::int64_t e = 0;
            for (std::size_t l = 0; l < j; ++l)
                e += 2 * rt.q * rt.entry(j, l) % rep.modulus * (x[l] % rep.modulus);
            phase[idx] = mod_reduce(e, rep.modulus);
            // odometer over (Z/q)^n
            for (std::size_t t = 0; t < rt.n; ++t) {
                if (++x[t] < rt.q) break;
                x[t] = 0;
            }
        }
        rep.gens.emplace_back(rep.dim, rep.modulus, std::move(perm), std::move(phase));
    }
    return rep;
}

std::int64_t commutation_exponent(const TorusRep& rep, std::size_t k, std::size_t j) {
    if (k < 1 || k > rep.n || j < 1 || j > rep.n)
        throw IndexOutOfRange("generator index out of range");
    PhasePermMatrix lhs = rep.gens[k - 1] * rep.gens[j - 1];
    PhasePermMatrix rhs = rep.gens[j - 1] * rep.gens[k - 1];
    std::int64_t e = (lhs * rhs.inverse()).scalar_exponent();
    if (e < 0) throw ViolationError("generator commutator is not scalar");
    return e;
}

PhasePermMatrix u_elem(const TorusRep& rep, const std::vector<long long>& x) {
    if (x.size() != rep.n) throw DimensionMismatch("u_elem: vector has wrong length");
    PhasePermMatrix acc = PhasePermMatrix::identity(rep.dim, rep.modulus);
    for (std::size_t j = 0; j < rep.n; ++j) acc = acc * rep.gens[j].pow(x[j]);
    std::int64_t delta = 0;
    for (std::size_t k = 0; k < rep.n; ++k)
        for (std::size_t j = 0; j < k; ++j)
            delta += mod_reduce(rep.q * rep.entry(k, j) % rep.modulus * ((x[k] * x[j]) % rep.modulus),
                                rep.modulus);
    return acc.scaled(mod_reduce(delta, rep.modulus));
}

std::int64_t bicharacter_exponent(const TorusRep& rep, const std::vector<long long>& x,
                                  const std::vector<long long>& y) {
    if (x.size() != rep.n || y.size() != rep.n)
        throw DimensionMismatch("bicharacter: vectors have wrong length");
    std::int64_t e = 0;
    for (std::size_t i = 0; i < rep.n; ++i)
        for (std::size_t j = 0; j < rep.n; ++j)
            e = mod_reduce(e + rep.q * rep.entry(i, j) % rep.modulus * ((x[i] * y[j]) % rep.modulus),
                           rep.modulus);
    return e;
}

RelationReport verify_relations(const TorusRep& rep) {
    for (std::size_t k = 1; k <= rep.n; ++k)
        for (std::size_t j = 1; j <= rep.n; ++j) {
            if (j == k) continue;
            std::int64_t want = mod_reduce(2 * rep.q * rep.entry(k - 1, j - 1), rep.modulus);
            PhasePermMatrix lhs = rep.gens[k - 1] * rep.gens[j - 1];
            PhasePermMatrix rhs = (rep.gens[j - 1] * rep.gens[k - 1]).scaled(want);
            if (!(lhs == rhs)) {
                RelationReport r;
                r.ok = false;
                r.detail = "commutation relation failed at (k, j) = (" + std::to_string(k) +
                           ", " + std::to_string(j) + ")";
                return r;
            }
        }
    return {};
}

namespace {

std::vector<std::vector<long long>> box_vectors(std::size_t n, long long bound) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> x(n, -bound);
    while (true) {
        out.push_back(x);
        std::size_t t = 0;
        while (t < n && x[t] == bound) x[t++] = -bound;
        if (t == n) break;
        x[t] += 1;
    }
    return out;
}

// x -> R^t x: row i of R is the exponent vector of the i-th relabeled
// generator, so the relabeled U_x is U_{R^t x} and the transformed matrix
// is R theta R^t.
std::vector<long long> relabel(const RatMatrix& r, const std::vector<long long>& x) {
    std::vector<long long> out(r.cols(), 0);
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            out[j] += r(i, j).num().get_si() * x[i];
    return out;
}

} // namespace

RelationReport verify_rho_iso(const TorusRep& rep, const RatMatrix& r, long long bound) {
    if (r.rows() != rep.n || r.cols() != rep.n)
        throw DimensionMismatch("verify: R has wrong dimensions");
    if (!r.is_integer()) throw InputError("verify: R must be integral");

    // P' = R P R^t stays integral over the same q
    std::vector<long long> pprime(rep.n * rep.n, 0);
    for (std::size_t i = 0; i < rep.n; ++i)
        for (std::size_t j = 0; j < rep.n; ++j) {
            long long acc = 0;
            for (std::size_t k = 0; k < rep.n; ++k)
                for (std::size_t l = 0; l < rep.n; ++l)
                    acc += r(i, k).num().get_si() * rep.entry(k, l) * r(j, l).num().get_si();
            pprime[i * rep.n + j] = acc;
        }

    auto xs = box_vectors(rep.n, bound);
    auto index_of = [&](const std::vector<long long>& v) {
        std::size_t idx = 0, stride = 1;
        for (std::size_t i = 0; i < v.size(); ++i) {
            idx += static_cast<std::size_t>(v[i] + bound) * stride;
            stride *= static_cast<std::size_t>(2 * bound + 1);
        }
        return idx;
    };
    std::vector<PhasePermMatrix> cache;
    cache.reserve(xs.size());
    for (const auto& x : xs) cache.push_back(u_elem(rep, relabel(r, x)));

    // lhs == zeta^e * uz, checked in place
    auto equals_scaled = [&](const PhasePermMatrix& lhs, const PhasePermMatrix& uz,
                             std::int64_t e) {
        if (lhs.perm() != uz.perm()) return false;
        for (std::uint32_t j = 0; j < lhs.dim(); ++j)
            if (lhs.phase()[j] != mod_reduce(uz.phase()[j] + e, rep.modulus)) return false;
        return true;
    };

    // group pairs by their sum so U_{R(x+y)} is built once per sum
    for (const auto& z : box_vectors(rep.n, 2 * bound)) {
        bool any = false;
        PhasePermMatrix uz = PhasePermMatrix::identity(1, 1);
        std::vector<long long> y(rep.n);
        for (const auto& x : xs) {
            bool in_box = true;
            for (std::size_t i = 0; i < rep.n; ++i) {
                y[i] = z[i] - x[i];
                if (y[i] < -bound || y[i] > bound) in_box = false;
            }
            if (!in_box) continue;
            if (!any) {
                uz = u_elem(rep, relabel(r, z));
                any = true;
            }
            std::int64_t e = 0;
            for (std::size_t i = 0; i < rep.n; ++i)
                for (std::size_t j = 0; j < rep.n; ++j)
                    e = mod_reduce(
                        e + rep.q * pprime[i * rep.n + j] % rep.modulus * ((x[i] * y[j]) % rep.modulus),
                        rep.modulus);
            PhasePermMatrix lhs = cache[index_of(x)] * cache[index_of(y)];
            if (!equals_scaled(lhs, uz, e)) {
                RelationReport rr;
                rr.ok = false;
                rr.detail = "pair law failed at x = " + std::to_string(x[0]) +
                            "..., y = " + std::to_string(y[0]) + "...";
                return rr;
            }
            // skew identity at exponent level: gamma(x,y) - gamma(y,x) = x.(P'/q) y
            std::int64_t skew = 0, full = 0;
            for (std::size_t i = 0; i < rep.n; ++i)
                for (std::size_t j = 0; j < rep.n; ++j) {
                    long long term = pprime[i * rep.n + j];
                    skew = mod_reduce(skew + rep.q * term % rep.modulus *
                                                 (((x[i] * y[j]) - (y[i] * x[j])) % rep.modulus),
                                      rep.modulus);
                    full = mod_reduce(full + 2 * rep.q * term % rep.modulus *
                                                 ((x[i] * y[j]) % rep.modulus),
                                      rep.modulus);
                }
            if (skew != full) {
                RelationReport rr;
                rr.ok = false;
                rr.detail = "skew bicharacter identity failed";
                return rr;
            }
        }
    }
    return {};
}

RelationReport verify_bicharacter(const TorusRep& rep, long long bound) {
    return verify_rho_iso(rep, RatMatrix::identity(rep.n), bound);
}

} // namespace nct
