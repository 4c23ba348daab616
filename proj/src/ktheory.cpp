#include "nct/ktheory.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "nct/linalg.hpp"

namespace nct {

namespace {

Parity mask_parity(std::uint32_t mask) {
    return (std::popcount(mask) % 2 == 0) ? Parity::Even : Parity::Odd;
}

} // namespace

KLatticeElement::KLatticeElement(std::size_t n, Parity parity)
    : n_(n), parity_(parity), coord_(std::size_t(1) << n) {}

KLatticeElement KLatticeElement::dual_basis(std::size_t n, std::uint32_t mask) {
    KLatticeElement x(n, mask_parity(mask));
    x.coord_[mask] = 1;
    return x;
}

const Integer& KLatticeElement::coord(std::uint32_t mask) const {
    if (mask >= coord_.size()) throw IndexOutOfRange("lattice coordinate out of range");
    return coord_[mask];
}

void KLatticeElement::set_coord(std::uint32_t mask, const Integer& v) {
    if (mask >= coord_.size()) throw IndexOutOfRange("lattice coordinate out of range");
    if (mask_parity(mask) != parity_ && v != 0)
        throw ParityMismatch("coordinate subset has the wrong parity");
    coord_[mask] = v;
}

std::vector<std::uint32_t> KLatticeElement::support_masks() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < coord_.size(); ++m)
        if (mask_parity(m) == parity_) out.push_back(m);
    return out;
}

Rational trace_pairing(const SkewMatrix& theta, const KLatticeElement& x) {
    if (x.parity() != Parity::Even)
        throw ParityMismatch("trace pairing is defined on the even lattice");
    if (x.n() != theta.n()) throw DimensionMismatch("trace pairing: dimension mismatch");
    Rational acc;
    for (std::uint32_t m = 0; m < (1u << theta.n()); ++m) {
        if (mask_parity(m) != Parity::Even) continue;
        const Integer& c = x.coord(m);
        if (c == 0) continue;
        acc += Rational(c) * pfaffian(theta.restrict_to(m));
    }
    return acc;
}

TraceRange trace_range(const SkewMatrix& theta) {
    if (!theta.inner().rows()) return {Rational(1)};
    Rational g;
    for (std::uint32_t m = 0; m < (1u << theta.n()); ++m) {
        if (mask_parity(m) != Parity::Even) continue;
        g = rational_gcd(g, pfaffian(theta.restrict_to(m)));
    }
    return {g};
}

namespace {

bool is_rho_pattern(const GroupElement& g) { return g.B().is_zero() && g.C().is_zero(); }
bool is_nu_pattern(const GroupElement& g) {
    return g.A().is_identity() && g.D().is_identity() && g.C().is_zero();
}
bool is_mu_pattern(const GroupElement& g) {
    return g.A().is_identity() && g.D().is_identity() && g.B().is_zero();
}

} // namespace

Rational morita_trace_check(const SkewMatrix& theta, const GroupElement& g) {
    SkewMatrix moved = act(g, theta); // OutsideDomain if undefined
    Rational before = trace_range(theta).generator;
    Rational after = trace_range(moved).generator;
    Rational c = after / before;
    if ((is_rho_pattern(g) || is_nu_pattern(g) || is_mu_pattern(g)) && c != Rational(1))
        throw ViolationError("trace range moved under a rho/nu/mu generator");
    return c;
}

RatMatrix induced_k_action(const GroupElement& g, std::size_t max_n) {
    if (!g.is_special()) throw InputError("induced action requires g in SO(n,n|Z)");
    // the state-side operator (transposed blocks, as in projective_act);
    // its inverse-transpose is then a projective homomorphism on the dual
    OperatorMatrix u = intertwiner_blocks(g.A().transpose(), g.C().transpose(),
                                          g.B().transpose(), g.D().transpose(), max_n);
    RatMatrix dual = invert(u.matrix()).transpose();

    // unique positive scale making the matrix integral with content 1
    Integer den_lcm = 1, num_gcd = 0;
    for (std::size_t i = 0; i < dual.rows(); ++i)
        for (std::size_t j = 0; j < dual.cols(); ++j)
            if (!dual(i, j).is_zero()) den_lcm = integer_lcm(den_lcm, dual(i, j).den());
    RatMatrix scaled = Rational(den_lcm) * dual;
    for (std::size_t i = 0; i < scaled.rows(); ++i)
        for (std::size_t j = 0; j < scaled.cols(); ++j)
            num_gcd = integer_gcd(num_gcd, scaled(i, j).num());
    if (num_gcd == 0) throw InternalAssertionFailure("induced action is the zero matrix");
    scaled = Rational(Integer(1), num_gcd) * scaled;

    if (!scaled.is_integer())
        throw NonIntegralAction("induced dual action is not integral");
    Rational dt = det(scaled);
    if (dt != Rational(1) && dt != Rational(-1))
        throw NonIntegralAction("induced dual action does not preserve the lattice");
    for (std::size_t i = 0; i < scaled.rows(); ++i)
        for (std::size_t j = 0; j < scaled.cols(); ++j)
            if (mask_parity(static_cast<std::uint32_t>(i)) !=
                    mask_parity(static_cast<std::uint32_t>(j)) &&
                !scaled(i, j).is_zero())
                throw NonIntegralAction("induced dual action mixes parities");
    return scaled;
}

Mat3 wedge_square_i64(const Mat3& a) {
    auto at = [&](int i, int j) { return a[3 * i + j]; };
    // basis pairs for rows/columns: (0,1), (0,2), (1,2)
    constexpr int pair[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    Mat3 w{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            int i = pair[r][0], j = pair[r][1];
            int k = pair[c][0], l = pair[c][1];
            w[3 * r + c] = at(i, k) * at(j, l) - at(i, l) * at(j, k);
        }
    return w;
}

long long det_i64(const Mat3& a) {
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

RatMatrix wedge_square(const RatMatrix& a) {
    if (a.rows() != 3 || a.cols() != 3) throw WrongDimension("wedge square needs a 3 x 3 matrix");
    if (!a.is_integer()) throw InputError("wedge square needs integer entries");
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[3 * i + j] = a(i, j).num().get_si();
    Mat3 w = wedge_square_i64(m);
    RatMatrix out(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out(i, j) = Rational(static_cast<long>(w[3 * i + j]));
    return out;
}

CounterexampleReport counterexample_search(long long bound, const Mat3& target,
                                           unsigned workers) {
    if (bound < 1) throw InputError("search bound must be >= 1");
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    const long long width = 2 * bound + 1;

    // lexicographic chunks over the first entry pair (a11, a12)
    const long long lead_count = width * width;
    std::vector<CounterexampleReport> partial(workers);
    auto run = [&](unsigned w) {
        CounterexampleReport& rep = partial[w];
        Mat3 a{};
        for (long long lead = w; lead < lead_count; lead += workers) {
            a[0] = lead / width - bound;
            a[1] = lead % width - bound;
            // remaining 7 entries, odometer-style
            std::array<long long, 7> rest;
            rest.fill(-bound);
            while (true) {
                for (int t = 0; t < 7; ++t) a[2 + t] = rest[t];
                rep.checked += 1;
                if (wedge_square_i64(a) == target) rep.hits.push_back(a);
                int t = 6;
                while (t >= 0 && rest[t] == bound) rest[t--] = -bound;
                if (t < 0) break;
                rest[t] += 1;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();

    CounterexampleReport merged;
    merged.bound = bound;
    for (const auto& p : partial) {
        merged.checked += p.checked;
        merged.hits.insert(merged.hits.end(), p.hits.begin(), p.hits.end());
    }
    // hits are rare; restore global lexicographic order directly
    std::sort(merged.hits.begin(), merged.hits.end());
    return merged;
}

} // namespace nct
