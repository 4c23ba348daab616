#include "nct/grassmann.hpp"

#include <algorithm>
#include <bit>

namespace nct {

namespace {

void check_n(std::size_t n, std::size_t max_n) {
    if (n > max_n) throw InputError("dimension exceeds the configured Grassmann cap");
}

} // namespace

GrassmannElement::GrassmannElement(std::size_t n) : n_(n), coeff_(std::size_t(1) << n) {
    check_n(n, 16); // hard memory bound; the solver cap is separate
}

GrassmannElement GrassmannElement::one(std::size_t n) {
    GrassmannElement e(n);
    e.coeff_[0] = 1;
    return e;
}

GrassmannElement GrassmannElement::generator(std::size_t n, std::size_t j) {
    if (j < 1 || j > n) throw IndexOutOfRange("generator index out of range");
    GrassmannElement e(n);
    e.coeff_[std::size_t(1) << (j - 1)] = 1;
    return e;
}

bool GrassmannElement::is_zero() const {
    for (const auto& v : coeff_)
        if (!v.is_zero()) return false;
    return true;
}

GrassmannElement GrassmannElement::operator-() const {
    GrassmannElement e(n_);
    for (std::size_t i = 0; i < coeff_.size(); ++i) e.coeff_[i] = -coeff_[i];
    return e;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
    if (n_ != o.n_) throw DimensionMismatch("adding Grassmann elements of different n");
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
    if (n_ != o.n_) throw DimensionMismatch("subtracting Grassmann elements of different n");
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    return *this;
}

GrassmannElement operator*(const Rational& s, GrassmannElement e) {
    for (auto& v : e.coeff_) v *= s;
    return e;
}

int merge_sign(std::uint32_t s, std::uint32_t t) {
    // number of pairs (x in s, y in t) with x > y
    int inversions = 0;
    while (t) {
        std::uint32_t low = t & (~t + 1);
        int idx = std::countr_zero(low);
        inversions += std::popcount(s >> (idx + 1));
        t ^= low;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

GrassmannElement wedge(const GrassmannElement& a, const GrassmannElement& b) {
    if (a.n() != b.n()) throw DimensionMismatch("wedge of elements with different n");
    GrassmannElement out(a.n());
    std::size_t dim = a.dim();
    for (std::uint32_t s = 0; s < dim; ++s) {
        if (a.coeff(s).is_zero()) continue;
        for (std::uint32_t t = 0; t < dim; ++t) {
            if ((s & t) != 0 || b.coeff(t).is_zero()) continue;
            Rational v = a.coeff(s) * b.coeff(t);
            if (merge_sign(s, t) < 0) v = -v;
            out.set_coeff(s | t, out.coeff(s | t) + v);
        }
    }
    return out;
}

OperatorMatrix::OperatorMatrix(std::size_t n, RatMatrix m) : n_(n), m_(std::move(m)) {
    std::size_t dim = std::size_t(1) << n;
    if (m_.rows() != dim || m_.cols() != dim)
        throw DimensionMismatch("operator matrix must be 2^n x 2^n");
}

OperatorMatrix OperatorMatrix::zero(std::size_t n) {
    return {n, RatMatrix(std::size_t(1) << n, std::size_t(1) << n)};
}

OperatorMatrix OperatorMatrix::identity(std::size_t n) {
    return {n, RatMatrix::identity(std::size_t(1) << n)};
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
    if (n_ != o.n_) throw DimensionMismatch("adding operators of different n");
    m_ += o.m_;
    return *this;
}

OperatorMatrix operator*(const Rational& s, OperatorMatrix m) {
    m.m_ = s * m.m_;
    return m;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("composing operators of different n");
    return {a.n_, a.m_ * b.m_};
}

GrassmannElement OperatorMatrix::apply(const GrassmannElement& w) const {
    if (w.n() != n_) throw DimensionMismatch("operator applied to element of different n");
    GrassmannElement out(n_);
    std::size_t d = dim();
    for (std::uint32_t c = 0; c < d; ++c) {
        if (w.coeff(c).is_zero()) continue;
        for (std::uint32_t r = 0; r < d; ++r) {
            const Rational& m = m_(r, c);
            if (m.is_zero()) continue;
            out.set_coeff(r, out.coeff(r) + m * w.coeff(c));
        }
    }
    return out;
}

OperatorMatrix creation(std::size_t n, std::size_t j) {
    if (j < 1 || j > n) throw IndexOutOfRange("creation index out of range");
    OperatorMatrix op = OperatorMatrix::zero(n);
    std::uint32_t bit = 1u << (j - 1);
    std::uint32_t dim = 1u << n;
    for (std::uint32_t s = 0; s < dim; ++s) {
        if (s & bit) continue;
        int sign = (std::popcount(s & (bit - 1)) % 2 == 0) ? 1 : -1;
        op(s | bit, s) = Rational(sign);
    }
    return op;
}

OperatorMatrix annihilation(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) throw IndexOutOfRange("annihilation index out of range");
    OperatorMatrix op = OperatorMatrix::zero(n);
    std::uint32_t bit = 1u << (k - 1);
    std::uint32_t dim = 1u << n;
    for (std::uint32_t s = 0; s < dim; ++s) {
        if (!(s & bit)) continue;
        int sign = (std::popcount(s & (bit - 1)) % 2 == 0) ? 1 : -1;
        op(s ^ bit, s) = Rational(sign);
    }
    return op;
}

GrassmannElement gaussian_element(const SkewMatrix& theta) {
    std::size_t n = theta.n();
    GrassmannElement quad(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            quad.set_coeff((1u << i) | (1u << j), theta(i, j));
    GrassmannElement acc = GrassmannElement::one(n);
    GrassmannElement term = GrassmannElement::one(n);
    for (long k = 1; k <= static_cast<long>(n / 2); ++k) {
        term = wedge(term, quad);
        term = Rational(1, k) * term;
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

OperatorMatrix clifford_image(const GroupElement& g, std::size_t index) {
    std::size_t n = g.n();
    if (index < 1 || index > 2 * n) throw IndexOutOfRange("clifford generator index");
    OperatorMatrix out = OperatorMatrix::zero(n);
    const RatMatrix& first = index <= n ? g.A() : g.C();
    const RatMatrix& second = index <= n ? g.B() : g.D();
    std::size_t row = index <= n ? index - 1 : index - n - 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (!first(row, j).is_zero()) out += first(row, j) * creation(n, j + 1);
        if (!second(row, j).is_zero()) out += second(row, j) * annihilation(n, j + 1);
    }
    return out;
}

std::vector<std::uint32_t> subset_lex_order(std::size_t n) {
    std::vector<std::uint32_t> masks(std::size_t(1) << n);
    for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
    auto elements = [](std::uint32_t m) {
        std::vector<int> e;
        for (int j = 0; j < 32; ++j)
            if (m & (1u << j)) e.push_back(j);
        return e;
    };
    std::sort(masks.begin(), masks.end(), [&](std::uint32_t x, std::uint32_t y) {
        return elements(x) < elements(y);
    });
    return masks;
}

namespace {

// incremental rref over a handful of unknowns (the vacuum multipliers)
class SmallSolver {
public:
    explicit SmallSolver(std::size_t vars) : vars_(vars) {}

    std::size_t rank() const { return rows_.size(); }

    void add(std::vector<Rational> row) {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational& f = row[pivots_[i]];
            if (f.is_zero()) continue;
            Rational factor = f;
            for (std::size_t j = 0; j < vars_; ++j) row[j] -= factor * rows_[i][j];
        }
        std::size_t lead = vars_;
        for (std::size_t j = 0; j < vars_; ++j)
            if (!row[j].is_zero()) {
                lead = j;
                break;
            }
        if (lead == vars_) return;
        Rational inv_l = Rational(1) / row[lead];
        for (std::size_t j = 0; j < vars_; ++j) row[j] *= inv_l;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Rational f = rows_[i][lead];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < vars_; ++j) rows_[i][j] -= f * row[j];
        }
        rows_.push_back(std::move(row));
        pivots_.push_back(lead);
    }

    /// Basis of the solution space of all added rows.
    std::vector<std::vector<Rational>> kernel() const {
        std::vector<bool> is_pivot(vars_, false);
        for (auto p : pivots_) is_pivot[p] = true;
        std::vector<std::vector<Rational>> out;
        for (std::size_t f = 0; f < vars_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Rational> v(vars_);
            v[f] = 1;
            for (std::size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = -rows_[i][f];
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::size_t vars_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace

OperatorMatrix intertwiner_blocks(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c,
                                  const RatMatrix& d, std::size_t max_n) {
    std::size_t n = a.rows();
    check_n(n, max_n);
    for (const RatMatrix* m : {&a, &b, &c, &d})
        if (m->rows() != n || m->cols() != n)
            throw DimensionMismatch("intertwiner: blocks must be n x n");
    std::uint32_t dim = 1u << n;

    // images of the 2n Clifford generators: rows of [A B; C D] against
    // (creation_1..creation_n, annihilation_1..annihilation_n)
    std::vector<OperatorMatrix> image;
    image.reserve(2 * n);
    for (std::size_t idx = 0; idx < 2 * n; ++idx) {
        const RatMatrix& first = idx < n ? a : c;
        const RatMatrix& second = idx < n ? b : d;
        std::size_t row = idx < n ? idx : idx - n;
        OperatorMatrix op = OperatorMatrix::zero(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (!first(row, j).is_zero()) op += first(row, j) * creation(n, j + 1);
            if (!second(row, j).is_zero()) op += second(row, j) * annihilation(n, j + 1);
        }
        image.push_back(std::move(op));
    }

    // The stacked system image_i U = U gen_i is eliminated in a fixed order.
    // The annihilation equations at the empty column pin the vacuum column:
    // stack image_{n+k} and take the exact nullspace.
    RatMatrix vac(static_cast<std::size_t>(n) * dim, dim);
    for (std::size_t k = 0; k < n; ++k)
        vac.set_block(k * dim, 0, image[n + k].matrix());
    std::vector<RatMatrix> basis = nullspace(vac);
    std::size_t nvars = basis.size();
    if (nvars == 0) throw NoIntertwiner("no joint kernel for the transformed annihilators");

    // Every other column is pinned by a creation equation whose sign is +1
    // when the adjoined index is the smallest element: column(m) =
    // image_i column(m minus lowest bit). Columns are (dim x nvars) blocks
    // of coefficients over the vacuum multipliers.
    std::vector<RatMatrix> column(dim);
    column[0] = RatMatrix(dim, nvars);
    for (std::size_t v = 0; v < nvars; ++v) column[0].set_block(0, v, basis[v]);
    for (std::uint32_t m = 1; m < dim; ++m) {
        int i = std::countr_zero(m);
        column[m] = image[i].matrix() * column[m & (m - 1)];
    }

    // All remaining equations of the stacked system become constraints on
    // the vacuum multipliers.
    SmallSolver solver(nvars);
    auto constrain = [&](const RatMatrix& diff) {
        for (std::size_t r = 0; r < diff.rows() && solver.rank() < nvars; ++r) {
            bool nonzero = false;
            for (std::size_t v = 0; v < nvars; ++v)
                if (!diff(r, v).is_zero()) {
                    nonzero = true;
                    break;
                }
            if (!nonzero) continue;
            std::vector<Rational> row(nvars);
            for (std::size_t v = 0; v < nvars; ++v) row[v] = diff(r, v);
            solver.add(std::move(row));
        }
    };
    for (std::size_t idx = 0; idx < 2 * n && solver.rank() < nvars; ++idx) {
        std::uint32_t bit = 1u << (idx < n ? idx : idx - n);
        bool is_creation = idx < n;
        for (std::uint32_t col = 0; col < dim && solver.rank() < nvars; ++col) {
            RatMatrix lhs = image[idx].matrix() * column[col];
            bool has_target = is_creation ? !(col & bit) : (col & bit);
            if (has_target) {
                std::uint32_t tgt = is_creation ? (col | bit) : (col ^ bit);
                int sign = (std::popcount(col & (bit - 1)) % 2 == 0) ? 1 : -1;
                lhs -= Rational(sign) * column[tgt];
            }
            constrain(lhs);
        }
    }
    if (solver.rank() >= nvars)
        throw NoIntertwiner("the stacked intertwining system has trivial kernel");
    auto kernel = solver.kernel();
    if (kernel.size() != 1)
        throw AmbiguousIntertwiner("intertwining system has kernel dimension > 1");

    RatMatrix u(dim, dim);
    for (std::uint32_t m = 0; m < dim; ++m)
        for (std::uint32_t r = 0; r < dim; ++r) {
            Rational v;
            for (std::size_t t = 0; t < nvars; ++t) v += column[m](r, t) * kernel[0][t];
            u(r, m) = v;
        }

    auto order = subset_lex_order(n);
    Rational lead;
    for (auto r : order) {
        for (auto c2 : order)
            if (!u(r, c2).is_zero()) {
                lead = u(r, c2);
                break;
            }
        if (!lead.is_zero()) break;
    }
    if (lead.is_zero()) throw NoIntertwiner("intertwiner vanished");
    u = (Rational(1) / lead) * u;
    return {n, std::move(u)};
}

OperatorMatrix intertwiner(const GroupElement& g, std::size_t max_n) {
    return intertwiner_blocks(g.A(), g.B(), g.C(), g.D(), max_n);
}

std::pair<SkewMatrix, Rational> projective_act(const GroupElement& g, const SkewMatrix& theta) {
    if (g.n() != theta.n()) throw DimensionMismatch("projective_act: dimension mismatch");
    std::size_t n = g.n();
    // Generators transform contravariantly to coordinates: moving the
    // coefficient matrix of a Gaussian by g means intertwining the
    // transposed element, whose blocks are [[A^t, C^t], [B^t, D^t]].
    OperatorMatrix u = intertwiner_blocks(g.A().transpose(), g.C().transpose(),
                                          g.B().transpose(), g.D().transpose());
    GrassmannElement omega = u.apply(gaussian_element(theta));
    Rational c = omega.coeff(0);
    if (c.is_zero())
        throw DomainFailure("vacuum coefficient of the transformed Gaussian vanishes");

    SkewMatrix theta_prime = SkewMatrix::zero(n);
    Rational inv_c = Rational(1) / c;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            theta_prime.set(i, j, inv_c * omega.coeff((1u << i) | (1u << j)));

    if (!(omega == c * gaussian_element(theta_prime)))
        throw InternalAssertionFailure("transformed state is not Gaussian");
    if (!(theta_prime == act(g, theta)))
        throw InternalAssertionFailure(
            "Grassmann action disagrees with the fractional-linear action");
    return {theta_prime, c};
}

namespace {

GrassmannElement row_operator_applied(const RatMatrix& creation_coeffs,
                                      const RatMatrix& annihilation_coeffs, std::size_t row,
                                      const GrassmannElement& w) {
    std::size_t n = w.n();
    GrassmannElement out(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!creation_coeffs(row, j).is_zero())
            out += creation_coeffs(row, j) * creation(n, j + 1).apply(w);
        if (!annihilation_coeffs(row, j).is_zero())
            out += annihilation_coeffs(row, j) * annihilation(n, j + 1).apply(w);
    }
    return out;
}

} // namespace

bool gaussian_annihilation_identity(const SkewMatrix& theta) {
    std::size_t n = theta.n();
    GrassmannElement gauss = gaussian_element(theta);
    RatMatrix zero(n, n), id(n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
    for (std::size_t i = 0; i < n; ++i) {
        GrassmannElement lhs = annihilation(n, i + 1).apply(gauss);
        GrassmannElement rhs = row_operator_applied(theta.inner(), zero, i, gauss);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

TransformedIdentityReport transformed_gaussian_identity(const GroupElement& g,
                                                        const SkewMatrix& theta) {
    if (g.n() != theta.n())
        throw DimensionMismatch("transformed identity: dimension mismatch");
    std::size_t n = g.n();
    TransformedIdentityReport rep;

    GrassmannElement gauss = gaussian_element(theta);
    RatMatrix zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        GrassmannElement lhs = annihilation(n, i + 1).apply(gauss);
        GrassmannElement rhs = row_operator_applied(theta.inner(), zero, i, gauss);
        if (!(lhs == rhs)) {
            rep.ok = false;
            rep.failed_base.push_back(i + 1);
        }
    }

    GrassmannElement transformed = intertwiner(g).apply(gauss);
    RatMatrix theta_a = theta.inner() * g.A();
    RatMatrix theta_b = theta.inner() * g.B();
    for (std::size_t i = 0; i < n; ++i) {
        GrassmannElement lhs = row_operator_applied(g.C(), g.D(), i, transformed);
        GrassmannElement rhs = row_operator_applied(theta_a, theta_b, i, transformed);
        if (!(lhs == rhs)) {
            rep.ok = false;
            rep.failed_transformed.push_back(i + 1);
        }
    }
    return rep;
}

} // namespace nct
