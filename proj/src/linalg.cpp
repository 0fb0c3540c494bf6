#include "toral/linalg.hpp"

#include <cstddef>
#include <utility>

namespace toral {

namespace {

constexpr char const * kModule = "exact-linalg";

// row_i <- row_i - q * row_k, on columns [from, cols)
void sub_row_multiple(IntMat & m, std::size_t i, std::size_t k, mpz_class const & q, std::size_t from = 0)
{
    if (q == 0) return;
    for (std::size_t j = from; j < m.cols(); ++j)
        m(i, j) -= q * m(k, j);
}

void negate_row(IntMat & m, std::size_t i)
{
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = -m(i, j);
}

// Replace rows (r, i) of m by (s*r + t*i, x*r + y*i).
void combine_rows(IntMat & m, std::size_t r, std::size_t i, mpz_class const & s, mpz_class const & t,
                  mpz_class const & x, mpz_class const & y)
{
    mpz_class a, b;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        a = s * m(r, j) + t * m(i, j);
        b = x * m(r, j) + y * m(i, j);
        m(r, j) = a;
        m(i, j) = b;
    }
}

} // namespace

mpz_class floor_div(mpz_class const & a, mpz_class const & b)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

mpz_class content(IntVec const & v)
{
    mpz_class g = 0;
    for (auto const & x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

mpz_class common_denominator(std::vector<mpq_class> const & v)
{
    mpz_class d = 1;
    for (auto const & x : v)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    return d;
}

mpz_class common_denominator(RatMat const & m) { return common_denominator(m.entries()); }

mpz_class det(IntMat const & m)
{
    if (!m.is_square())
        throw PreconditionError(kModule, "determinant of non-square matrix");
    std::size_t const n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

mpq_class det(RatMat const & m)
{
    if (!m.is_square())
        throw PreconditionError(kModule, "determinant of non-square matrix");
    mpz_class const d = common_denominator(m);
    std::size_t const n = m.rows();
    IntMat scaled(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class x = m(i, j) * d;
            scaled(i, j) = x.get_num();
        }
    mpz_class dn;
    mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), n);
    mpq_class r(det(scaled), dn);
    r.canonicalize();
    return r;
}

IntVec charpoly(IntMat const & m) { return charpoly_berkowitz(m); }

HnfResult hnf(IntMat const & m)
{
    std::size_t const rows = m.rows(), cols = m.cols();
    HnfResult res{m, IntMat::identity(rows), 0, {}};
    IntMat & h = res.h;
    IntMat & u = res.u;
    std::size_t r = 0;
    mpz_class g, s, t, x, y;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (h(i, c) == 0) continue;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, c).get_mpz_t(), h(i, c).get_mpz_t());
            // [[s, t], [-b/g, a/g]] has determinant 1
            mpz_divexact(x.get_mpz_t(), h(i, c).get_mpz_t(), g.get_mpz_t());
            x = -x;
            mpz_divexact(y.get_mpz_t(), h(r, c).get_mpz_t(), g.get_mpz_t());
            combine_rows(h, r, i, s, t, x, y);
            combine_rows(u, r, i, s, t, x, y);
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            negate_row(h, r);
            negate_row(u, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            mpz_class const q = floor_div(h(i, c), h(r, c));
            sub_row_multiple(h, i, r, q);
            sub_row_multiple(u, i, r, q);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

IntMat kernel_lattice(IntMat const & m)
{
    auto const res = hnf(m);
    std::size_t const k = m.rows() - res.rank;
    if (k == 0) return IntMat(0, m.rows());
    auto const kh = hnf(res.u.block(res.rank, 0, k, m.rows()));
    return kh.h.block(0, 0, kh.rank, m.rows());
}

std::optional<IntegerSolution> solve_integer(IntMat const & m, IntVec const & b)
{
    if (b.size() != m.cols())
        throw PreconditionError(kModule, "right-hand side length mismatch");
    auto const res = hnf(m);
    IntVec residual = b;
    IntVec y(m.rows(), mpz_class(0));
    for (std::size_t k = 0; k < res.rank; ++k) {
        std::size_t const c = res.pivots[k];
        if (!mpz_divisible_p(residual[c].get_mpz_t(), res.h(k, c).get_mpz_t()))
            return std::nullopt;
        mpz_divexact(y[k].get_mpz_t(), residual[c].get_mpz_t(), res.h(k, c).get_mpz_t());
        for (std::size_t j = c; j < m.cols(); ++j)
            residual[j] -= y[k] * res.h(k, j);
    }
    for (auto const & e : residual)
        if (e != 0) return std::nullopt;

    IntegerSolution sol{y * res.u, IntMat(0, m.rows())};
    std::size_t const k = m.rows() - res.rank;
    if (k > 0) {
        auto const kh = hnf(res.u.block(res.rank, 0, k, m.rows()));
        sol.kernel = kh.h.block(0, 0, kh.rank, m.rows());
        for (std::size_t i = 0; i < kh.rank; ++i) {
            std::size_t const c = kh.pivots[i];
            mpz_class const q = floor_div(sol.particular[c], sol.kernel(i, c));
            if (q == 0) continue;
            for (std::size_t j = 0; j < m.rows(); ++j)
                sol.particular[j] -= q * sol.kernel(i, j);
        }
    }
    return sol;
}

namespace {

// Gauss-Jordan on the augmented system; returns pivot columns.
std::vector<std::size_t> rref(RatMat & a, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        mpq_class const inv = 1 / a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            mpq_class const f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::optional<RatVec> solve_rational(RatMat const & m, RatVec const & b)
{
    if (b.size() != m.cols())
        throw PreconditionError(kModule, "right-hand side length mismatch");
    // x * m = b  <=>  m^T x^T = b^T
    std::size_t const nv = m.rows();
    RatMat aug(m.cols(), nv + 1);
    for (std::size_t i = 0; i < m.cols(); ++i) {
        for (std::size_t j = 0; j < nv; ++j)
            aug(i, j) = m(j, i);
        aug(i, nv) = b[i];
    }
    auto const piv = rref(aug, nv);
    for (std::size_t i = piv.size(); i < aug.rows(); ++i)
        if (aug(i, nv) != 0) return std::nullopt;
    RatVec x(nv, mpq_class(0));
    for (std::size_t k = 0; k < piv.size(); ++k)
        x[piv[k]] = aug(k, nv);
    return x;
}

std::optional<RatMat> inverse(RatMat const & m)
{
    if (!m.is_square())
        throw PreconditionError(kModule, "inverse of non-square matrix");
    std::size_t const n = m.rows();
    RatMat aug = hstack(m, RatMat::identity(n));
    auto const piv = rref(aug, n);
    if (piv.size() < n) return std::nullopt;
    return aug.block(0, n, n, n);
}

std::size_t rank(RatMat const & m)
{
    RatMat a = m;
    return rref(a, a.cols()).size();
}

RatMat to_rational(IntMat const & m)
{
    RatMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j);
    return r;
}

std::optional<IntMat> to_integer(RatMat const & m)
{
    IntMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) return std::nullopt;
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

bool is_unimodular(IntMat const & m)
{
    if (!m.is_square()) return false;
    mpz_class const d = det(m);
    return d == 1 || d == -1;
}

std::optional<IntMat> unimodular_inverse(IntMat const & m)
{
    if (!m.is_square()) return std::nullopt;
    mpz_class const d = det(m);
    if (d != 1 && d != -1) return std::nullopt;
    IntMat a = adjugate(m);
    if (d == -1) a = -a;
    return a;
}

} // namespace toral

namespace toral {

namespace {

mpz_class round_half_up(mpq_class const & q)
{
    return floor_div(2 * q.get_num() + q.get_den(), 2 * q.get_den());
}

mpq_class dot(RatVec const & a, RatVec const & b)
{
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

struct Gso {
    std::vector<RatVec> star;
    std::vector<mpq_class> norms;
    RatMat mu;
};

Gso gram_schmidt(IntMat const & b)
{
    std::size_t const n = b.rows();
    Gso g{{}, {}, RatMat(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        RatVec bi(b.cols());
        for (std::size_t c = 0; c < b.cols(); ++c)
            bi[c] = b(i, c);
        RatVec s = bi;
        for (std::size_t j = 0; j < i; ++j) {
            g.mu(i, j) = dot(bi, g.star[j]) / g.norms[j];
            for (std::size_t c = 0; c < s.size(); ++c)
                s[c] -= g.mu(i, j) * g.star[j][c];
        }
        g.norms.push_back(dot(s, s));
        if (g.norms.back() == 0) throw PreconditionError("exact-linalg", "LLL needs linearly independent rows");
        g.star.push_back(std::move(s));
    }
    return g;
}

void size_reduce(IntMat & b, Gso & g, std::size_t k, std::size_t l)
{
    mpz_class const q = round_half_up(g.mu(k, l));
    if (q == 0) return;
    for (std::size_t c = 0; c < b.cols(); ++c)
        b(k, c) -= q * b(l, c);
    for (std::size_t j = 0; j < l; ++j)
        g.mu(k, j) -= q * g.mu(l, j);
    g.mu(k, l) -= q;
}

} // namespace

IntMat lll_reduce(IntMat const & rows)
{
    IntMat b = rows;
    std::size_t const n = b.rows();
    if (n < 2) return b;
    Gso g = gram_schmidt(b);
    mpq_class const delta(3, 4);
    std::size_t k = 1;
    while (k < n) {
        size_reduce(b, g, k, k - 1);
        if (g.norms[k] < (delta - g.mu(k, k - 1) * g.mu(k, k - 1)) * g.norms[k - 1]) {
            b.swap_rows(k, k - 1);
            g = gram_schmidt(b);
            if (k > 1) --k;
        } else {
            for (std::size_t l = k - 1; l-- > 0;)
                size_reduce(b, g, k, l);
            ++k;
        }
    }
    return b;
}

} // namespace toral
