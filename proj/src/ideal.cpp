#include "toral/ideal.hpp"

#include <random>
#include <sstream>

#include "toral/kernels.hpp"

namespace toral {

namespace {

constexpr char const * kModule = "ideal-arith";

struct Canonical {
    mpz_class den;
    IntMat basis; // rank rows in row HNF
};

Canonical canonicalize(RatMat const & rows)
{
    mpz_class const d = common_denominator(rows);
    IntMat z(rows.rows(), rows.cols());
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) {
            mpq_class const x = rows(i, j) * d;
            z(i, j) = x.get_num();
        }
    auto const h = hnf(z);
    IntMat b = h.h.block(0, 0, h.rank, rows.cols());
    mpz_class g = d;
    for (auto const & e : b.entries())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            mpz_divexact(b(i, j).get_mpz_t(), b(i, j).get_mpz_t(), g.get_mpz_t());
    return {d / g, std::move(b)};
}

RatMat to_rows(mpz_class const & den, IntMat const & basis)
{
    RatMat r = to_rational(basis);
    mpq_class const inv(1, den);
    r *= inv;
    return r;
}

// Coordinates y with y * h = target, h square upper triangular with positive diagonal.
std::optional<IntVec> triangular_solve(IntMat const & h, RatVec const & target)
{
    std::size_t const n = h.rows();
    IntVec y(n);
    RatVec r = target;
    for (std::size_t c = 0; c < n; ++c) {
        mpq_class const q = r[c] / h(c, c);
        if (q.get_den() != 1) return std::nullopt;
        y[c] = q.get_num();
        for (std::size_t j = c; j < n; ++j)
            r[j] -= y[c] * h(c, j);
    }
    return y;
}

RatMat element_rows(FieldVec const & v) { return coordinate_matrix(v); }

} // namespace

FracIdeal FracIdeal::from_rows(MinPolyPtr ctx, RatMat const & rows)
{
    std::size_t const n = ctx->degree();
    if (rows.cols() != n) throw PreconditionError(kModule, "lattice rows have the wrong length");
    auto c = canonicalize(rows);
    if (c.basis.rows() != n) throw InputError(kModule, "lattice is not of full rank");
    FracIdeal I;
    I.ctx_ = std::move(ctx);
    I.den_ = std::move(c.den);
    I.basis_ = std::move(c.basis);
    return I;
}

FracIdeal FracIdeal::from_elements(MinPolyPtr ctx, FieldVec const & gens)
{
    if (gens.empty()) throw InputError(kModule, "no generators given");
    std::size_t const n = ctx->degree();
    FieldElem const b = FieldElem::beta(ctx);
    Canonical cur = canonicalize(element_rows(gens));
    while (true) {
        RatMat rows = to_rows(cur.den, cur.basis);
        FieldVec elems;
        for (std::size_t i = 0; i < rows.rows(); ++i)
            elems.push_back(b * FieldElem(ctx, rows.row(i)));
        Canonical next = canonicalize(vstack(rows, element_rows(elems.empty() ? gens : elems)));
        if (next.den == cur.den && next.basis == cur.basis) break;
        cur = std::move(next);
    }
    if (cur.basis.rows() != n)
        throw InputError(kModule, "generators do not span a full-rank lattice after closing under beta");
    FracIdeal I;
    I.ctx_ = std::move(ctx);
    I.den_ = std::move(cur.den);
    I.basis_ = std::move(cur.basis);
    return I;
}

FracIdeal FracIdeal::unit(MinPolyPtr ctx)
{
    std::size_t const n = ctx->degree();
    return from_rows(std::move(ctx), RatMat::identity(n));
}

RatMat FracIdeal::rational_basis() const { return to_rows(den_, basis_); }

FieldVec FracIdeal::elements() const
{
    RatMat const r = rational_basis();
    FieldVec v;
    for (std::size_t i = 0; i < r.rows(); ++i)
        v.emplace_back(ctx_, r.row(i));
    return v;
}

std::optional<IntVec> FracIdeal::coordinates(FieldElem const & x) const
{
    RatVec t = x.coords();
    for (auto & e : t)
        e *= den_;
    return triangular_solve(basis_, t);
}

bool FracIdeal::contains(FieldElem const & x) const { return coordinates(x).has_value(); }

bool FracIdeal::contains(FracIdeal const & other) const
{
    for (auto const & e : other.elements())
        if (!contains(e)) return false;
    return true;
}

bool FracIdeal::is_beta_closed() const
{
    FieldElem const b = FieldElem::beta(ctx_);
    for (auto const & e : elements())
        if (!contains(b * e)) return false;
    return true;
}

mpq_class FracIdeal::covolume() const
{
    mpz_class p = 1;
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        p *= basis_(i, i);
    mpz_class dn;
    mpz_pow_ui(dn.get_mpz_t(), den_.get_mpz_t(), basis_.rows());
    mpq_class r(p, dn);
    r.canonicalize();
    return r;
}

FracIdeal FracIdeal::scaled(FieldElem const & alpha) const
{
    if (alpha.is_zero()) throw PreconditionError(kModule, "scaling an ideal by zero");
    return from_rows(ctx_, element_rows(scale(alpha, elements())));
}

std::string FracIdeal::to_string() const
{
    std::ostringstream os;
    os << "(1/" << den_ << ") " << basis_;
    return os.str();
}

OrderRing OrderRing::verified(FracIdeal lattice)
{
    auto const one = FieldElem::one(lattice.ctx());
    if (!lattice.contains(one)) throw VerificationError(kModule, "order does not contain 1");
    auto const e = lattice.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i; j < e.size(); ++j)
            if (!lattice.contains(e[i] * e[j])) throw VerificationError(kModule, "order is not closed under products");
    if (!lattice.contains(FieldElem::beta(lattice.ctx())))
        throw VerificationError(kModule, "order does not contain beta");
    return OrderRing(std::move(lattice));
}

FracIdeal ideal_from_elements(FieldVec const & gens) { return FracIdeal::from_elements(gens); }

FracIdeal ideal_from_elements(FieldVec const & gens, OrderRing const & scalars)
{
    if (gens.empty()) throw InputError(kModule, "no generators given");
    FieldVec prods;
    for (auto const & g : gens)
        for (auto const & r : scalars.lattice().elements())
            prods.push_back(g * r);
    return FracIdeal::from_elements(prods);
}

FracIdeal ideal_mul(FracIdeal const & a, FracIdeal const & b)
{
    if (!(*a.ctx() == *b.ctx())) throw PreconditionError(kModule, "ideals from different fields");
    FieldVec prods;
    auto const ea = a.elements();
    auto const eb = b.elements();
    for (auto const & x : ea)
        for (auto const & y : eb)
            prods.push_back(x * y);
    return FracIdeal::from_rows(a.ctx(), element_rows(prods));
}

FracIdeal ideal_power(FracIdeal const & a, unsigned k)
{
    FracIdeal r = FracIdeal::unit(a.ctx());
    for (unsigned i = 0; i < k; ++i)
        r = ideal_mul(r, a);
    return r;
}

namespace {

// Intersection of two full-rank row lattices given as rational matrices.
RatMat intersect_rows(RatMat const & a, RatMat const & b)
{
    std::size_t const n = a.cols();
    mpz_class const d = common_denominator(vstack(a, b));
    IntMat za(a.rows(), n), zb(b.rows(), n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class const x = a(i, j) * d;
            za(i, j) = x.get_num();
        }
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class const x = b(i, j) * d;
            zb(i, j) = x.get_num();
        }
    // (x, y) with x za = y zb
    IntMat const k = kernel_lattice(vstack(za, -zb));
    IntMat const xs = k.block(0, 0, k.rows(), a.rows());
    RatMat r = to_rational(xs * za);
    mpq_class const inv(1, d);
    r *= inv;
    return r;
}

} // namespace

FracIdeal lattice_intersection(FracIdeal const & a, FracIdeal const & b)
{
    return FracIdeal::from_rows(a.ctx(), intersect_rows(a.rational_basis(), b.rational_basis()));
}

FracIdeal ideal_quotient(FracIdeal const & j, FracIdeal const & i)
{
    if (!(*j.ctx() == *i.ctx())) throw PreconditionError(kModule, "ideals from different fields");
    RatMat const lj = j.rational_basis();
    std::optional<RatMat> acc;
    for (auto const & u : i.elements()) {
        // coords(x) * reg(u) in L_J  <=>  coords(x) in L_J * reg(u)^-1
        auto inv = inverse(u.regular());
        if (!inv) throw PreconditionError(kModule, "ideal basis element is not invertible");
        RatMat pre = lj * *inv;
        acc = acc ? intersect_rows(*acc, pre) : pre;
    }
    return FracIdeal::from_rows(j.ctx(), *acc);
}

OrderRing coefficient_ring(FracIdeal const & i) { return OrderRing::verified(ideal_quotient(i, i)); }

bool is_invertible(FracIdeal const & i)
{
    FracIdeal const r = ideal_quotient(i, i);
    return ideal_mul(i, ideal_quotient(r, i)) == r;
}

bool is_weakly_equivalent(FracIdeal const & i, FracIdeal const & j)
{
    FracIdeal const r = ideal_quotient(i, i);
    if (ideal_quotient(j, j) != r) return false;
    return ideal_mul(ideal_quotient(i, j), ideal_quotient(j, i)) == r;
}

std::optional<FieldElem> is_arith_equivalent_bounded(FracIdeal const & i, FracIdeal const & j, std::int64_t bound,
                                                     ArithSearchStats * stats, bool parallel)
{
    if (!(*j.ctx() == *i.ctx())) throw PreconditionError(kModule, "ideals from different fields");
    if (bound < 1) throw InputError(kModule, "search bound must be positive");
    ArithSearchStats local;
    ArithSearchStats & st = stats ? *stats : local;
    st = {};

    // rational scalar: canonical bases are proportional
    {
        mpq_class c(j.basis()(0, 0) * i.den(), i.basis()(0, 0) * j.den());
        c.canonicalize();
        if (i.scaled(FieldElem::integer(i.ctx(), c)) == j) return FieldElem::integer(i.ctx(), c);
    }

    std::size_t const n = i.degree();
    FracIdeal const q = ideal_quotient(j, i);
    // box coordinates refer to an LLL-reduced basis of (J:I)
    IntMat const red = lll_reduce(q.basis());
    FieldVec qb;
    for (std::size_t k = 0; k < n; ++k) {
        RatVec c(n);
        for (std::size_t m = 0; m < n; ++m)
            c[m] = mpq_class(red(k, m), q.den());
        for (auto & x : c)
            x.canonicalize();
        qb.emplace_back(i.ctx(), c);
    }
    // T_k = D * regular(q_k), so det(sum c_k T_k) = D^n N(alpha)
    std::vector<RatMat> regs;
    mpz_class d = 1;
    for (auto const & e : qb) {
        regs.push_back(e.regular());
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), common_denominator(regs.back()).get_mpz_t());
    }
    std::vector<IntMat> t;
    for (auto const & r : regs) {
        RatMat s = r;
        s *= mpq_class(d);
        t.push_back(*to_integer(s));
    }
    mpz_class dn;
    mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), n);
    mpq_class const target_q = dn * j.covolume() / i.covolume();
    if (target_q.get_den() != 1) return std::nullopt;
    mpz_class const target = target_q.get_num();

    auto element_of = [&](std::vector<std::int64_t> const & c) {
        FieldElem a = FieldElem::zero(i.ctx());
        for (std::size_t k = 0; k < n; ++k)
            if (c[k] != 0) a += mpq_class(static_cast<long>(c[k])) * qb[k];
        return a;
    };

    for (std::int64_t s = 1; s <= bound; ++s) {
        st.shells = s;
        std::uint64_t const size = shell_size(n, s);
        auto pred = [&](std::uint64_t idx) {
            auto const c = shell_point(n, s, idx);
            IntMat m(n, n);
            for (std::size_t k = 0; k < n; ++k) {
                if (c[k] == 0) continue;
                mpz_class const ck = static_cast<long>(c[k]);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        m(a, b) += ck * t[k](a, b);
            }
            mpz_class dt = det(m);
            if (dt < 0) dt = -dt;
            if (dt != target) return false;
            return i.scaled(element_of(c)) == j;
        };
        auto const hit = parallel ? first_hit_parallel(size, pred) : first_hit_serial(size, pred);
        if (hit) {
            st.candidates += *hit + 1;
            return element_of(shell_point(n, s, *hit));
        }
        st.candidates += size;
    }
    return std::nullopt;
}

namespace {

std::optional<PartitionOfUnity> solve_for_b(FieldElem const & a1, FieldElem const & a2, FieldVec const & xb)
{
    std::size_t const n = xb.size();
    auto ctx = a1.ctx();
    RatMat m(2 * n, n);
    for (std::size_t k = 0; k < n; ++k) {
        m.set_row(k, (a1 * xb[k]).coords());
        m.set_row(n + k, (a2 * xb[k]).coords());
    }
    mpz_class const d = common_denominator(m);
    m *= mpq_class(d);
    IntMat const zm = *to_integer(m);
    IntVec rhs(n, mpz_class(0));
    rhs[0] = d;
    auto sol = solve_integer(zm, rhs);
    if (!sol) return std::nullopt;
    FieldElem b1 = FieldElem::zero(ctx), b2 = FieldElem::zero(ctx);
    for (std::size_t k = 0; k < n; ++k) {
        b1 += mpq_class(sol->particular[k]) * xb[k];
        b2 += mpq_class(sol->particular[n + k]) * xb[k];
    }
    return PartitionOfUnity{a1, a2, b1, b2};
}

FieldElem combo(FieldVec const & basis, std::vector<long> const & c)
{
    FieldElem a = FieldElem::zero(basis.front().ctx());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (c[k] != 0) a += mpq_class(c[k]) * basis[k];
    return a;
}

} // namespace

PartitionOfUnity two_term_partition_of_unity(FracIdeal const & x, FracIdeal const & y, OrderRing const & r,
                                             std::uint64_t seed)
{
    if (ideal_mul(x, y) != r.lattice()) throw PreconditionError(kModule, "partition of unity needs XY = R");
    auto ctx = x.ctx();
    FieldVec const xb = x.elements();
    FieldVec const yb = y.elements();
    std::size_t const n = xb.size();
    FieldElem const zero = FieldElem::zero(ctx);
    FieldElem const one = FieldElem::one(ctx);

    if (x.contains(one) && y.contains(one)) return {one, zero, one, zero};
    // one generator whose inverse lies in X
    for (auto const & a : yb) {
        FieldElem const inv = a.inverse();
        if (x.contains(inv)) return {a, zero, inv, zero};
    }
    // pairs of basis elements of Y
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            if (auto s = solve_for_b(yb[p], yb[q], xb)) return *s;
    // seeded random small combinations
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-3, 3);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<long> c1(n), c2(n);
        for (auto & e : c1)
            e = dist(rng);
        for (auto & e : c2)
            e = dist(rng);
        FieldElem const a1 = combo(yb, c1), a2 = combo(yb, c2);
        if (a1.is_zero() && a2.is_zero()) continue;
        if (auto s = solve_for_b(a1, a2, xb)) return *s;
    }
    // exhaustive shells over (a1, a2) coordinates
    for (std::int64_t s = 1; s <= 4; ++s) {
        std::uint64_t const size = shell_size(2 * n, s);
        for (std::uint64_t idx = 0; idx < size; ++idx) {
            auto const c = shell_point(2 * n, s, idx);
            std::vector<long> c1(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n));
            std::vector<long> c2(c.begin() + static_cast<std::ptrdiff_t>(n), c.end());
            if (auto sol = solve_for_b(combo(yb, c1), combo(yb, c2), xb)) return *sol;
        }
    }
    throw PreconditionError(kModule, "no two-term partition of unity found; is XY = R?");
}

DtzFixture dtz_fixture(ZPoly const & g_in)
{
    ZPoly g = g_in;
    trim(g);
    if (g.size() < 4) throw InputError(kModule, "the non-invertible example needs degree >= 3");
    if (g.back() != 1) throw InputError(kModule, "theta must be an algebraic integer (monic polynomial)");
    std::size_t const m = g.size() - 1;
    ZPoly f(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, m - k);
        f[k] = g[k] * p;
    }
    auto ctx = MinPoly::create(f);
    FieldElem const theta = mpq_class(1, 2) * FieldElem::beta(ctx);
    FieldVec r0, rr, ii;
    for (std::size_t k = 0; k < m; ++k) {
        FieldElem const tk = theta.pow(static_cast<unsigned>(k));
        r0.push_back(tk);
        rr.push_back(k == 0 ? tk : mpq_class(2) * tk);
        ii.push_back(k <= 1 ? tk : mpq_class(2) * tk);
    }
    return DtzFixture{ctx, theta, OrderRing::verified(FracIdeal::from_rows(ctx, coordinate_matrix(r0))),
                      OrderRing::verified(FracIdeal::from_rows(ctx, coordinate_matrix(rr))),
                      FracIdeal::from_rows(ctx, coordinate_matrix(ii))};
}

} // namespace toral
