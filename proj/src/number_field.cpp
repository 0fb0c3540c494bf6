#include "toral/number_field.hpp"

#include <sstream>

namespace toral {

namespace {
constexpr char const * kModule = "number-field";
}

std::shared_ptr<MinPoly const> MinPoly::create(ZPoly coeffs, IrreducibilityPolicy policy)
{
    trim(coeffs);
    if (coeffs.size() < 3) throw InputError(kModule, "minimal polynomial must have degree >= 2");
    if (coeffs.back() != 1) throw InputError(kModule, "minimal polynomial must be monic");
    auto const report = check_irreducible(coeffs);
    auto mp = std::make_shared<MinPoly>();
    mp->f_ = std::move(coeffs);
    switch (report.status) {
    case Irreducibility::Reducible:
        throw InputError(kModule, "polynomial " + to_string(mp->f_) + " is reducible (" + report.method + ")");
    case Irreducibility::Verified:
        mp->verified_ = true;
        mp->method_ = report.method;
        break;
    case Irreducibility::Unknown:
        if (policy == IrreducibilityPolicy::Verify)
            throw InputError(kModule, "could not verify irreducibility of " + to_string(mp->f_) +
                                          "; rerun with --assume-irreducible");
        mp->method_ = "assumed";
        break;
    }
    return mp;
}

IntMat MinPoly::companion() const
{
    std::size_t const n = degree();
    IntMat c(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        c(i, i + 1) = 1;
    for (std::size_t j = 0; j < n; ++j)
        c(n - 1, j) = -f_[j];
    return c;
}

FieldElem::FieldElem(MinPolyPtr ctx, RatVec coords) : ctx_(std::move(ctx)), c_(std::move(coords))
{
    if (!ctx_) throw PreconditionError(kModule, "field element without context");
    if (c_.size() != ctx_->degree()) throw PreconditionError(kModule, "coordinate vector has wrong length");
}

FieldElem FieldElem::zero(MinPolyPtr ctx)
{
    std::size_t const n = ctx->degree();
    return FieldElem(std::move(ctx), RatVec(n, mpq_class(0)));
}

FieldElem FieldElem::one(MinPolyPtr ctx) { return integer(std::move(ctx), 1); }

FieldElem FieldElem::integer(MinPolyPtr ctx, mpq_class const & c)
{
    FieldElem x = zero(std::move(ctx));
    x.c_[0] = c;
    return x;
}

FieldElem FieldElem::beta(MinPolyPtr ctx) { return from_poly(std::move(ctx), QPoly{0, 1}); }

FieldElem FieldElem::from_poly(MinPolyPtr ctx, QPoly const & p)
{
    QPoly r = poly_rem(p, ctx->qcoeffs());
    RatVec c(ctx->degree(), mpq_class(0));
    for (std::size_t i = 0; i < r.size(); ++i)
        c[i] = r[i];
    return FieldElem(std::move(ctx), std::move(c));
}

bool FieldElem::is_zero() const
{
    for (auto const & x : c_)
        if (x != 0) return false;
    return true;
}

QPoly FieldElem::as_poly() const
{
    QPoly p = c_;
    trim(p);
    return p;
}

void FieldElem::check_same(FieldElem const & o) const
{
    if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_))
        throw PreconditionError(kModule, "field elements from different fields");
}

FieldElem & FieldElem::operator+=(FieldElem const & o)
{
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

FieldElem & FieldElem::operator-=(FieldElem const & o)
{
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

FieldElem & FieldElem::operator*=(FieldElem const & o)
{
    check_same(o);
    *this = from_poly(ctx_, poly_mul(as_poly(), o.as_poly()));
    return *this;
}

FieldElem operator-(FieldElem a)
{
    for (auto & x : a.c_)
        x = -x;
    return a;
}

FieldElem operator*(mpq_class const & s, FieldElem a)
{
    for (auto & x : a.c_)
        x *= s;
    return a;
}

bool operator==(FieldElem const & a, FieldElem const & b)
{
    a.check_same(b);
    return a.c_ == b.c_;
}

RatMat FieldElem::regular() const
{
    std::size_t const n = c_.size();
    RatMat m(n, n);
    FieldElem row = *this;
    FieldElem const b = beta(ctx_);
    for (std::size_t k = 0; k < n; ++k) {
        m.set_row(k, row.c_);
        if (k + 1 < n) row *= b;
    }
    return m;
}

FieldElem FieldElem::inverse() const
{
    if (is_zero()) throw PreconditionError(kModule, "inverse of zero");
    RatVec e(c_.size(), mpq_class(0));
    e[0] = 1;
    auto y = solve_rational(regular(), e);
    if (!y) throw PreconditionError(kModule, "element is not invertible; is f irreducible?");
    return FieldElem(ctx_, std::move(*y));
}

FieldElem FieldElem::pow(unsigned e) const
{
    FieldElem r = one(ctx_), b = *this;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

std::string FieldElem::to_string(char const * var) const { return toral::to_string(as_poly(), var); }

FieldElem fe_mul(FieldElem const & x, FieldElem const & y) { return x * y; }
FieldElem fe_invert(FieldElem const & x) { return x.inverse(); }

RatMat coordinate_matrix(FieldVec const & basis)
{
    if (basis.empty()) return RatMat();
    RatMat m(basis.size(), basis.front().degree());
    for (std::size_t i = 0; i < basis.size(); ++i)
        m.set_row(i, basis[i].coords());
    return m;
}

RatVec coords_in_basis(FieldElem const & x, FieldVec const & basis)
{
    RatMat const bm = coordinate_matrix(basis);
    if (bm.rows() != bm.cols() || rank(bm) != bm.rows())
        throw PreconditionError(kModule, "basis is not a Q-basis of the field");
    auto c = solve_rational(bm, x.coords());
    if (!c) throw PreconditionError(kModule, "basis is not a Q-basis of the field");
    return *c;
}

RatMat mult_matrix(FieldElem const & x, FieldVec const & basis)
{
    RatMat const bm = coordinate_matrix(basis);
    if (!bm.is_square()) throw PreconditionError(kModule, "basis has the wrong number of elements");
    auto inv = inverse(bm);
    if (!inv) throw PreconditionError(kModule, "dependent basis");
    FieldVec prod;
    prod.reserve(basis.size());
    for (auto const & b : basis)
        prod.push_back(x * b);
    return coordinate_matrix(prod) * *inv;
}

FieldVec apply(IntMat const & x, FieldVec const & u)
{
    if (x.cols() != u.size()) throw PreconditionError(kModule, "matrix-vector shape mismatch");
    FieldVec r;
    r.reserve(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        FieldElem acc = FieldElem::zero(u.front().ctx());
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (x(i, j) != 0) acc += mpq_class(x(i, j)) * u[j];
        r.push_back(std::move(acc));
    }
    return r;
}

FieldVec scale(FieldElem const & s, FieldVec const & u)
{
    FieldVec r;
    r.reserve(u.size());
    for (auto const & e : u)
        r.push_back(s * e);
    return r;
}

mpq_class norm(FieldElem const & x) { return det(x.regular()); }

bool check_root_polynomial(QPoly const & p, MinPoly const & f)
{
    QPoly const fq = f.qcoeffs();
    return degree(poly_compose_mod(fq, p, fq)) < 0;
}

} // namespace toral
