#pragma once

// The field K = Q[t]/(f) with distinguished root beta = class of t.

#include <memory>
#include <string>
#include <vector>

#include "toral/linalg.hpp"
#include "toral/poly.hpp"

namespace toral {

enum class IrreducibilityPolicy { Verify, Assume };

class MinPoly {
  public:
    // Monic f of degree >= 2. With Verify, an inconclusive test is an input
    // error; with Assume it is recorded as assumed. Reducible f always fails.
    static std::shared_ptr<MinPoly const> create(ZPoly coeffs,
                                                 IrreducibilityPolicy policy = IrreducibilityPolicy::Verify);

    ZPoly const & coeffs() const { return f_; }
    QPoly qcoeffs() const { return to_qpoly(f_); }
    std::size_t degree() const { return f_.size() - 1; }
    // |f(0)| = 1, i.e. beta is a unit
    bool unit_constant() const { return f_[0] == 1 || f_[0] == -1; }
    bool irreducibility_verified() const { return verified_; }
    std::string const & irreducibility_method() const { return method_; }
    // companion matrix acting on the power basis column (1, beta, ..., beta^(n-1))
    IntMat companion() const;

    friend bool operator==(MinPoly const & a, MinPoly const & b) { return a.f_ == b.f_; }

  private:
    ZPoly f_;
    bool verified_ = false;
    std::string method_;
};

using MinPolyPtr = std::shared_ptr<MinPoly const>;

class FieldElem {
  public:
    FieldElem(MinPolyPtr ctx, RatVec coords);

    static FieldElem zero(MinPolyPtr ctx);
    static FieldElem one(MinPolyPtr ctx);
    static FieldElem beta(MinPolyPtr ctx);
    static FieldElem integer(MinPolyPtr ctx, mpq_class const & c);
    // p(beta), reduced modulo f
    static FieldElem from_poly(MinPolyPtr ctx, QPoly const & p);

    MinPolyPtr const & ctx() const { return ctx_; }
    RatVec const & coords() const { return c_; }
    std::size_t degree() const { return c_.size(); }
    bool is_zero() const;
    QPoly as_poly() const;

    FieldElem & operator+=(FieldElem const & o);
    FieldElem & operator-=(FieldElem const & o);
    FieldElem & operator*=(FieldElem const & o);
    friend FieldElem operator+(FieldElem a, FieldElem const & b) { return a += b; }
    friend FieldElem operator-(FieldElem a, FieldElem const & b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, FieldElem const & b) { return a *= b; }
    friend FieldElem operator-(FieldElem a);
    friend FieldElem operator*(mpq_class const & s, FieldElem a);
    friend bool operator==(FieldElem const & a, FieldElem const & b);
    friend bool operator!=(FieldElem const & a, FieldElem const & b) { return !(a == b); }

    FieldElem inverse() const;
    FieldElem pow(unsigned e) const;
    // Row k holds the coordinates of beta^k * this, so coords(x * y) = coords(x) * y.regular().
    RatMat regular() const;

    std::string to_string(char const * var = "b") const;

  private:
    void check_same(FieldElem const & o) const;

    MinPolyPtr ctx_;
    RatVec c_;
};

using FieldVec = std::vector<FieldElem>;

FieldElem fe_mul(FieldElem const & x, FieldElem const & y);
FieldElem fe_invert(FieldElem const & x);

// Rows are the power-basis coordinates of the elements.
RatMat coordinate_matrix(FieldVec const & basis);
// Coordinates of x in a Q-basis; throws if the basis is dependent.
RatVec coords_in_basis(FieldElem const & x, FieldVec const & basis);

// C with (C * basis)_i = x * basis_i, i.e. row i = coordinates of x * basis_i.
RatMat mult_matrix(FieldElem const & x, FieldVec const & basis);

// Column action of an integer matrix on a vector of field elements: (X u)_i = sum_j X_ij u_j.
FieldVec apply(IntMat const & x, FieldVec const & u);
FieldVec scale(FieldElem const & s, FieldVec const & u);

// Determinant of multiplication by x on the power basis, with no sign adjustment.
mpq_class norm(FieldElem const & x);

// True iff p(beta) is a root of f, i.e. f(p(t)) = 0 mod f.
bool check_root_polynomial(QPoly const & p, MinPoly const & f);

} // namespace toral
