#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toral/fixtures.hpp"
#include "toral/number_field.hpp"

using namespace toral;
namespace fx = toral::fixtures;

namespace {

FieldElem el(MinPolyPtr const & ctx, QPoly const & p) { return FieldElem::from_poly(ctx, p); }

FieldElem random_elem(std::mt19937_64 & rng, MinPolyPtr const & ctx)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    RatVec c(ctx->degree());
    for (auto & x : c) {
        x = mpq_class(num(rng), den(rng));
        x.canonicalize();
    }
    return FieldElem(ctx, c);
}

} // namespace

TEST(FieldElem, ReductionByMinimalPolynomial)
{
    auto const ctx = MinPoly::create(fx::quad10::f());
    auto const b = FieldElem::beta(ctx);
    EXPECT_EQ(b * b, el(ctx, {-1, 10}));
}

TEST(FieldElem, WorkedPartitionOfUnity)
{
    auto const ctx = MinPoly::create(fx::quad10::f());
    auto const a1 = el(ctx, fx::quad10::a1()), a2 = el(ctx, fx::quad10::a2());
    auto const b1 = el(ctx, fx::quad10::b1()), b2 = el(ctx, fx::quad10::b2());
    EXPECT_EQ(a1 * b1 + a2 * b2, FieldElem::one(ctx));
}

TEST(FieldElem, InverseOfBeta)
{
    auto const c20 = MinPoly::create(fx::quad20::f());
    auto const b20 = FieldElem::beta(c20);
    EXPECT_EQ(b20 * el(c20, {20, -1}), FieldElem::one(c20));
    EXPECT_EQ(fe_invert(b20), el(c20, {20, -1}));
    auto const c10 = MinPoly::create(fx::quad10::f());
    EXPECT_EQ(fe_invert(FieldElem::beta(c10)), el(c10, {10, -1}));
    EXPECT_EQ(fe_invert(FieldElem::one(c10)), FieldElem::one(c10));
    EXPECT_THROW(fe_invert(FieldElem::zero(c10)), PreconditionError);
}

TEST(FieldElem, ContextMismatchIsAnError)
{
    auto const c10 = MinPoly::create(fx::quad10::f());
    auto const c20 = MinPoly::create(fx::quad20::f());
    EXPECT_THROW(FieldElem::beta(c10) * FieldElem::beta(c20), PreconditionError);
}

TEST(FieldElem, ArithmeticLawsAgainstSchoolbookProduct)
{
    std::mt19937_64 rng(21);
    for (auto const & f : {fx::quad10::f(), fx::cubic23::f(), fx::dtz::quartic()}) {
        auto const ctx = MinPoly::create(f);
        for (int iter = 0; iter < 40; ++iter) {
            auto const x = random_elem(rng, ctx), y = random_elem(rng, ctx), z = random_elem(rng, ctx);
            ASSERT_EQ((x * y).coords(), oracle::reduce_mul(x.coords(), y.coords(), f));
            ASSERT_EQ(x * y, y * x);
            ASSERT_EQ((x * y) * z, x * (y * z));
            if (!x.is_zero()) {
                ASSERT_EQ(x.inverse().inverse(), x);
                ASSERT_EQ(x * x.inverse(), FieldElem::one(ctx));
            }
            ASSERT_EQ(norm(x * y), norm(x) * norm(y));
            // coords(x y) = coords(x) * regular(y)
            ASSERT_EQ(x.coords() * y.regular(), (x * y).coords());
        }
    }
}

TEST(MultMatrix, CompanionAndWorkedBases)
{
    auto const ctx = MinPoly::create(fx::quad10::f());
    auto const b = FieldElem::beta(ctx);
    FieldVec const power{FieldElem::one(ctx), b};
    EXPECT_EQ(mult_matrix(b, power), to_rational(ctx->companion()));
    EXPECT_EQ(ctx->companion(), fx::quad10::b_prime());

    FieldVec const u{el(ctx, {-2, 1}), el(ctx, {3})};
    EXPECT_EQ(mult_matrix(b, u), to_rational(fx::quad10::a()));
    FieldVec const w{el(ctx, fx::quad10::b1()), el(ctx, fx::quad10::b2())};
    EXPECT_EQ(mult_matrix(b, w), to_rational(fx::quad10::a_prime()));

    FieldVec const dependent{el(ctx, {1, 1}), el(ctx, {2, 2})};
    EXPECT_THROW(mult_matrix(b, dependent), PreconditionError);
}

TEST(MultMatrix, CharpolyIsF)
{
    std::mt19937_64 rng(4);
    auto const ctx = MinPoly::create(fx::cubic23::f());
    auto const b = FieldElem::beta(ctx);
    for (int iter = 0; iter < 20; ++iter) {
        FieldVec basis;
        for (int k = 0; k < 3; ++k)
            basis.push_back(random_elem(rng, ctx));
        if (rank(coordinate_matrix(basis)) < 3) continue;
        RatMat const c = mult_matrix(b, basis);
        // charpoly over Q by interpolation of det(tI - C)
        for (long t = -2; t <= 2; ++t) {
            RatMat m = RatMat::identity(3);
            m *= mpq_class(t);
            m -= c;
            ASSERT_EQ(oracle::leibniz_det(m), mpq_class(zpoly_eval(fx::cubic23::f(), t)));
        }
    }
}

TEST(Norm, Values)
{
    auto const ctx = MinPoly::create(fx::quad10::f());
    EXPECT_EQ(norm(FieldElem::zero(ctx)), 0);
    EXPECT_EQ(norm(FieldElem::one(ctx)), 1);
    mpq_class const n = norm(el(ctx, {-2, 1}));
    EXPECT_EQ(abs(n), 15); // |f(2)|
    EXPECT_EQ(abs(n), abs(mpq_class(zpoly_eval(fx::quad10::f(), 2))));
}

TEST(RootPolynomial, Cases)
{
    auto const c10 = MinPoly::create(fx::quad10::f());
    auto const c20 = MinPoly::create(fx::quad20::f());
    EXPECT_TRUE(check_root_polynomial({0, 1}, *c10));
    EXPECT_TRUE(check_root_polynomial({20, -1}, *c20));
    EXPECT_FALSE(check_root_polynomial({1, 1}, *c10));
    // closed under composition
    QPoly const p{20, -1};
    QPoly const pp = poly_compose_mod(p, p, c20->qcoeffs());
    EXPECT_TRUE(check_root_polynomial(pp, *c20));
    EXPECT_EQ(pp, (QPoly{0, 1}));
}

TEST(Irreducibility, Decisions)
{
    EXPECT_EQ(check_irreducible({1, -10, 1}).status, Irreducibility::Verified);
    EXPECT_EQ(check_irreducible({-1, 7, -23, 1}).status, Irreducibility::Verified);
    EXPECT_EQ(check_irreducible({-2, 0, 1}).status, Irreducibility::Verified);
    EXPECT_EQ(check_irreducible({-1, 0, 1}).status, Irreducibility::Reducible);
    // (t^2 + 1)(t^2 + t + 1): no rational root, factors of degree 2
    EXPECT_EQ(check_irreducible({1, 1, 2, 1, 1}).status, Irreducibility::Reducible);
    // t^4 + 1 is irreducible but splits modulo every prime
    EXPECT_EQ(check_irreducible({1, 0, 0, 0, 1}).status, Irreducibility::Verified);
    EXPECT_EQ(check_irreducible({-1, -1, 0, 0, 1}).status, Irreducibility::Verified);
    EXPECT_THROW(MinPoly::create({1, 1, 2, 1, 1}), InputError);
}

TEST(MinPoly, Validation)
{
    EXPECT_THROW(MinPoly::create({1, 2, 3}), InputError);  // not monic
    EXPECT_THROW(MinPoly::create({-1, 0, 1}), InputError); // reducible
    EXPECT_THROW(MinPoly::create({1, 1}), InputError);     // degree 1
    auto const ctx = MinPoly::create({1, -10, 1});
    EXPECT_TRUE(ctx->unit_constant());
    EXPECT_TRUE(ctx->irreducibility_verified());
}
