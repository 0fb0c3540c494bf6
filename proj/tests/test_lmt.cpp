#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toral/fixtures.hpp"
#include "toral/lmt.hpp"

using namespace toral;
namespace fx = toral::fixtures;

namespace {

FieldElem el(MinPolyPtr const & ctx, QPoly const & p) { return FieldElem::from_poly(ctx, p); }

IntVec flatten(IntMat const & m) { return m.entries(); }

bool in_span(std::vector<IntMat> const & basis, IntMat const & x)
{
    IntMat rows(basis.size(), x.rows() * x.cols());
    for (std::size_t k = 0; k < basis.size(); ++k)
        rows.set_row(k, flatten(basis[k]));
    return solve_integer(rows, flatten(x)).has_value();
}

bool arith_equivalent(FracIdeal const & i, FracIdeal const & j) { return is_arith_equivalent_bounded(i, j, 50).has_value(); }

} // namespace

TEST(Automorphism, Validation)
{
    EXPECT_NO_THROW(Automorphism::create(fx::quad10::a()));
    EXPECT_THROW(Automorphism::create(IntMat{{2, 0}, {0, 1}}), InputError);
    EXPECT_THROW(Automorphism::create(IntMat{{1, 1}, {0, 1}}), InputError); // (t - 1)^2
    EXPECT_THROW(Automorphism::create(IntMat{{1, 2, 3}}), InputError);
    auto const ctx = MinPoly::create(fx::quad20::f());
    EXPECT_THROW(Automorphism::create(fx::quad10::a(), ctx), InputError);
    EXPECT_EQ(Automorphism::create(fx::quad20::b(), ctx).ctx(), ctx);
}

TEST(MatrixToIdeal, WorkedEigenvectors)
{
    auto const a = Automorphism::create(fx::quad10::a());
    auto const ctx = a.ctx();
    auto const ea = matrix_to_ideal(a);
    EXPECT_EQ(ea.u, (FieldVec{el(ctx, {-2, 1}), el(ctx, {3})}));
    auto const b = Automorphism::create(fx::quad10::b(), ctx);
    auto const eb = matrix_to_ideal(b);
    EXPECT_EQ(eb.u, (FieldVec{el(ctx, {-1, 1}), el(ctx, {1})}));
    EXPECT_EQ(eb.ideal, FracIdeal::unit(ctx));
    FracIdeal const i = FracIdeal::from_elements({el(ctx, {-2, 1}), el(ctx, {3})});
    EXPECT_TRUE(arith_equivalent(ea.ideal, i));
    EXPECT_FALSE(arith_equivalent(ea.ideal, eb.ideal));
}

TEST(MatrixToIdeal, CompanionGivesPowerBasis)
{
    for (auto const & f : {fx::quad10::f(), fx::cubic23::f(), fx::quad20::f()}) {
        auto const ctx = MinPoly::create(f);
        auto const c = Automorphism::create(ctx->companion(), ctx);
        EXPECT_TRUE(arith_equivalent(matrix_to_ideal(c).ideal, FracIdeal::unit(ctx)));
    }
}

TEST(IdealToMatrix, Examples)
{
    auto const ctx = MinPoly::create(fx::quad10::f());
    auto const r = FracIdeal::unit(ctx);
    EXPECT_EQ(ideal_to_matrix(r).a.mat(), ctx->companion());
    // 3R has HNF basis (3, 3 beta)
    auto const three = ideal_to_matrix(r.scaled(FieldElem::integer(ctx, 3)));
    EXPECT_EQ(three.basis, (FieldVec{el(ctx, {3}), el(ctx, {0, 3})}));
    EXPECT_EQ(three.a.mat(), fx::quad10::b_prime());

    // JX of the quadratic example is spanned by w = (-(beta + 1)/3, beta)
    FieldVec const w{el(ctx, {mpq_class(-1, 3), mpq_class(-1, 3)}), el(ctx, {0, 1})};
    FracIdeal const i = FracIdeal::from_elements({el(ctx, {-2, 1}), el(ctx, {3})});
    FracIdeal const jx = ideal_mul(r, ideal_quotient(r, i));
    EXPECT_EQ(FracIdeal::from_rows(ctx, coordinate_matrix(w)), jx);
    auto const res = ideal_to_matrix(jx);
    EXPECT_EQ(charpoly(res.a.mat()), fx::quad10::f());
    EXPECT_EQ(toral::apply(res.a.mat(), res.basis), scale(FieldElem::beta(ctx), res.basis));
    EXPECT_EQ(mult_matrix(FieldElem::beta(ctx), w), to_rational(fx::quad10::a_prime()));

    auto const two = MinPoly::create({-2, 0, 1});
    EXPECT_THROW(ideal_to_matrix(FracIdeal::unit(two)), PreconditionError);
}

TEST(RelationMatrix, WorkedBlocks)
{
    auto const ctx = MinPoly::create(fx::quad10::f());
    FieldVec const u{el(ctx, {-2, 1}), el(ctx, {3})};
    FieldVec const v{el(ctx, {-1, 1}), el(ctx, {1})};
    EXPECT_EQ(relation_matrix(u, el(ctx, fx::quad10::a1()), v), fx::quad10::m11());
    EXPECT_EQ(relation_matrix(u, el(ctx, fx::quad10::a2()), v), fx::quad10::m21());
    EXPECT_EQ(relation_matrix(v, el(ctx, fx::quad10::b1()), u), fx::quad10::w11());
    EXPECT_EQ(relation_matrix(v, el(ctx, fx::quad10::b2()), u), fx::quad10::w12());
    EXPECT_THROW(relation_matrix(v, el(ctx, {mpq_class(1, 7)}), u), PreconditionError);
}

TEST(Intertwiner, ContainsWorkedMatrices)
{
    auto const a = Automorphism::create(fx::quad10::a());
    auto const b = Automorphism::create(fx::quad10::b(), a.ctx());
    auto const aa = intertwiner_lattice(a, a);
    EXPECT_EQ(aa.basis.size(), 2u);
    EXPECT_TRUE(in_span(aa.basis, IntMat::identity(2)));
    EXPECT_TRUE(in_span(aa.basis, a.mat()));
    auto const ba = intertwiner_lattice(b, a);
    EXPECT_TRUE(in_span(ba.basis, fx::quad10::m11()));
    EXPECT_TRUE(in_span(ba.basis, fx::quad10::m21()));
    auto const ab = intertwiner_lattice(a, b);
    EXPECT_TRUE(in_span(ab.basis, fx::quad10::w11()));
    EXPECT_TRUE(in_span(ab.basis, fx::quad10::w12()));
    for (auto const & x : ab.basis)
        EXPECT_EQ(a.mat() * x, x * b.mat());
}

TEST(Intertwiner, SmallSolutionsLieInSpan)
{
    auto const a = Automorphism::create(fx::quad10::a());
    auto const b = Automorphism::create(fx::quad10::b(), a.ctx());
    auto const ab = intertwiner_lattice(a, b);
    int found = 0;
    for (long e0 = -3; e0 <= 3; ++e0)
        for (long e1 = -3; e1 <= 3; ++e1)
            for (long e2 = -3; e2 <= 3; ++e2)
                for (long e3 = -3; e3 <= 3; ++e3) {
                    IntMat const x{{e0, e1}, {e2, e3}};
                    if (a.mat() * x != x * b.mat()) continue;
                    ++found;
                    ASSERT_TRUE(in_span(ab.basis, x));
                }
    EXPECT_GT(found, 1);
}

TEST(PhiIso, WorkedValues)
{
    auto const a = Automorphism::create(fx::quad10::a());
    auto const b = Automorphism::create(fx::quad10::b(), a.ctx());
    auto const ctx = a.ctx();
    FieldVec const u = matrix_to_ideal(a).u, v = matrix_to_ideal(b).u;
    EXPECT_EQ(phi_iso(IntMat::identity(2), u, u), FieldElem::one(ctx));
    // M_11 in Lambda(B, A): M_11 u = a_1 v
    EXPECT_EQ(phi_iso(fx::quad10::m11(), v, u), el(ctx, fx::quad10::a1()));
    EXPECT_EQ(phi_iso(fx::quad10::m21(), v, u), el(ctx, fx::quad10::a2()));
    // W_1j in Lambda(A, B): W_1j v = b_j u
    EXPECT_EQ(phi_iso(fx::quad10::w12(), u, v), el(ctx, fx::quad10::b2()));
    EXPECT_EQ(phi_iso(fx::quad10::w11(), u, v), el(ctx, fx::quad10::b1()));
    EXPECT_THROW(phi_iso(IntMat{{1, 0}, {0, 2}}, u, v), PreconditionError);
}

TEST(PhiIso, ImageIsQuotientAndModuleLaws)
{
    std::vector<std::pair<IntMat, IntMat>> pairs{{fx::quad10::a(), fx::quad10::b()},
                                                 {fx::quad10::b(), fx::quad10::a()},
                                                 {fx::cubic23::a(), fx::cubic23::b()},
                                                 {fx::cubic23::b(), fx::cubic23::a()},
                                                 {fx::cubic23::a(), fx::cubic23::a()}};
    for (auto const & [lm, rm] : pairs) {
        auto const l = Automorphism::create(lm);
        auto const r = Automorphism::create(rm, l.ctx());
        auto const el_ = matrix_to_ideal(l), er = matrix_to_ideal(r);
        auto const lat = intertwiner_lattice(l, r);
        FieldVec thetas;
        for (auto const & x : lat.basis) {
            FieldElem const t = phi_iso(x, el_.u, er.u);
            thetas.push_back(t);
            // left and right actions of beta
            ASSERT_EQ(phi_iso(l.mat() * x, el_.u, er.u), FieldElem::beta(l.ctx()) * t);
            ASSERT_EQ(phi_iso(x * r.mat(), el_.u, er.u), t * FieldElem::beta(l.ctx()));
        }
        ASSERT_EQ(rank(coordinate_matrix(thetas)), thetas.size()); // injective on the basis
        EXPECT_EQ(FracIdeal::from_rows(l.ctx(), coordinate_matrix(thetas)), ideal_quotient(er.ideal, el_.ideal));
        // additivity
        ASSERT_EQ(phi_iso(lat.basis[0] + lat.basis[1], el_.u, er.u), thetas[0] + thetas[1]);
    }
}

TEST(IntertwinerProperties, NonzeroElementsAreInvertible)
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> dist(-5, 5);
    std::vector<std::pair<IntMat, IntMat>> pairs{{fx::quad10::a(), fx::quad10::b()},
                                                 {fx::cubic23::b(), fx::cubic23::a()},
                                                 {fx::quad20::b(), fx::quad20::b_inv()}};
    for (auto const & [lm, rm] : pairs) {
        auto const l = Automorphism::create(lm);
        auto const r = Automorphism::create(rm, l.ctx());
        auto const lat = intertwiner_lattice(l, r);
        ASSERT_EQ(lat.basis.size(), l.n());
        for (int s = 0; s < 120; ++s) {
            std::vector<std::int64_t> c(lat.basis.size());
            for (auto & x : c)
                x = dist(rng);
            IntMat const x = combine(lat.basis, c);
            if (x.is_zero()) continue;
            ASSERT_NE(oracle::leibniz_det(x), 0);
        }
    }
}

TEST(LmtProperties, RoundTripAndConjugationInvariance)
{
    std::mt19937_64 rng(41);
    for (auto const & m : {fx::quad10::a(), fx::quad10::b(), fx::cubic23::a(), fx::cubic23::b(), fx::quad20::b()}) {
        auto const a = Automorphism::create(m);
        auto const e = matrix_to_ideal(a);
        auto const back = ideal_to_matrix(e.ideal);
        ASSERT_EQ(toral::apply(back.a.mat(), back.basis), scale(FieldElem::beta(a.ctx()), back.basis));
        ASSERT_TRUE(arith_equivalent(matrix_to_ideal(back.a).ideal, e.ideal));
        for (int it = 0; it < 4; ++it) {
            IntMat const p = oracle::random_unimodular(rng, a.n(), 5);
            IntMat const conj = *unimodular_inverse(p) * m * p;
            auto const c = Automorphism::create(conj, a.ctx());
            ASSERT_TRUE(arith_equivalent(matrix_to_ideal(c).ideal, e.ideal));
        }
    }
}
