#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toral/block.hpp"
#include "toral/fixtures.hpp"

using namespace toral;
namespace fx = toral::fixtures;

namespace {

FieldElem el(MinPolyPtr const & ctx, QPoly const & p) { return FieldElem::from_poly(ctx, p); }

struct Quad10 {
    Automorphism a = Automorphism::create(fx::quad10::a());
    Automorphism b = Automorphism::create(fx::quad10::b(), a.ctx());
    MinPolyPtr ctx = a.ctx();
    FieldVec u{el(ctx, {-2, 1}), el(ctx, {3})};
    FieldVec v{el(ctx, {-1, 1}), el(ctx, {1})};
    FieldVec w{el(ctx, {mpq_class(-1, 3), mpq_class(-1, 3)}), el(ctx, {0, 1})};
    PartitionOfUnity unity{el(ctx, fx::quad10::a1()), el(ctx, fx::quad10::a2()), el(ctx, fx::quad10::b1()),
                           el(ctx, fx::quad10::b2())};
};

// residual of the certificate equation computed entry by entry
bool oracle_holds(BlockCertificate const & c)
{
    IntMat const lhs = direct_power(c.left, c.k()) * c.m;
    IntMat const rhs = c.m * direct_sum(c.right);
    mpz_class const d = oracle::leibniz_det(c.m);
    return lhs == rhs && (d == 1 || d == -1);
}

} // namespace

TEST(VerifyCertificate, WorkedMatrices)
{
    BlockCertificate const id{IntMat::identity(4), fx::quad10::a(), {fx::quad10::a(), fx::quad10::a()}, {}};
    EXPECT_TRUE(verify_block_certificate(id));

    BlockCertificate const m{fx::quad10::m(), fx::quad10::b(), {fx::quad10::a(), fx::quad10::a_prime()}, {}};
    EXPECT_TRUE(verify_block_certificate(m));
    EXPECT_EQ(det(fx::quad10::m()), 1);

    BlockCertificate const n{fx::quad10::n(), fx::quad10::a(), {fx::quad10::b(), fx::quad10::b_prime()}, {}};
    EXPECT_TRUE(verify_block_certificate(n));
    EXPECT_EQ(det(fx::quad10::n()), -1);

    BlockCertificate wrong = m;
    wrong.right = {fx::quad10::a(), fx::quad10::a()};
    EXPECT_FALSE(verify_block_certificate(wrong));
    EXPECT_FALSE(oracle_holds(wrong));

    BlockCertificate bad_shape = m;
    bad_shape.right = {fx::quad10::a()};
    EXPECT_THROW(verify_block_certificate(bad_shape), PreconditionError);
}

TEST(Assemble, ReproducesWorkedM)
{
    Quad10 q;
    BlockCertificate const c = assemble_two_block(q.a, q.b, q.u, q.v, q.w, q.unity);
    EXPECT_EQ(c.m, fx::quad10::m());
    EXPECT_EQ(c.right[1], fx::quad10::a_prime());
    EXPECT_EQ(c.m.block(0, 2, 2, 2), fx::quad10::m12());
    EXPECT_EQ(c.m.block(2, 2, 2, 2), fx::quad10::m22());
    // the inverse has the displayed W blocks
    IntMat const w = *unimodular_inverse(c.m);
    EXPECT_EQ(w.block(0, 0, 2, 2), fx::quad10::w11());
    EXPECT_EQ(w.block(0, 2, 2, 2), fx::quad10::w12());
    EXPECT_EQ(w.block(2, 0, 2, 2), fx::quad10::w21());
    EXPECT_EQ(w.block(2, 2, 2, 2), fx::quad10::w22());
}

TEST(ConstructTwoBlock, IdenticalMatrices)
{
    for (auto const & m : {fx::quad10::a(), fx::cubic23::a(), fx::quad20::b()}) {
        auto const a = Automorphism::create(m);
        auto const p = construct_two_block(a, a, 0);
        EXPECT_EQ(p.forward.m, IntMat::identity(2 * a.n()));
        EXPECT_EQ(p.forward.right[1], m);
        EXPECT_EQ(p.backward.m, IntMat::identity(2 * a.n()));
    }
}

TEST(ConstructTwoBlock, WorkedPair)
{
    Quad10 q;
    auto const p = construct_two_block(q.a, q.b, 0);
    ASSERT_TRUE(oracle_holds(p.forward));
    ASSERT_TRUE(oracle_holds(p.backward));
    EXPECT_EQ(p.forward.left, fx::quad10::b());
    EXPECT_EQ(p.forward.right[0], fx::quad10::a());
    EXPECT_EQ(p.backward.left, fx::quad10::a());
    EXPECT_EQ(p.backward.right[0], fx::quad10::b());
    for (auto const & c : {p.forward, p.backward})
        for (auto const & r : c.right)
            EXPECT_EQ(charpoly(r), fx::quad10::f());
    // A' comes from JX, B' from IY
    FracIdeal const i = matrix_to_ideal(q.a).ideal, j = matrix_to_ideal(q.b).ideal;
    FracIdeal const jx = ideal_mul(j, ideal_quotient(j, i));
    FracIdeal const iy = ideal_mul(i, ideal_quotient(i, j));
    auto const aprime = Automorphism::create(p.forward.right[1], q.ctx);
    auto const bprime = Automorphism::create(p.backward.right[1], q.ctx);
    EXPECT_TRUE(is_arith_equivalent_bounded(matrix_to_ideal(aprime).ideal, jx, 10));
    EXPECT_TRUE(is_arith_equivalent_bounded(matrix_to_ideal(bprime).ideal, iy, 10));
    EXPECT_THROW(construct_two_block(Automorphism::create(fx::cubic23::a()),
                                     Automorphism::create(fx::cubic23::b()), 0),
                 PreconditionError);
}

TEST(ConstructTwoBlock, WorkedInversePair)
{
    EXPECT_NE(det(fx::quad10::m()), det(fx::quad10::n()));
    EXPECT_NE(fx::quad10::m() * fx::quad10::n(), IntMat::identity(4));
}

TEST(Extract, IdentityCertificate)
{
    auto const a = Automorphism::create(fx::quad10::a());
    BlockCertificate const id{IntMat::identity(4), a.mat(), {a.mat(), a.mat()}, {}};
    auto const e = extract_weak_equivalence(id);
    FracIdeal const r = coefficient_ring(e.i).lattice();
    EXPECT_EQ(e.witness.x, r);
    EXPECT_EQ(e.witness.y, r);
    EXPECT_EQ(e.witness.unity.a1, FieldElem::one(a.ctx()));
    EXPECT_TRUE(e.witness.unity.a2.is_zero());
    EXPECT_EQ(e.witness.unity.b1, FieldElem::one(a.ctx()));
    EXPECT_TRUE(e.witness.unity.b2.is_zero());
}

TEST(Extract, WorkedGenerators)
{
    Quad10 q;
    BlockCertificate const m{fx::quad10::m(), fx::quad10::b(), {fx::quad10::a(), fx::quad10::a_prime()}, {}};
    auto const e = extract_weak_equivalence(m);
    EXPECT_EQ(e.a, (FieldVec{q.unity.a1, q.unity.a2}));
    EXPECT_EQ(e.b, (FieldVec{q.unity.b1, q.unity.b2}));
    auto const & u = e.witness.unity;
    EXPECT_EQ(u.a1 * u.b1 + u.a2 * u.b2, FieldElem::one(q.ctx));
    EXPECT_EQ(ideal_mul(e.i, e.witness.x), e.j);
    EXPECT_EQ(ideal_mul(e.j, e.witness.y), e.i);
    EXPECT_EQ(ideal_mul(e.witness.x, e.witness.y), e.witness.r.lattice());

    BlockCertificate wrong = m;
    wrong.right[1] = fx::quad10::a();
    EXPECT_THROW(extract_weak_equivalence(wrong), PreconditionError);
}

TEST(Extract, HigherBlockCountCollapsesToTwoTerms)
{
    Quad10 q;
    BlockCertificate const m{fx::quad10::m(), fx::quad10::b(), {fx::quad10::a(), fx::quad10::a_prime()}, {}};
    auto const m4 = extend_certificate(extend_certificate(m));
    auto const e = extract_weak_equivalence(m4, 3);
    ASSERT_EQ(e.a.size(), 4u);
    auto const & u = e.witness.unity;
    EXPECT_EQ(u.a1 * u.b1 + u.a2 * u.b2, FieldElem::one(q.ctx));
    EXPECT_TRUE(e.witness.y.contains(u.a1) && e.witness.y.contains(u.a2));
    EXPECT_TRUE(e.witness.x.contains(u.b1) && e.witness.x.contains(u.b2));
}

TEST(CompleteEmbedding, Trivial)
{
    IntMat const b = fx::quad10::b();
    IntMat const e = vstack(IntMat::identity(2), IntMat(2, 2));
    auto const t = complete_embedding(e, b, 2);
    EXPECT_EQ(t.m, IntMat::identity(4));
    EXPECT_EQ(t.mhat, direct_power(b, 2));
    EXPECT_TRUE(t.s.is_zero());
}

TEST(CompleteEmbedding, CubicEmbeddingIsNotComplemented)
{
    IntMat const e = fx::cubic23::embedding();
    IntMat const b = fx::cubic23::b();
    EXPECT_EQ(direct_power(b, 2) * e, e * fx::cubic23::a());
    auto const t = complete_embedding(e, b, 2);
    mpz_class const d = oracle::leibniz_det(t.m);
    EXPECT_TRUE(d == 1 || d == -1);
    EXPECT_EQ(t.m.block(0, 0, 6, 3), e);
    EXPECT_EQ(t.a, fx::cubic23::a());
    EXPECT_EQ(direct_power(b, 2) * t.m, t.m * t.mhat);
    EXPECT_TRUE(t.mhat.block(3, 0, 3, 3).is_zero());
    EXPECT_FALSE(t.s.is_zero());
    EXPECT_EQ(charpoly(t.aprime), fx::cubic23::f());
}

TEST(CompleteEmbedding, QuadraticEmbeddingAdmitsZeroS)
{
    IntMat const e = fx::quad10::m().block(0, 0, 4, 2);
    auto const t = complete_embedding(e, fx::quad10::b(), 2);
    EXPECT_EQ(t.a, fx::quad10::a());
    // the constructed certificate with the same first block column has S = 0
    Quad10 q;
    BlockCertificate const c = assemble_two_block(q.a, q.b, q.u, q.v, q.w, q.unity);
    EXPECT_EQ(c.m.block(0, 0, 4, 2), e);
    IntMat const mhat = *unimodular_inverse(c.m) * direct_power(fx::quad10::b(), 2) * c.m;
    EXPECT_TRUE(mhat.block(0, 2, 2, 2).is_zero());
}

TEST(CompleteEmbedding, Errors)
{
    IntMat const b = fx::quad10::b();
    EXPECT_THROW(complete_embedding(vstack(2 * IntMat::identity(2), IntMat(2, 2)), b, 2), PreconditionError);
    IntMat const notsemi{{1, 0}, {0, 1}, {1, 0}, {0, 0}};
    EXPECT_THROW(complete_embedding(notsemi, b, 2), PreconditionError);
    EXPECT_THROW(complete_embedding(IntMat::identity(2), b, 2), PreconditionError);
}

TEST(Extend, Certificates)
{
    auto const a = fx::quad10::a();
    BlockCertificate const one{IntMat::identity(2), a, {a}, {}};
    auto const two = extend_certificate(one);
    EXPECT_EQ(two.m, IntMat::identity(4));
    EXPECT_TRUE(verify_block_certificate(two));
    BlockCertificate const m{fx::quad10::m(), fx::quad10::b(), {fx::quad10::a(), fx::quad10::a_prime()}, {}};
    auto const three = extend_certificate(m);
    EXPECT_EQ(three.k(), 3u);
    EXPECT_TRUE(oracle_holds(three));
    auto const four = extend_certificate(three);
    EXPECT_EQ(four.k(), 4u);
    EXPECT_TRUE(oracle_holds(four));
}

TEST(Decide, WorkedVerdicts)
{
    Quad10 q;
    auto const same = decide(q.a, q.a, 50, 0);
    EXPECT_EQ(same.verdict, Verdict::Conjugate);
    EXPECT_EQ(*same.witness, IntMat::identity(2));

    auto const pair = decide(q.a, q.b, 50, 0);
    EXPECT_EQ(pair.verdict, Verdict::TwoBlockOnly);
    EXPECT_TRUE(pair.conjugacy_undetermined);
    ASSERT_TRUE(pair.certificates);
    EXPECT_TRUE(oracle_holds(pair.certificates->forward));
    EXPECT_TRUE(oracle_holds(pair.certificates->backward));

    auto const ca = Automorphism::create(fx::cubic23::a());
    auto const cb = Automorphism::create(fx::cubic23::b(), ca.ctx());
    auto const cubic = decide(ca, cb, 50, 0);
    EXPECT_EQ(cubic.verdict, Verdict::NotBlockConjugate);
    EXPECT_FALSE(cubic.conjugacy_undetermined);
    EXPECT_FALSE(cubic.certificates);

    auto const other = Automorphism::create(fx::quad20::b());
    EXPECT_THROW(decide(q.a, other, 50, 0), InputError);
}

TEST(Decide, SymmetricVerdicts)
{
    std::vector<std::pair<IntMat, IntMat>> pairs{{fx::quad10::a(), fx::quad10::b()},
                                                 {fx::cubic23::a(), fx::cubic23::b()},
                                                 {fx::quad20::b(), fx::quad20::b_inv()}};
    for (auto const & [x, y] : pairs) {
        auto const a = Automorphism::create(x);
        auto const b = Automorphism::create(y, a.ctx());
        EXPECT_EQ(decide(a, b, 50, 0).verdict, decide(b, a, 50, 0).verdict);
    }
}

TEST(Decide, ConjugatesOfFixtures)
{
    std::mt19937_64 rng(57);
    for (auto const & m : {fx::quad10::a(), fx::quad10::b(), fx::cubic23::a(), fx::cubic23::b()}) {
        auto const a = Automorphism::create(m);
        for (int it = 0; it < 5; ++it) {
            IntMat const p = oracle::random_unimodular(rng, a.n(), 8);
            auto const b = Automorphism::create(*unimodular_inverse(p) * m * p, a.ctx());
            auto const t = decide(a, b, 50, 0);
            ASSERT_EQ(t.verdict, Verdict::Conjugate);
            ASSERT_EQ(*t.witness * a.mat(), b.mat() * *t.witness);
            ASSERT_EQ(abs(oracle::leibniz_det(*t.witness)), 1);
        }
    }
}
