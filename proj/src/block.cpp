#include "toral/block.hpp"

#include "toral/errors.hpp"

namespace toral {

namespace {

constexpr char const * kModule = "block-conjugacy";

IntMat two_by_two(IntMat const & m11, IntMat const & m12, IntMat const & m21, IntMat const & m22)
{
    return vstack(hstack(m11, m12), hstack(m21, m22));
}

} // namespace

bool verify_block_certificate(BlockCertificate const & cert)
{
    std::size_t const n = cert.left.rows();
    std::size_t const k = cert.right.size();
    if (n == 0 || k == 0 || !cert.left.is_square()) throw PreconditionError(kModule, "certificate has no blocks");
    for (auto const & r : cert.right)
        if (r.rows() != n || r.cols() != n) throw PreconditionError(kModule, "right block has the wrong size");
    if (cert.m.rows() != k * n || cert.m.cols() != k * n)
        throw PreconditionError(kModule, "conjugating matrix has the wrong size");
    mpz_class const d = det(cert.m);
    if (d != 1 && d != -1) return false;
    return direct_power(cert.left, k) * cert.m == cert.m * direct_sum(cert.right);
}

BlockCertificate assemble_two_block(Automorphism const & a, Automorphism const & b, FieldVec const & u,
                                    FieldVec const & v, FieldVec const & w, PartitionOfUnity const & unity)
{
    auto const aprime = to_integer(mult_matrix(FieldElem::beta(a.ctx()), w));
    if (!aprime) throw PreconditionError(kModule, "w does not span a beta-closed lattice");
    IntMat const m = two_by_two(relation_matrix(u, unity.a1, v), relation_matrix(w, -unity.b2, v),
                                relation_matrix(u, unity.a2, v), relation_matrix(w, unity.b1, v));
    BlockCertificate cert{m, b.mat(), {a.mat(), *aprime}, unity};
    if (!verify_block_certificate(cert)) throw VerificationError(kModule, "assembled 2-block certificate fails");
    return cert;
}

TwoBlockPair construct_two_block(Automorphism const & a, Automorphism const & b, std::uint64_t seed)
{
    if (!(*a.ctx() == *b.ctx())) throw PreconditionError(kModule, "characteristic polynomials differ");
    EigenData const eu = matrix_to_ideal(a);
    EigenData const ev = matrix_to_ideal(b);
    FracIdeal const & i = eu.ideal;
    FracIdeal const & j = ev.ideal;
    if (!is_weakly_equivalent(i, j)) throw PreconditionError(kModule, "ideals are not weakly equivalent");
    FracIdeal const x = ideal_quotient(j, i);
    FracIdeal const y = ideal_quotient(i, j);
    OrderRing const r = coefficient_ring(i);
    PartitionOfUnity const unity = two_term_partition_of_unity(x, y, r, seed);

    // JX = J when X = R; then v itself is a basis
    FracIdeal const jx = ideal_mul(j, x);
    FieldVec const w = jx == j ? ev.u : jx.elements();
    FracIdeal const iy = ideal_mul(i, y);
    FieldVec const w2 = iy == i ? eu.u : iy.elements();
    PartitionOfUnity const swapped{unity.b1, unity.b2, unity.a1, unity.a2};
    return {assemble_two_block(a, b, eu.u, ev.u, w, unity), assemble_two_block(b, a, ev.u, eu.u, w2, swapped)};
}

ExtractedWitness extract_weak_equivalence(BlockCertificate const & cert, std::uint64_t seed,
                                          IrreducibilityPolicy policy)
{
    if (!verify_block_certificate(cert)) throw PreconditionError(kModule, "certificate does not verify");
    auto const ctx = MinPoly::create(charpoly(cert.left), policy);
    Automorphism const b = Automorphism::create(cert.left, ctx);
    Automorphism const a = Automorphism::create(cert.right.front(), ctx);
    EigenData const eu = matrix_to_ideal(a);
    EigenData const ev = matrix_to_ideal(b);
    std::size_t const n = a.n();
    std::size_t const k = cert.k();
    IntMat const w = *unimodular_inverse(cert.m);

    FieldVec as, bs;
    FieldElem sum = FieldElem::zero(ctx);
    for (std::size_t t = 0; t < k; ++t) {
        as.push_back(phi_iso(cert.m.block(t * n, 0, n, n), ev.u, eu.u));
        bs.push_back(phi_iso(w.block(0, t * n, n, n), eu.u, ev.u));
        sum += as.back() * bs.back();
    }
    if (sum != FieldElem::one(ctx)) throw VerificationError(kModule, "sum a_i b_i is not 1");

    FracIdeal const & i = eu.ideal;
    FracIdeal const & j = ev.ideal;
    FracIdeal x = ideal_quotient(j, i);
    FracIdeal y = ideal_quotient(i, j);
    OrderRing r = coefficient_ring(i);
    if (!(coefficient_ring(j) == r)) throw VerificationError(kModule, "coefficient rings of I and J differ");
    if (ideal_mul(x, y) != r.lattice() || ideal_mul(i, x) != j || ideal_mul(j, y) != i)
        throw VerificationError(kModule, "quotients do not witness weak equivalence");

    FieldElem const zero = FieldElem::zero(ctx);
    PartitionOfUnity unity{as[0], zero, bs[0], zero};
    if (k == 2)
        unity = {as[0], as[1], bs[0], bs[1]};
    else if (k > 2)
        unity = two_term_partition_of_unity(x, y, r, seed);
    return {i, j, WeakEquivWitness{std::move(x), std::move(y), std::move(r), unity}, std::move(as), std::move(bs)};
}

TriangularForm complete_embedding(IntMat const & embed, IntMat const & b, std::size_t k)
{
    std::size_t const n = b.rows();
    if (n == 0 || !b.is_square() || k == 0 || embed.rows() != k * n || embed.cols() != n)
        throw PreconditionError(kModule, "embedding must be kn x n");
    for (std::size_t c = 0; c < n; ++c)
        if (content(embed.col(c)) != 1) throw PreconditionError(kModule, "embedding column content is not 1");
    HnfResult const h = hnf(embed);
    if (h.h.block(0, 0, n, n) != IntMat::identity(n))
        throw PreconditionError(kModule, "embedding does not extend to a unimodular matrix");
    IntMat const m = *unimodular_inverse(h.u);
    IntMat const mhat = h.u * direct_power(b, k) * m;
    IntMat const a = mhat.block(0, 0, n, n);
    if (!mhat.block(n, 0, (k - 1) * n, n).is_zero() || direct_power(b, k) * embed != embed * a)
        throw PreconditionError(kModule, "embedding is not a semiconjugacy");
    return {m, mhat, a, mhat.block(0, n, n, (k - 1) * n), mhat.block(n, n, (k - 1) * n, (k - 1) * n)};
}

BlockCertificate extend_certificate(BlockCertificate const & cert)
{
    if (!verify_block_certificate(cert)) throw PreconditionError(kModule, "certificate does not verify");
    std::size_t const n = cert.left.rows();
    BlockCertificate out = cert;
    out.m = direct_sum(std::vector<IntMat>{cert.m, IntMat::identity(n)});
    out.right.push_back(cert.left);
    if (!verify_block_certificate(out)) throw VerificationError(kModule, "extended certificate fails");
    return out;
}

IntMat conjugacy_witness(Automorphism const & a, Automorphism const & b, FieldElem const & alpha)
{
    FieldVec const u = matrix_to_ideal(a).u;
    FieldVec const v = matrix_to_ideal(b).u;
    // Q v = alpha u, so A Q = Q B
    IntMat const q = relation_matrix(v, alpha, u);
    auto const p = unimodular_inverse(q);
    if (!p) throw PreconditionError(kModule, "alpha I = J fails: relation matrix is not unimodular");
    if (*p * a.mat() != b.mat() * *p) throw VerificationError(kModule, "conjugacy witness fails P A = B P");
    return *p;
}

Trichotomy decide(Automorphism const & a, Automorphism const & b, std::int64_t bound, std::uint64_t seed)
{
    if (!(*a.ctx() == *b.ctx())) throw InputError(kModule, "characteristic polynomials differ");
    Trichotomy t;
    t.bound_used = bound;
    FracIdeal const i = matrix_to_ideal(a).ideal;
    FracIdeal const j = matrix_to_ideal(b).ideal;
    if (!is_weakly_equivalent(i, j)) {
        t.verdict = Verdict::NotBlockConjugate;
        return t;
    }
    if (auto alpha = is_arith_equivalent_bounded(i, j, bound, &t.search)) {
        t.verdict = Verdict::Conjugate;
        t.witness = conjugacy_witness(a, b, *alpha);
        t.alpha = std::move(alpha);
        return t;
    }
    t.verdict = Verdict::TwoBlockOnly;
    t.certificates = construct_two_block(a, b, seed);
    t.conjugacy_undetermined = true;
    return t;
}

} // namespace toral
