#pragma once

// k-block conjugacy certificates: (+B)^k M = M (A_1 + ... + A_k) with M
// unimodular, their construction from weak equivalence of ideals, and the
// three-way decision conjugate / 2-block only / not block conjugate.

#include <cstdint>
#include <optional>
#include <vector>

#include "toral/lmt.hpp"

namespace toral {

struct BlockCertificate {
    IntMat m;
    IntMat left;               // B, repeated k times on the left
    std::vector<IntMat> right; // A_1, ..., A_k
    std::optional<PartitionOfUnity> generators;

    std::size_t k() const { return right.size(); }
};

// det M = +-1 and (+B) M = M (+right), checked by plain multiplication.
// Throws PreconditionError on inconsistent shapes.
bool verify_block_certificate(BlockCertificate const & cert);

// Blocks of M from the relations M_i1 u = a_i v, M_12 w = -b_2 v,
// M_22 w = b_1 v, for B = left (eigenvector v), A = right (eigenvector u)
// and A' acting on w. Throws VerificationError if the result does not verify.
BlockCertificate assemble_two_block(Automorphism const & a, Automorphism const & b, FieldVec const & u,
                                    FieldVec const & v, FieldVec const & w, PartitionOfUnity const & unity);

struct TwoBlockPair {
    BlockCertificate forward;  // (B + B) M = M (A + A')
    BlockCertificate backward; // (A + A) N = N (B + B')
};

// Requires the ideals of A and B to be weakly equivalent.
TwoBlockPair construct_two_block(Automorphism const & a, Automorphism const & b, std::uint64_t seed);

struct ExtractedWitness {
    FracIdeal i, j; // ideals of the first right block and of the left matrix
    WeakEquivWitness witness;
    FieldVec a, b; // a_i from M_i1 u = a_i v, b_j from W_1j v = b_j u
};

// Reads the generators off a verified certificate and rebuilds X = (J:I),
// Y = (I:J) with IX = J, JY = I, XY = R.
ExtractedWitness extract_weak_equivalence(BlockCertificate const & cert, std::uint64_t seed = 0,
                                          IrreducibilityPolicy policy = IrreducibilityPolicy::Verify);

struct TriangularForm {
    IntMat m;    // unimodular, first block column = the embedding
    IntMat mhat; // M^-1 (+B) M = [[A, S], [0, A']]
    IntMat a;
    IntMat s;
    IntMat aprime;
};

// Completes a kn x n embedding E with (+B) E = E A to a unimodular M.
TriangularForm complete_embedding(IntMat const & embed, IntMat const & b, std::size_t k);

// M + I_n with A_{k+1} = B.
BlockCertificate extend_certificate(BlockCertificate const & cert);

enum class Verdict { Conjugate, TwoBlockOnly, NotBlockConjugate };

struct Trichotomy {
    Verdict verdict = Verdict::NotBlockConjugate;
    std::optional<IntMat> witness;            // P with P A = B P
    std::optional<FieldElem> alpha;           // alpha I = J
    std::optional<TwoBlockPair> certificates; // when 2-block conjugate
    bool conjugacy_undetermined = false;
    std::int64_t bound_used = 0;
    ArithSearchStats search;
};

Trichotomy decide(Automorphism const & a, Automorphism const & b, std::int64_t bound, std::uint64_t seed);

// P with P A = B P from alpha I = J, where I, J are the eigenvector ideals.
IntMat conjugacy_witness(Automorphism const & a, Automorphism const & b, FieldElem const & alpha);

} // namespace toral
