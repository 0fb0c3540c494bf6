#pragma once

// Invariantly complemented subtori of T^2n under B + B, the centralizer of
// B + B, and the Galois element attached to a matrix xi that permutes the
// block-diagonalizing conjugates of B + B.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toral/block.hpp"

namespace toral {

struct InvariantTorusWitness {
    IntMat embed;      // 2n x n, (B + B) embed = embed induced
    Automorphism induced;
    std::optional<IntMat> complemented; // M with first block column embed and M^-1 (B + B) M block diagonal
};

// Solves (B + B) E = E A for A. With a complement, M must start with E and
// lie in the set I below. Throws PreconditionError otherwise.
InvariantTorusWitness invariant_torus(IntMat const & embed, Automorphism const & b,
                                      std::optional<IntMat> const & complement = std::nullopt);

// The diagonal blocks (A, D) of M^-1 (B + B) M when it is block diagonal.
// Throws PreconditionError when det M is not +-1.
std::optional<std::pair<Automorphism, Automorphism>> is_in_script_I(IntMat const & m, Automorphism const & b);

// Z-basis of { U : (B + B) U = U (B + B) }, of rank 4n.
std::vector<IntMat> centralizer_basis(Automorphism const & b);

// p(beta) for a rational p of degree < n that maps beta to a conjugate root.
class GaloisElement {
  public:
    // Throws VerificationError unless f(p(t)) = 0 mod f.
    static GaloisElement from_polynomial(MinPolyPtr ctx, QPoly p);
    static GaloisElement identity(MinPolyPtr ctx);

    QPoly const & poly() const { return p_; }
    MinPolyPtr const & ctx() const { return ctx_; }
    bool is_identity() const;
    // phi(alpha) = alpha o p
    FieldElem operator()(FieldElem const & alpha) const;

    friend bool operator==(GaloisElement const & a, GaloisElement const & b)
    {
        return a.p_ == b.p_ && *a.ctx_ == *b.ctx_;
    }
    friend bool operator!=(GaloisElement const & a, GaloisElement const & b) { return !(a == b); }

    std::string to_string() const;

  private:
    GaloisElement(MinPolyPtr ctx, QPoly p) : ctx_(std::move(ctx)), p_(std::move(p)) {}
    MinPolyPtr ctx_;
    QPoly p_;
};

// The polynomial outer(inner(t)) mod f.
GaloisElement compose(GaloisElement const & outer, GaloisElement const & inner);

// The unique rational p of degree < n with p(B) = axi. Throws
// PreconditionError when axi does not commute with B.
QPoly recover_polynomial(IntMat const & axi, Automorphism const & b);

// (B + B) xi = xi (B^-1 + B^-1) exactly. Throws PreconditionError when det xi != +-1.
bool check_E_membership_inverse_criterion(IntMat const & xi, Automorphism const & b);

// p with (B + B) xi = xi (p(B) + p(B)). Throws PreconditionError when
// xi^-1 (B + B) xi is not of the form A + A with A commuting with B.
GaloisElement galois_of_xi(IntMat const & xi, Automorphism const & b);

struct XiSearchStats {
    std::uint64_t candidates = 0;
    std::int64_t shells = 0;
};

// Unimodular xi with (B + B) xi = xi (B^-1 + B^-1), searched over integer
// combinations of an LLL-reduced basis of the solution lattice with
// coefficients bounded by `bound`. A miss proves nothing.
std::optional<IntMat> find_inverse_swap_direct(Automorphism const & b, std::int64_t bound,
                                               XiSearchStats * stats = nullptr, bool parallel = true);

// Same target through the 2-block route: (B + B) M = M (B^-1 + A') from the
// weak equivalence of the ideals of B and B^-1, then A' = Z^-1 B^-1 Z from the
// bounded arithmetic search, and xi = M (I + Z^-1). Returns nullopt with
// `proved_absent` set when f is not reciprocal or the ideals are not weakly
// equivalent; a search miss leaves it unset.
std::optional<IntMat> find_inverse_swap(Automorphism const & b, std::int64_t bound, std::uint64_t seed = 0,
                                        bool * proved_absent = nullptr);

struct CentralizerWitness {
    IntMat u;    // (B + B) U = U (B + B), det U = +-1
    IntMat v;    // P + Z, with (B + B) V = V (A + D)
    IntMat z;    // Z D = B Z
};

// For M in I with (B + B) M = M (A + D) and P A = B P, builds U = V M^-1 in
// the centralizer carrying the first block column of M onto that of P + 0.
// Z comes from the bounded arithmetic search; nullopt on a miss.
std::optional<CentralizerWitness> centralizer_witness(IntMat const & m, Automorphism const & b, IntMat const & p,
                                                      std::int64_t bound);

} // namespace toral
