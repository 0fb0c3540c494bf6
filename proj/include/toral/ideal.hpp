#pragma once

// Fractional ideals of Z[beta]: full-rank lattices in K closed under beta,
// stored canonically as (den, row HNF basis in the power basis).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toral/number_field.hpp"

namespace toral {

class FracIdeal {
  public:
    // Canonical form of the lattice spanned by the rows (power-basis
    // coordinates). Throws when the rows have rank < n. Does not check
    // beta-closure; see is_beta_closed.
    static FracIdeal from_rows(MinPolyPtr ctx, RatMat const & rows);
    // Smallest beta-closed lattice containing the generators.
    static FracIdeal from_elements(MinPolyPtr ctx, FieldVec const & gens);
    static FracIdeal from_elements(FieldVec const & gens) { return from_elements(gens.front().ctx(), gens); }
    static FracIdeal unit(MinPolyPtr ctx); // Z[beta]

    MinPolyPtr const & ctx() const { return ctx_; }
    std::size_t degree() const { return basis_.rows(); }
    mpz_class const & den() const { return den_; }
    IntMat const & basis() const { return basis_; }
    RatMat rational_basis() const;
    FieldVec elements() const;

    bool contains(FieldElem const & x) const;
    bool contains(FracIdeal const & other) const;
    bool is_beta_closed() const;
    // coordinates of x in elements(); nullopt when x is not in the lattice
    std::optional<IntVec> coordinates(FieldElem const & x) const;
    // index of the lattice in the power-basis lattice Z^n (a positive rational)
    mpq_class covolume() const;

    FracIdeal scaled(FieldElem const & alpha) const;

    friend bool operator==(FracIdeal const & a, FracIdeal const & b)
    {
        return a.den_ == b.den_ && a.basis_ == b.basis_ && *a.ctx_ == *b.ctx_;
    }
    friend bool operator!=(FracIdeal const & a, FracIdeal const & b) { return !(a == b); }

    std::string to_string() const;

  private:
    FracIdeal() = default;

    MinPolyPtr ctx_;
    mpz_class den_;
    IntMat basis_;
};

// An order: a fractional ideal containing 1 and closed under multiplication.
class OrderRing {
  public:
    // throws VerificationError when the ring axioms fail
    static OrderRing verified(FracIdeal lattice);
    FracIdeal const & lattice() const { return lattice_; }
    friend bool operator==(OrderRing const & a, OrderRing const & b) { return a.lattice_ == b.lattice_; }

  private:
    explicit OrderRing(FracIdeal l) : lattice_(std::move(l)) {}
    FracIdeal lattice_;
};

FracIdeal ideal_from_elements(FieldVec const & gens);
FracIdeal ideal_from_elements(FieldVec const & gens, OrderRing const & scalars);

FracIdeal ideal_mul(FracIdeal const & a, FracIdeal const & b);
FracIdeal ideal_power(FracIdeal const & a, unsigned k);
// (J:I) = { x : x I in J }
FracIdeal ideal_quotient(FracIdeal const & j, FracIdeal const & i);
FracIdeal lattice_intersection(FracIdeal const & a, FracIdeal const & b);
OrderRing coefficient_ring(FracIdeal const & i);
bool is_invertible(FracIdeal const & i);
bool is_weakly_equivalent(FracIdeal const & i, FracIdeal const & j);

struct ArithSearchStats {
    std::uint64_t candidates = 0; // coordinate vectors examined
    std::int64_t shells = 0;      // last shell reached
};

// Bounded search for alpha with alpha I = J. Candidates are elements of (J:I)
// whose coordinates in an LLL-reduced basis are bounded by `bound`, visited
// shell by shell; a miss is not a proof of inequivalence.
std::optional<FieldElem> is_arith_equivalent_bounded(FracIdeal const & i, FracIdeal const & j, std::int64_t bound,
                                                     ArithSearchStats * stats = nullptr, bool parallel = true);

struct PartitionOfUnity {
    FieldElem a1, a2; // in Y
    FieldElem b1, b2; // in X
};

// a1 b1 + a2 b2 = 1 with a_i in Y and b_i in X. Requires XY = R.
PartitionOfUnity two_term_partition_of_unity(FracIdeal const & x, FracIdeal const & y, OrderRing const & r,
                                             std::uint64_t seed);

struct WeakEquivWitness {
    FracIdeal x, y;
    OrderRing r;
    PartitionOfUnity unity;
};

// The Dade-Taussky-Zassenhaus example built from theta's minimal polynomial
// g of degree m >= 3. The field generator is beta = 2 theta, whose minimal
// polynomial is 2^m g(t/2), so that all three lattices are beta-closed.
struct DtzFixture {
    MinPolyPtr ctx;
    FieldElem theta;
    OrderRing r0; // Z[theta]
    OrderRing r;  // Z + 2Z theta + ... + 2Z theta^(m-1)
    FracIdeal i;  // Z + Z theta + 2Z theta^2 + ... + 2Z theta^(m-1)
};

DtzFixture dtz_fixture(ZPoly const & theta_minpoly);

} // namespace toral
