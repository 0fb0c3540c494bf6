#pragma once

// Matrices with irreducible characteristic polynomial f and fractional ideals
// of Z[beta], matched through eigenvectors: A u = beta u.

#include <vector>

#include "toral/ideal.hpp"

namespace toral {

class Automorphism {
  public:
    // Square, det +-1, irreducible charpoly. Throws InputError otherwise.
    static Automorphism create(IntMat m, IrreducibilityPolicy policy = IrreducibilityPolicy::Verify);
    // Same checks, but the charpoly must equal ctx's polynomial; shares ctx.
    static Automorphism create(IntMat m, MinPolyPtr ctx);

    IntMat const & mat() const { return m_; }
    MinPolyPtr const & ctx() const { return ctx_; }
    std::size_t n() const { return m_.rows(); }

  private:
    Automorphism(IntMat m, MinPolyPtr ctx) : m_(std::move(m)), ctx_(std::move(ctx)) {}
    IntMat m_;
    MinPolyPtr ctx_;
};

struct EigenData {
    FieldVec u;     // A u = beta u
    FracIdeal ideal; // Z-span of the entries of u
};

// Eigenvector from the first nonzero column of adj(beta I - A), with the
// integer content of its power-basis coordinates divided out.
EigenData matrix_to_ideal(Automorphism const & a);

// Column eigenvector of an integer matrix whose charpoly is ctx's polynomial.
FieldVec eigenvector(IntMat const & a, MinPolyPtr const & ctx);

struct IdealMatrix {
    Automorphism a;
    FieldVec basis; // HNF basis of the ideal, a * basis = beta * basis
};

// Multiplication by beta on the canonical basis. Requires |f(0)| = 1.
IdealMatrix ideal_to_matrix(FracIdeal const & i);

// The integer X with X * basis = theta * elems componentwise. Throws
// PreconditionError when some theta * elems_i is not in the Z-span of basis.
IntMat relation_matrix(FieldVec const & basis, FieldElem const & theta, FieldVec const & elems);

// Z-basis (HNF) of { X : left X = X right } for square left, right.
std::vector<IntMat> intertwiner_solutions(IntMat const & left, IntMat const & right);

struct IntertwinerLattice {
    std::vector<IntMat> basis;
    IntMat left, right;
};

// Lambda(left, right) = { X : left X = X right }; rank n for a shared irreducible f.
IntertwinerLattice intertwiner_lattice(Automorphism const & left, Automorphism const & right);

// theta with X u_right = theta u_left, where u_left, u_right are the
// eigenvectors of the two sides of Lambda(left, right). Throws
// PreconditionError when X is not an intertwiner.
FieldElem phi_iso(IntMat const & x, FieldVec const & u_left, FieldVec const & u_right);

// Integer combination of a lattice basis.
IntMat combine(std::vector<IntMat> const & basis, std::vector<std::int64_t> const & coeffs);

} // namespace toral
