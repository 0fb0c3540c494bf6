#pragma once

// Semiconjugacy from A (ideal I) into k copies of C_R (order R) through k
// generators of I over R, the kernel of psi(x_1..x_k) = sum a_i x_i, and the
// cocycle theta describing the induced action on I + ker(psi).

#include <cstdint>
#include <utility>
#include <vector>

#include "toral/block.hpp"

namespace toral {

// Greedy generating set of I as an R-module: start from the Z-basis of I and
// drop each element whose removal keeps the R-span. `budget` caps the number
// of span comparisons. Requires R inside (I:I).
FieldVec generators_over_order(FracIdeal const & i, OrderRing const & r, std::size_t budget = 10000);

struct GeneratorData {
    FieldVec gens;          // a_1..a_k
    std::vector<IntMat> x;  // X_i u = a_i w, X_i in Lambda(C_R, A)
    std::vector<IntMat> y;  // sum Y_i X_i = I_n
};

struct Semiconjugacy {
    IdealMatrix a;        // A acting on the basis u of I
    IdealMatrix c;        // C_R acting on the basis w of R
    GeneratorData data;
    IntMat embed;         // X_1; ...; X_k, with (+C_R) embed = embed A
    TriangularForm tri;   // M^-1 (+C_R) M = [[A, S], [0, D]]

    std::size_t k() const { return data.gens.size(); }
    std::size_t n() const { return a.basis.size(); }
    IntMat const & m() const { return tri.m; }
    IntMat w() const { return *unimodular_inverse(tri.m); }
    IntMat d() const { return tri.aprime; }
};

// Requires R inside (I:I) and |f(0)| = 1.
Semiconjugacy semiconjugacy_from_generators(FracIdeal const & i, OrderRing const & r);

struct KernelPsiBasis {
    // v[i - 1] = (W_2i; ...; W_ki) w for i = 1..k; D v_i = beta v_i and
    // sum a_i v_i = 0
    std::vector<FieldVec> v;
    // Z-basis of ker(psi) as k-tuples in R^k, one per row n..kn-1 of W
    std::vector<FieldVec> generators;
};

// Throws PreconditionError when the completion does not verify.
KernelPsiBasis kernel_psi_basis(Semiconjugacy const & sc);

// (s_1, s_2..s_k) in Z^kn -> (s_1 u, x_1..x_k) in I + ker(psi), with
// x_i = sum_{j >= 2} s_j W_ji w.
std::pair<FieldElem, FieldVec> to_ideal_sum(Semiconjugacy const & sc, IntVec const & s);

// theta_beta(t)_i = -s_1 (A - beta I) W_1i w, where t = s_1 u. Checked against
// the direct action of A-hat. Throws PreconditionError when t is not in I.
FieldVec theta_beta(FieldElem const & t, Semiconjugacy const & sc);

// theta_y(t) read off p(A-hat) = W (+p(C_R)) M for y = p(beta) in R: the
// kernel part of the image of (t, 0).
FieldVec theta(FieldElem const & y, FieldElem const & t, Semiconjugacy const & sc);

} // namespace toral
