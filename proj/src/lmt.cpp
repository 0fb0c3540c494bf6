#include "toral/lmt.hpp"

#include "toral/errors.hpp"

namespace toral {

namespace {

constexpr char const * kModule = "lmt-correspondence";

void check_unimodular_square(IntMat const & m)
{
    if (m.rows() == 0 || m.rows() != m.cols()) throw InputError(kModule, "matrix must be square and nonempty");
    mpz_class const d = det(m);
    if (d != 1 && d != -1) throw InputError(kModule, "matrix is not unimodular (det = " + d.get_str() + ")");
}

} // namespace

Automorphism Automorphism::create(IntMat m, IrreducibilityPolicy policy)
{
    check_unimodular_square(m);
    auto ctx = MinPoly::create(charpoly(m), policy);
    return Automorphism(std::move(m), std::move(ctx));
}

Automorphism Automorphism::create(IntMat m, MinPolyPtr ctx)
{
    check_unimodular_square(m);
    if (charpoly(m) != ctx->coeffs())
        throw InputError(kModule, "characteristic polynomial " + to_string(charpoly(m)) + " differs from " +
                                      to_string(ctx->coeffs()));
    return Automorphism(std::move(m), std::move(ctx));
}

FieldVec eigenvector(IntMat const & a, MinPolyPtr const & ctx)
{
    std::size_t const n = a.rows();
    ZPoly const & c = ctx->coeffs();
    if (a.cols() != n || c.size() != n + 1) throw PreconditionError(kModule, "dimension mismatch");
    // adj(tI - A) = sum_k t^k B_k with B_k = sum_{j > k} c_j A^(j-k-1)
    std::vector<IntMat> powers{IntMat::identity(n)};
    for (std::size_t k = 1; k < n; ++k)
        powers.push_back(powers.back() * a);
    std::vector<IntMat> bk(n, IntMat(n, n));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = k + 1; j <= n; ++j) {
            IntMat t = powers[j - k - 1];
            t *= c[j];
            bk[k] += t;
        }
    for (std::size_t col = 0; col < n; ++col) {
        IntMat coords(n, n); // row i = power-basis coordinates of u_i
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                coords(i, k) = bk[k](i, col);
        if (coords.is_zero()) continue;
        mpz_class g = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), coords(i, k).get_mpz_t());
        FieldVec u;
        for (std::size_t i = 0; i < n; ++i) {
            RatVec r(n);
            for (std::size_t k = 0; k < n; ++k)
                r[k] = mpq_class(coords(i, k) / g);
            u.emplace_back(ctx, r);
        }
        if (toral::apply(a, u) != scale(FieldElem::beta(ctx), u))
            throw VerificationError(kModule, "eigenvector check A u = beta u failed");
        return u;
    }
    throw PreconditionError(kModule, "adjugate vanishes; characteristic polynomial is not f");
}

EigenData matrix_to_ideal(Automorphism const & a)
{
    FieldVec u = eigenvector(a.mat(), a.ctx());
    FracIdeal ideal = FracIdeal::from_rows(a.ctx(), coordinate_matrix(u));
    if (!ideal.is_beta_closed()) throw VerificationError(kModule, "eigenvector ideal is not closed under beta");
    return {std::move(u), std::move(ideal)};
}

IdealMatrix ideal_to_matrix(FracIdeal const & i)
{
    if (!i.ctx()->unit_constant())
        throw PreconditionError(kModule, "beta is not a unit, so multiplication by beta is not unimodular");
    FieldVec basis = i.elements();
    auto const m = to_integer(mult_matrix(FieldElem::beta(i.ctx()), basis));
    if (!m) throw PreconditionError(kModule, "lattice is not closed under beta");
    Automorphism a = Automorphism::create(*m, i.ctx());
    return {std::move(a), std::move(basis)};
}

IntMat relation_matrix(FieldVec const & basis, FieldElem const & theta, FieldVec const & elems)
{
    std::size_t const n = basis.size();
    if (elems.size() != n) throw PreconditionError(kModule, "relation between vectors of different lengths");
    IntMat x(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        RatVec const c = coords_in_basis(theta * elems[i], basis);
        for (std::size_t j = 0; j < n; ++j) {
            if (c[j].get_den() != 1)
                throw PreconditionError(kModule, "theta * elems is not an integer combination of the basis");
            x(i, j) = c[j].get_num();
        }
    }
    return x;
}

std::vector<IntMat> intertwiner_solutions(IntMat const & left, IntMat const & right)
{
    std::size_t const n = left.rows();
    if (left.cols() != n || right.rows() != n || right.cols() != n)
        throw PreconditionError(kModule, "intertwiner system needs square matrices of one size");
    std::size_t const nn = n * n;
    // unknown X_ij at index i n + j, equation (p, q) at p n + q
    IntMat k(nn, nn);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q) {
                    mpz_class v = 0;
                    if (q == j) v += left(p, i);
                    if (p == i) v -= right(j, q);
                    k(i * n + j, p * n + q) = v;
                }
    IntMat const ker = kernel_lattice(k);
    std::vector<IntMat> out;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        IntMat x(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                x(i, j) = ker(r, i * n + j);
        if (left * x != x * right) throw VerificationError(kModule, "kernel element is not an intertwiner");
        out.push_back(std::move(x));
    }
    return out;
}

IntertwinerLattice intertwiner_lattice(Automorphism const & left, Automorphism const & right)
{
    if (!(*left.ctx() == *right.ctx())) throw PreconditionError(kModule, "characteristic polynomials differ");
    IntertwinerLattice l{intertwiner_solutions(left.mat(), right.mat()), left.mat(), right.mat()};
    if (l.basis.size() != left.n()) throw VerificationError(kModule, "intertwiner lattice does not have rank n");
    return l;
}

FieldElem phi_iso(IntMat const & x, FieldVec const & u_left, FieldVec const & u_right)
{
    std::size_t const n = u_left.size();
    if (x.rows() != n || x.cols() != n || u_right.size() != n) throw PreconditionError(kModule, "dimension mismatch");
    FieldVec const xv = toral::apply(x, u_right);
    std::size_t k = 0;
    while (k < n && u_left[k].is_zero())
        ++k;
    if (k == n) throw PreconditionError(kModule, "zero eigenvector");
    FieldElem const theta = xv[k] * u_left[k].inverse();
    if (xv != scale(theta, u_left)) throw PreconditionError(kModule, "matrix is not an intertwiner of the two sides");
    return theta;
}

IntMat combine(std::vector<IntMat> const & basis, std::vector<std::int64_t> const & coeffs)
{
    if (basis.empty()) throw PreconditionError(kModule, "empty basis");
    IntMat x(basis.front().rows(), basis.front().cols());
    for (std::size_t k = 0; k < basis.size() && k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        IntMat t = basis[k];
        t *= mpz_class(static_cast<long>(coeffs[k]));
        x += t;
    }
    return x;
}

} // namespace toral
