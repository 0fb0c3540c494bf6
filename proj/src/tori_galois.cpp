#include "toral/tori_galois.hpp"

#include "toral/errors.hpp"
#include "toral/kernels.hpp"

namespace toral {

namespace {

constexpr char const * kModule = "tori-galois";

IntMat doubled(IntMat const & b) { return direct_power(b, 2); }

void require_unimodular(IntMat const & m, char const * what)
{
    if (!m.is_square() || !is_unimodular(m)) throw PreconditionError(kModule, std::string(what) + " is not unimodular");
}

} // namespace

InvariantTorusWitness invariant_torus(IntMat const & embed, Automorphism const & b,
                                      std::optional<IntMat> const & complement)
{
    std::size_t const n = b.n();
    if (embed.rows() != 2 * n || embed.cols() != n) throw PreconditionError(kModule, "embedding must be 2n x n");
    RatMat const e = to_rational(embed);
    RatMat const et = e.transpose();
    auto const gram_inv = inverse(et * e);
    if (!gram_inv) throw PreconditionError(kModule, "embedding does not have rank n");
    auto const a = to_integer(*gram_inv * et * to_rational(doubled(b.mat())) * e);
    if (!a || doubled(b.mat()) * embed != embed * *a)
        throw PreconditionError(kModule, "image of the embedding is not invariant under B + B");
    require_unimodular(*a, "induced action");
    InvariantTorusWitness w{embed, Automorphism::create(*a, b.ctx()), std::nullopt};
    if (complement) {
        if (complement->rows() != 2 * n || complement->cols() != 2 * n || complement->block(0, 0, 2 * n, n) != embed)
            throw PreconditionError(kModule, "complement does not extend the embedding");
        auto const blocks = is_in_script_I(*complement, b);
        if (!blocks) throw PreconditionError(kModule, "complement is not invariant");
        w.complemented = complement;
    }
    return w;
}

std::optional<std::pair<Automorphism, Automorphism>> is_in_script_I(IntMat const & m, Automorphism const & b)
{
    std::size_t const n = b.n();
    if (m.rows() != 2 * n || m.cols() != 2 * n) throw PreconditionError(kModule, "matrix must be 2n x 2n");
    auto const w = unimodular_inverse(m);
    if (!w) throw PreconditionError(kModule, "matrix is not unimodular");
    IntMat const hat = *w * doubled(b.mat()) * m;
    if (!hat.block(0, n, n, n).is_zero() || !hat.block(n, 0, n, n).is_zero()) return std::nullopt;
    // charpoly(A) charpoly(D) = f^2 with f irreducible, so both are f
    return std::make_pair(Automorphism::create(hat.block(0, 0, n, n), b.ctx()),
                          Automorphism::create(hat.block(n, n, n, n), b.ctx()));
}

std::vector<IntMat> centralizer_basis(Automorphism const & b)
{
    IntMat const bb = doubled(b.mat());
    auto basis = intertwiner_solutions(bb, bb);
    if (basis.size() != 4 * b.n()) throw VerificationError(kModule, "centralizer lattice does not have rank 4n");
    return basis;
}

GaloisElement GaloisElement::from_polynomial(MinPolyPtr ctx, QPoly p)
{
    p = poly_rem(p, ctx->qcoeffs());
    if (!check_root_polynomial(p, *ctx))
        throw VerificationError(kModule, "f(p(t)) is not 0 mod f for p = " + toral::to_string(p));
    return GaloisElement(std::move(ctx), std::move(p));
}

GaloisElement GaloisElement::identity(MinPolyPtr ctx) { return from_polynomial(std::move(ctx), QPoly{0, 1}); }

bool GaloisElement::is_identity() const { return p_ == QPoly{0, 1}; }

FieldElem GaloisElement::operator()(FieldElem const & alpha) const
{
    if (!(*alpha.ctx() == *ctx_)) throw PreconditionError(kModule, "element from another field");
    return FieldElem::from_poly(ctx_, poly_compose_mod(alpha.as_poly(), p_, ctx_->qcoeffs()));
}

std::string GaloisElement::to_string() const { return "t -> " + toral::to_string(p_); }

GaloisElement compose(GaloisElement const & outer, GaloisElement const & inner)
{
    if (!(*outer.ctx() == *inner.ctx())) throw PreconditionError(kModule, "Galois elements of different fields");
    return GaloisElement::from_polynomial(outer.ctx(),
                                          poly_compose_mod(outer.poly(), inner.poly(), outer.ctx()->qcoeffs()));
}

QPoly recover_polynomial(IntMat const & axi, Automorphism const & b)
{
    std::size_t const n = b.n();
    if (axi.rows() != n || axi.cols() != n) throw PreconditionError(kModule, "dimension mismatch");
    if (axi * b.mat() != b.mat() * axi) throw PreconditionError(kModule, "matrix does not commute with B");
    // row k = entries of B^k
    RatMat sys(n, n * n);
    IntMat pw = IntMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t e = 0; e < n * n; ++e)
            sys(k, e) = pw.entries()[e];
        pw = pw * b.mat();
    }
    RatVec rhs(n * n);
    for (std::size_t e = 0; e < n * n; ++e)
        rhs[e] = axi.entries()[e];
    auto const p = solve_rational(sys, rhs);
    if (!p || *p * sys != rhs) throw PreconditionError(kModule, "no polynomial in B equals the matrix");
    QPoly out = *p;
    trim(out);
    if (charpoly(axi) == b.ctx()->coeffs() && !check_root_polynomial(out, *b.ctx()))
        throw VerificationError(kModule, "recovered polynomial does not map beta to a root of f");
    return out;
}

bool check_E_membership_inverse_criterion(IntMat const & xi, Automorphism const & b)
{
    std::size_t const n = b.n();
    if (xi.rows() != 2 * n || xi.cols() != 2 * n) throw PreconditionError(kModule, "matrix must be 2n x 2n");
    require_unimodular(xi, "xi");
    IntMat const binv = *unimodular_inverse(b.mat());
    return doubled(b.mat()) * xi == xi * doubled(binv);
}

GaloisElement galois_of_xi(IntMat const & xi, Automorphism const & b)
{
    std::size_t const n = b.n();
    if (xi.rows() != 2 * n || xi.cols() != 2 * n) throw PreconditionError(kModule, "matrix must be 2n x 2n");
    auto const w = unimodular_inverse(xi);
    if (!w) throw PreconditionError(kModule, "xi is not unimodular");
    IntMat const hat = *w * doubled(b.mat()) * xi;
    if (!hat.block(0, n, n, n).is_zero() || !hat.block(n, 0, n, n).is_zero())
        throw PreconditionError(kModule, "xi^-1 (B + B) xi is not block diagonal");
    IntMat const axi = hat.block(0, 0, n, n);
    if (axi != hat.block(n, n, n, n)) throw PreconditionError(kModule, "diagonal blocks of xi^-1 (B + B) xi differ");
    return GaloisElement::from_polynomial(b.ctx(), recover_polynomial(axi, b));
}

std::optional<IntMat> find_inverse_swap_direct(Automorphism const & b, std::int64_t bound, XiSearchStats * stats,
                                               bool parallel)
{
    if (bound < 1) throw InputError(kModule, "search bound must be positive");
    XiSearchStats local;
    XiSearchStats & st = stats ? *stats : local;
    st = {};
    IntMat const bb = doubled(b.mat());
    IntMat const bbinv = doubled(*unimodular_inverse(b.mat()));
    auto const sols = intertwiner_solutions(bb, bbinv);
    if (sols.empty()) return std::nullopt;
    std::size_t const dim = 2 * b.n();
    std::size_t const r = sols.size();
    IntMat flat(r, dim * dim);
    for (std::size_t k = 0; k < r; ++k)
        flat.set_row(k, sols[k].entries());
    IntMat const red = lll_reduce(flat);
    std::vector<IntMat> basis;
    for (std::size_t k = 0; k < r; ++k)
        basis.emplace_back(dim, dim, red.row(k));

    for (std::int64_t s = 1; s <= bound; ++s) {
        st.shells = s;
        std::uint64_t const size = shell_size(r, s);
        auto pred = [&](std::uint64_t idx) { return is_unimodular(combine(basis, shell_point(r, s, idx))); };
        auto const hit = parallel ? first_hit_parallel(size, pred) : first_hit_serial(size, pred);
        if (hit) {
            st.candidates += *hit + 1;
            IntMat xi = combine(basis, shell_point(r, s, *hit));
            if (!check_E_membership_inverse_criterion(xi, b))
                throw VerificationError(kModule, "search result fails (B + B) xi = xi (B^-1 + B^-1)");
            return xi;
        }
        st.candidates += size;
    }
    return std::nullopt;
}

std::optional<IntMat> find_inverse_swap(Automorphism const & b, std::int64_t bound, std::uint64_t seed,
                                        bool * proved_absent)
{
    if (bound < 1) throw InputError(kModule, "search bound must be positive");
    bool absent_local = false;
    bool & absent = proved_absent ? *proved_absent : absent_local;
    absent = false;
    IntMat const binv_mat = *unimodular_inverse(b.mat());
    // xi exists only if B + B and B^-1 + B^-1 are similar over Q
    if (charpoly(binv_mat) != b.ctx()->coeffs()) {
        absent = true;
        return std::nullopt;
    }
    Automorphism const binv = Automorphism::create(binv_mat, b.ctx());
    // 2-block conjugacy forces weak equivalence
    if (!is_weakly_equivalent(matrix_to_ideal(binv).ideal, matrix_to_ideal(b).ideal)) {
        absent = true;
        return std::nullopt;
    }
    BlockCertificate const m = construct_two_block(binv, b, seed).forward;
    Automorphism const aprime = Automorphism::create(m.right[1], b.ctx());
    auto const alpha = is_arith_equivalent_bounded(matrix_to_ideal(aprime).ideal, matrix_to_ideal(binv).ideal, bound);
    if (!alpha) return std::nullopt;
    // Z A' = B^-1 Z
    IntMat const z = conjugacy_witness(aprime, binv, *alpha);
    IntMat xi = m.m * direct_sum(std::vector<IntMat>{IntMat::identity(b.n()), *unimodular_inverse(z)});
    if (!check_E_membership_inverse_criterion(xi, b))
        throw VerificationError(kModule, "constructed xi fails (B + B) xi = xi (B^-1 + B^-1)");
    return xi;
}

std::optional<CentralizerWitness> centralizer_witness(IntMat const & m, Automorphism const & b, IntMat const & p,
                                                      std::int64_t bound)
{
    std::size_t const n = b.n();
    auto const blocks = is_in_script_I(m, b);
    if (!blocks) throw PreconditionError(kModule, "M^-1 (B + B) M is not block diagonal");
    Automorphism const & a = blocks->first;
    Automorphism const & d = blocks->second;
    if (p.rows() != n || p.cols() != n || !is_unimodular(p) || p * a.mat() != b.mat() * p)
        throw PreconditionError(kModule, "P is not a conjugacy P A = B P");

    auto const alpha = is_arith_equivalent_bounded(matrix_to_ideal(d).ideal, matrix_to_ideal(b).ideal, bound);
    if (!alpha) return std::nullopt;
    IntMat const z = conjugacy_witness(d, b, *alpha);
    IntMat const v = direct_sum(std::vector<IntMat>{p, z});
    IntMat const u = v * *unimodular_inverse(m);

    IntMat const bb = doubled(b.mat());
    if (bb * u != u * bb || !is_unimodular(u)) throw VerificationError(kModule, "U is not in the centralizer");
    IntMat const target = vstack(p, IntMat(n, n));
    if (u * m.block(0, 0, 2 * n, n) != target)
        throw VerificationError(kModule, "U does not carry the subtorus of M onto the first factor");
    return CentralizerWitness{u, v, z};
}

} // namespace toral
