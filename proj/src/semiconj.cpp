#include "toral/semiconj.hpp"

#include "toral/errors.hpp"

namespace toral {

namespace {

constexpr char const * kModule = "semiconj";

FieldElem dot(IntVec const & s, FieldVec const & w)
{
    FieldElem acc = FieldElem::zero(w.front().ctx());
    for (std::size_t k = 0; k < s.size(); ++k)
        if (s[k] != 0) acc += mpq_class(s[k]) * w[k];
    return acc;
}

IntVec slice(IntVec const & v, std::size_t from, std::size_t len)
{
    return IntVec(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + len));
}

IntVec coords_in_u(FieldElem const & t, FieldVec const & u)
{
    RatVec const c = coords_in_basis(t, u);
    IntVec s(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].get_den() != 1) throw PreconditionError(kModule, "element is not in the ideal I");
        s[k] = c[k].get_num();
    }
    return s;
}

void check_completion(Semiconjugacy const & sc)
{
    std::size_t const n = sc.n(), k = sc.k();
    IntMat const & m = sc.m();
    if (m.rows() != k * n || !is_unimodular(m) || sc.tri.mhat.rows() != k * n ||
        direct_power(sc.c.a.mat(), k) * m != m * sc.tri.mhat || m.block(0, 0, k * n, n) != sc.embed ||
        !sc.tri.mhat.block(n, 0, (k - 1) * n, n).is_zero())
        throw PreconditionError(kModule, "completion M does not verify");
}

} // namespace

FieldVec generators_over_order(FracIdeal const & i, OrderRing const & r, std::size_t budget)
{
    if (!coefficient_ring(i).lattice().contains(r.lattice()))
        throw PreconditionError(kModule, "R is not contained in the coefficient ring of I");
    FieldVec gens = i.elements();
    std::size_t checks = 0;
    for (std::size_t k = gens.size(); k-- > 0 && gens.size() > 1;) {
        if (++checks > budget) throw PreconditionError(kModule, "generator budget exhausted");
        FieldVec rest = gens;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        if (ideal_from_elements(rest, r) == i) gens = std::move(rest);
    }
    if (ideal_from_elements(gens, r) != i) throw VerificationError(kModule, "generators do not span I");
    return gens;
}

Semiconjugacy semiconjugacy_from_generators(FracIdeal const & i, OrderRing const & r)
{
    IdealMatrix a = ideal_to_matrix(i);
    IdealMatrix c = ideal_to_matrix(r.lattice());
    GeneratorData data{generators_over_order(i, r), {}, {}};
    std::size_t const n = a.basis.size();
    std::size_t const k = data.gens.size();

    IntMat embed(k * n, n);
    for (std::size_t t = 0; t < k; ++t) {
        data.x.push_back(relation_matrix(a.basis, data.gens[t], c.basis));
        embed.set_block(t * n, 0, data.x.back());
    }
    if (direct_power(c.a.mat(), k) * embed != embed * a.a.mat())
        throw VerificationError(kModule, "embedding is not a semiconjugacy");

    // rows of [Y_1 .. Y_k] solve y embed = e_row
    data.y.assign(k, IntMat(n, n));
    for (std::size_t row = 0; row < n; ++row) {
        IntVec e(n, 0);
        e[row] = 1;
        auto const sol = solve_integer(embed, e);
        if (!sol) throw VerificationError(kModule, "no integer Y with sum Y_i X_i = I");
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t col = 0; col < n; ++col)
                data.y[t](row, col) = sol->particular[t * n + col];
    }
    IntMat sum(n, n);
    for (std::size_t t = 0; t < k; ++t)
        sum += data.y[t] * data.x[t];
    if (sum != IntMat::identity(n)) throw VerificationError(kModule, "sum Y_i X_i is not the identity");

    TriangularForm tri = complete_embedding(embed, c.a.mat(), k);
    if (tri.a != a.a.mat()) throw VerificationError(kModule, "triangular form does not start with A");
    return {std::move(a), std::move(c), std::move(data), std::move(embed), std::move(tri)};
}

KernelPsiBasis kernel_psi_basis(Semiconjugacy const & sc)
{
    check_completion(sc);
    std::size_t const n = sc.n(), k = sc.k();
    KernelPsiBasis out;
    if (k == 1) return out;
    IntMat const w = sc.w();
    FieldVec const & wb = sc.c.basis;
    MinPolyPtr const & ctx = wb.front().ctx();
    FieldElem const beta = FieldElem::beta(ctx);
    IntMat const d = sc.d();

    FieldVec dep((k - 1) * n, FieldElem::zero(ctx));
    for (std::size_t i = 0; i < k; ++i) {
        FieldVec v;
        for (std::size_t j = 1; j < k; ++j) {
            FieldVec const part = toral::apply(w.block(j * n, i * n, n, n), wb);
            v.insert(v.end(), part.begin(), part.end());
        }
        if (toral::apply(d, v) != scale(beta, v)) throw VerificationError(kModule, "D v_i = beta v_i fails");
        for (std::size_t e = 0; e < v.size(); ++e)
            dep[e] += sc.data.gens[i] * v[e];
        out.v.push_back(std::move(v));
    }
    for (auto const & e : dep)
        if (!e.is_zero()) throw VerificationError(kModule, "sum a_i v_i is not zero");

    for (std::size_t row = n; row < k * n; ++row) {
        IntVec s(k * n, 0);
        s[row] = 1;
        FieldVec x = to_ideal_sum(sc, s).second;
        FieldElem psi = FieldElem::zero(ctx);
        for (std::size_t i = 0; i < k; ++i)
            psi += sc.data.gens[i] * x[i];
        if (!psi.is_zero()) throw VerificationError(kModule, "row of W is not in ker(psi)");
        out.generators.push_back(std::move(x));
    }
    return out;
}

std::pair<FieldElem, FieldVec> to_ideal_sum(Semiconjugacy const & sc, IntVec const & s)
{
    std::size_t const n = sc.n(), k = sc.k();
    if (s.size() != k * n) throw PreconditionError(kModule, "vector must have length kn");
    IntMat const w = sc.w();
    FieldElem const t = dot(slice(s, 0, n), sc.a.basis);
    IntVec tail(k * n, 0);
    for (std::size_t e = n; e < k * n; ++e)
        tail[e] = s[e];
    // x_i = sum_{j >= 2} s_j W_ji w: the i-th block of tail * W
    IntVec const m = tail * w;
    FieldVec x;
    for (std::size_t i = 0; i < k; ++i)
        x.push_back(dot(slice(m, i * n, n), sc.c.basis));
    return {t, std::move(x)};
}

FieldVec theta_beta(FieldElem const & t, Semiconjugacy const & sc)
{
    std::size_t const n = sc.n(), k = sc.k();
    IntVec const s1 = coords_in_u(t, sc.a.basis);
    IntMat const w = sc.w();
    FieldElem const beta = FieldElem::beta(t.ctx());
    IntVec const s1a = s1 * sc.a.a.mat();
    FieldVec out;
    for (std::size_t i = 0; i < k; ++i) {
        IntMat const w1i = w.block(0, i * n, n, n);
        out.push_back(beta * dot(s1 * w1i, sc.c.basis) - dot(s1a * w1i, sc.c.basis));
    }
    if (out != theta(beta, t, sc)) throw VerificationError(kModule, "theta_beta disagrees with the action of A-hat");
    return out;
}

FieldVec theta(FieldElem const & y, FieldElem const & t, Semiconjugacy const & sc)
{
    check_completion(sc);
    std::size_t const n = sc.n(), k = sc.k();
    IntVec const s1 = coords_in_u(t, sc.a.basis);
    auto const cy = to_integer(mult_matrix(y, sc.c.basis));
    if (!cy) throw PreconditionError(kModule, "y is not in R");
    IntMat const ahat = sc.w() * direct_power(*cy, k) * sc.m();
    if (!ahat.block(n, 0, (k - 1) * n, n).is_zero())
        throw VerificationError(kModule, "p(A-hat) is not block upper triangular");
    IntVec s(k * n, 0);
    for (std::size_t e = 0; e < n; ++e)
        s[e] = s1[e];
    IntVec const img = s * ahat;
    auto [ty, x] = to_ideal_sum(sc, img);
    if (ty != y * t) throw VerificationError(kModule, "p(A-hat) does not multiply I by y");
    return x;
}

} // namespace toral
