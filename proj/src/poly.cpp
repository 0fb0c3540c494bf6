#include "toral/poly.hpp"

#include <cstdint>
#include <set>
#include <sstream>

namespace toral {

namespace {
constexpr char const * kModule = "number-field";
}

void trim(QPoly & p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

void trim(ZPoly & p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

long degree(QPoly const & p)
{
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<long>(i);
    return -1;
}

long degree(ZPoly const & p)
{
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<long>(i);
    return -1;
}

QPoly to_qpoly(ZPoly const & p)
{
    QPoly q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        q[i] = p[i];
    return q;
}

QPoly poly_add(QPoly const & a, QPoly const & b)
{
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] += b[i];
    trim(r);
    return r;
}

QPoly poly_sub(QPoly const & a, QPoly const & b)
{
    QPoly r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] -= b[i];
    trim(r);
    return r;
}

QPoly poly_mul(QPoly const & a, QPoly const & b)
{
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly poly_scale(QPoly const & a, mpq_class const & s)
{
    QPoly r = a;
    for (auto & c : r)
        c *= s;
    trim(r);
    return r;
}

std::pair<QPoly, QPoly> poly_divmod(QPoly const & a, QPoly const & b)
{
    long const db = degree(b);
    if (db < 0) throw PreconditionError(kModule, "polynomial division by zero");
    QPoly r = a;
    trim(r);
    long dr = degree(r);
    QPoly q(dr >= db ? static_cast<std::size_t>(dr - db + 1) : 0, mpq_class(0));
    mpq_class const lead = b[static_cast<std::size_t>(db)];
    while (dr >= db) {
        mpq_class const c = r[static_cast<std::size_t>(dr)] / lead;
        std::size_t const shift = static_cast<std::size_t>(dr - db);
        q[shift] = c;
        for (long i = 0; i <= db; ++i)
            r[shift + static_cast<std::size_t>(i)] -= c * b[static_cast<std::size_t>(i)];
        trim(r);
        dr = degree(r);
    }
    trim(q);
    return {q, r};
}

QPoly poly_rem(QPoly const & a, QPoly const & b) { return poly_divmod(a, b).second; }

mpq_class poly_eval(QPoly const & p, mpq_class const & x)
{
    mpq_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

QPoly poly_compose_mod(QPoly const & p, QPoly const & q, QPoly const & m)
{
    QPoly acc;
    QPoly const qr = poly_rem(q, m);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = poly_rem(poly_mul(acc, qr), m);
        acc = poly_add(acc, QPoly{p[i]});
    }
    return poly_rem(acc, m);
}

ZPoly zpoly_mul(ZPoly const & a, ZPoly const & b)
{
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

mpz_class zpoly_eval(ZPoly const & p, mpz_class const & x)
{
    mpz_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = acc * x + p[i];
    return acc;
}

namespace {

template <class C>
std::string format_poly(std::vector<C> const & p, char const * var)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        C c = p[i];
        if (c == 0) continue;
        bool const neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool const unit = (c == 1);
        if (i == 0 || !unit) {
            os << c;
            if (i > 0) os << "*";
        }
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

// ---- polynomials over F_p with small p, low degree first ----

using Fp = std::vector<std::int64_t>;

void fp_trim(Fp & a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::int64_t fp_inv(std::int64_t a, std::int64_t p)
{
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

Fp fp_rem(Fp a, Fp const & b, std::int64_t p)
{
    fp_trim(a);
    std::size_t const db = b.size() - 1;
    std::int64_t const inv = fp_inv(b.back(), p);
    while (!a.empty() && a.size() - 1 >= db) {
        std::int64_t const c = a.back() * inv % p;
        std::size_t const shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        fp_trim(a);
    }
    return a;
}

Fp fp_div(Fp a, Fp const & b, std::int64_t p)
{
    fp_trim(a);
    std::size_t const db = b.size() - 1;
    if (a.size() < b.size()) return {};
    Fp q(a.size() - db, 0);
    std::int64_t const inv = fp_inv(b.back(), p);
    while (!a.empty() && a.size() - 1 >= db) {
        std::int64_t const c = a.back() * inv % p;
        std::size_t const shift = a.size() - 1 - db;
        q[shift] = c;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        fp_trim(a);
    }
    fp_trim(q);
    return q;
}

Fp fp_mulmod(Fp const & a, Fp const & b, Fp const & m, std::int64_t p)
{
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return fp_rem(std::move(r), m, p);
}

Fp fp_gcd(Fp a, Fp b, std::int64_t p)
{
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        Fp r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::int64_t const inv = fp_inv(a.back(), p);
        for (auto & c : a)
            c = c * inv % p;
    }
    return a;
}

Fp fp_powmod(Fp base, std::int64_t e, Fp const & m, std::int64_t p)
{
    Fp r{1};
    base = fp_rem(std::move(base), m, p);
    while (e) {
        if (e & 1) r = fp_mulmod(r, base, m, p);
        base = fp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Fp fp_sub(Fp a, Fp const & b, std::int64_t p)
{
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = ((a[i] - b[i]) % p + p) % p;
    fp_trim(a);
    return a;
}

// Degrees of the irreducible factors of a squarefree monic f over F_p.
std::vector<std::size_t> distinct_degree_pattern(Fp const & f, std::int64_t p)
{
    std::vector<std::size_t> degs;
    Fp g = f;
    Fp h{0, 1};
    Fp const x{0, 1};
    for (std::size_t d = 1; g.size() - 1 >= 2 * d; ++d) {
        h = fp_powmod(h, p, f, p);
        Fp const common = fp_gcd(g, fp_sub(h, x, p), p);
        std::size_t const cd = common.size() - 1;
        for (std::size_t k = 0; k < cd / d; ++k)
            degs.push_back(d);
        if (cd > 0) g = fp_div(g, common, p);
    }
    if (g.size() > 1) degs.push_back(g.size() - 1);
    return degs;
}

std::set<std::size_t> subset_sums(std::vector<std::size_t> const & degs, std::size_t n)
{
    std::vector<bool> can(n + 1, false);
    can[0] = true;
    for (auto d : degs)
        for (std::size_t s = n + 1; s-- > d;)
            if (can[s - d]) can[s] = true;
    std::set<std::size_t> out;
    for (std::size_t s = 1; s < n; ++s)
        if (can[s]) out.insert(s);
    return out;
}

std::vector<mpz_class> divisors(mpz_class m, unsigned long limit)
{
    if (m < 0) m = -m;
    std::vector<mpz_class> out;
    if (m == 0) return out;
    if (m > mpz_class(limit) * limit) return out;
    for (mpz_class d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d * d != m) out.push_back(m / d);
        }
    }
    return out;
}

bool zpoly_divides(ZPoly const & g, ZPoly const & f)
{
    // g monic
    ZPoly r = f;
    std::size_t const dg = g.size() - 1;
    while (!r.empty() && r.size() - 1 >= dg) {
        mpz_class const c = r.back();
        std::size_t const shift = r.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i)
            r[shift + i] -= c * g[i];
        trim(r);
        if (r.empty()) return true;
    }
    return r.empty();
}

mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

std::string to_string(QPoly const & p, char const * var) { return format_poly(p, var); }
std::string to_string(ZPoly const & p, char const * var) { return format_poly(p, var); }

IrreducibilityReport check_irreducible(ZPoly const & f_in, unsigned long search_budget)
{
    ZPoly f = f_in;
    trim(f);
    long const dl = degree(f);
    if (dl < 1 || f.back() != 1)
        throw InputError(kModule, "irreducibility test needs a monic polynomial of degree >= 1");
    std::size_t const n = static_cast<std::size_t>(dl);
    if (n == 1) return {Irreducibility::Verified, "linear"};
    if (f[0] == 0) return {Irreducibility::Reducible, "root t = 0"};

    // integer roots divide the constant term
    for (auto const & d : divisors(f[0], 1000000)) {
        if (zpoly_eval(f, d) == 0 || zpoly_eval(f, -d) == 0)
            return {Irreducibility::Reducible, "integer root"};
    }
    if (n <= 3 && abs(f[0]) <= mpz_class(1000000) * 1000000)
        return {Irreducibility::Verified, "no integer root"};

    // factor degrees possible over Q must be realizable modulo every good prime
    std::set<std::size_t> possible;
    for (std::size_t s = 1; s < n; ++s)
        possible.insert(s);
    static constexpr std::int64_t primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                              59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
    for (std::int64_t p : primes) {
        Fp fp(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            mpz_class r = f[i] % p;
            if (r < 0) r += p;
            fp[i] = r.get_si();
        }
        Fp dfp(n, 0);
        for (std::size_t i = 1; i <= n; ++i)
            dfp[i - 1] = fp[i] * static_cast<std::int64_t>(i) % p;
        fp_trim(dfp);
        if (dfp.empty() || fp_gcd(fp, dfp, p).size() > 1) continue; // not squarefree mod p
        auto const sums = subset_sums(distinct_degree_pattern(fp, p), n);
        std::set<std::size_t> keep;
        for (auto s : possible)
            if (sums.count(s)) keep.insert(s);
        possible = std::move(keep);
        if (possible.empty()) return {Irreducibility::Verified, "factor degrees modulo primes"};
    }

    // bounded search for a monic factor of each surviving degree d <= n/2
    mpz_class norm2 = 0;
    for (auto const & c : f)
        norm2 += c * c;
    mpz_class norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    unsigned long spent = 0;
    bool exhaustive = true;
    for (std::size_t d : possible) {
        if (2 * d > n) continue;
        auto const consts = divisors(f[0], 1000000);
        if (consts.empty()) {
            exhaustive = false;
            continue;
        }
        // coefficient bounds |g_j| <= C(d, j) * ||f||_2 for j = 1..d-1
        std::vector<mpz_class> bound(d, 0);
        mpz_class count = consts.size() * 2;
        for (std::size_t j = 1; j < d; ++j) {
            bound[j] = binomial(d, j) * norm;
            count *= 2 * bound[j] + 1;
        }
        if (count > mpz_class(search_budget) - spent) {
            exhaustive = false;
            continue;
        }
        spent += count.get_ui();
        ZPoly g(d + 1, mpz_class(0));
        g[d] = 1;
        for (auto const & c0 : consts) {
            for (int sgn : {1, -1}) {
                g[0] = sgn * c0;
                for (std::size_t j = 1; j < d; ++j)
                    g[j] = -bound[j];
                while (true) {
                    if (zpoly_divides(g, f)) return {Irreducibility::Reducible, "explicit factor"};
                    std::size_t j = 1;
                    while (j < d) {
                        if (g[j] < bound[j]) {
                            ++g[j];
                            break;
                        }
                        g[j] = -bound[j];
                        ++j;
                    }
                    if (j >= d) break;
                }
            }
        }
    }
    if (exhaustive) return {Irreducibility::Verified, "bounded factor search"};
    return {Irreducibility::Unknown, "inconclusive within budget"};
}

} // namespace toral
