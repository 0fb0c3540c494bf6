#include "toral/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "toral/errors.hpp"
#include "toral/fixtures.hpp"
#include "toral/io.hpp"
#include "toral/semiconj.hpp"
#include "toral/tori_galois.hpp"

namespace toral {

namespace {

using json = nlohmann::ordered_json;
namespace fx = toral::fixtures;

struct Options {
    std::int64_t bound = 50;
    std::uint64_t seed = 0;
    std::string format = "text";
    bool assume_irreducible = false;

    IrreducibilityPolicy policy() const
    {
        return assume_irreducible ? IrreducibilityPolicy::Assume : IrreducibilityPolicy::Verify;
    }
    bool structured() const { return format == "structured"; }
};

// Text and structured output built side by side; only one is printed.
struct Report {
    std::ostringstream text;
    json doc = json::object();
    int code = kExitOk;

    void fail() { code = kExitVerification; }
};

std::string yes(bool b) { return b ? "yes" : "no"; }

json jmat(IntMat const & m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(m(i, j).get_str());
        rows.push_back(r);
    }
    return rows;
}

json jpoly(ZPoly const & p)
{
    json a = json::array();
    for (auto const & c : p)
        a.push_back(c.get_str());
    return a;
}

json jrat(RatVec const & v)
{
    json a = json::array();
    for (auto const & c : v)
        a.push_back(c.get_str());
    return a;
}

json jvec(FieldVec const & v)
{
    json a = json::array();
    for (auto const & e : v)
        a.push_back(jrat(e.coords()));
    return a;
}

json jideal(FracIdeal const & i) { return {{"den", i.den().get_str()}, {"basis", jmat(i.basis())}}; }

std::string show(FieldVec const & v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? ", " : "") + v[k].to_string("beta");
    return s + ")";
}

std::string show(IntMat const & m)
{
    std::ostringstream os;
    os << m;
    return os.str();
}

std::string load(std::string const & path)
{
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    return read_file(path);
}

void write_file(std::filesystem::path const & p, std::string const & content)
{
    std::ofstream out(p, std::ios::binary);
    if (!out) throw InputError("cli", "cannot write '" + p.string() + "'");
    out << content;
}

// Rechecks a certificate with the independent multiplier; records the result.
json check_certificate(Report & r, std::string const & label, BlockCertificate const & c)
{
    RecheckReport const rep = recheck_certificate(c);
    if (!rep.ok()) r.fail();
    r.text << "certificate " << label << " (k = " << c.k() << "):\n" << format_certificate(c);
    r.text << "check: det M = " << rep.det.get_str() << ", equation "
           << (rep.equation_ok ? "holds" : "FAILS: " + rep.reason) << (rep.ok() ? ", verified" : ", REJECTED") << "\n";
    json j{{"label", label}, {"k", c.k()}, {"left", jmat(c.left)}};
    json right = json::array();
    for (auto const & m : c.right)
        right.push_back(jmat(m));
    j["right"] = right;
    j["M"] = jmat(c.m);
    j["det"] = rep.det.get_str();
    j["equation_holds"] = rep.equation_ok;
    j["verified"] = rep.ok();
    return j;
}

void analyze_matrix(Report & r, IntMat const & m, Options const & o)
{
    Automorphism const a = Automorphism::create(m, o.policy());
    EigenData const e = matrix_to_ideal(a);
    OrderRing const ring = coefficient_ring(e.ideal);
    bool const zb = ring.lattice() == FracIdeal::unit(a.ctx());
    bool const inv = is_invertible(e.ideal);
    r.text << "matrix: " << show(m) << "\n"
           << "det: " << det(m).get_str() << "\n"
           << "charpoly: " << to_string(a.ctx()->coeffs()) << "\n"
           << "irreducibility: " << (a.ctx()->irreducibility_verified() ? "verified" : "assumed") << " ("
           << a.ctx()->irreducibility_method() << ")\n"
           << "eigenvector u: " << show(e.u) << "\n"
           << "ideal I: " << e.ideal.to_string() << "\n"
           << "coefficient ring (I:I): " << ring.lattice().to_string() << "\n"
           << "coefficient ring is Z[beta]: " << yes(zb) << "\n"
           << "invertible: " << yes(inv) << "\n";
    r.doc["matrix"] = jmat(m);
    r.doc["det"] = det(m).get_str();
    r.doc["charpoly"] = jpoly(a.ctx()->coeffs());
    r.doc["irreducibility"] = {{"verified", a.ctx()->irreducibility_verified()},
                               {"method", a.ctx()->irreducibility_method()}};
    r.doc["eigenvector"] = jvec(e.u);
    r.doc["ideal"] = jideal(e.ideal);
    r.doc["coefficient_ring"] = jideal(ring.lattice());
    r.doc["coefficient_ring_is_z_beta"] = zb;
    r.doc["invertible"] = inv;
}

void analyze_poly(Report & r, ZPoly const & f, Options const & o)
{
    auto const ctx = MinPoly::create(f, o.policy());
    r.text << "polynomial: " << to_string(ctx->coeffs()) << "\n"
           << "irreducibility: " << (ctx->irreducibility_verified() ? "verified" : "assumed") << " ("
           << ctx->irreducibility_method() << ")\n"
           << "beta is a unit: " << yes(ctx->unit_constant()) << "\n";
    r.doc["polynomial"] = jpoly(ctx->coeffs());
    r.doc["irreducibility"] = {{"verified", ctx->irreducibility_verified()}, {"method", ctx->irreducibility_method()}};
    r.doc["beta_unit"] = ctx->unit_constant();
    if (ctx->unit_constant()) {
        IdealMatrix const c = ideal_to_matrix(FracIdeal::unit(ctx));
        r.text << "matrix of Z[beta]: " << show(c.a.mat()) << "\n";
        r.doc["matrix_of_z_beta"] = jmat(c.a.mat());
    }
}

struct Pair {
    Automorphism a, b;
};

Pair load_pair(std::string const & pa, std::string const & pb, Options const & o)
{
    Automorphism a = Automorphism::create(parse_matrix(load(pa)), o.policy());
    Automorphism b = Automorphism::create(parse_matrix(load(pb)), a.ctx());
    return {std::move(a), std::move(b)};
}

std::string verdict_text(Trichotomy const & t)
{
    switch (t.verdict) {
    case Verdict::Conjugate:
        return "CONJUGATE";
    case Verdict::TwoBlockOnly:
        return "TWO-BLOCK CONJUGATE (conjugacy undetermined at bound " + std::to_string(t.bound_used) + ")";
    case Verdict::NotBlockConjugate:
        return "NOT BLOCK CONJUGATE";
    }
    return "";
}

// Shared body of decide and certify; returns the certificates found.
std::vector<std::pair<std::string, BlockCertificate>> run_decide(Report & r, Pair const & p, Options const & o)
{
    FracIdeal const i = matrix_to_ideal(p.a).ideal;
    FracIdeal const j = matrix_to_ideal(p.b).ideal;
    bool const inv_i = is_invertible(i), inv_j = is_invertible(j);
    Trichotomy const t = decide(p.a, p.b, o.bound, o.seed);
    bool const weak = t.verdict != Verdict::NotBlockConjugate;

    r.text << "charpoly: " << to_string(p.a.ctx()->coeffs()) << "\n"
           << "ideal I (A): " << i.to_string() << "\n"
           << "ideal J (B): " << j.to_string() << "\n"
           << "invertible I: " << yes(inv_i) << "\n"
           << "invertible J: " << yes(inv_j) << "\n"
           << "weakly equivalent: " << yes(weak) << "\n";
    if (weak)
        r.text << "arithmetic search: bound " << o.bound << ", shells " << t.search.shells << ", candidates "
               << t.search.candidates << "\n";
    r.text << "verdict: " << verdict_text(t) << "\n";

    r.doc["charpoly"] = jpoly(p.a.ctx()->coeffs());
    r.doc["bound"] = o.bound;
    r.doc["seed"] = o.seed;
    r.doc["ideal_I"] = jideal(i);
    r.doc["ideal_J"] = jideal(j);
    r.doc["invertible_I"] = inv_i;
    r.doc["invertible_J"] = inv_j;
    r.doc["weakly_equivalent"] = weak;
    r.doc["search"] = {{"shells", t.search.shells}, {"candidates", t.search.candidates}};
    r.doc["verdict"] = verdict_text(t);
    r.doc["conjugacy_undetermined"] = t.conjugacy_undetermined;

    std::vector<std::pair<std::string, BlockCertificate>> certs;
    if (t.verdict == Verdict::Conjugate) {
        r.text << "alpha (alpha I = J): " << t.alpha->to_string("beta") << "\n";
        r.doc["alpha"] = jrat(t.alpha->coords());
        certs.emplace_back("conjugacy", BlockCertificate{*t.witness, p.b.mat(), {p.a.mat()}, std::nullopt});
    } else if (t.verdict == Verdict::TwoBlockOnly) {
        certs.emplace_back("forward", t.certificates->forward);
        certs.emplace_back("backward", t.certificates->backward);
        auto const & g = *t.certificates->forward.generators;
        r.text << "generators: a1 = " << g.a1.to_string("beta") << ", a2 = " << g.a2.to_string("beta")
               << ", b1 = " << g.b1.to_string("beta") << ", b2 = " << g.b2.to_string("beta") << "\n";
        r.doc["generators"] = {{"a1", jrat(g.a1.coords())},
                               {"a2", jrat(g.a2.coords())},
                               {"b1", jrat(g.b1.coords())},
                               {"b2", jrat(g.b2.coords())}};
    }
    json cj = json::array();
    for (auto const & [label, c] : certs)
        cj.push_back(check_certificate(r, label, c));
    r.doc["certificates"] = cj;
    return certs;
}

void cmd_decide(Report & r, std::string const & pa, std::string const & pb, Options const & o)
{
    Pair const p = load_pair(pa, pb, o);
    auto const certs = run_decide(r, p, o);
    if (r.code == kExitOk && certs.size() == 2) r.code = kExitInconclusive;
}

void cmd_certify(Report & r, std::string const & pa, std::string const & pb, std::string const & dir,
                 Options const & o)
{
    Pair const p = load_pair(pa, pb, o);
    auto const certs = run_decide(r, p, o);
    if (certs.empty()) {
        r.text << "no certificate: the ideals are not weakly equivalent\n";
        r.fail();
        return;
    }
    if (!dir.empty()) {
        std::filesystem::create_directories(dir);
        json files = json::array();
        for (auto const & [label, c] : certs) {
            auto const path = std::filesystem::path(dir) / (label + ".cert");
            write_file(path, format_certificate(c));
            r.text << "wrote " << path.string() << "\n";
            files.push_back(path.string());
        }
        r.doc["files"] = files;
    }
}

void cmd_verify(Report & r, std::string const & path)
{
    BlockCertificate const c = parse_certificate(load(path));
    RecheckReport const rep = recheck_certificate(c);
    r.text << "k: " << c.right.size() << "\n";
    if (rep.shapes_ok) r.text << "det M: " << rep.det.get_str() << "\n";
    r.text << "equation (+left) M = M (+right): " << (rep.equation_ok ? "holds" : "fails") << "\n";
    r.text << (rep.ok() ? "VERIFIED" : "REJECTED: " + rep.reason) << "\n";
    r.doc["k"] = c.right.size();
    r.doc["shapes_ok"] = rep.shapes_ok;
    r.doc["det"] = rep.det.get_str();
    r.doc["equation_holds"] = rep.equation_ok;
    r.doc["verified"] = rep.ok();
    if (!rep.ok()) {
        r.doc["reason"] = rep.reason;
        r.fail();
    }
}

// One named fixture check: recorded in both outputs, failure sets exit 1.
void fact(Report & r, json & section, std::string const & name, bool ok)
{
    r.text << "  " << name << ": " << yes(ok) << "\n";
    section[name] = ok;
    if (!ok) r.fail();
}

void cmd_fixtures(Report & r, std::string const & dir)
{
    std::vector<std::pair<std::string, std::string>> files;

    // f = t^2 - 10t + 1
    {
        json s = json::object();
        r.text << "quad10: A = " << show(fx::quad10::a()) << ", B = " << show(fx::quad10::b()) << "\n";
        BlockCertificate const m{fx::quad10::m(), fx::quad10::b(), {fx::quad10::a(), fx::quad10::a_prime()}, {}};
        BlockCertificate const n{fx::quad10::n(), fx::quad10::a(), {fx::quad10::b(), fx::quad10::b_prime()}, {}};
        RecheckReport const rm = recheck_certificate(m), rn = recheck_certificate(n);
        auto const ctx = MinPoly::create(fx::quad10::f());
        auto el = [&](QPoly const & q) { return FieldElem::from_poly(ctx, q); };
        fact(r, s, "charpoly A = charpoly B = t^2 - 10t + 1",
             charpoly(fx::quad10::a()) == fx::quad10::f() && charpoly(fx::quad10::b()) == fx::quad10::f());
        fact(r, s, "(B+B) M = M (A+A'), det M = 1", rm.ok() && rm.det == 1);
        fact(r, s, "(A+A) N = N (B+B'), det N = -1", rn.ok() && rn.det == -1);
        fact(r, s, "a1 b1 + a2 b2 = 1",
             el(fx::quad10::a1()) * el(fx::quad10::b1()) + el(fx::quad10::a2()) * el(fx::quad10::b2()) ==
                 FieldElem::one(ctx));
        r.doc["quad10"] = s;
        files.emplace_back("quad10_A.txt", format_matrix(fx::quad10::a()));
        files.emplace_back("quad10_B.txt", format_matrix(fx::quad10::b()));
        files.emplace_back("quad10_M.cert", format_certificate(m));
        files.emplace_back("quad10_N.cert", format_certificate(n));
    }
    // f = t^2 - 20t + 1
    {
        json s = json::object();
        auto const b = Automorphism::create(fx::quad20::b());
        IntMat const xi = fx::quad20::xi();
        r.text << "quad20: B = " << show(b.mat()) << ", xi = " << show(xi) << "\n";
        GaloisElement const g = galois_of_xi(xi, b);
        fact(r, s, "(B+B) xi = xi (B^-1+B^-1)", check_E_membership_inverse_criterion(xi, b));
        fact(r, s, "xi^2 = I", xi * xi == IntMat::identity(4));
        fact(r, s, "galois(xi) = t -> 20 - t", g.poly() == QPoly{20, -1});
        fact(r, s, "galois(xi^2) = identity", galois_of_xi(xi * xi, b).is_identity());
        r.doc["quad20"] = s;
        files.emplace_back("quad20_B.txt", format_matrix(b.mat()));
        files.emplace_back("quad20_xi.txt", format_matrix(xi));
    }
    // f = t^3 - 23t^2 + 7t - 1
    {
        json s = json::object();
        IntMat const a = fx::cubic23::a(), b = fx::cubic23::b(), e = fx::cubic23::embedding();
        r.text << "cubic23: A = " << show(a) << ", B = " << show(b) << "\n";
        auto const pa = Automorphism::create(a);
        auto const pb = Automorphism::create(b, pa.ctx());
        FracIdeal const i = matrix_to_ideal(pa).ideal, j = matrix_to_ideal(pb).ideal;
        TriangularForm const t = complete_embedding(e, b, 2);
        fact(r, s, "invertible J", is_invertible(j));
        fact(r, s, "I not invertible", !is_invertible(i));
        fact(r, s, "I, J not weakly equivalent", !is_weakly_equivalent(i, j));
        fact(r, s, "(B+B) E = E A", direct_power(b, 2) * e == e * a);
        fact(r, s, "completion has S != 0", !t.s.is_zero());
        r.doc["cubic23"] = s;
        files.emplace_back("cubic23_A.txt", format_matrix(a));
        files.emplace_back("cubic23_B.txt", format_matrix(b));
        files.emplace_back("cubic23_E.txt", format_matrix(e));
    }
    // Dade-Taussky-Zassenhaus family
    {
        json s = json::object();
        auto const d3 = dtz_fixture(fx::dtz::cubic());
        auto const d4 = dtz_fixture(fx::dtz::quartic());
        r.text << "dtz: theta^3 - theta - 1 and theta^4 - theta - 1\n";
        fact(r, s, "cubic (I:I) = R", coefficient_ring(d3.i) == d3.r);
        fact(r, s, "cubic R != Z[theta]", !(d3.r == d3.r0));
        fact(r, s, "cubic I not invertible", !is_invertible(d3.i));
        fact(r, s, "cubic I^2 = Z[theta]", ideal_mul(d3.i, d3.i) == d3.r0.lattice());
        FracIdeal const i2 = ideal_mul(d4.i, d4.i);
        fact(r, s, "quartic (I:I) = R", coefficient_ring(d4.i) == d4.r);
        fact(r, s, "quartic I, I^2 not invertible", !is_invertible(d4.i) && !is_invertible(i2));
        fact(r, s, "quartic I^3 = Z[theta]", ideal_mul(i2, d4.i) == d4.r0.lattice());
        r.doc["dtz"] = s;
        files.emplace_back("dtz_cubic.poly", format_poly(fx::dtz::cubic()));
        files.emplace_back("dtz_quartic.poly", format_poly(fx::dtz::quartic()));
    }
    if (!dir.empty()) {
        std::filesystem::create_directories(dir);
        json list = json::array();
        for (auto const & [name, content] : files) {
            auto const path = std::filesystem::path(dir) / name;
            write_file(path, content);
            list.push_back(path.string());
        }
        r.text << "wrote " << files.size() << " files to " << dir << "\n";
        r.doc["files"] = list;
    }
}

void add_common(CLI::App * app, Options & o)
{
    app->add_option("--bound", o.bound, "coordinate bound for the arithmetic search")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{1000000}));
    app->add_option("--seed", o.seed, "seed for the partition-of-unity search");
    app->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "structured"}));
    app->add_flag("--assume-irreducible", o.assume_irreducible,
                  "accept a characteristic polynomial whose irreducibility test is inconclusive");
}

} // namespace

int run_cli(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"toral: conjugacy and block conjugacy of irreducible toral automorphisms", "toral"};
    app.require_subcommand(1);
    Options o;

    std::string path_a, path_b, cert, dir;
    bool poly = false;
    auto * analyze = app.add_subcommand("analyze", "characteristic polynomial, ideal class data of a matrix");
    analyze->add_option("input", path_a, "matrix file ('-' for stdin)")->required();
    analyze->add_flag("--poly", poly, "input is a polynomial 'deg c0 .. cn' instead of a matrix");
    add_common(analyze, o);

    auto * dec = app.add_subcommand("decide", "conjugate / 2-block conjugate only / not block conjugate");
    dec->add_option("A", path_a, "matrix file")->required();
    dec->add_option("B", path_b, "matrix file")->required();
    add_common(dec, o);

    auto * certify = app.add_subcommand("certify", "emit verified block certificates");
    certify->add_option("A", path_a, "matrix file")->required();
    certify->add_option("B", path_b, "matrix file")->required();
    certify->add_option("--out-dir", dir, "write each certificate to DIR/<label>.cert");
    add_common(certify, o);

    auto * verify = app.add_subcommand("verify", "re-check a certificate file by direct multiplication");
    verify->add_option("certificate", cert, "certificate file")->required();
    add_common(verify, o);

    auto * fixtures = app.add_subcommand("fixtures", "materialize and check the worked examples");
    fixtures->add_option("--out-dir", dir, "write the fixture files to DIR");
    add_common(fixtures, o);

    std::vector<char const *> argv{"toral"};
    for (auto const & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const & e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    Report r;
    std::string command;
    try {
        if (analyze->parsed()) {
            command = "analyze";
            if (poly)
                analyze_poly(r, parse_poly(load(path_a)), o);
            else
                analyze_matrix(r, parse_matrix(load(path_a)), o);
        } else if (dec->parsed()) {
            command = "decide";
            cmd_decide(r, path_a, path_b, o);
        } else if (certify->parsed()) {
            command = "certify";
            cmd_certify(r, path_a, path_b, dir, o);
        } else if (verify->parsed()) {
            command = "verify";
            cmd_verify(r, cert);
        } else {
            command = "fixtures";
            cmd_fixtures(r, dir);
        }
    } catch (VerificationError const & e) {
        err << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (Error const & e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (std::filesystem::filesystem_error const & e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    if (o.structured()) {
        json doc{{"command", command}, {"exit_code", r.code}};
        doc.update(r.doc);
        out << doc.dump(2) << "\n";
    } else {
        out << r.text.str();
    }
    return r.code;
}

} // namespace toral
