#include "toral/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <vector>

#include "toral/errors.hpp"

namespace toral {

namespace {

constexpr char const * kModule = "cli";

std::vector<std::string> split_lines(std::string const & text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> tokens(std::string const & line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t)
        out.push_back(t);
    return out;
}

bool skippable(std::string const & line)
{
    auto const t = tokens(line);
    return t.empty() || t.front().front() == '#';
}

mpz_class parse_integer(std::string const & tok)
{
    static std::regex const re("[+-]?[0-9]+");
    if (!std::regex_match(tok, re)) throw InputError(kModule, "not an integer: '" + tok + "'");
    return mpz_class(tok[0] == '+' ? tok.substr(1) : tok, 10);
}

std::size_t parse_dim(std::string const & tok)
{
    mpz_class const v = parse_integer(tok);
    if (v < 1 || v > 4096) throw InputError(kModule, "dimension out of range: '" + tok + "'");
    return v.get_ui();
}

// Reads a matrix starting at lines[pos], skipping leading blank lines; advances pos.
IntMat read_matrix(std::vector<std::string> const & lines, std::size_t & pos)
{
    while (pos < lines.size() && skippable(lines[pos]))
        ++pos;
    if (pos == lines.size()) throw InputError(kModule, "missing matrix header 'rows cols'");
    auto const head = tokens(lines[pos++]);
    if (head.size() != 2) throw InputError(kModule, "matrix header must be 'rows cols'");
    std::size_t const r = parse_dim(head[0]), c = parse_dim(head[1]);
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i, ++pos) {
        if (pos == lines.size()) throw InputError(kModule, "matrix has fewer rows than declared");
        auto const row = tokens(lines[pos]);
        if (row.size() != c)
            throw InputError(kModule, "row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                                          " entries, expected " + std::to_string(c));
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = parse_integer(row[j]);
    }
    return m;
}

mpz_class bareiss_det(IntMat a)
{
    std::size_t const n = a.rows();
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0)
            ++p;
        if (p == n) return 0;
        if (p != k) {
            a.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

} // namespace

IntMat parse_matrix(std::string const & text)
{
    auto const lines = split_lines(text);
    std::size_t pos = 0;
    IntMat m = read_matrix(lines, pos);
    for (; pos < lines.size(); ++pos)
        if (!skippable(lines[pos])) throw InputError(kModule, "trailing content after matrix");
    return m;
}

std::string format_matrix(IntMat const & m)
{
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? " " : "") << m(i, j).get_str();
        out << '\n';
    }
    return out.str();
}

ZPoly parse_poly(std::string const & text)
{
    std::vector<std::string> all;
    for (auto const & line : split_lines(text))
        if (!skippable(line))
            for (auto const & t : tokens(line))
                all.push_back(t);
    if (all.empty()) throw InputError(kModule, "empty polynomial");
    std::size_t const deg = parse_dim(all[0]);
    if (all.size() != deg + 2)
        throw InputError(kModule, "polynomial of degree " + std::to_string(deg) + " needs " + std::to_string(deg + 1) +
                                      " coefficients");
    ZPoly p;
    for (std::size_t k = 1; k < all.size(); ++k)
        p.push_back(parse_integer(all[k]));
    if (p.back() != 1) throw InputError(kModule, "polynomial is not monic");
    return p;
}

std::string format_poly(ZPoly const & p)
{
    std::ostringstream out;
    out << p.size() - 1;
    for (auto const & c : p)
        out << ' ' << c.get_str();
    out << '\n';
    return out.str();
}

BlockCertificate parse_certificate(std::string const & text)
{
    auto const lines = split_lines(text);
    BlockCertificate c;
    bool have_left = false, have_m = false;
    std::size_t pos = 0;
    while (pos < lines.size()) {
        if (skippable(lines[pos])) {
            ++pos;
            continue;
        }
        auto const t = tokens(lines[pos]);
        if (t.size() != 1) throw InputError(kModule, "expected a section name (left, right, M), got: " + lines[pos]);
        ++pos;
        if (t[0] == "left") {
            if (have_left) throw InputError(kModule, "duplicate left section");
            c.left = read_matrix(lines, pos);
            have_left = true;
        } else if (t[0] == "right") {
            c.right.push_back(read_matrix(lines, pos));
        } else if (t[0] == "M") {
            if (have_m) throw InputError(kModule, "duplicate M section");
            c.m = read_matrix(lines, pos);
            have_m = true;
        } else {
            throw InputError(kModule, "unknown section '" + t[0] + "'");
        }
    }
    if (!have_left || !have_m || c.right.empty())
        throw InputError(kModule, "certificate needs left, at least one right, and M");
    return c;
}

std::string format_certificate(BlockCertificate const & c)
{
    std::string out = "left\n" + format_matrix(c.left);
    for (auto const & r : c.right)
        out += "right\n" + format_matrix(r);
    return out + "M\n" + format_matrix(c.m);
}

RecheckReport recheck_certificate(BlockCertificate const & c)
{
    RecheckReport rep;
    std::size_t const n = c.left.rows();
    std::size_t const k = c.right.size();
    if (n == 0 || c.left.cols() != n || k == 0) {
        rep.reason = "left block is not square";
        return rep;
    }
    for (auto const & r : c.right)
        if (r.rows() != n || r.cols() != n) {
            rep.reason = "right block size differs from left";
            return rep;
        }
    std::size_t const kn = k * n;
    if (c.m.rows() != kn || c.m.cols() != kn) {
        rep.reason = "M is not kn x kn";
        return rep;
    }
    rep.shapes_ok = true;
    rep.det = bareiss_det(c.m);
    // (left block repeated)(M) vs (M)(right blocks), entry by entry
    rep.equation_ok = true;
    for (std::size_t i = 0; i < kn && rep.equation_ok; ++i)
        for (std::size_t j = 0; j < kn; ++j) {
            std::size_t const bi = i / n, bj = j / n;
            mpz_class lhs = 0, rhs = 0;
            for (std::size_t l = 0; l < n; ++l)
                lhs += c.left(i % n, l) * c.m(bi * n + l, j);
            for (std::size_t l = 0; l < n; ++l)
                rhs += c.m(i, bj * n + l) * c.right[bj](l, j % n);
            if (lhs != rhs) {
                rep.equation_ok = false;
                rep.reason = "equation fails at entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
                break;
            }
        }
    if (rep.equation_ok && rep.det != 1 && rep.det != -1) rep.reason = "det M = " + rep.det.get_str();
    return rep;
}

std::string read_file(std::string const & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(kModule, "cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace toral
